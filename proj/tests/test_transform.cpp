#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "horiesz/transform.hpp"

using namespace horiesz;

namespace {

Sequence random_sequence(std::mt19937_64& rng, int lo, int hi) {
    std::normal_distribution<double> d;
    Sequence f = Sequence::zeros(lo, hi);
    for (int n = lo; n <= hi; ++n) f.at(n) = cplx(d(rng), d(rng));
    return f;
}

}  // namespace

TEST(InnerProduct, Examples) {
    EXPECT_NEAR(std::abs(inner_product_exact(monic_E(2, 1.0), TrigPoly::monomial(0), 1.0)), 0.0, 1e-15);
    const TrigPoly em1 = monic_E(-1, 1.0);
    EXPECT_NEAR(inner_product_exact(em1, em1, 1.0).real(), 1.5, 1e-14);
    EXPECT_DOUBLE_EQ(inner_product_exact(TrigPoly::monomial(0), TrigPoly::monomial(0), 0.0).real(), 1.0);
}

TEST(InnerProduct, GramMatrixIsIdentity) {
    for (double k : {0.0, 0.5, 1.0, 2.5}) {
        const Basis b(k, 20);
        double worst = 0.0;
        for (int n = -20; n <= 20; ++n) {
            const TrigPoly en = b.orthonormal(n).cast<cplx>();
            for (int m = -20; m <= 20; ++m) {
                const TrigPoly em = b.orthonormal(m).cast<cplx>();
                const cplx g = inner_product_exact(en, em, k);
                worst = std::max(worst, std::abs(g - (n == m ? 1.0 : 0.0)));
            }
        }
        EXPECT_LE(worst, 1e-10) << "k=" << k;
    }
}

TEST(InnerProduct, QuadratureExamples) {
    auto fn = [](const TrigPoly& p) { return [p](double x) { return p.eval(x); }; };
    const TrigPoly e3 = orthonormal_E(3, 1.0);
    EXPECT_NEAR(inner_product_quadrature(fn(e3), fn(e3), 1.0).real(), 1.0, 1e-10);
    const TrigPoly a = orthonormal_E(3, 2.5), b = orthonormal_E(5, 2.5);
    EXPECT_NEAR(std::abs(inner_product_quadrature(fn(a), fn(b), 2.5)), 0.0, 1e-10);
    auto one = [](double) { return cplx(1.0); };
    EXPECT_NEAR(inner_product_quadrature(one, one, 0.0).real(), 1.0, 1e-14);
}

TEST(InnerProduct, QuadratureMatchesExact) {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> d;
    for (double k : {0.0, 0.5, 1.0, 2.5}) {
        TrigPoly p(-4, std::vector<cplx>(9)), q(-3, std::vector<cplx>(7));
        for (auto& c : p.coeffs()) c = cplx(d(rng), d(rng));
        for (auto& c : q.coeffs()) c = cplx(d(rng), d(rng));
        const cplx ex = inner_product_exact(p, q, k);
        const cplx qu = inner_product_quadrature([&](double x) { return p.eval(x); },
                                                 [&](double x) { return q.eval(x); }, k);
        EXPECT_LE(std::abs(ex - qu), 1e-9 * std::max(1.0, std::abs(ex))) << "k=" << k;
    }
}

TEST(Forward, Examples) {
    const TrigPoly f1 = forward(Sequence::impulse(4), 1.5);
    EXPECT_LE(max_coeff_diff(f1, orthonormal_E(4, 1.5)), 1e-15);

    Sequence f = Sequence::zeros(0, 1);
    f.at(0) = 1.0;
    f.at(1) = 1.0;
    const TrigPoly g = forward(f, 0.0);
    EXPECT_NEAR(std::abs(g[0] - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(g[1] - 1.0), 0.0, 1e-15);

    const TrigPoly h = forward(Sequence::impulse(-1), 1.0);
    const double s = std::sqrt(2.0 / 3.0);
    EXPECT_NEAR(std::abs(h[-1] - s), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h[1] - 0.5 * s), 0.0, 1e-15);
}

TEST(Inverse, Examples) {
    for (double k : {0.0, 1.0, 2.5}) {
        const Sequence r = inverse(forward(Sequence::impulse(5), k), -8, 8, k);
        for (int n = -8; n <= 8; ++n) EXPECT_NEAR(std::abs(r[n] - (n == 5 ? 1.0 : 0.0)), 0.0, 1e-12);
        const Sequence s = inverse(orthonormal_E(-3, k), -8, 8, k);
        for (int n = -8; n <= 8; ++n) EXPECT_NEAR(std::abs(s[n] - (n == -3 ? 1.0 : 0.0)), 0.0, 1e-12);
    }
    const Sequence c = inverse(TrigPoly::monomial(0), -6, 6, 1.0);
    for (int n = -6; n <= 6; ++n) EXPECT_NEAR(std::abs(c[n] - (n == 0 ? std::sqrt(2.0) : 0.0)), 0.0, 1e-14);
}

TEST(Inverse, RoundTrip) {
    std::mt19937_64 rng(4);
    for (double k : {0.0, 0.5, 1.0, 2.5}) {
        const Sequence f = random_sequence(rng, -20, 20);
        const Sequence g = inverse(forward(f, k), -20, 20, k);
        EXPECT_LE(max_abs_diff(f, g), 1e-10) << "k=" << k;
    }
}

TEST(Plancherel, Examples) {
    for (double k : {0.0, 0.5, 1.0, 2.5}) EXPECT_LE(plancherel_defect(Sequence::impulse(0), k), 1e-14);
    std::mt19937_64 rng(9);
    EXPECT_LE(plancherel_defect(random_sequence(rng, -25, 24), 1.0), 1e-10);
    const Sequence f = random_sequence(rng, -20, 20);
    EXPECT_LE(plancherel_defect(f, 2.5) / f.norm2_sq(), 1e-9);
}

TEST(Plancherel, RandomSequences) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> len(1, 20);
    for (double k : {0.0, 0.5, 1.0, 2.5}) {
        const Basis b(k, 20);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const int lo = -len(rng);
            const Sequence f = random_sequence(rng, lo, len(rng));
            const TrigPoly g = forward(f, b);
            const double d = std::abs(inner_product_exact(g, g, k).real() - f.norm2_sq());
            worst = std::max(worst, d / f.norm2_sq());
        }
        EXPECT_LE(worst, 1e-9) << "k=" << k;
    }
}
