#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "horiesz/ops.hpp"

using namespace horiesz;

namespace {

Sequence random_sequence(std::mt19937_64& rng, int lo, int hi) {
    std::normal_distribution<double> d;
    Sequence f = Sequence::zeros(lo, hi);
    for (int n = lo; n <= hi; ++n) f.at(n) = cplx(d(rng), d(rng));
    return f;
}

const double kValues[] = {0.0, 0.5, 1.0, 2.5};

// e^{-ix} - 1, e^{ix} - 1 and -4 sin²(x/2) as trigonometric polynomials.
const TrigPoly kLambdaSymbol(-1, {1.0, -1.0});
const TrigPoly kLambdaStarSymbol(0, {-1.0, 1.0});
const TrigPoly kLaplacianSymbol(-1, {1.0, -2.0, 1.0});

}  // namespace

TEST(Lambda, ClassicalCase) {
    std::mt19937_64 rng(1);
    const Sequence f = random_sequence(rng, -5, 5);
    const Sequence l = lambda_apply(f, 0.0);
    const Sequence ls = lambda_star_apply(f, 0.0);
    for (int n = -7; n <= 7; ++n) {
        EXPECT_NEAR(std::abs(l[n] - (f[n + 1] - f[n])), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(ls[n] - (f[n - 1] - f[n])), 0.0, 1e-15);
    }
}

TEST(Lambda, ImpulseByDefinition) {
    const Sequence l = lambda_apply(Sequence::impulse(0), 1.0);
    // Nonzero only at n = 0 (-f(0)), n = -1 (α_{-1} f(0)) and n = 1 (β_{-1} f(0)).
    EXPECT_NEAR(l[0].real(), -1.0, 1e-15);
    EXPECT_NEAR(l[-1].real(), std::sqrt(3.0) / 2.0, 1e-15);
    EXPECT_NEAR(l[1].real(), -0.5, 1e-15);
    for (int n = -4; n <= 4; ++n)
        if (n < -1 || n > 1) EXPECT_EQ(l[n], 0.0);
}

TEST(Lambda, MultiplierLaws) {
    std::mt19937_64 rng(2);
    for (double k : kValues) {
        const Sequence f = random_sequence(rng, -12, 12);
        const Basis b(k, 14);
        const TrigPoly ff = forward(f, b);
        EXPECT_LE(max_coeff_diff(forward(lambda_apply(f, k), b), kLambdaSymbol * ff), 1e-10) << k;
        EXPECT_LE(max_coeff_diff(forward(lambda_star_apply(f, k), b), kLambdaStarSymbol * ff), 1e-10) << k;
        EXPECT_LE(max_coeff_diff(forward(laplacian_apply(f, k), b), kLaplacianSymbol * ff), 1e-10) << k;
    }
}

TEST(Lambda, AdjointAndComposition) {
    std::mt19937_64 rng(3);
    for (double k : kValues) {
        const Sequence f = random_sequence(rng, -10, 10);
        const Sequence g = random_sequence(rng, -10, 10);
        EXPECT_LE(std::abs(l2_inner(lambda_apply(f, k), g) - l2_inner(f, lambda_star_apply(g, k))), 1e-12);
        Sequence d = laplacian_apply(f, k);
        d += lambda_star_apply(lambda_apply(f, k), k);
        double worst = 0.0;
        for (const auto& x : d.values()) worst = std::max(worst, std::abs(x));
        EXPECT_LE(worst, 1e-12) << k;
    }
}

TEST(Laplacian, ClassicalImpulse) {
    const Sequence d = laplacian_apply(Sequence::impulse(0), 0.0);
    EXPECT_DOUBLE_EQ(d[-1].real(), 1.0);
    EXPECT_DOUBLE_EQ(d[0].real(), -2.0);
    EXPECT_DOUBLE_EQ(d[1].real(), 1.0);
}

TEST(Heat, ZeroTimeIsIdentity) {
    std::mt19937_64 rng(5);
    for (double k : kValues) {
        const Sequence f = random_sequence(rng, -8, 8);
        EXPECT_LE(max_abs_diff(heat_apply(f, 0.0, k, -8, 8), f), 1e-10) << k;
        for (int n = -4; n <= 4; ++n)
            for (int m = -4; m <= 4; ++m) EXPECT_NEAR(std::abs(heat_kernel(0.0, n, m, k) - (n == m ? 1.0 : 0.0)), 0.0, 1e-10);
    }
    EXPECT_THROW(heat_apply(Sequence::impulse(0), -1.0, 1.0, 0, 0), std::domain_error);
}

TEST(Heat, ClassicalBesselKernel) {
    for (double t : {0.05, 0.5, 1.0, 2.0}) {
        const KernelMatrix h = heat_kernel_matrix(t, 0.0, 20);
        double worst = 0.0;
        for (int n = -10; n <= 10; ++n)
            for (int m = -10; m <= 10; ++m) {
                const double oracle = std::exp(-2.0 * t) * std::cyl_bessel_i(static_cast<double>(std::abs(n - m)), 2.0 * t);
                worst = std::max(worst, std::abs(h(n, m) - oracle));
            }
        EXPECT_LE(worst, 1e-8) << "t=" << t;
    }
}

TEST(Heat, ContractionAndHermitian) {
    std::mt19937_64 rng(6);
    for (double k : {0.5, 1.0, 2.5}) {
        const Sequence f = random_sequence(rng, -6, 6);
        for (double t : {0.1, 1.0, 10.0}) {
            const Sequence u = heat_apply(f, t, k, -60, 60);
            EXPECT_LE(u.norm2(), f.norm2() * (1.0 + 1e-12)) << k << " " << t;
        }
        const KernelMatrix h = heat_kernel_matrix(0.7, k, 10);
        for (int n = -10; n <= 10; ++n)
            for (int m = -10; m <= 10; ++m) EXPECT_NEAR(std::abs(h(n, m) - std::conj(h(m, n))), 0.0, 1e-10);
    }
}

TEST(Heat, Semigroup) {
    for (double k : {0.0, 0.5, 1.0, 2.5}) {
        const double t = 0.3, s = 0.6;
        const int L = 4 * static_cast<int>(std::ceil(std::sqrt(t + s) * 4.0)) + 20;
        const KernelMatrix ht = heat_kernel_matrix(t, k, L);
        const KernelMatrix hs = heat_kernel_matrix(s, k, L);
        const KernelMatrix hts = heat_kernel_matrix(t + s, k, 6);
        for (int n = -6; n <= 6; ++n)
            for (int m = -6; m <= 6; ++m) {
                cplx acc = 0.0;
                for (int l = -L; l <= L; ++l) acc += ht(n, l) * hs(l, m);
                EXPECT_NEAR(std::abs(acc - hts(n, m)), 0.0, 1e-6) << k;
            }
    }
}

TEST(Heat, KernelMatchesApply) {
    const KernelMatrix h = heat_kernel_matrix(1.3, 1.0, 6);
    for (int n = -6; n <= 6; ++n)
        for (int m : {-2, 0, 3}) EXPECT_NEAR(std::abs(h(n, m) - heat_kernel(1.3, n, m, 1.0)), 0.0, 1e-12);
}

TEST(KernelMatrix, Indexing) {
    KernelMatrix km(2, 1.0, "heat", "pairing");
    EXPECT_EQ(km.dim(), 5);
    km.at(-2, 1) = 3.0;
    EXPECT_EQ(km(-2, 1), cplx(3.0));
    EXPECT_THROW(km(3, 0), std::out_of_range);
}
