#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "horiesz/core.hpp"
#include "horiesz/quadrature.hpp"

using namespace horiesz;

TEST(CouplingParam, RejectsNegativeAndNonFinite) {
    EXPECT_THROW(CouplingParam{-0.1}, std::domain_error);
    EXPECT_THROW(CouplingParam{NAN}, std::domain_error);
    EXPECT_THROW(CouplingParam{INFINITY}, std::domain_error);
}

TEST(CouplingParam, ZerothMoment) {
    EXPECT_DOUBLE_EQ(CouplingParam(0.0).w0(), 1.0);
    EXPECT_NEAR(CouplingParam(1.0).w0(), 2.0, 1e-14);
    // Γ(6)/Γ(3.5)², mpmath.
    EXPECT_NEAR(CouplingParam(2.5).w0(), 10.864977448406722, 1e-12);
}

TEST(Tilde, Examples) {
    EXPECT_DOUBLE_EQ(tilde(3, 0.5), 3.5);
    EXPECT_DOUBLE_EQ(tilde(-2, 1.0), -3.0);
    EXPECT_DOUBLE_EQ(tilde(0, 1.0), -1.0);
    for (int n = -5; n <= 5; ++n) EXPECT_DOUBLE_EQ(tilde(n, 0.0), n);
}

TEST(SpectralIndex, SignConvention) {
    EXPECT_EQ(spectral_index(0, 1.0).eps_n, 1);
    EXPECT_EQ(spectral_index(-1, 1.0).eps_n, -1);
    EXPECT_DOUBLE_EQ(spectral_index(4, 0.5).tilde_n, 4.5);
}

TEST(TriangleLess, Examples) {
    EXPECT_TRUE(triangle_less(1, 3));
    EXPECT_TRUE(triangle_less(1, -1));
    EXPECT_FALSE(triangle_less(-1, 1));
    EXPECT_FALSE(triangle_less(1, 2));
    EXPECT_FALSE(triangle_less(3, 3));
}

TEST(TriangleLess, PredecessorsMatchBruteForce) {
    for (int n = -9; n <= 9; ++n) {
        std::vector<int> brute;
        for (int j = -12; j <= 12; ++j)
            if (triangle_less(j, n)) brute.push_back(j);
        EXPECT_EQ(predecessors(n), brute) << "n=" << n;
    }
}

TEST(LadderCoeffs, Examples) {
    const auto a = ladder_coeffs(1, 1.0);
    EXPECT_NEAR(a.alpha, std::sqrt(3.0) / 2.0, 1e-15);
    EXPECT_NEAR(a.beta, 0.5, 1e-15);
    const auto b = ladder_coeffs(0, 0.7);
    EXPECT_DOUBLE_EQ(b.alpha, 0.0);
    EXPECT_DOUBLE_EQ(b.beta, 1.0);
    const auto c = ladder_coeffs(-1, 1.0);
    EXPECT_NEAR(c.alpha, std::sqrt(3.0) / 2.0, 1e-15);
    EXPECT_NEAR(c.beta, -0.5, 1e-15);
    const auto d = ladder_coeffs(0, 0.0);
    EXPECT_DOUBLE_EQ(d.alpha, 1.0);
    EXPECT_DOUBLE_EQ(d.beta, 0.0);
}

TEST(LadderCoeffs, UnitCircleAndSymmetry) {
    for (double k : {0.0, 0.25, 0.5, 1.0, 2.5, 7.0}) {
        for (int n = 1; n <= 200; ++n) {
            for (int s : {n, -n}) {
                const auto c = ladder_coeffs(s, k);
                EXPECT_NEAR(c.alpha * c.alpha + c.beta * c.beta, 1.0, 1e-15);
            }
            EXPECT_DOUBLE_EQ(ladder_coeffs(-n, k).alpha, ladder_coeffs(n, k).alpha);
            EXPECT_DOUBLE_EQ(ladder_coeffs(-n, k).beta, -ladder_coeffs(n, k).beta);
        }
    }
}

TEST(NormSq, Examples) {
    EXPECT_NEAR(norm_sq(0, 1.0), 2.0, 1e-14);
    EXPECT_NEAR(norm_sq(1, 1.0), 2.0, 1e-14);
    EXPECT_NEAR(norm_sq(2, 1.0), 1.5, 1e-14);
    EXPECT_NEAR(norm_sq(-1, 1.0), 1.5, 1e-14);
    EXPECT_DOUBLE_EQ(norm_sq(5, 0.0), 1.0);
}

TEST(NormSq, ReflectionAndClosedForm) {
    for (double k : {0.0, 0.5, 1.0, 2.5}) {
        for (int n = 0; n <= 64; ++n) {
            EXPECT_DOUBLE_EQ(norm_sq(n + 1, k), norm_sq(-n, k));
            const double cf = norm_sq_closed_form(n, k);
            EXPECT_NEAR(norm_sq(n + 1, k) / cf, 1.0, 1e-12) << "k=" << k << " n=" << n;
        }
    }
}

TEST(WeightMoment, IntegerExamples) {
    EXPECT_NEAR(weight_moment(0, 1.0), 2.0, 1e-14);
    EXPECT_NEAR(weight_moment(2, 1.0), -1.0, 1e-14);
    EXPECT_NEAR(weight_moment(-2, 1.0), -1.0, 1e-14);
    EXPECT_NEAR(weight_moment(4, 1.0), 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(weight_moment(1, 1.0), 0.0);
    EXPECT_DOUBLE_EQ(weight_moment(0, 0.0), 1.0);
}

TEST(WeightMoment, HalfIntegerFrozenOracle) {
    // v_{1/2} for k = 1 = i·(√2/2)·Γ(3)/(Γ(9/4)Γ(7/4)); value from mpmath.
    const cplx v = weight_moment_twice(1, 1.0);
    EXPECT_NEAR(v.real(), 0.0, 1e-16);
    EXPECT_NEAR(v.imag(), 1.3581221810508402, 1e-13);
    // k = 0: (1/2π)∫₀^{2π} e^{ix/2} dx = 2i/π.
    EXPECT_NEAR(weight_moment_twice(1, 0.0).imag(), 2.0 / std::numbers::pi, 1e-15);
    EXPECT_NEAR(weight_moment_twice(-1, 0.0).imag(), -2.0 / std::numbers::pi, 1e-15);
}

TEST(WeightMoment, ClosedFormAgainstQuadrature) {
    for (double k : {0.0, 0.25, 0.5, 1.0, 2.5}) {
        const MomentTable mt(CouplingParam(k), 81);
        for (int twice = -80; twice <= 80; ++twice) {
            const cplx q = weight_moment_quadrature(0.5 * twice, k);
            const cplx c = (twice % 2 == 0) ? cplx(mt.integer(twice / 2)) : mt.half((twice + 1) / 2);
            const double scale = std::max(std::abs(q), 1e-3);
            EXPECT_LE(std::abs(q - c) / scale, 1e-10) << "k=" << k << " s=" << 0.5 * twice;
        }
    }
}

TEST(WeightMoment, TableBounds) {
    const MomentTable mt(CouplingParam(1.0), 4);
    EXPECT_THROW(mt.integer(5), std::out_of_range);
    EXPECT_THROW(mt.half(6), std::out_of_range);
    EXPECT_NO_THROW(mt.half(5));
}

TEST(Quadrature, GridWeightsSumToTwoPi) {
    const QuadratureGrid g(96);
    double s = 0.0;
    for (double w : g.weights) s += w;
    EXPECT_NEAR(s, 2.0 * std::numbers::pi, 1e-13);
    for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(g.nodes[i - 1], g.nodes[i]);
    EXPECT_THROW(QuadratureGrid{0}, std::invalid_argument);
}

TEST(Quadrature, NonConvergenceReportsDelta) {
    // A square-root cusp cannot reach 1e-11 on 2^10 nodes.
    auto cusp = [](double x) { return cplx(std::sqrt(std::abs(x - 2.0))); };
    auto one = [](double) { return cplx(1.0); };
    try {
        trapezoid_inner_product(cusp, one, 0.0, 64, 1e-11, 1024);
        FAIL() << "expected QuadratureError";
    } catch (const QuadratureError& e) {
        EXPECT_GT(e.last_delta(), 0.0);
    }
}
