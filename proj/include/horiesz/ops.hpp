#pragma once
/**
 * @file ops.hpp
 * @brief Difference operators Λ_k, Λ_k*, Δ_k = -Λ_k*Λ_k on sequences and
 * the heat semigroup generated by Δ_k (multiplier e^{-4t sin²(x/2)}).
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "horiesz/core.hpp"
#include "horiesz/parallel.hpp"
#include "horiesz/polys.hpp"
#include "horiesz/quadrature.hpp"
#include "horiesz/sequence.hpp"
#include "horiesz/transform.hpp"

namespace horiesz {

/// Dense K(n, m) for n, m in [-radius, radius], row-major in n.
struct KernelMatrix {
    int radius = 0;
    std::vector<cplx> entries;
    double k = 0.0;
    std::optional<double> t;
    std::string kind;
    std::string method;

    KernelMatrix() = default;
    KernelMatrix(int r, double kk, std::string kind_, std::string method_)
        : radius(r),
          entries(static_cast<std::size_t>((2 * r + 1) * (2 * r + 1)), 0.0),
          k(kk),
          kind(std::move(kind_)),
          method(std::move(method_)) {}

    int dim() const noexcept { return 2 * radius + 1; }
    cplx& at(int n, int m) { return entries[index(n, m)]; }
    cplx operator()(int n, int m) const { return entries[index(n, m)]; }

private:
    std::size_t index(int n, int m) const {
        if (std::abs(n) > radius || std::abs(m) > radius) throw std::out_of_range("KernelMatrix index");
        return static_cast<std::size_t>(n + radius) * static_cast<std::size_t>(dim()) +
               static_cast<std::size_t>(m + radius);
    }
};

/// (Λf)(n) = α_n f(n+1) + β_{-n} f(1-n) - f(n).
inline Sequence lambda_apply(const Sequence& f, double k) {
    if (f.empty()) return {};
    const int lo = std::min(f.lo() - 1, 1 - f.hi());
    const int hi = std::max(f.hi(), 1 - f.lo());
    Sequence out = Sequence::zeros(lo, hi);
    for (int n = lo; n <= hi; ++n) {
        out.at(n) = ladder_coeffs(n, k).alpha * f[n + 1] + ladder_coeffs(-n, k).beta * f[1 - n] - f[n];
    }
    return out;
}

/// (Λ*f)(n) = α_{n-1} f(n-1) + β_{n-1} f(1-n) - f(n).
inline Sequence lambda_star_apply(const Sequence& f, double k) {
    if (f.empty()) return {};
    const int lo = std::min(f.lo(), 1 - f.hi());
    const int hi = std::max(f.hi() + 1, 1 - f.lo());
    Sequence out = Sequence::zeros(lo, hi);
    for (int n = lo; n <= hi; ++n) {
        const auto c = ladder_coeffs(n - 1, k);
        out.at(n) = c.alpha * f[n - 1] + c.beta * f[1 - n] - f[n];
    }
    return out;
}

/**
 * (Δf)(n) = α_n f(n+1) + α_{n-1} f(n-1) - 2f(n) + (β_{-n} + β_{n-1}) f(1-n).
 * β is odd away from 0, so this is -(β_n - β_{n-1}) f(1-n) for n ∉ {0, 1};
 * the β_{-n} form keeps Δ = -Λ*Λ at n = 0, 1 where β_0 = 1.
 */
inline Sequence laplacian_apply(const Sequence& f, double k) {
    if (f.empty()) return {};
    const int lo = std::min(f.lo() - 1, 1 - f.hi());
    const int hi = std::max(f.hi() + 1, 1 - f.lo());
    Sequence out = Sequence::zeros(lo, hi);
    for (int n = lo; n <= hi; ++n) {
        const auto c = ladder_coeffs(n, k);
        const auto cm = ladder_coeffs(n - 1, k);
        out.at(n) = c.alpha * f[n + 1] + cm.alpha * f[n - 1] - 2.0 * f[n] + (ladder_coeffs(-n, k).beta + cm.beta) * f[1 - n];
    }
    return out;
}

/**
 * Moments μ_s(t) = (1/2π)∫₀^{2π} e^{isx} e^{-4t sin²(x/2)} |2 sin x|^{2k} dx
 * for |s| <= max_abs, by tanh-sinh on [0, π] (the integrand is symmetric
 * about π). Real and even in s.
 */
class HeatMoments {
public:
    HeatMoments(double k, double t, int max_abs, double abs_tol = 1e-13) : k_(k), t_(t) {
        if (!(t >= 0.0)) throw std::domain_error("heat: t must be >= 0");
        CouplingParam kp(k);
        max_ = std::max(max_abs, 0);
        const std::size_t count = static_cast<std::size_t>(max_ + 1);
        auto eval = [&](const TsNode& nd, std::vector<cplx>& out) {
            const double s2 = std::sin(0.5 * nd.x);
            const double base = std::exp(-4.0 * t * s2 * s2) * abs_two_sin_pow(nd, 2.0 * k) / std::numbers::pi;
            // cos(sx) by the Chebyshev recurrence.
            const double c1 = std::cos(nd.x);
            double prev = 1.0, cur = c1;
            out[0] = base;
            if (count > 1) out[1] = base * c1;
            for (std::size_t s = 2; s < count; ++s) {
                const double next = 2.0 * c1 * cur - prev;
                prev = cur;
                cur = next;
                out[s] = base * cur;
            }
        };
        const auto vals = tanh_sinh_integrate_family(eval, count, 0.0, std::numbers::pi, abs_tol, 16);
        mu_.resize(count);
        for (std::size_t s = 0; s < count; ++s) mu_[s] = vals[s].real();
    }

    double k() const noexcept { return k_; }
    double t() const noexcept { return t_; }
    int max_abs() const noexcept { return max_; }

    double operator()(int s) const {
        const int a = std::abs(s);
        if (a > max_) throw std::out_of_range("HeatMoments: index beyond table");
        return mu_[static_cast<std::size_t>(a)];
    }

private:
    double k_;
    double t_;
    int max_ = 0;
    std::vector<double> mu_;
};

/// e^{tΔ_k} f restricted to [lo, hi].
inline Sequence heat_apply(const Sequence& f, double t, double k, int lo, int hi) {
    const int r = std::max({f.radius(), std::abs(lo), std::abs(hi)});
    const Basis basis(k, r);
    const HeatMoments mu(k, t, 2 * r);
    return pair_with_basis(forward(f, basis), lo, hi, basis, [&](int s) { return cplx(mu(s)); });
}

/// H_t(n, m) = (1/2π)∫ e^{-4t sin²(x/2)} 𝓔_m(ix) 𝓔_n(-ix) δ_k(x) dx.
inline cplx heat_kernel(double t, int n, int m, double k) {
    return heat_apply(Sequence::impulse(m), t, k, n, n)[n];
}

/// H_t(n, m) for |n|, |m| <= radius, from one moment table.
inline KernelMatrix heat_kernel_matrix(double t, double k, int radius) {
    KernelMatrix km(radius, k, "heat", "pairing");
    km.t = t;
    const Basis basis(k, radius);
    const HeatMoments mu(k, t, 2 * radius);
    parallel_for(-radius, radius + 1, [&](long mm) {
        const int m = static_cast<int>(mm);
        const TrigPoly g = basis.orthonormal(m).cast<cplx>();
        const Sequence col = pair_with_basis(g, -radius, radius, basis, [&](int s) { return cplx(mu(s)); });
        for (int n = -radius; n <= radius; ++n) km.at(n, m) = col[n];
    });
    return km;
}

}  // namespace horiesz
