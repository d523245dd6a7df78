#pragma once
/**
 * @file transform.hpp
 * @brief Weighted inner product (f,g)_k, the transform
 * F_k f = Σ f(n) 𝓔_n(ix), its inverse and the Plancherel defect.
 *
 * Everything is exact pairing through weight moments: for a multiplier
 * m(x) with moments μ_s = (1/2π)∫ m(x) e^{isx} δ_k(x) dx,
 *   (m·g, 𝓔_n)_k = Σ_b c^n_b Σ_a g_a μ_{a-b}.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "horiesz/core.hpp"
#include "horiesz/polys.hpp"
#include "horiesz/quadrature.hpp"
#include "horiesz/sequence.hpp"
#include "horiesz/trig_poly.hpp"

namespace horiesz {

/// Σ_{a,b} p_a conj(q_b) v_{a-b}.
inline cplx inner_product_exact(const TrigPoly& p, const TrigPoly& q, double k) {
    if (p.empty() || q.empty()) return 0.0;
    const int span = std::max(std::abs(p.hi() - q.lo()), std::abs(p.lo() - q.hi()));
    const MomentTable mt(CouplingParam(k), span);
    cplx s = 0.0;
    for (int a = p.lo(); a <= p.hi(); ++a) {
        const cplx pa = p[a];
        if (pa == 0.0) continue;
        for (int b = q.lo(); b <= q.hi(); ++b) s += pa * std::conj(q[b]) * mt.integer(a - b);
    }
    return s;
}

/**
 * Quadrature fallback for sampled data; see trapezoid_inner_product. For
 * small k the weight's kink at 0 and π can keep the doubling from reaching
 * its target within the node cap; the integral is then redone by tanh-sinh
 * on [0, π] and [π, 2π], which absorbs endpoint singularities.
 */
template <typename F, typename G>
cplx inner_product_quadrature(F&& f, G&& g, double k, std::size_t start_nodes = 64) {
    try {
        return trapezoid_inner_product(f, g, k, start_nodes).value;
    } catch (const QuadratureError&) {
        auto h = [&](const TsNode& nd) { return f(nd.x) * std::conj(g(nd.x)) * abs_two_sin_pow(nd, 2.0 * k); };
        const double pi = std::numbers::pi;
        return (tanh_sinh_integrate(h, 0.0, pi, 1e-13, 16) + tanh_sinh_integrate(h, pi, 2.0 * pi, 1e-13, 16)) /
               (2.0 * pi);
    }
}

/// F_k f as a trigonometric polynomial, using a table that covers supp f.
inline TrigPoly forward(const Sequence& f, const Basis& basis) {
    if (f.empty()) return {};
    const int r = f.radius();
    std::vector<cplx> c(static_cast<std::size_t>(2 * r + 1), 0.0);
    for (int n = f.lo(); n <= f.hi(); ++n) {
        const cplx fn = f[n];
        if (fn == 0.0) continue;
        const auto& d = basis.ortho_dense(n);
        const int a = std::abs(n);
        for (int j = -a; j <= a; ++j) c[static_cast<std::size_t>(j + r)] += fn * d[static_cast<std::size_t>(j + a)];
    }
    return TrigPoly(-r, std::move(c)).trim(0.0);
}

inline TrigPoly forward(const Sequence& f, double k) { return forward(f, Basis(k, f.radius())); }

/**
 * out(n) = Σ_b c^n_b Σ_a g_a μ(a-b) for n in [lo, hi]. `mu` is any callable
 * int -> cplx defined on the needed range |a - b| <= radius(g) + max |n|.
 */
template <typename Mu>
Sequence pair_with_basis(const TrigPoly& g, int lo, int hi, const Basis& basis, Mu&& mu) {
    Sequence out = Sequence::zeros(lo, hi);
    if (g.empty() || hi < lo) return out;
    const int r = std::max(std::abs(lo), std::abs(hi));
    // h_b = Σ_a g_a μ(a-b) for b in [-r, r].
    std::vector<cplx> h(static_cast<std::size_t>(2 * r + 1), 0.0);
    for (int b = -r; b <= r; ++b) {
        cplx s = 0.0;
        for (int a = g.lo(); a <= g.hi(); ++a) {
            const cplx ga = g[a];
            if (ga != 0.0) s += ga * mu(a - b);
        }
        h[static_cast<std::size_t>(b + r)] = s;
    }
    for (int n = lo; n <= hi; ++n) {
        const auto& d = basis.ortho_dense(n);
        const int a = std::abs(n);
        cplx s = 0.0;
        for (int j = -a; j <= a; ++j) s += d[static_cast<std::size_t>(j + a)] * h[static_cast<std::size_t>(j + r)];
        out.at(n) = s;
    }
    return out;
}

/**
 * Same as pair_with_basis, but walks the ladder instead of holding a table,
 * so memory stays O(max |n|) for large output windows.
 */
template <typename Mu>
Sequence pair_streaming(const TrigPoly& g, int lo, int hi, const CouplingParam& kp, Mu&& mu) {
    Sequence out = Sequence::zeros(lo, hi);
    if (g.empty() || hi < lo) return out;
    const int r = std::max(std::abs(lo), std::abs(hi));
    std::vector<cplx> h(static_cast<std::size_t>(2 * r + 1), 0.0);
    for (int b = -r; b <= r; ++b) {
        cplx s = 0.0;
        for (int a = g.lo(); a <= g.hi(); ++a) {
            const cplx ga = g[a];
            if (ga != 0.0) s += ga * mu(a - b);
        }
        h[static_cast<std::size_t>(b + r)] = s;
    }
    LadderWalker walk(kp);
    for (int i = 0; i < 2 * r + 1; ++i) {
        const auto st = walk.next();
        if (st.n < lo || st.n > hi) continue;
        const auto& d = *st.monic;
        cplx s = 0.0;
        for (int j = -st.r; j <= st.r; ++j) {
            const double c = d[static_cast<std::size_t>(j + st.r)];
            if (c != 0.0) s += c * h[static_cast<std::size_t>(j + r)];
        }
        out.at(st.n) = s / std::sqrt(st.norm_sq);
    }
    return out;
}

/// f(n) = (g, 𝓔_n)_k for n in [lo, hi].
inline Sequence inverse(const TrigPoly& g, int lo, int hi, const Basis& basis) {
    const int span = (g.empty() ? 0 : std::max(std::abs(g.lo()), std::abs(g.hi()))) +
                     std::max(std::abs(lo), std::abs(hi));
    const MomentTable mt(basis.param(), span);
    return pair_with_basis(g, lo, hi, basis, [&](int s) { return cplx(mt.integer(s)); });
}

inline Sequence inverse(const TrigPoly& g, int lo, int hi, double k) {
    return inverse(g, lo, hi, Basis(k, std::max(std::abs(lo), std::abs(hi))));
}

/// |‖F_k f‖²_k - Σ|f(n)|²|.
inline double plancherel_defect(const Sequence& f, double k) {
    const auto g = forward(f, k);
    return std::abs(inner_product_exact(g, g, k).real() - f.norm2_sq());
}

}  // namespace horiesz
