#pragma once
/**
 * @file quadrature.hpp
 * @brief Quadrature on the torus: uniform trapezoid grids with doubling and
 * a tanh-sinh (double exponential) rule for integrands with algebraic
 * endpoint singularities such as |2 sin x|^{2k}.
 */

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "horiesz/core.hpp"

namespace horiesz {

/// Raised when a refinement loop does not reach its tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double last_delta)
        : std::runtime_error(what + " (last delta " + std::to_string(last_delta) + ")"),
          last_delta_(last_delta) {}
    double last_delta() const noexcept { return last_delta_; }

private:
    double last_delta_;
};

/// Uniform trapezoid grid on [0, 2π). Weights sum to 2π.
struct QuadratureGrid {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit QuadratureGrid(std::size_t n_nodes) {
        if (n_nodes == 0) throw std::invalid_argument("QuadratureGrid needs at least one node");
        const double h = 2.0 * std::numbers::pi / static_cast<double>(n_nodes);
        nodes.resize(n_nodes);
        weights.assign(n_nodes, h);
        for (std::size_t i = 0; i < n_nodes; ++i) nodes[i] = h * static_cast<double>(i);
    }

    std::size_t size() const noexcept { return nodes.size(); }
};

/// |2 sin x|^{2k}; 0^0 is taken as 1.
inline double weight_delta(double x, double k) {
    if (k == 0.0) return 1.0;
    return std::pow(std::abs(2.0 * std::sin(x)), 2.0 * k);
}

struct TrapezoidResult {
    cplx value;
    std::size_t nodes;
    double last_delta;
};

/**
 * (1/2π) Σ w f conj(g) |2 sin x|^{2k} on uniform grids, doubling from
 * `start_nodes` until successive values differ by less than `rel_tol`
 * relative (absolute when the value is below one) or `max_nodes` is passed.
 */
template <typename F, typename G>
TrapezoidResult trapezoid_inner_product(F&& f, G&& g, double k, std::size_t start_nodes = 64,
                                        double rel_tol = 1e-11,
                                        std::size_t max_nodes = std::size_t{1} << 20) {
    auto integrand = [&](double x) { return f(x) * std::conj(g(x)) * weight_delta(x, k); };
    std::size_t n = start_nodes;
    cplx sum = 0.0;
    {
        const QuadratureGrid grid(n);
        for (std::size_t i = 0; i < n; ++i) sum += integrand(grid.nodes[i]);
    }
    cplx prev = sum / static_cast<double>(n);
    double delta = INFINITY;
    while (2 * n <= max_nodes) {
        // The doubled grid reuses the old nodes and adds the midpoints.
        const double h = 2.0 * std::numbers::pi / static_cast<double>(2 * n);
        for (std::size_t i = 0; i < n; ++i) sum += integrand(h * static_cast<double>(2 * i + 1));
        n *= 2;
        const cplx cur = sum / static_cast<double>(n);
        delta = std::abs(cur - prev);
        if (delta <= rel_tol * std::max(1.0, std::abs(cur))) return {cur, n, delta};
        prev = cur;
    }
    throw QuadratureError("trapezoid inner product did not converge", delta);
}

/// One node of a tanh-sinh rule on [a, b], with exact distances to both ends.
struct TsNode {
    double x;
    double w;
    double dist_lo;
    double dist_hi;
};

/**
 * Tanh-sinh nodes on [a, b] with step h = 2^{-level}. If `odd_only` is set,
 * only the nodes new at this level are returned (t = j h with j odd), so that
 * successive levels can be accumulated.
 */
inline std::vector<TsNode> tanh_sinh_nodes(double a, double b, int level, bool odd_only = false) {
    const double half = 0.5 * (b - a);
    const double h = std::ldexp(1.0, -level);
    const double pi2 = std::numbers::pi / 2.0;
    std::vector<TsNode> out;
    const int step = odd_only ? 2 : 1;
    const int first = odd_only ? 1 : 0;
    for (int j = first;; j += step) {
        const double t = j * h;
        const double u = pi2 * std::sinh(t);
        const double cu = std::cosh(u);
        const double w = half * h * pi2 * std::cosh(t) / (cu * cu);
        // 1 - tanh(u) = 2/(1+e^{2u}); computed this way to keep tiny distances exact.
        const double dhi = half * 2.0 / (1.0 + std::exp(2.0 * u));
        const double dlo = 2.0 * half - dhi;
        if (dhi <= 0.0 || w < 1e-300) break;
        if (j == 0) {
            out.push_back({a + half, w, half, half});
        } else {
            out.push_back({b - dhi, w, dlo, dhi});
            out.push_back({a + dhi, w, dhi, dlo});
        }
        if (t > 8.0) break;
    }
    return out;
}

/**
 * ∫_a^b f, where f receives the node (with endpoint distances). Levels are
 * refined until two successive estimates differ by less than
 * `tol`·max(1, |estimate|).
 */
template <typename F>
cplx tanh_sinh_integrate(F&& f, double a, double b, double tol = 1e-14, int max_level = 14,
                         int min_level = 3) {
    cplx sum = 0.0;
    for (const auto& nd : tanh_sinh_nodes(a, b, 0)) sum += nd.w * cplx(f(nd));
    cplx prev = sum;
    double delta = INFINITY;
    for (int level = 1; level <= max_level; ++level) {
        sum *= 0.5;
        for (const auto& nd : tanh_sinh_nodes(a, b, level, true)) sum += nd.w * cplx(f(nd));
        delta = std::abs(sum - prev);
        if (level >= min_level && delta <= tol * std::max(1.0, std::abs(sum))) return sum;
        prev = sum;
    }
    throw QuadratureError("tanh-sinh integration did not converge", delta);
}

/**
 * A family of integrals ∫_a^b f_i over a common node set. `eval(node, out)`
 * must overwrite `out` (size `count`) with the integrand values. Levels are
 * refined until every component has moved by less than `tol` times the
 * largest component magnitude (or `tol` when that is below one).
 */
template <typename Eval>
std::vector<cplx> tanh_sinh_integrate_family(Eval&& eval, std::size_t count, double a, double b,
                                             double tol = 1e-13, int max_level = 14,
                                             int min_level = 3) {
    std::vector<cplx> sum(count, 0.0), prev(count, 0.0), vals(count);
    auto accumulate = [&](const std::vector<TsNode>& nodes) {
        for (const auto& nd : nodes) {
            eval(nd, vals);
            for (std::size_t i = 0; i < count; ++i) sum[i] += nd.w * vals[i];
        }
    };
    accumulate(tanh_sinh_nodes(a, b, 0));
    prev = sum;
    double delta = INFINITY;
    for (int level = 1; level <= max_level; ++level) {
        for (auto& s : sum) s *= 0.5;
        accumulate(tanh_sinh_nodes(a, b, level, true));
        delta = 0.0;
        double scale = 1.0;
        for (std::size_t i = 0; i < count; ++i) {
            delta = std::max(delta, std::abs(sum[i] - prev[i]));
            scale = std::max(scale, std::abs(sum[i]));
        }
        if (level >= min_level && delta <= tol * scale) return sum;
        prev = sum;
    }
    throw QuadratureError("tanh-sinh family integration did not converge", delta);
}

/// |2 sin x|^{p} at a node of [0, π] or [-π, 0], using the distance to the
/// nearer endpoint so that the value stays accurate where sin x -> 0.
inline double abs_two_sin_pow(const TsNode& nd, double p) {
    if (p == 0.0) return 1.0;
    const double d = std::min(nd.dist_lo, nd.dist_hi);
    return std::pow(2.0 * std::sin(d), p);
}

/// Reference value of v_s = (1/2π)∫₀^{2π} e^{isx}|2 sin x|^{2k} dx by tanh-sinh.
inline cplx weight_moment_quadrature(double s, double k, double tol = 1e-14) {
    const double pi = std::numbers::pi;
    auto f = [&](const TsNode& nd) { return std::polar(abs_two_sin_pow(nd, 2.0 * k), s * nd.x); };
    return (tanh_sinh_integrate(f, 0.0, pi, tol) + tanh_sinh_integrate(f, pi, 2.0 * pi, tol)) /
           (2.0 * pi);
}

}  // namespace horiesz
