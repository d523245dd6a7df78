#pragma once
/**
 * @file riesz.hpp
 * @brief Riesz transforms R = Λ_k(-Δ_k)^{-1/2} and R*, their kernels, the
 * kernel identity involving (m̃ - ñ - 1/2)𝓡(n,m), Calderón–Zygmund scans,
 * the local/global split, discrete Hardy operators and ℓ^p probes.
 *
 * On [0, 2π) the symbol of R is -i e^{-ix/2}, so its moments are
 * μ_s = -i v_{s-1/2} = Im v_{s-1/2}; for R* the symbol i e^{ix/2} gives
 * μ_s = i v_{s+1/2} = -Im v_{s+1/2}. Both are real, and so are the kernels.
 *
 * Large kernel blocks are produced column by column from the ladder: with
 * the shift S (multiplier e^{-ix}) and its adjoint S*,
 *   col(m+1)  = S*(α_m col(m) + β_m col(-m)),
 *   col(-m-1) = (S col(-m) + β_{m+1} col(m+1)) / α_{m+1},
 * seeded by col(0). Each step loses about one row on each side, so the seed
 * is computed on a wider window.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#if !defined(HORIESZ_NO_QUADMATH) && defined(__SIZEOF_FLOAT128__) && __has_include(<quadmath.h>)
extern "C" {
#include <quadmath.h>
}
#define HORIESZ_HAVE_QUADMATH 1
#else
#define HORIESZ_HAVE_QUADMATH 0
#endif

#include "horiesz/core.hpp"
#include "horiesz/ops.hpp"
#include "horiesz/parallel.hpp"
#include "horiesz/polys.hpp"
#include "horiesz/quadrature.hpp"
#include "horiesz/sequence.hpp"
#include "horiesz/transform.hpp"

namespace horiesz {

/// Moments of the Riesz symbols, real-valued.
class RieszMoments {
public:
    RieszMoments(const CouplingParam& kp, int max_abs) : mt_(kp, max_abs + 1) {}

    double operator()(int s, bool star = false) const {
        return star ? -mt_.half_imag(s + 1) : mt_.half_imag(s);
    }

private:
    MomentTable mt_;
};

/// R f (or R* f) on [lo, hi], by pairing the multiplied transform.
inline Sequence riesz_apply(const Sequence& f, double k, int lo, int hi, bool star = false) {
    const CouplingParam kp(k);
    const int r = std::max({f.radius(), std::abs(lo), std::abs(hi)});
    const RieszMoments mu(kp, 2 * r + 1);
    const TrigPoly g = forward(f, Basis(kp, f.radius()));
    return pair_streaming(g, lo, hi, kp, [&](int s) { return cplx(mu(s, star)); });
}

/// 𝓡(n, m) = (R e_m)(n), or 𝓡*(n, m) when `star` is set.
inline double riesz_kernel(int n, int m, double k, bool star = false) {
    const CouplingParam kp(k);
    const int r = std::max(std::abs(n), std::abs(m));
    const Basis b(kp, r);
    const RieszMoments mu(kp, 2 * r + 1);
    double s = 0.0;
    const auto& cm = b.ortho_dense(m);
    const auto& cn = b.ortho_dense(n);
    const int am = std::abs(m), an = std::abs(n);
    for (int a = -am; a <= am; ++a) {
        const double ca = cm[static_cast<std::size_t>(a + am)];
        if (ca == 0.0) continue;
        for (int bb = -an; bb <= an; ++bb) s += ca * cn[static_cast<std::size_t>(bb + an)] * mu(a - bb, star);
    }
    return s;
}

/// Closed form for k = 0: 1/(π(m - n - 1/2)).
inline double riesz_kernel_classical(int n, int m) {
    return 1.0 / (std::numbers::pi * (m - n - 0.5));
}

/**
 * (1/2πi)∫_{-π}^{π} sign(x) e^{-ix/2} 𝓔_m(ix) 𝓔_n(-ix) δ_k(x) dx by
 * tanh-sinh on each half; an independent route to 𝓡(n, m).
 */
inline cplx riesz_kernel_signed_quadrature(int n, int m, double k, double tol = 1e-13) {
    const TrigPoly em = orthonormal_E(m, k);
    const TrigPoly en = orthonormal_E(n, k);
    auto f = [&](const TsNode& nd) {
        return std::polar(1.0, -0.5 * nd.x) * em.eval(nd.x) * std::conj(en.eval(nd.x)) *
               abs_two_sin_pow(nd, 2.0 * k);
    };
    const double pi = std::numbers::pi;
    const cplx pos = tanh_sinh_integrate(f, 0.0, pi, tol);
    const cplx neg = tanh_sinh_integrate(f, -pi, 0.0, tol);
    return (pos - neg) / (2.0 * pi * cplx(0.0, 1.0));
}

/**
 * C(n, m) = ∫_{-π}^{π} h(x) 𝓔_m(ix) 𝓔_n(ix) δ_k dx / conj(𝓡(n, 1-m)),
 * h = sign(x) e^{-ix/2}. The constant is determined, not assumed.
 */
inline cplx cross_identity_constant(int n, int m, double k, double tol = 1e-13) {
    const TrigPoly em = orthonormal_E(m, k);
    const TrigPoly en = orthonormal_E(n, k);
    auto f = [&](const TsNode& nd) {
        return std::polar(1.0, -0.5 * nd.x) * em.eval(nd.x) * en.eval(nd.x) * abs_two_sin_pow(nd, 2.0 * k);
    };
    const double pi = std::numbers::pi;
    const cplx integral = tanh_sinh_integrate(f, 0.0, pi, tol) - tanh_sinh_integrate(f, -pi, 0.0, tol);
    return integral / std::conj(cplx(riesz_kernel(n, 1 - m, k)));
}

/// Kernel matrix over [-radius, radius]² by exact pairing, O(radius³).
inline KernelMatrix riesz_kernel_matrix_pairing(double k, int radius, bool star = false) {
    KernelMatrix km(radius, k, star ? "riesz-star" : "riesz", "pairing");
    const CouplingParam kp(k);
    const Basis basis(kp, radius);
    const RieszMoments mu(kp, 2 * radius + 1);
    parallel_for(-radius, radius + 1, [&](long mm) {
        const int m = static_cast<int>(mm);
        const TrigPoly g = basis.orthonormal(m).cast<cplx>();
        const Sequence col =
            pair_with_basis(g, -radius, radius, basis, [&](int s) { return cplx(mu(s, star)); });
        for (int n = -radius; n <= radius; ++n) km.at(n, m) = col[n].real();
    });
    return km;
}

namespace detail {

inline double real_sqrt(double x) { return std::sqrt(x); }
inline double real_exp(double x) { return std::exp(x); }
inline double real_lgamma(double x) { return std::lgamma(x); }

#if HORIESZ_HAVE_QUADMATH
using wide_real = __float128;
inline wide_real real_sqrt(wide_real x) { return sqrtq(x); }
inline wide_real real_exp(wide_real x) { return expq(x); }
inline wide_real real_lgamma(wide_real x) { return lgammaq(x); }
#else
using wide_real = long double;
inline wide_real real_sqrt(wide_real x) { return std::sqrt(x); }
inline wide_real real_exp(wide_real x) { return std::exp(x); }
inline wide_real real_lgamma(wide_real x) { return std::lgamma(x); }
#endif

/// The row recurrence for 𝓡(·, 0) carried out in T.
template <typename T>
std::vector<double> riesz_seed(double kd, int radius) {
    const T k = kd;
    const int S = radius + 2;
    // half[j] = Im v_{j+1/2}, as in MomentTable.
    std::vector<T> half(static_cast<std::size_t>(S + 3));
    const T lg = real_lgamma(T(2) * k + T(1));
    const T r2 = real_sqrt(T(2)) / T(2);
    half[0] = r2 * real_exp(lg - real_lgamma(k + T(1.25)) - real_lgamma(k + T(0.75)));
    half[1] = r2 * real_exp(lg - real_lgamma(k + T(1.75)) - real_lgamma(k + T(0.25)));
    for (std::size_t j = 2; j < half.size(); ++j) {
        const T sj = T(static_cast<int>(j) - 2) + T(0.5);
        half[j] = -(k - sj / T(2)) / (k + T(1) + sj / T(2)) * half[j - 2];
    }
    const auto half_imag = [&](int j) -> T {
        return j >= 1 ? half[static_cast<std::size_t>(j - 1)] : -half[static_cast<std::size_t>(-j)];
    };
    const T w0 = real_exp(lg - T(2) * real_lgamma(k + T(1)));
    const auto ladder = [&](int p) -> std::pair<T, T> {
        if (kd == 0.0) return {T(1), T(0)};
        const T q = p;
        return {real_sqrt(q * (q + T(2) * k)) / (q + k), k / (q + k)};
    };

    const std::size_t len = static_cast<std::size_t>(2 * S + 1);
    std::vector<T> pos(len), neg(len), npos(len, T(0)), nneg(len, T(0));
    const auto at = [S](std::vector<T>& v, int s) -> T& { return v[static_cast<std::size_t>(s + S)]; };
    for (int s = -S; s <= S; ++s) at(pos, s) = half_imag(-s) / w0;
    neg = pos;
    std::vector<double> out(static_cast<std::size_t>(2 * radius + 1));
    out[static_cast<std::size_t>(radius)] = static_cast<double>(at(pos, 0));
    int lo = -S, hi = S;
    for (int p = 0; p < radius; ++p) {
        const auto [ap, bp] = ladder(p);
        const auto [aq, bq] = ladder(p + 1);
        --hi;
        for (int s = lo; s <= hi; ++s) at(npos, s) = ap * at(pos, s + 1) + bp * at(neg, s + 1);
        ++lo;
        for (int s = lo; s <= hi; ++s) at(nneg, s) = (at(neg, s - 1) + bq * at(npos, s)) / aq;
        pos.swap(npos);
        neg.swap(nneg);
        out[static_cast<std::size_t>(radius + p + 1)] = static_cast<double>(at(pos, 0));
        out[static_cast<std::size_t>(radius - p - 1)] = static_cast<double>(at(neg, 0));
    }
    return out;
}

}  // namespace detail

/**
 * Column generator for 𝓡 via the shift recurrence. Columns are produced in
 * the order m = 0, 1, -1, 2, -2, ..., each valid on rows [-rows, rows].
 */
class RieszColumnSweep {
public:
    RieszColumnSweep(double k, int rows, int max_col)
        : kp_(k), rows_(std::max(rows, 0)), max_col_(std::max(max_col, 0)) {
        m_ = rows_ + 2 * max_col_ + 8;
        const int span = m_ + 2;
        alpha_.resize(static_cast<std::size_t>(2 * span + 1));
        beta_.resize(alpha_.size());
        for (int j = -span; j <= span; ++j) {
            const auto c = ladder_coeffs(j, k);
            alpha_[static_cast<std::size_t>(j + span)] = c.alpha;
            beta_[static_cast<std::size_t>(j + span)] = c.beta;
        }
        span_ = span;
    }

    int rows() const noexcept { return rows_; }
    int max_col() const noexcept { return max_col_; }
    /// Radius of the seed column.
    int seed_radius() const noexcept { return m_; }

    /**
     * col(0) on |n| <= radius. With A_s(n) = ⟨-i e^{-i(s+1/2)x}, 𝓔_n⟩_k,
     *   A_s(0)    = Im v_{-s-1/2} / √w0,
     *   A_s(p+1)  = α_p A_{s+1}(p) + β_p A_{s+1}(-p),
     *   A_s(-p-1) = (A_{s-1}(-p) + β_{p+1} A_s(p+1)) / α_{p+1},
     * and col(0)(n) = A_0(n)/√w0. Every A_s(n) is bounded by 1.
     *
     * The column recurrence is stable, but it amplifies any inconsistency in
     * the seed roughly like m^{2k}; for k > 1 a double-rounded ratio between
     * the two half-moment families is already visible at m ~ 500. The seed is
     * then computed in extended precision.
     */
    static std::vector<double> seed_column(const CouplingParam& kp, int radius) {
        if (kp.k() > 1.0) return detail::riesz_seed<detail::wide_real>(kp.k(), radius);
        return detail::riesz_seed<double>(kp.k(), radius);
    }

    /// Calls visit(m, span) with span[n + rows] = 𝓡(n, m).
    template <typename Visit>
    void run(Visit&& visit) const {
        const int M = m_;
        Col pos{seed_column(kp_, M), -M, M};  // col(m)
        emit(visit, 0, pos);
        Col neg = pos;                         // col(-m)
        Col u;
        for (int m = 0; m < max_col_; ++m) {
            const double am = alpha(m), bm = beta(m);
            u.v.assign(pos.v.size(), 0.0);
            u.lo = std::max(pos.lo, neg.lo);
            u.hi = std::min(pos.hi, neg.hi);
            for (int n = u.lo; n <= u.hi; ++n) u.at(n) = am * pos.at(n) + bm * neg.at(n);
            Col np = adj_shift(u);
            Col sn = shift(neg);
            const double aq = alpha(m + 1), bq = beta(m + 1);
            Col nn;
            nn.v.assign(pos.v.size(), 0.0);
            nn.lo = std::max(sn.lo, np.lo);
            nn.hi = std::min(sn.hi, np.hi);
            for (int n = nn.lo; n <= nn.hi; ++n) nn.at(n) = (sn.at(n) + bq * np.at(n)) / aq;
            emit(visit, m + 1, np);
            emit(visit, -(m + 1), nn);
            pos = std::move(np);
            neg = std::move(nn);
        }
    }

private:
    struct Col {
        std::vector<double> v;
        int lo = 0;
        int hi = -1;
        double& at(int n) { return v[static_cast<std::size_t>(n + static_cast<int>(v.size() / 2))]; }
        double at(int n) const { return v[static_cast<std::size_t>(n + static_cast<int>(v.size() / 2))]; }
    };

    double alpha(int j) const { return alpha_[static_cast<std::size_t>(j + span_)]; }
    double beta(int j) const { return beta_[static_cast<std::size_t>(j + span_)]; }

    void clamp(Col& g) const {
        g.lo = std::max(g.lo, -m_);
        g.hi = std::min(g.hi, m_);
    }

    // (S* f)(n) = α_{n-1} f(n-1) + β_{n-1} f(1-n).
    Col adj_shift(const Col& f) const {
        Col g;
        g.v.assign(f.v.size(), 0.0);
        g.lo = std::max(f.lo + 1, 1 - f.hi);
        g.hi = std::min(f.hi + 1, 1 - f.lo);
        clamp(g);
        for (int n = g.lo; n <= g.hi; ++n) g.at(n) = alpha(n - 1) * f.at(n - 1) + beta(n - 1) * f.at(1 - n);
        return g;
    }

    // (S f)(n) = α_n f(n+1) + β_{-n} f(1-n).
    Col shift(const Col& f) const {
        Col g;
        g.v.assign(f.v.size(), 0.0);
        g.lo = std::max(f.lo - 1, 1 - f.hi);
        g.hi = std::min(f.hi - 1, 1 - f.lo);
        clamp(g);
        for (int n = g.lo; n <= g.hi; ++n) g.at(n) = alpha(n) * f.at(n + 1) + beta(-n) * f.at(1 - n);
        return g;
    }

    template <typename Visit>
    void emit(Visit& visit, int m, const Col& c) const {
        if (c.lo > -rows_ || c.hi < rows_) throw std::logic_error("RieszColumnSweep: seed margin exhausted");
        const std::size_t off = static_cast<std::size_t>(m_ - rows_);
        visit(m, std::span<const double>(c.v.data() + off, static_cast<std::size_t>(2 * rows_ + 1)));
    }

    CouplingParam kp_;
    int rows_;
    int max_col_;
    int m_ = 0;
    int span_ = 0;
    std::vector<double> alpha_;
    std::vector<double> beta_;
};

/// Real block 𝓡(n, m) for |n| <= rows, |m| <= cols, stored by column.
struct KernelBlock {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    double operator()(int n, int m) const {
        return v[static_cast<std::size_t>(m + cols) * static_cast<std::size_t>(2 * rows + 1) +
                 static_cast<std::size_t>(n + rows)];
    }
};

inline KernelBlock riesz_kernel_block(double k, int rows, int cols) {
    KernelBlock blk{rows, cols, std::vector<double>(static_cast<std::size_t>((2 * rows + 1) * (2 * cols + 1)))};
    const RieszColumnSweep sweep(k, rows, cols);
    const std::size_t h = static_cast<std::size_t>(2 * rows + 1);
    sweep.run([&](int m, std::span<const double> col) {
        std::copy(col.begin(), col.end(), blk.v.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(m + cols) * h));
    });
    return blk;
}

/// Kernel matrix over [-radius, radius]² from the column recurrence.
/// 𝓡* is the transpose, since the kernels are real.
inline KernelMatrix riesz_kernel_matrix(double k, int radius, bool star = false) {
    KernelMatrix km(radius, k, star ? "riesz-star" : "riesz", "recurrence");
    const KernelBlock blk = riesz_kernel_block(k, radius, radius);
    for (int n = -radius; n <= radius; ++n)
        for (int m = -radius; m <= radius; ++m) km.at(n, m) = star ? blk(m, n) : blk(n, m);
    return km;
}

struct NormRatio {
    double ratio = 0.0;      ///< ‖Rf‖₂/‖f‖₂ over all of ℤ (extrapolated)
    double truncated = 0.0;  ///< same, summed over |n| <= window only
    int window = 0;
    bool converged = false;
};

/**
 * ‖Rf‖₂/‖f‖₂ on all of ℤ. Partial sums over |n| <= W have a tail decaying
 * like W^{-(2k+1)}; W is doubled and the sums at W/4, W/2, W are combined by
 * Aitken's Δ² until two successive extrapolations agree to `tol`.
 */
inline NormRatio riesz_norm_ratio(const Sequence& f, double k, double tol = 1e-11, int max_window = 1 << 16) {
    NormRatio out;
    const double nf = f.norm2_sq();
    if (nf == 0.0) return {1.0, 1.0, 0, true};
    const int r = f.radius();
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int w = 256; w <= max_window; w *= 2) {
        std::vector<cplx> rf(static_cast<std::size_t>(2 * w + 1), 0.0);
        auto add_column = [&](int m, auto&& kern) {
            const cplx fm = f[m];
            if (fm == 0.0) return;
            for (int n = -w; n <= w; ++n) rf[static_cast<std::size_t>(n + w)] += kern(n) * fm;
        };
        if (k == 0.0) {
            for (int m = f.lo(); m <= f.hi(); ++m) add_column(m, [&](int n) { return riesz_kernel_classical(n, m); });
        } else {
            RieszColumnSweep(k, w, r).run([&](int m, std::span<const double> col) {
                if (m < f.lo() || m > f.hi()) return;
                add_column(m, [&](int n) { return col[static_cast<std::size_t>(n + w)]; });
            });
        }
        auto partial = [&](int v) {
            double s = 0.0;
            for (int n = -v; n <= v; ++n) s += std::norm(rf[static_cast<std::size_t>(n + w)]);
            return s / nf;
        };
        const double s1 = partial(w / 4), s2 = partial(w / 2), s3 = partial(w);
        const double a = std::exp2(2.0 * k + 1.0), b = 2.0 * a;
        const double r1 = (a * s2 - s1) / (a - 1.0), r2 = (a * s3 - s2) / (a - 1.0);
        const double est = (b * r2 - r1) / (b - 1.0);
        out = {std::sqrt(est), std::sqrt(s3), w, false};
        if (std::abs(s3 - s2) <= tol || std::abs(est - prev) <= tol) {
            out.converged = true;
            return out;
        }
        prev = est;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kernel identity with δ_{k-1/2}

/// Residual tolerance: bounded weight for k >= 1/2, singular otherwise.
inline double lemma_tolerance(double k) { return k >= 0.5 ? 1e-8 : 1e-6; }

/**
 * Checks (m̃ - ñ - 1/2)𝓡(n,m) = (2k/π)∫_{-π}^{π} e^{-ix} 𝓔_m(ix) 𝓔_n(ix)
 * cos(x/2) |2 sin x|^{2k-1} dx for |n|, |m| <= nmax. The integral is paired
 * against J_j = ∫_{-π}^{π} e^{ijx} cos(x/2)|2 sin x|^{2k-1} dx, computed
 * once by tanh-sinh on [0, π] (the weight is even).
 */
class LemmaChecker {
public:
    LemmaChecker(double k, int nmax) : kp_(k), basis_(kp_, nmax), mu_(kp_, 2 * nmax + 1) {
        if (!(k > 0.0)) throw std::domain_error("lemma identity requires k > 0");
        const int smax = 2 * nmax + 1;
        const std::size_t count = static_cast<std::size_t>(smax + 1);
        auto eval = [&](const TsNode& nd, std::vector<cplx>& out) {
            const double base = 2.0 * std::cos(0.5 * nd.x) * abs_two_sin_pow(nd, 2.0 * k - 1.0);
            const double c1 = std::cos(nd.x);
            double prev = 1.0, cur = c1;
            out[0] = base;
            if (count > 1) out[1] = base * c1;
            for (std::size_t s = 2; s < count; ++s) {
                const double nx = 2.0 * c1 * cur - prev;
                prev = cur;
                cur = nx;
                out[s] = base * cur;
            }
        };
        const auto vals = tanh_sinh_integrate_family(eval, count, 0.0, std::numbers::pi, 1e-14, 18);
        j_.resize(count);
        for (std::size_t s = 0; s < count; ++s) j_[s] = vals[s].real();
    }

    double k() const noexcept { return kp_.k(); }

    double lhs(int n, int m) const {
        return (tilde(m, k()) - tilde(n, k()) - 0.5) * kernel(n, m);
    }

    double rhs(int n, int m) const {
        const auto& cm = basis_.ortho_dense(m);
        const auto& cn = basis_.ortho_dense(n);
        const int am = std::abs(m), an = std::abs(n);
        double s = 0.0;
        for (int a = -am; a <= am; ++a) {
            const double ca = cm[static_cast<std::size_t>(a + am)];
            if (ca == 0.0) continue;
            for (int b = -an; b <= an; ++b) s += ca * cn[static_cast<std::size_t>(b + an)] * J(a + b - 1);
        }
        return 2.0 * k() / std::numbers::pi * s;
    }

    double residual(int n, int m) const { return std::abs(lhs(n, m) - rhs(n, m)); }

    double kernel(int n, int m) const {
        const auto& cm = basis_.ortho_dense(m);
        const auto& cn = basis_.ortho_dense(n);
        const int am = std::abs(m), an = std::abs(n);
        double s = 0.0;
        for (int a = -am; a <= am; ++a) {
            const double ca = cm[static_cast<std::size_t>(a + am)];
            if (ca == 0.0) continue;
            for (int b = -an; b <= an; ++b) s += ca * cn[static_cast<std::size_t>(b + an)] * mu_(a - b);
        }
        return s;
    }

private:
    double J(int j) const { return j_[static_cast<std::size_t>(std::abs(j))]; }

    CouplingParam kp_;
    Basis basis_;
    RieszMoments mu_;
    std::vector<double> j_;
};

inline double lemma_identity_check(int n, int m, double k) {
    return LemmaChecker(k, std::max(std::abs(n), std::abs(m))).residual(n, m);
}

// ---------------------------------------------------------------------------
// Estimate harness

struct EstimateReport {
    std::string quantity;
    double k = 0.0;
    int window = 0;
    double sup_value = 0.0;
    std::vector<std::pair<int, double>> trend;
    bool pass = false;
    bool inconclusive = false;
};

/// Windows below this are too small for a trend and are flagged inconclusive.
inline constexpr int kMinTrendWindow = 16;

/// {N/8, N/4, N/2, N}, dropping sizes below 1.
inline std::vector<int> trend_windows(int n) {
    std::vector<int> w;
    for (int d : {8, 4, 2, 1}) {
        const int v = n / d;
        if (v >= 1 && (w.empty() || w.back() != v)) w.push_back(v);
    }
    if (w.empty()) w.push_back(std::max(n, 0));
    return w;
}

/// Pass iff at least two points, window large enough, and the last two
/// values differ by less than 5% relative.
inline void finalize_report(EstimateReport& r) {
    r.sup_value = r.trend.empty() ? 0.0 : r.trend.back().second;
    r.window = r.trend.empty() ? 0 : r.trend.back().first;
    r.inconclusive = r.window < kMinTrendWindow || r.trend.size() < 2;
    if (r.inconclusive) {
        r.pass = false;
        return;
    }
    const double a = r.trend[r.trend.size() - 2].second;
    const double b = r.trend.back().second;
    r.pass = std::isfinite(b) && std::abs(b - a) < 0.05 * std::max(std::abs(a), std::numeric_limits<double>::min());
}

/// Membership in W_n = {m : |n|/2 <= |m| <= 3|n|/2}.
inline bool in_local_window(int n, int m) {
    const int an = std::abs(n), am = std::abs(m);
    return 2 * am >= an && 2 * am <= 3 * an;
}

namespace detail {

inline std::vector<std::pair<int, double>> prefix_by_level(const std::vector<double>& level_max,
                                                           const std::vector<int>& windows) {
    std::vector<std::pair<int, double>> out;
    double run = 0.0;
    int next = 0;
    for (int w : windows) {
        for (; next <= w && next < static_cast<int>(level_max.size()); ++next) run = std::max(run, level_max[static_cast<std::size_t>(next)]);
        out.emplace_back(w, run);
    }
    return out;
}

}  // namespace detail

/// sup |𝓡(n,m)|·|n-m| over |n|, |m| <= W, |n| != |m|, for growing W.
inline EstimateReport size_bound_scan(double k, int n_range) {
    const int N = std::max(n_range, 0);
    const KernelBlock K = riesz_kernel_block(k, N, N);
    std::vector<double> level(static_cast<std::size_t>(N + 1), 0.0);
    for (int m = -N; m <= N; ++m)
        for (int n = -N; n <= N; ++n) {
            if (std::abs(n) == std::abs(m)) continue;
            const std::size_t lv = static_cast<std::size_t>(std::max(std::abs(n), std::abs(m)));
            level[lv] = std::max(level[lv], std::abs(K(n, m)) * std::abs(n - m));
        }
    EstimateReport r{"size_sup_abs_kernel_times_distance", k};
    r.trend = detail::prefix_by_level(level, trend_windows(N));
    finalize_report(r);
    return r;
}

/**
 * sup |𝓡(n,m+1) - 𝓡(n,m)|·(|m|-|n|)² over |n| <= W and m in the band
 * |n|/2 <= |m| <= 3|n|/2 with |m| != |n|.
 */
inline EstimateReport smoothness_bound_scan(double k, int n_range) {
    const int N = std::max(n_range, 0);
    const int C = (3 * N) / 2 + 2;
    const KernelBlock K = riesz_kernel_block(k, N, C);
    std::vector<double> level(static_cast<std::size_t>(N + 1), 0.0);
    for (int n = -N; n <= N; ++n) {
        const int an = std::abs(n);
        for (int m = -C + 1; m < C; ++m) {
            if (!in_local_window(n, m) || std::abs(m) == an) continue;
            const double d = std::abs(std::abs(m) - an);
            const std::size_t lv = static_cast<std::size_t>(an);
            level[lv] = std::max(level[lv], std::abs(K(n, m + 1) - K(n, m)) * d * d);
        }
    }
    EstimateReport r{"smoothness_sup_band", k};
    r.trend = detail::prefix_by_level(level, trend_windows(N));
    finalize_report(r);
    return r;
}

/// Σ over {|n| <= window : ||n|-|m|| > 2|m-ℓ|} of |K(n,m)-K(n,ℓ)| + |K(m,n)-K(ℓ,n)|.
template <typename Kern>
double hormander_sum_with(const Kern& K, int m, int l, int window) {
    if (m == l) return 0.0;
    const int gap = 2 * std::abs(m - l);
    double s = 0.0;
    for (int n = -window; n <= window; ++n) {
        if (std::abs(std::abs(n) - std::abs(m)) <= gap) continue;
        s += std::abs(K(n, m) - K(n, l)) + std::abs(K(m, n) - K(l, n));
    }
    return s;
}

inline double hormander_sum(int m, int l, double k, int window) {
    if (m == l) return 0.0;
    const int r = std::max({window, std::abs(m), std::abs(l)});
    const KernelBlock K = riesz_kernel_block(k, r, r);
    return hormander_sum_with(K, m, l, window);
}

/// sup over m != ℓ with |m|, |ℓ| <= W/2 of the truncated Hörmander sum on |n| <= W.
inline EstimateReport hormander_scan(double k, int n_range) {
    const int N = std::max(n_range, 0);
    const KernelBlock K = riesz_kernel_block(k, N, N);
    EstimateReport r{"hormander_sup_truncated_sum", k};
    for (int w : trend_windows(N)) {
        const int h = w / 2;
        std::vector<double> best(static_cast<std::size_t>(2 * h + 1), 0.0);
        parallel_for(-h, h + 1, [&](long mm) {
            const int m = static_cast<int>(mm);
            double b = 0.0;
            for (int l = -h; l <= h; ++l) b = std::max(b, hormander_sum_with(K, m, l, w));
            best[static_cast<std::size_t>(m + h)] = b;
        });
        r.trend.emplace_back(w, *std::max_element(best.begin(), best.end()));
    }
    finalize_report(r);
    return r;
}

// ---------------------------------------------------------------------------
// Local/global split and Hardy operators

struct LocalGlobal {
    Sequence local;
    Sequence global;
};

/// T_loc f(n) = Σ_{m ∈ W_n} 𝓡(n,m) f(m), T_glob f(n) = Σ_{m ∉ W_n} 𝓡(n,m) f(m).
inline LocalGlobal local_global_split(const Sequence& f, double k, int lo, int hi) {
    LocalGlobal out{Sequence::zeros(lo, hi), Sequence::zeros(lo, hi)};
    for (int m = f.lo(); m <= f.hi(); ++m) {
        const cplx fm = f[m];
        if (fm == 0.0) continue;
        const Sequence col = riesz_apply(Sequence::impulse(m), k, lo, hi);
        for (int n = lo; n <= hi; ++n) (in_local_window(n, m) ? out.local : out.global).at(n) += col[n] * fm;
    }
    return out;
}

/// H₀(a)(n) = (1/(n+1)) Σ_{m=0}^{n} a(m).
inline std::vector<double> hardy_h0(const std::vector<double>& a) {
    std::vector<double> out(a.size());
    double s = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        s += a[n];
        out[n] = s / static_cast<double>(n + 1);
    }
    return out;
}

/// H₁(a)(n) = Σ_{m >= max(n,1)} a(m)/m, plus a(0) at n = 0.
inline std::vector<double> hardy_h1(const std::vector<double>& a) {
    std::vector<double> out(a.size(), 0.0);
    double tail = 0.0;
    for (std::size_t i = a.size(); i-- > 1;) {
        tail += a[i] / static_cast<double>(i);
        out[i] = tail;
    }
    if (!a.empty()) out[0] = tail + a[0];
    return out;
}

enum class Hardy { H0, H1 };

inline std::vector<double> hardy_apply(const std::vector<double>& a, Hardy which) {
    return which == Hardy::H0 ? hardy_h0(a) : hardy_h1(a);
}

// ---------------------------------------------------------------------------
// ℓ^p probes

/// ±1 vector of length len from (seed, window, trial); independent of threads.
inline std::vector<double> rademacher(std::uint64_t seed, int window, int trial, std::size_t len) {
    std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(window), static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(sq);
    std::vector<double> v(len);
    for (auto& x : v) x = (rng() >> 63) ? 1.0 : -1.0;
    return v;
}

/**
 * Empirical lower bounds of ‖R‖_{ℓ^p→ℓ^p} on sequences supported in
 * [-W, W]: the max over all impulses and `trials` Rademacher vectors of
 * ‖Rf‖_p/‖f‖_p, with Rf truncated to [-4W, 4W] (so every value is a lower
 * bound). Bounds for smaller windows carry over to larger ones, so the
 * trend is a running maximum. One column sweep serves all windows and p.
 */
inline std::vector<EstimateReport> lp_growth_probe(double k, const std::vector<double>& p_list,
                                                   std::vector<int> windows, int trials,
                                                   std::uint64_t seed) {
    for (double p : p_list)
        if (!(p > 1.0)) throw std::invalid_argument("lp_growth_probe: p must be > 1");
    std::sort(windows.begin(), windows.end());
    windows.erase(std::unique(windows.begin(), windows.end()), windows.end());
    if (windows.empty()) throw std::invalid_argument("lp_growth_probe: no windows");
    const int wmax = windows.back();
    const int rows = 4 * wmax;
    const std::size_t nw = windows.size(), np = p_list.size();
    trials = std::max(trials, 0);

    // Rademacher inputs and output accumulators per (window, trial).
    struct Trial {
        int w;
        std::vector<double> sign;
        std::vector<double> acc;
    };
    std::vector<Trial> tr;
    for (std::size_t i = 0; i < nw; ++i)
        for (int t = 0; t < trials; ++t) {
            const int w = windows[i];
            tr.push_back({w, rademacher(seed, w, t, static_cast<std::size_t>(2 * w + 1)),
                          std::vector<double>(static_cast<std::size_t>(8 * w + 1), 0.0)});
        }

    std::vector<double> imp(nw * np, 0.0);  // [window][p] max impulse norm
    std::vector<double> ring(nw * np);
    const RieszColumnSweep sweep(k, rows, wmax);
    sweep.run([&](int m, std::span<const double> col) {
        const int am = std::abs(m);
        std::fill(ring.begin(), ring.end(), 0.0);
        // Σ|x|^p over rings 4W_{i-1} < |n| <= 4W_i.
        for (int n = -rows; n <= rows; ++n) {
            const double x = std::abs(col[static_cast<std::size_t>(n + rows)]);
            if (x == 0.0) continue;
            const int an = std::abs(n);
            std::size_t i = 0;
            while (4 * windows[i] < an) ++i;
            const double lx = std::log(x);
            for (std::size_t q = 0; q < np; ++q) ring[i * np + q] += std::exp(p_list[q] * lx);
        }
        for (std::size_t q = 0; q < np; ++q) {
            double cum = 0.0;
            for (std::size_t i = 0; i < nw; ++i) {
                cum += ring[i * np + q];
                if (windows[i] >= am) imp[i * np + q] = std::max(imp[i * np + q], std::pow(cum, 1.0 / p_list[q]));
            }
        }
        parallel_for(0, static_cast<long>(tr.size()), [&](long ti) {
            Trial& T = tr[static_cast<std::size_t>(ti)];
            if (am > T.w) return;
            const double s = T.sign[static_cast<std::size_t>(m + T.w)];
            const int r = 4 * T.w;
            const double* src = col.data() + (rows - r);
            for (int j = 0; j <= 2 * r; ++j) T.acc[static_cast<std::size_t>(j)] += s * src[j];
        });
    });

    std::vector<EstimateReport> out;
    for (std::size_t q = 0; q < np; ++q) {
        const double p = p_list[q];
        char name[64];
        std::snprintf(name, sizeof name, "lp_lower_bound_p%g", p);
        EstimateReport r{name, k};
        double run = 0.0;
        for (std::size_t i = 0; i < nw; ++i) {
            double best = imp[i * np + q];
            for (const auto& T : tr) {
                if (T.w != windows[i]) continue;
                double s = 0.0;
                for (double x : T.acc)
                    if (x != 0.0) s += std::pow(std::abs(x), p);
                best = std::max(best, std::pow(s, 1.0 / p) / std::pow(2.0 * T.w + 1.0, 1.0 / p));
            }
            run = std::max(run, best);
            r.trend.emplace_back(windows[i], run);
        }
        finalize_report(r);
        out.push_back(std::move(r));
    }
    return out;
}

/// {W/8, W/4, W/2, W} as probe windows.
inline std::vector<int> probe_windows(int wmax) { return trend_windows(wmax); }

}  // namespace horiesz
