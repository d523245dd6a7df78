#pragma once
/**
 * @file polys.hpp
 * @brief Non-symmetric polynomials E_n^k(ix) and symmetric P_n^k built by
 * the exact coefficient ladder, plus the independent checks that validate
 * them: a Gram–Schmidt oracle, the Cherednik operator, the hypergeometric
 * form and the second-order eigen-equation.
 *
 * All coefficients of E_n^k are real and nonnegative, so the ladder involves
 * no cancellation.
 */

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "horiesz/core.hpp"
#include "horiesz/trig_poly.hpp"

namespace horiesz {

namespace detail {

// Dense coefficient vector over [-r, r]; index j + r.
struct DenseCoeffs {
    int r = 0;
    std::vector<double> c;

    double operator[](int j) const {
        if (j < -r || j > r) return 0.0;
        return c[static_cast<std::size_t>(j + r)];
    }

    RealTrigPoly to_poly() const { return RealTrigPoly(-r, c).trim(0.0); }
};

// E_{-n} = E_n(-x) + k/(n+k) E_n, for n >= 1; both on [-n, n].
inline DenseCoeffs ladder_negative(const DenseCoeffs& en, int n, double k) {
    DenseCoeffs out{n, std::vector<double>(static_cast<std::size_t>(2 * n + 1), 0.0)};
    const double c = k / (n + k);
    for (int j = -n; j <= n; ++j) out.c[static_cast<std::size_t>(j + n)] = en[-j] + c * en[j];
    return out;
}

// E_{n+1}(x) = e^{x} E_{-n}(-x); result on [-(n+1), n+1].
inline DenseCoeffs ladder_positive(const DenseCoeffs& emn, int n) {
    const int r = n + 1;
    DenseCoeffs out{r, std::vector<double>(static_cast<std::size_t>(2 * r + 1), 0.0)};
    for (int j = -r; j <= r; ++j) out.c[static_cast<std::size_t>(j + r)] = emn[-(j - 1)];
    return out;
}

}  // namespace detail

/**
 * Walks the ladder E_0, E_1, E_{-1}, E_2, E_{-2}, ... keeping only the
 * current level, so memory is O(n). Each step yields the index, the monic
 * coefficients on [-|n|, |n|] and ‖E_n‖².
 */
class LadderWalker {
public:
    explicit LadderWalker(const CouplingParam& kp) : k_(kp.k()), w0_(kp.w0()) {}

    struct Step {
        int n;
        int r;                          // coefficients live on [-r, r]
        const std::vector<double>* monic;  // length 2r+1
        double norm_sq;
    };

    /// Advances and returns the next element of the sequence 0, 1, -1, 2, -2, ...
    Step next() {
        if (count_ == 0) {
            cur_ = {0, {1.0}};
            norm_ = w0_;
            n_ = 0;
        } else if (count_ == 1) {
            cur_ = {1, {0.0, 0.0, 1.0}};
            norm_ = w0_;
            pos_norm_ = w0_;
            n_ = 1;
        } else if (n_ > 0) {
            // E_{-n} from E_n; ‖E_{-n}‖² = ‖E_{n+1}‖².
            cur_ = detail::ladder_negative(cur_, n_, k_);
            norm_ = pos_norm_ * norm_ratio(n_, k_);
            n_ = -n_;
        } else {
            const int n = -n_;
            cur_ = detail::ladder_positive(cur_, n);
            pos_norm_ = norm_;
            n_ = n + 1;
        }
        ++count_;
        return {n_, cur_.r, &cur_.c, norm_};
    }

private:
    double k_;
    double w0_;
    long count_ = 0;
    int n_ = 0;
    double norm_ = 1.0;
    double pos_norm_ = 1.0;
    detail::DenseCoeffs cur_;
};

/**
 * Table of E_n^k for |n| <= nmax, both monic and orthonormal, stored densely
 * on [-|n|, |n|].
 */
class Basis {
public:
    Basis(const CouplingParam& kp, int nmax) : kp_(kp), nmax_(std::max(nmax, 0)) {
        const std::size_t count = static_cast<std::size_t>(2 * nmax_ + 1);
        monic_.resize(count);
        ortho_.resize(count);
        norms_.resize(count);
        LadderWalker walk(kp_);
        for (std::size_t i = 0; i < count; ++i) {
            const auto st = walk.next();
            const std::size_t slot = static_cast<std::size_t>(st.n + nmax_);
            monic_[slot] = {st.r, *st.monic};
            norms_[slot] = st.norm_sq;
            const double s = 1.0 / std::sqrt(st.norm_sq);
            ortho_[slot] = monic_[slot];
            for (auto& v : ortho_[slot].c) v *= s;
        }
    }

    Basis(double k, int nmax) : Basis(CouplingParam(k), nmax) {}

    double k() const noexcept { return kp_.k(); }
    const CouplingParam& param() const noexcept { return kp_; }
    int nmax() const noexcept { return nmax_; }

    /// Coefficient of e^{ijx} in E_n (monic) or 𝓔_n (orthonormal).
    double monic_coeff(int n, int j) const { return monic_[slot(n)][j]; }
    double ortho_coeff(int n, int j) const { return ortho_[slot(n)][j]; }

    /// Dense orthonormal coefficients of 𝓔_n on [-|n|, |n|].
    const std::vector<double>& ortho_dense(int n) const { return ortho_[slot(n)].c; }
    const std::vector<double>& monic_dense(int n) const { return monic_[slot(n)].c; }

    double norm_sq(int n) const { return norms_[slot(n)]; }

    RealTrigPoly monic(int n) const { return monic_[slot(n)].to_poly(); }
    RealTrigPoly orthonormal(int n) const { return ortho_[slot(n)].to_poly(); }

private:
    std::size_t slot(int n) const {
        if (std::abs(n) > nmax_) throw std::out_of_range("Basis: index beyond nmax");
        return static_cast<std::size_t>(n + nmax_);
    }

    CouplingParam kp_;
    int nmax_;
    std::vector<detail::DenseCoeffs> monic_;
    std::vector<detail::DenseCoeffs> ortho_;
    std::vector<double> norms_;
};

/// Coefficients of E_n^k(ix), monic at frequency n.
inline TrigPoly monic_E(int n, double k) {
    return Basis(k, std::abs(n)).monic(n).cast<cplx>();
}

/// 𝓔_n^k(ix) = E_n^k(ix)/‖E_n^k‖.
inline TrigPoly orthonormal_E(int n, double k) {
    return Basis(k, std::abs(n)).orthonormal(n).cast<cplx>();
}

/// P_n^k(0) for n >= 1, i.e. Γ(k)Γ(n+2k)/(Γ(2k)Γ(n+k)) as a product.
inline double p_value_at_zero(int n, double k) {
    if (!(k > 0.0)) throw std::domain_error("p_value_at_zero: requires k > 0");
    if (n < 1) throw std::domain_error("p_value_at_zero: gamma formula holds for n >= 1");
    double r = 1.0;
    for (int j = 0; j < n; ++j) r *= (2.0 * k + j) / (k + j);
    return r;
}

/**
 * E_n^k(0) through gamma-ratio products: P_n(0)/2 for n >= 1 and
 * Γ(k)Γ(|n|+2k+1)/(2Γ(2k)Γ(|n|+k+1)) for n <= -1.
 */
inline double value_at_zero(int n, double k) {
    if (!(k > 0.0)) throw std::domain_error("value_at_zero: requires k > 0");
    if (n == 0) throw std::domain_error("value_at_zero: n = 0 is not covered by the formulas");
    if (n > 0) return 0.5 * p_value_at_zero(n, k);
    const int m = -n;
    double r = 0.5;
    for (int j = 0; j <= m; ++j) r *= (2.0 * k + j) / (k + j);
    return r;
}

/// P_n^k(x) = E_n(x) + E_n(-x) in exponential form at real x, from the ladder.
inline double eval_P(int n, double k, double x) {
    if (n < 0) throw std::domain_error("eval_P: n must be >= 0");
    const auto e = Basis(k, n).monic(n);
    return (e.eval_hyperbolic(x) + e.eval_hyperbolic(-x)).real();
}

/// Terminating ₂F₁(a, -n; c; z), summed with the running term ratio.
inline double hyp2f1_terminating(double a, int n, double c, double z) {
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < n; ++j) {
        term *= (a + j) * (-n + j) / ((c + j) * (j + 1.0)) * z;
        sum += term;
    }
    return sum;
}

/// P_n^k(x)/P_n^k(0) = ₂F₁(n+2k, -n; k+1/2; -sinh²(x/2)).
inline double phi_normalized(int n, double k, double x) {
    const double s = std::sinh(0.5 * x);
    return hyp2f1_terminating(n + 2.0 * k, n, k + 0.5, -s * s);
}

/**
 * P_n^k(x) through the hypergeometric representation. The argument is
 * -sinh²(x/2); P_0 = 2 by definition, P_n(0) from the gamma product for n >= 1.
 */
inline double eval_P_hypergeometric(int n, double k, double x) {
    if (n < 0) throw std::domain_error("eval_P_hypergeometric: n must be >= 0");
    if (!(k > 0.0)) throw std::domain_error("eval_P_hypergeometric: requires k > 0");
    const double p0 = n == 0 ? 2.0 : p_value_at_zero(n, k);
    return p0 * phi_normalized(n, k, x);
}

/**
 * |E_n(x) - E_n(0)·{φ_{|n|}^k(x) + (ñ+k)/(2k+1)·sinh x·φ_{|n|-1}^{k+1}(x)}|
 * with φ = P/P(0). E_n from the ladder, E_n(0) from the gamma product and φ
 * from the hypergeometric sum.
 */
inline double jacobi_decomposition_check(int n, double k, double x) {
    if (n == 0) throw std::domain_error("jacobi_decomposition_check: n must be nonzero");
    if (!(k > 0.0)) throw std::domain_error("jacobi_decomposition_check: requires k > 0");
    const int a = std::abs(n);
    const double lhs = Basis(k, a).monic(n).eval_hyperbolic(x).real();
    const double coef = (tilde(n, k) + k) / (2.0 * k + 1.0);
    const double rhs =
        value_at_zero(n, k) * (phi_normalized(a, k, x) + coef * std::sinh(x) * phi_normalized(a - 1, k + 1.0, x));
    return std::abs(lhs - rhs);
}

/**
 * T̃^k u = u' + 2ki (u(x) - u(-x))/(1 - e^{-2ix}) on coefficients.
 * e^{ijx} contributes ij e^{ijx} and ±2ki Σ_{m<|j|} e^{i(|j|-2m)x}.
 */
inline TrigPoly cherednik_apply(const TrigPoly& p, double k) {
    if (p.empty()) return {};
    const int r = std::max(std::abs(p.lo()), std::abs(p.hi()));
    std::vector<cplx> out(static_cast<std::size_t>(2 * r + 1), 0.0);
    auto at = [&](int j) -> cplx& { return out[static_cast<std::size_t>(j + r)]; };
    const cplx I(0.0, 1.0);
    for (int j = p.lo(); j <= p.hi(); ++j) {
        const cplx c = p[j];
        if (c == 0.0) continue;
        at(j) += I * static_cast<double>(j) * c;
        if (j == 0 || k == 0.0) continue;
        const int a = std::abs(j);
        const cplx d = (j > 0 ? 2.0 : -2.0) * k * I * c;
        for (int f = a; f > -a; f -= 2) at(f) += d;
    }
    return TrigPoly(-r, std::move(out)).trim(0.0);
}

/**
 * Independent construction of E_n for |n| <= n_max: the monic polynomial
 * e^{inx} + Σ_{j◁n} c_j e^{ijx} orthogonal to every e^{ijx}, j ◁ n, under
 * the weight moments. Returned in the order n = -n_max .. n_max.
 */
inline std::vector<TrigPoly> gram_schmidt_oracle(int n_max, double k) {
    if (n_max < 0) throw std::invalid_argument("gram_schmidt_oracle: n_max must be >= 0");
    if (n_max > 64) throw std::invalid_argument("gram_schmidt_oracle: n_max must be <= 64");
    const MomentTable mt(CouplingParam(k), 2 * n_max + 2);
    std::vector<TrigPoly> out;
    out.reserve(static_cast<std::size_t>(2 * n_max + 1));
    for (int n = -n_max; n <= n_max; ++n) {
        const auto pred = predecessors(n);
        TrigPoly e = TrigPoly::monomial(n, 1.0);
        if (!pred.empty()) {
            const Eigen::Index d = static_cast<Eigen::Index>(pred.size());
            Eigen::MatrixXd g(d, d);
            Eigen::VectorXd rhs(d);
            for (Eigen::Index i = 0; i < d; ++i) {
                for (Eigen::Index j = 0; j < d; ++j) g(i, j) = mt.integer(pred[i] - pred[j]);
                rhs(i) = -mt.integer(n - pred[i]);
            }
            Eigen::LLT<Eigen::MatrixXd> llt(g);
            if (llt.info() != Eigen::Success) {
                throw std::runtime_error("gram_schmidt_oracle: singular Gram system");
            }
            const Eigen::VectorXd c = llt.solve(rhs);
            for (Eigen::Index i = 0; i < d; ++i) e.at(pred[i]) += c(i);
        }
        out.push_back(std::move(e.trim(0.0)));
    }
    return out;
}

/**
 * |L_k P_n(x) - (n+k)² P_n(x)| with L_k f = f'' + 2k coth(x) f' + k² f and
 * both derivatives from five-point central differences of step h. P_n is
 * evaluated in long double so that rounding stays below truncation error.
 */
inline double lk_eigen_check(int n, double k, double x, double h = 1e-3) {
    if (n < 0) throw std::domain_error("lk_eigen_check: n must be >= 0");
    if (x == 0.0) throw std::domain_error("lk_eigen_check: x must be nonzero");
    const auto e = Basis(k, n).monic(n);
    auto P = [&](long double t) {
        long double s = 0.0L;
        for (int j = e.lo(); j <= e.hi(); ++j) {
            const long double c = e[j];
            if (c != 0.0L) s += c * (std::exp(j * t) + std::exp(-j * t));
        }
        return s;
    };
    const long double X = x, H = h;
    const long double f0 = P(X), fp1 = P(X + H), fm1 = P(X - H), fp2 = P(X + 2 * H), fm2 = P(X - 2 * H);
    const long double d1 = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * H);
    const long double d2 = (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * H * H);
    const long double kk = k;
    const long double lp = d2 + 2 * kk / std::tanh(X) * d1 + kk * kk * f0;
    const long double nk = n + kk;
    return static_cast<double>(std::fabs(lp - nk * nk * f0));
}

}  // namespace horiesz
