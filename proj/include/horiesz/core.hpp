#pragma once
/**
 * @file core.hpp
 * @brief Multiplicity parameter, index combinatorics, ladder coefficients,
 * norms and moments of the weight |2 sin x|^{2k}.
 *
 * Everything here is a pure function of (n, k). The only transcendental
 * gamma evaluation is the zeroth moment Γ(2k+1)/Γ(k+1)² and the two seeds
 * of the half-integer moment chains; every other gamma ratio is produced by
 * integer-step product recurrences.
 */

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace horiesz {

using cplx = std::complex<double>;

/// Multiplicity parameter k together with the zeroth weight moment.
class CouplingParam {
public:
    explicit CouplingParam(double k) : k_(k) {
        if (!(k >= 0.0) || !std::isfinite(k)) {
            throw std::domain_error("multiplicity parameter k must be finite and >= 0");
        }
        w0_ = std::exp(std::lgamma(2.0 * k + 1.0) - 2.0 * std::lgamma(k + 1.0));
    }

    double k() const noexcept { return k_; }
    /// ‖E_0‖² = Γ(2k+1)/Γ(k+1)².
    double w0() const noexcept { return w0_; }

private:
    double k_;
    double w0_;
};

/// Spectral shift ñ: n + k for n >= 1, n - k for n <= 0.
///
/// At n = 0 the Cherednik operator applied to the constant function gives -k,
/// so the n <= 0 branch is used there.
inline double tilde(int n, double k) noexcept {
    return n >= 1 ? n + k : n - k;
}

/// Sign ε(n): +1 for n >= 0, -1 otherwise.
inline int eps(int n) noexcept { return n >= 0 ? 1 : -1; }

struct SpectralIndex {
    int n;
    double tilde_n;
    int eps_n;
};

inline SpectralIndex spectral_index(int n, double k) noexcept {
    return {n, tilde(n, k), eps(n)};
}

/// The partial order j ◁ n.
inline bool triangle_less(int j, int n) noexcept {
    const int aj = std::abs(j);
    const int an = std::abs(n);
    if (aj < an) return (an - aj) % 2 == 0;
    return aj == an && n < j;
}

/// Predecessors {j : j ◁ n}, in increasing order.
inline std::vector<int> predecessors(int n) {
    std::vector<int> out;
    const int an = std::abs(n);
    for (int j = -an + 2; j <= an - 2; j += 2) out.push_back(j);
    if (n < 0) out.push_back(-n);
    return out;
}

struct LadderCoeffs {
    double alpha;
    double beta;
};

/// (α_n, β_n) of the three-term ladder e^{-ix}𝓔_{n+1} = α_n 𝓔_n + β_n 𝓔_{-n}.
/// For k = 0 the pair is (1, 0) for every n.
inline LadderCoeffs ladder_coeffs(int n, double k) noexcept {
    if (k == 0.0) return {1.0, 0.0};
    const double an = std::abs(n);
    const double alpha = std::sqrt(an * (an + 2.0 * k)) / (an + k);
    const double beta = eps(n) * k / (an + k);
    return {alpha, beta};
}

/// Ratio ‖E_{n+1}‖²/‖E_n‖² = n(n+2k)/(n+k)² for n >= 1.
inline double norm_ratio(int n, double k) noexcept {
    const double dn = n;
    return dn * (dn + 2.0 * k) / ((dn + k) * (dn + k));
}

/// ‖E_n^k‖²_k through the product recurrence seeded with w0.
inline double norm_sq(int n, const CouplingParam& kp) noexcept {
    const int m = n >= 1 ? n : 1 - n;
    double r = kp.w0();
    for (int j = 1; j < m; ++j) r *= norm_ratio(j, kp.k());
    return r;
}

inline double norm_sq(int n, double k) { return norm_sq(n, CouplingParam(k)); }

/// Closed form n!Γ(n+2k+1)/Γ(n+k+1)² for ‖E_{n+1}‖² = ‖E_{-n}‖², n >= 0.
inline double norm_sq_closed_form(int n, double k) {
    if (n < 0) throw std::domain_error("norm_sq_closed_form: n must be >= 0");
    return std::exp(std::lgamma(n + 1.0) + std::lgamma(n + 2.0 * k + 1.0) -
                    2.0 * std::lgamma(n + k + 1.0));
}

/**
 * Moments v_s = (1/2π)∫₀^{2π} e^{isx}|2 sin x|^{2k} dx for integer and
 * half-integer s, tabulated for |s| <= max_abs.
 *
 * Integer moments are real and vanish for odd s; even ones follow
 * w_{2(m+1)} = -(k-m)/(k+m+1)·w_{2m}. Half-integer moments are purely
 * imaginary and follow the same ratio in steps of two, seeded at s = 1/2
 * and s = 3/2 from
 *   v_s = e^{iπs} cos(πs/2) Γ(2k+1) / (Γ(k+1+s/2) Γ(k+1-s/2)),
 * with v_{-s} = conj(v_s).
 */
class MomentTable {
public:
    MomentTable(const CouplingParam& kp, int max_abs) : k_(kp.k()) {
        if (max_abs < 0) max_abs = 0;
        max_ = max_abs;
        even_.assign(static_cast<std::size_t>(max_ / 2 + 1), 0.0);
        even_[0] = kp.w0();
        for (int m = 0; m + 1 < static_cast<int>(even_.size()); ++m) {
            even_[m + 1] = -(k_ - m) / (k_ + m + 1.0) * even_[m];
        }
        // half_[j] holds Im v_{j+1/2} for j = 0..max_.
        half_.assign(static_cast<std::size_t>(max_ + 1), 0.0);
        const double lg = std::lgamma(2.0 * k_ + 1.0);
        const double r2 = std::numbers::sqrt2 / 2.0;
        half_[0] = r2 * std::exp(lg - std::lgamma(k_ + 1.25) - std::lgamma(k_ + 0.75));
        if (max_ >= 1) {
            half_[1] = r2 * std::exp(lg - std::lgamma(k_ + 1.75) - std::lgamma(k_ + 0.25));
        }
        for (int j = 2; j <= max_; ++j) {
            const double s = (j - 2) + 0.5;
            half_[j] = -(k_ - s / 2.0) / (k_ + 1.0 + s / 2.0) * half_[j - 2];
        }
    }

    double k() const noexcept { return k_; }
    int max_abs() const noexcept { return max_; }

    /// v_s for integer s.
    double integer(int s) const {
        const int a = std::abs(s);
        check(a);
        if (a % 2 != 0) return 0.0;
        return even_[static_cast<std::size_t>(a / 2)];
    }

    /// Imaginary part of v_{j - 1/2}; the real part is zero.
    double half_imag(int j) const {
        // v_{j-1/2}: for j >= 1 the index j-1/2 = (j-1)+1/2; for j <= 0 use conjugation.
        if (j >= 1) {
            check(j - 1);
            return half_[static_cast<std::size_t>(j - 1)];
        }
        check(-j);
        return -half_[static_cast<std::size_t>(-j)];
    }

    /// v_{j - 1/2}.
    cplx half(int j) const { return {0.0, half_imag(j)}; }

private:
    void check(int a) const {
        if (a > max_) throw std::out_of_range("MomentTable: moment index beyond table");
    }

    double k_;
    int max_ = 0;
    std::vector<double> even_;
    std::vector<double> half_;
};

/// v_s for integer s.
inline double weight_moment(int s, double k) {
    return MomentTable(CouplingParam(k), std::abs(s)).integer(s);
}

/// v_{twice_s/2} for any integer twice_s (integer or half-integer s).
inline cplx weight_moment_twice(int twice_s, double k) {
    if (twice_s % 2 == 0) return weight_moment(twice_s / 2, k);
    // s = j - 1/2 with j = (twice_s + 1)/2.
    const int j = (twice_s + 1) / 2;
    const MomentTable t(CouplingParam(k), std::abs(j) + 1);
    return t.half(j);
}

}  // namespace horiesz
