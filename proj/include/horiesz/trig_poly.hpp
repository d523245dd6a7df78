#pragma once
// Finitely supported coefficient vectors over integer frequencies.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "horiesz/core.hpp"

namespace horiesz {

/// Σ_j c_j e^{ijx}, stored densely for j = lo .. lo + size - 1.
template <typename Scalar>
class BasicTrigPoly {
public:
    BasicTrigPoly() = default;
    BasicTrigPoly(int lo, std::vector<Scalar> coeffs) : lo_(lo), c_(std::move(coeffs)) {}

    static BasicTrigPoly monomial(int j, Scalar value = Scalar(1)) {
        return BasicTrigPoly(j, {value});
    }

    bool empty() const noexcept { return c_.empty(); }
    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return lo_ + static_cast<int>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }
    std::vector<Scalar>& coeffs() noexcept { return c_; }

    Scalar operator[](int j) const noexcept {
        if (j < lo_ || j > hi()) return Scalar(0);
        return c_[static_cast<std::size_t>(j - lo_)];
    }

    /// Grows the stored range so that j is addressable, then returns a reference.
    Scalar& at(int j) {
        if (c_.empty()) {
            lo_ = j;
            c_.assign(1, Scalar(0));
        } else if (j < lo_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - j), Scalar(0));
            lo_ = j;
        } else if (j > hi()) {
            c_.resize(static_cast<std::size_t>(j - lo_ + 1), Scalar(0));
        }
        return c_[static_cast<std::size_t>(j - lo_)];
    }

    /// Drops leading and trailing coefficients with magnitude <= tol.
    BasicTrigPoly& trim(double tol = 0.0) {
        std::size_t b = 0;
        std::size_t e = c_.size();
        while (b < e && std::abs(c_[b]) <= tol) ++b;
        while (e > b && std::abs(c_[e - 1]) <= tol) --e;
        if (b == e) {
            c_.clear();
            lo_ = 0;
            return *this;
        }
        c_ = std::vector<Scalar>(c_.begin() + static_cast<std::ptrdiff_t>(b),
                                 c_.begin() + static_cast<std::ptrdiff_t>(e));
        lo_ += static_cast<int>(b);
        return *this;
    }

    /// f(x) -> f(-x).
    BasicTrigPoly reflected() const {
        std::vector<Scalar> r(c_.rbegin(), c_.rend());
        return BasicTrigPoly(-hi(), std::move(r));
    }

    /// f(x) -> e^{idx} f(x).
    BasicTrigPoly shifted(int d) const { return BasicTrigPoly(lo_ + d, c_); }

    BasicTrigPoly& operator*=(Scalar s) {
        for (auto& v : c_) v *= s;
        return *this;
    }

    BasicTrigPoly& operator+=(const BasicTrigPoly& o) {
        if (o.empty()) return *this;
        if (empty()) return *this = o;
        at(o.lo());
        at(o.hi());
        for (int j = o.lo(); j <= o.hi(); ++j) c_[static_cast<std::size_t>(j - lo_)] += o[j];
        return *this;
    }

    BasicTrigPoly& operator-=(const BasicTrigPoly& o) {
        BasicTrigPoly neg = o;
        neg *= Scalar(-1);
        return *this += neg;
    }

    friend BasicTrigPoly operator+(BasicTrigPoly a, const BasicTrigPoly& b) { return a += b; }
    friend BasicTrigPoly operator-(BasicTrigPoly a, const BasicTrigPoly& b) { return a -= b; }
    friend BasicTrigPoly operator*(BasicTrigPoly a, Scalar s) { return a *= s; }
    friend BasicTrigPoly operator*(Scalar s, BasicTrigPoly a) { return a *= s; }

    /// Product of two trigonometric polynomials (coefficient convolution).
    friend BasicTrigPoly operator*(const BasicTrigPoly& a, const BasicTrigPoly& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Scalar> r(a.size() + b.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return BasicTrigPoly(a.lo() + b.lo(), std::move(r));
    }

    /// Σ c_j e^{ijx}.
    cplx eval(double x) const {
        cplx s = 0.0;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const double f = static_cast<double>(lo_ + static_cast<int>(i));
            s += cplx(c_[i]) * std::polar(1.0, f * x);
        }
        return s;
    }

    /// Σ c_j e^{jx}, i.e. the exponential form E(x) at real x.
    cplx eval_hyperbolic(double x) const {
        cplx s = 0.0;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const double f = static_cast<double>(lo_ + static_cast<int>(i));
            s += cplx(c_[i]) * std::exp(f * x);
        }
        return s;
    }

    template <typename Other>
    BasicTrigPoly<Other> cast() const {
        std::vector<Other> r(c_.begin(), c_.end());
        return BasicTrigPoly<Other>(lo_, std::move(r));
    }

private:
    int lo_ = 0;
    std::vector<Scalar> c_;
};

using TrigPoly = BasicTrigPoly<cplx>;
using RealTrigPoly = BasicTrigPoly<double>;

/// max_j |a_j - b_j| over the union of supports.
template <typename A, typename B>
double max_coeff_diff(const BasicTrigPoly<A>& a, const BasicTrigPoly<B>& b) {
    if (a.empty() && b.empty()) return 0.0;
    int lo = a.empty() ? b.lo() : (b.empty() ? a.lo() : std::min(a.lo(), b.lo()));
    int hi = a.empty() ? b.hi() : (b.empty() ? a.hi() : std::max(a.hi(), b.hi()));
    double m = 0.0;
    for (int j = lo; j <= hi; ++j) m = std::max(m, std::abs(cplx(a[j]) - cplx(b[j])));
    return m;
}

template <typename A>
double max_abs_coeff(const BasicTrigPoly<A>& a) {
    double m = 0.0;
    for (const auto& v : a.coeffs()) m = std::max(m, std::abs(cplx(v)));
    return m;
}

inline cplx eval(const TrigPoly& p, double x) { return p.eval(x); }

}  // namespace horiesz
