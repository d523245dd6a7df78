#pragma once
// Finitely supported complex sequences on ℤ.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "horiesz/core.hpp"

namespace horiesz {

/// f(n) for n = lo .. lo + size - 1; zero elsewhere.
class Sequence {
public:
    Sequence() = default;
    Sequence(int lo, std::vector<cplx> values) : lo_(lo), v_(std::move(values)) {}

    /// Zero sequence with window [lo, hi].
    static Sequence zeros(int lo, int hi) {
        return Sequence(lo, std::vector<cplx>(static_cast<std::size_t>(std::max(hi - lo + 1, 0)), 0.0));
    }

    static Sequence impulse(int m, cplx value = 1.0) { return Sequence(m, {value}); }

    bool empty() const noexcept { return v_.empty(); }
    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return lo_ + static_cast<int>(v_.size()) - 1; }
    std::size_t size() const noexcept { return v_.size(); }
    const std::vector<cplx>& values() const noexcept { return v_; }
    std::vector<cplx>& values() noexcept { return v_; }

    cplx operator[](int n) const noexcept {
        if (n < lo_ || n > hi()) return 0.0;
        return v_[static_cast<std::size_t>(n - lo_)];
    }

    /// Reference to f(n), growing the window when needed.
    cplx& at(int n) {
        if (v_.empty()) {
            lo_ = n;
            v_.assign(1, 0.0);
        } else if (n < lo_) {
            v_.insert(v_.begin(), static_cast<std::size_t>(lo_ - n), 0.0);
            lo_ = n;
        } else if (n > hi()) {
            v_.resize(static_cast<std::size_t>(n - lo_ + 1), 0.0);
        }
        return v_[static_cast<std::size_t>(n - lo_)];
    }

    /// max |n| over the window (0 when empty).
    int radius() const noexcept {
        if (v_.empty()) return 0;
        return std::max(std::abs(lo_), std::abs(hi()));
    }

    double norm2_sq() const noexcept {
        double s = 0.0;
        for (const auto& x : v_) s += std::norm(x);
        return s;
    }
    double norm2() const noexcept { return std::sqrt(norm2_sq()); }

    double norm_p(double p) const {
        double s = 0.0;
        for (const auto& x : v_) s += std::pow(std::abs(x), p);
        return std::pow(s, 1.0 / p);
    }

    Sequence& operator+=(const Sequence& o) {
        if (o.empty()) return *this;
        at(o.lo());
        at(o.hi());
        for (int n = o.lo(); n <= o.hi(); ++n) v_[static_cast<std::size_t>(n - lo_)] += o[n];
        return *this;
    }

private:
    int lo_ = 0;
    std::vector<cplx> v_;
};

/// max_n |a(n) - b(n)| over the union of windows.
inline double max_abs_diff(const Sequence& a, const Sequence& b) {
    if (a.empty() && b.empty()) return 0.0;
    const int lo = a.empty() ? b.lo() : (b.empty() ? a.lo() : std::min(a.lo(), b.lo()));
    const int hi = a.empty() ? b.hi() : (b.empty() ? a.hi() : std::max(a.hi(), b.hi()));
    double m = 0.0;
    for (int n = lo; n <= hi; ++n) m = std::max(m, std::abs(a[n] - b[n]));
    return m;
}

/// Σ a(n) conj(b(n)).
inline cplx l2_inner(const Sequence& a, const Sequence& b) {
    cplx s = 0.0;
    for (int n = a.lo(); n <= a.hi(); ++n) s += a[n] * std::conj(b[n]);
    return s;
}

}  // namespace horiesz
