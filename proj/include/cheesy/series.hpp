#pragma once

// Truncated power series in q with exact integer coefficients.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cheesy/polynomial.hpp"
#include "cheesy/rational_function.hpp"

namespace cheesy {

/// Coefficients a_0..a_order of f = num/den, from den * A = num.
inline std::vector<BigInt> series_expand(const RationalFunction& f, int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    const auto den = f.den().coefficients();
    if (den.empty() || den[0] != 1)
        throw std::domain_error("series_expand needs den(0) = 1, got den = " + f.den().to_string());
    std::vector<BigInt> a(static_cast<std::size_t>(order) + 1, 0);
    for (std::size_t n = 0; n < a.size(); ++n) {
        BigInt acc = f.num().coeff(n);
        const std::size_t kmax = std::min(n, den.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) acc -= den[k] * a[n - k];
        a[n] = acc;
    }
    return a;
}

/// Power series known modulo q^(order+1).
class PowerSeries {
public:
    explicit PowerSeries(int order) : c_(static_cast<std::size_t>(order) + 1, 0) {
        if (order < 0) throw std::invalid_argument("series order must be non-negative");
    }

    PowerSeries(std::vector<BigInt> coeffs, int order) : c_(std::move(coeffs)) {
        c_.resize(static_cast<std::size_t>(order) + 1, 0);
    }

    static PowerSeries of(const RationalFunction& f, int order) { return PowerSeries(series_expand(f, order), order); }

    static PowerSeries of(const IntPolynomial& p, int order) {
        return PowerSeries(std::vector<BigInt>(p.coefficients().begin(), p.coefficients().end()), order);
    }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::span<const BigInt> coefficients() const noexcept { return c_; }
    const BigInt& operator[](std::size_t i) const { return c_.at(i); }
    BigInt& operator[](std::size_t i) { return c_.at(i); }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) {
        check(a, b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) {
        check(a, b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        check(a, b);
        PowerSeries r(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < r.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend PowerSeries operator*(const RationalFunction& f, const PowerSeries& s) { return of(f, s.order()) * s; }
    friend PowerSeries operator*(long k, PowerSeries s) {
        for (auto& v : s.c_) v *= k;
        return s;
    }

    /// Smallest index where the two series differ, or -1.
    friend int first_difference(const PowerSeries& a, const PowerSeries& b) {
        check(a, b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] != b.c_[i]) return static_cast<int>(i);
        }
        return -1;
    }

private:
    static void check(const PowerSeries& a, const PowerSeries& b) {
        if (a.c_.size() != b.c_.size()) throw std::invalid_argument("power series orders differ");
    }

    std::vector<BigInt> c_;
};

}  // namespace cheesy
