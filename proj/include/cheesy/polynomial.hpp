#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cheesy {

using BigInt = mpz_class;

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
/// Index i of the coefficient vector is the coefficient of q^i; trailing
/// zeros are never stored, so the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    IntPolynomial(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPolynomial constant(const BigInt& v) { return IntPolynomial(std::vector<BigInt>{v}); }

    static IntPolynomial monomial(const BigInt& v, std::size_t exponent) {
        std::vector<BigInt> c(exponent + 1, 0);
        c[exponent] = v;
        return IntPolynomial(std::move(c));
    }

    static IntPolynomial q() { return monomial(1, 1); }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::span<const BigInt> coefficients() const noexcept { return c_; }

    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const BigInt& lead() const { return c_.back(); }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    IntPolynomial operator-() const {
        IntPolynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial operator*(const BigInt& k, const IntPolynomial& p) {
        IntPolynomial r = p;
        for (auto& v : r.c_) v *= k;
        r.trim();
        return r;
    }

    IntPolynomial derivative() const {
        std::vector<BigInt> r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<unsigned long>(i));
        return IntPolynomial(std::move(r));
    }

    /// Horner evaluation in any ring constructible from a decimal string.
    template <class T>
    T evaluate(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(it->get_str());
        return acc;
    }

    BigInt evaluate(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    BigInt content() const {
        BigInt g = 0;
        for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        return g;
    }

    /// Divides every coefficient by `k`; throws if any division is inexact.
    IntPolynomial divided_by(const BigInt& k) const {
        if (k == 0) throw std::domain_error("division of polynomial by zero");
        IntPolynomial r = *this;
        for (auto& v : r.c_) {
            if (!mpz_divisible_p(v.get_mpz_t(), k.get_mpz_t()))
                throw std::domain_error("inexact scalar division of polynomial");
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
        }
        return r;
    }

    /// Primitive part with positive leading coefficient.
    IntPolynomial primitive_part() const {
        if (is_zero()) return {};
        IntPolynomial r = divided_by(content());
        if (r.lead() < 0) r = -r;
        return r;
    }

    std::string to_string(const std::string& var = "q") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// Quotient of `a` by `b` over the integers, if `b` divides `a` exactly.
inline std::optional<IntPolynomial> divide_if_divisible(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return IntPolynomial{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<BigInt> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<BigInt> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const auto bc = b.coefficients();
    const BigInt& lb = b.lead();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        BigInt& top = rem[static_cast<std::size_t>(k + b.degree())];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        BigInt f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        quo[static_cast<std::size_t>(k)] = f;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= f * bc[j];
    }
    for (const auto& v : rem) {
        if (v != 0) return std::nullopt;
    }
    return IntPolynomial(std::move(quo));
}

inline IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
    auto r = divide_if_divisible(a, b);
    if (!r) throw std::domain_error("exact_divide: " + b.to_string() + " does not divide " + a.to_string());
    return *std::move(r);
}

/// lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero");
    IntPolynomial r = a;
    const BigInt lb = b.lead();
    int steps = std::max(a.degree() - b.degree() + 1, 0);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        IntPolynomial t = IntPolynomial::monomial(r.lead(), shift) * b;
        r = lb * r - t;
        --steps;
    }
    for (; steps > 0; --steps) r = lb * r;
    return r;
}

/// Greatest common divisor over Q[q], scaled to a primitive integer
/// polynomial with positive leading coefficient.  Primitive remainder
/// sequence; coefficient growth stays bounded by the content removal.
inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial x = a.primitive_part();
    IntPolynomial y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPolynomial r = pseudo_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

inline std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const BigInt& v = c_[i];
        if (v == 0) continue;
        BigInt mag = abs(v);
        if (out.empty()) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

}  // namespace cheesy
