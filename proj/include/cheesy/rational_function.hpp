#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cheesy/polynomial.hpp"

namespace cheesy {

/// Reduced quotient num/den of integer polynomials.
///
/// Normal form: gcd(num, den) is a constant, num and den share no integer
/// factor, and den(0) > 0 (or, when den(0) = 0, the leading coefficient of den
/// is positive).  Every generating function met here has den(0) = 1.
class RationalFunction {
public:
    RationalFunction() : den_(IntPolynomial::constant(1)) {}

    RationalFunction(IntPolynomial num) : num_(std::move(num)), den_(IntPolynomial::constant(1)) {}

    RationalFunction(IntPolynomial num, IntPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    const IntPolynomial& num() const noexcept { return num_; }
    const IntPolynomial& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFunction operator-() const { return {-num_, den_}; }

    std::string to_string() const { return "(" + num_.to_string() + ") / (" + den_.to_string() + ")"; }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = IntPolynomial::constant(1);
            return;
        }
        const IntPolynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        BigInt c;
        const BigInt cn = num_.content();
        const BigInt cd = den_.content();
        mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        const BigInt& anchor = den_.coeff(0) != 0 ? den_.coefficients()[0] : den_.lead();
        if (anchor < 0) c = -c;
        num_ = num_.divided_by(c);
        den_ = den_.divided_by(c);
    }

    IntPolynomial num_;
    IntPolynomial den_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

/// Square linear system  matrix * x = rhs  over Q(q).
struct RatFuncMatrix {
    std::vector<std::vector<RationalFunction>> entries;
    std::vector<RationalFunction> rhs;

    std::size_t size() const { return entries.size(); }

    void check_shape() const {
        if (rhs.size() != entries.size()) throw std::invalid_argument("rhs length does not match row count");
        for (const auto& row : entries) {
            if (row.size() != entries.size()) throw std::invalid_argument("matrix is not square");
        }
    }
};

class singular_system : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Lowest common multiple, primitive with positive leading coefficient.
inline IntPolynomial lcm(const IntPolynomial& a, const IntPolynomial& b) {
    return exact_divide(a * b, gcd(a, b)).primitive_part();
}

// Fraction-free (Bareiss) elimination on the cleared integer-polynomial
// matrix, then back substitution in Q(q) with reduction after every step.
inline std::vector<RationalFunction> solve_linear_system(const RatFuncMatrix& m) {
    m.check_shape();
    const std::size_t n = m.size();

    std::vector<std::vector<IntPolynomial>> a(n, std::vector<IntPolynomial>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        IntPolynomial common = IntPolynomial::constant(1);
        for (const auto& e : m.entries[i]) common = lcm(common, e.den());
        common = lcm(common, m.rhs[i].den());
        for (std::size_t j = 0; j <= n; ++j) {
            const RationalFunction& e = j < n ? m.entries[i][j] : m.rhs[i];
            a[i][j] = e.num() * exact_divide(common, e.den());
        }
    }

    IntPolynomial prev = IntPolynomial::constant(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) throw singular_system("singular system: no pivot in column " + std::to_string(k));
        std::swap(a[k], a[p]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                a[i][j] = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = IntPolynomial{};
        }
        prev = a[k][k];
    }

    std::vector<RationalFunction> x(n);
    for (std::size_t i = n; i-- > 0;) {
        RationalFunction acc(a[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) acc = acc - RationalFunction(a[i][j]) * x[j];
        x[i] = acc / RationalFunction(a[i][i]);
    }
    return x;
}

/// matrix * x - rhs, entrywise.
inline std::vector<RationalFunction> residual(const RatFuncMatrix& m, const std::vector<RationalFunction>& x) {
    m.check_shape();
    std::vector<RationalFunction> r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        RationalFunction acc;
        for (std::size_t j = 0; j < m.size(); ++j) acc = acc + m.entries[i][j] * x[j];
        r[i] = acc - m.rhs[i];
    }
    return r;
}

}  // namespace cheesy
