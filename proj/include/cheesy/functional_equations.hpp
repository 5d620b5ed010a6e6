#pragma once

// Linear functional equations between the specialised generating functions of
// the column-transfer construction.  Each equation has the shape
//
//     X_lhs = c(q) + sum_j a_j(q) X_j
//
// with rational coefficients.  The same objects feed the exact solver and the
// truncated-series identity checks against transfer statistics.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cheesy/polynomial.hpp"
#include "cheesy/rational_function.hpp"
#include "cheesy/series.hpp"

namespace cheesy {

/// c + sum_j a_j X_j over a fixed list of unknowns.
class LinearForm {
public:
    explicit LinearForm(std::size_t unknowns) : coeff_(unknowns) {}

    static LinearForm variable(std::size_t unknowns, std::size_t i) {
        LinearForm f(unknowns);
        f.coeff_.at(i) = RationalFunction(IntPolynomial::constant(1));
        return f;
    }

    static LinearForm constant(std::size_t unknowns, RationalFunction c) {
        LinearForm f(unknowns);
        f.constant_ = std::move(c);
        return f;
    }

    const RationalFunction& constant_term() const noexcept { return constant_; }
    const RationalFunction& coeff(std::size_t i) const { return coeff_.at(i); }
    std::size_t unknowns() const noexcept { return coeff_.size(); }

    friend LinearForm operator+(LinearForm a, const LinearForm& b) {
        same_size(a, b);
        a.constant_ = a.constant_ + b.constant_;
        for (std::size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] = a.coeff_[i] + b.coeff_[i];
        return a;
    }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) {
        same_size(a, b);
        a.constant_ = a.constant_ - b.constant_;
        for (std::size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] = a.coeff_[i] - b.coeff_[i];
        return a;
    }
    friend LinearForm operator*(const RationalFunction& k, LinearForm f) {
        f.constant_ = k * f.constant_;
        for (auto& c : f.coeff_) c = k * c;
        return f;
    }
    friend LinearForm operator*(long k, LinearForm f) {
        return RationalFunction(IntPolynomial::constant(k)) * std::move(f);
    }

    /// Value of the form when every unknown is replaced by a power series.
    PowerSeries evaluate(const std::vector<PowerSeries>& values, int order) const {
        if (values.size() != coeff_.size()) throw std::invalid_argument("wrong number of series values");
        PowerSeries acc = PowerSeries::of(constant_, order);
        for (std::size_t i = 0; i < coeff_.size(); ++i) {
            if (!coeff_[i].is_zero()) acc = acc + coeff_[i] * values[i];
        }
        return acc;
    }

private:
    static void same_size(const LinearForm& a, const LinearForm& b) {
        if (a.coeff_.size() != b.coeff_.size()) throw std::invalid_argument("linear forms over different unknowns");
    }

    RationalFunction constant_;
    std::vector<RationalFunction> coeff_;
};

struct FunctionalEquation {
    std::string name;
    std::size_t lhs = 0;
    LinearForm rhs{0};
};

struct EquationSystem {
    std::vector<std::string> unknowns;
    std::vector<FunctionalEquation> equations;

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < unknowns.size(); ++i) {
            if (unknowns[i] == name) return i;
        }
        throw std::out_of_range("unknown '" + name + "'");
    }
};

/// k q^a / (1-q)^b
inline RationalFunction q_frac(long k, std::size_t a, int b) {
    IntPolynomial den = IntPolynomial::constant(1);
    const IntPolynomial one_minus_q{1, -1};
    for (int i = 0; i < b; ++i) den = den * one_minus_q;
    return {IntPolynomial::monomial(k, a), den};
}

/// Square system  X_lhs - sum_j a_j X_j = c, one row per equation.
inline RatFuncMatrix to_matrix(const EquationSystem& sys) {
    const std::size_t n = sys.unknowns.size();
    if (sys.equations.size() != n) throw std::invalid_argument("system is not square");
    RatFuncMatrix m;
    m.entries.assign(n, std::vector<RationalFunction>(n));
    m.rhs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& eq = sys.equations[i];
        for (std::size_t j = 0; j < n; ++j) {
            RationalFunction diag = j == eq.lhs ? RationalFunction(IntPolynomial::constant(1)) : RationalFunction();
            m.entries[i][j] = diag - eq.rhs.coeff(j);
        }
        m.rhs[i] = eq.rhs.constant_term();
    }
    return m;
}

/// Level 1: unknowns E1 (members), F1 (members weighted by last-column
/// height) and G (incomplete figures).  Each term mirrors one way of
/// appending the last column.
inline EquationSystem level1_system() {
    const std::size_t n = 3;
    const auto E = LinearForm::variable(n, 0);
    const auto F = LinearForm::variable(n, 1);
    const auto G = LinearForm::variable(n, 2);
    const auto c = [&](RationalFunction f) { return LinearForm::constant(n, std::move(f)); };

    EquationSystem sys;
    sys.unknowns = {"E1", "F1", "G"};
    sys.equations.push_back(
        {"E1: area generating function", 0,
         c(q_frac(1, 1, 1)) + q_frac(1, 1, 2) * E + q_frac(1, 1, 1) * F + q_frac(1, 2, 2) * (F - E) +
             q_frac(1, 2, 2) * G});
    sys.equations.push_back(
        {"F1: t-derivative at t=1", 1,
         c(q_frac(1, 1, 1) + q_frac(1, 2, 2)) + q_frac(1, 1, 2) * E + q_frac(2, 2, 3) * E + q_frac(1, 1, 1) * F +
             q_frac(1, 2, 2) * F + q_frac(3, 2, 2) * (F - E) + q_frac(2, 3, 3) * (F - E) + q_frac(2, 2, 2) * G +
             q_frac(2, 3, 3) * G});
    sys.equations.push_back({"G: incomplete figures", 2,
                             c(q_frac(1, 2, 2)) + q_frac(2, 2, 2) * E + q_frac(2, 2, 3) * E + q_frac(2, 2, 2) * G +
                                 q_frac(2, 3, 3) * G});
    return sys;
}

/// Column-convex figures: a gap-free column of height h glued to one of
/// height k in k + h ways.  Unknowns E1 and F1 as at level 1.
inline EquationSystem level0_system() {
    const std::size_t n = 2;
    const auto E = LinearForm::variable(n, 0);
    const auto F = LinearForm::variable(n, 1);
    const auto c = [&](RationalFunction f) { return LinearForm::constant(n, std::move(f)); };

    EquationSystem sys;
    sys.unknowns = {"E1", "F1"};
    sys.equations.push_back({"E1: area generating function", 0,
                             c(q_frac(1, 1, 1)) + q_frac(1, 1, 1) * F + q_frac(1, 1, 2) * E});
    // d/dt [qt/(1-qt)^2] at t=1 is q(1+q)/(1-q)^3
    sys.equations.push_back({"F1: t-derivative at t=1", 1,
                             c(q_frac(1, 1, 2)) + q_frac(1, 1, 2) * F + (q_frac(1, 1, 3) + q_frac(1, 2, 3)) * E});
    return sys;
}

/// Level 2, the four equations that follow from the recurrence for figures
/// whose last column has a two-cell hole.  Unknowns:
///   A1  members whose last column has a hole of size <= 1
///   B0  the same, last column of height 1
///   B1  the same, weighted by last-column height
///   C1  members whose last column has a two-cell hole
///   D1  the same, weighted by last-column height
///   E0  the same, upper component of height 1
///   F0  the same, lower component of height 1
inline EquationSystem level2_hole2_equations() {
    const std::size_t n = 7;
    const auto A1 = LinearForm::variable(n, 0);
    const auto B0 = LinearForm::variable(n, 1);
    const auto B1 = LinearForm::variable(n, 2);
    const auto C1 = LinearForm::variable(n, 3);
    const auto D1 = LinearForm::variable(n, 4);
    const auto E0 = LinearForm::variable(n, 5);
    const auto F0 = LinearForm::variable(n, 6);

    const auto glue = B1 - 2 * A1 + B0 + D1 - 2 * C1;
    const auto danger = 2 * C1 - E0 - F0;

    EquationSystem sys;
    sys.unknowns = {"A1", "B0", "B1", "C1", "D1", "E0", "F0"};
    sys.equations.push_back({"C1: t=u=v=1", 3, q_frac(1, 2, 2) * glue - q_frac(1, 2, 1) * danger});
    sys.equations.push_back(
        {"D1: t-derivative", 4,
         (q_frac(4, 2, 2) + q_frac(2, 3, 3)) * glue - (q_frac(4, 2, 1) + q_frac(1, 3, 2)) * danger});
    sys.equations.push_back({"E0: u-derivative at u=0", 5,
                             q_frac(1, 2, 1) * (B1 - 2 * A1 + B0 + D1 - 3 * C1 + F0) - q_frac(1, 2, 0) * (C1 - E0)});
    sys.equations.push_back({"F0: v-derivative at v=0", 6,
                             q_frac(1, 2, 1) * (B1 - 2 * A1 + B0 + D1 - 3 * C1 + E0) - q_frac(1, 2, 0) * (C1 - F0)});
    return sys;
}

/// Outcome of checking functional equations as truncated series identities.
struct EquationReport {
    struct Failure {
        std::string equation;
        int order = 0;  // first coefficient where lhs and rhs differ
        BigInt lhs;
        BigInt rhs;
    };

    int max_order = 0;
    std::size_t equations_checked = 0;
    std::vector<Failure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

inline EquationReport check_identities(const EquationSystem& sys, const std::vector<PowerSeries>& values, int order) {
    if (values.size() != sys.unknowns.size()) throw std::invalid_argument("one series per unknown required");
    EquationReport rep;
    rep.max_order = order;
    for (const auto& eq : sys.equations) {
        ++rep.equations_checked;
        const PowerSeries rhs = eq.rhs.evaluate(values, order);
        const PowerSeries& lhs = values.at(eq.lhs);
        const int k = first_difference(lhs, rhs);
        if (k >= 0) rep.failures.push_back({eq.name, k, lhs[static_cast<std::size_t>(k)], rhs[static_cast<std::size_t>(k)]});
    }
    return rep;
}

}  // namespace cheesy
