#pragma once

// Singularity analysis of rational generating functions: denominator roots,
// the dominant simple pole, and the resulting a_n ~ C g^n.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "cheesy/polynomial.hpp"
#include "cheesy/rational_function.hpp"
#include "cheesy/series.hpp"

namespace cheesy {

using Real = boost::multiprecision::cpp_bin_float_100;
using Complex = boost::multiprecision::cpp_complex_100;

inline constexpr int kWorkingDigits = 100;
inline constexpr int kMaxRootDigits = 90;

struct Root {
    Complex value;
    int multiplicity = 1;
    Real residual;  // |p(value)| / sum |c_k| |value|^k
};

/// All complex roots, ordered by modulus and then argument.
struct RootSet {
    std::vector<Root> roots;
    int precision = 0;
    Real residual_bound;  // every relative residual is below this

    std::size_t count_with_multiplicity() const {
        std::size_t n = 0;
        for (const Root& r : roots) n += static_cast<std::size_t>(r.multiplicity);
        return n;
    }
};

class root_finding_error : public std::runtime_error {
public:
    root_finding_error(const std::string& what, Real achieved) : std::runtime_error(what), achieved_(std::move(achieved)) {}
    const Real& achieved_bound() const noexcept { return achieved_; }

private:
    Real achieved_;
};

inline Real to_real(const BigInt& v) { return Real(v.get_str()); }

inline std::string fixed(const Real& v, int decimals) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(decimals);
    os << v;
    std::string s = os.str();
    if (s.rfind("-0.", 0) == 0 && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

namespace detail {

inline Real pow10(int e) { return boost::multiprecision::pow(Real(10), e); }

inline Complex horner(const IntPolynomial& p, const Complex& z) {
    Complex acc(0);
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) acc = acc * z + Complex(to_real(*it));
    return acc;
}

// |p(z)| scaled by the size of the terms that cancel in it.
inline Real relative_residual(const IntPolynomial& p, const Complex& z) {
    const Real r = boost::multiprecision::abs(z);
    Real scale = 0;
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
        scale = scale * r + boost::multiprecision::abs(to_real(*it));
    return scale == 0 ? Real(0) : Real(boost::multiprecision::abs(horner(p, z)) / scale);
}

// A few Newton steps on a squarefree factor.
inline Complex polish(const IntPolynomial& f, const IntPolynomial& df, Complex z) {
    for (int i = 0; i < 3; ++i) {
        const Complex d = horner(df, z);
        if (d == Complex(0)) break;
        z -= horner(f, z) / d;
    }
    return z;
}

// Yun's algorithm: p = lc * prod f_i^i with squarefree, pairwise coprime f_i.
inline std::vector<std::pair<IntPolynomial, int>> squarefree_factors(const IntPolynomial& p) {
    std::vector<std::pair<IntPolynomial, int>> out;
    const IntPolynomial dp = p.derivative();
    const IntPolynomial a0 = gcd(p, dp);
    IntPolynomial b = exact_divide(p, a0);
    IntPolynomial c = exact_divide(dp, a0);
    IntPolynomial d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        const IntPolynomial a = d.is_zero() ? b.primitive_part() : gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = exact_divide(b, a);
        c = d.is_zero() ? IntPolynomial{} : exact_divide(d, a);
        d = c - b.derivative();
    }
    return out;
}

// Simultaneous Aberth-Ehrlich iteration for a squarefree polynomial.
inline std::vector<Complex> aberth(const IntPolynomial& p, const Real& tol, Real& achieved) {
    const int n = p.degree();
    const IntPolynomial dp = p.derivative();
    std::vector<Complex> z(static_cast<std::size_t>(n));
    // Start on a circle whose radius is the geometric mean of the root moduli.
    const Real a0 = boost::multiprecision::abs(to_real(p.coefficients()[0]));
    const Real an = boost::multiprecision::abs(to_real(p.lead()));
    const Real radius = a0 == 0 ? Real(1) : boost::multiprecision::pow(a0 / an, Real(1) / n);
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    for (int k = 0; k < n; ++k) {
        const Real angle = two_pi * k / n + Real("0.4");
        z[static_cast<std::size_t>(k)] = Complex(radius * boost::multiprecision::cos(angle),
                                                 radius * boost::multiprecision::sin(angle));
    }
    achieved = Real(1);
    for (int iter = 0; iter < 2000; ++iter) {
        Real worst = 0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            const Complex pv = horner(p, z[k]);
            if (pv == Complex(0)) continue;
            const Complex ratio = pv / horner(dp, z[k]);
            Complex s(0);
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != k) s += Complex(1) / (z[k] - z[j]);
            }
            const Complex w = ratio / (Complex(1) - ratio * s);
            z[k] -= w;
            const Real scale = std::max(Real(1), boost::multiprecision::abs(z[k]));
            worst = std::max(worst, boost::multiprecision::abs(w) / scale);
        }
        achieved = worst;
        if (worst <= tol) return z;
    }
    throw root_finding_error("Aberth iteration did not converge", achieved);
}

}  // namespace detail

/// Roots of `p` with multiplicities.  `precision` is the number of correct
/// decimal digits requested; work is done at 100 digits.
inline RootSet find_roots(const IntPolynomial& p, int precision = 30) {
    if (p.degree() < 1) throw std::invalid_argument("find_roots needs a polynomial of degree >= 1");
    if (precision < 1 || precision > kMaxRootDigits)
        throw std::invalid_argument("precision must be in 1.." + std::to_string(kMaxRootDigits));

    RootSet rs;
    rs.precision = precision;
    rs.residual_bound = detail::pow10(-(precision - 2));

    // Roots at zero, then the rest of the polynomial.
    std::size_t zeros = 0;
    while (p.coeff(zeros) == 0) ++zeros;
    std::vector<BigInt> rest(p.coefficients().begin() + static_cast<std::ptrdiff_t>(zeros), p.coefficients().end());
    const IntPolynomial core(std::move(rest));
    if (zeros > 0) rs.roots.push_back({Complex(0), static_cast<int>(zeros), Real(0)});

    const Real tol = detail::pow10(-(kWorkingDigits - 15));
    for (const auto& [factor, mult] : detail::squarefree_factors(core)) {
        Real achieved;
        const IntPolynomial dfactor = factor.derivative();
        for (const Complex& z : detail::aberth(factor, tol, achieved)) {
            Complex v = detail::polish(factor, dfactor, z);
            // Real coefficients: snap negligible imaginary parts.
            if (boost::multiprecision::abs(v.imag()) <= tol * std::max(Real(1), boost::multiprecision::abs(v.real())))
                v = Complex(v.real());
            const Real res = detail::relative_residual(factor, v);
            if (res > rs.residual_bound)
                throw root_finding_error("root residual above bound at precision " + std::to_string(precision), res);
            rs.roots.push_back({v, mult, res});
        }
    }

    const Real tie = detail::pow10(-(kWorkingDigits - 20));
    std::sort(rs.roots.begin(), rs.roots.end(), [&](const Root& a, const Root& b) {
        const Real ma = boost::multiprecision::abs(a.value);
        const Real mb = boost::multiprecision::abs(b.value);
        if (boost::multiprecision::abs(ma - mb) > tie * std::max(Real(1), ma)) return ma < mb;
        return boost::multiprecision::atan2(a.value.imag(), a.value.real()) <
               boost::multiprecision::atan2(b.value.imag(), b.value.real());
    });
    return rs;
}

/// Smallest-modulus denominator root, certified real, positive and simple.
struct DominantRoot {
    Real root;
    Real next_modulus;  // modulus of the nearest competing root
    Real margin;        // next_modulus - root
};

inline DominantRoot dominant_singularity(const RationalFunction& f, int precision = 30) {
    if (f.den().degree() < 1) throw std::domain_error("generating function has no poles");
    const RootSet rs = find_roots(f.den(), precision);
    const Root& r = rs.roots.front();
    const Real tol = detail::pow10(-precision);
    if (r.multiplicity != 1) throw std::domain_error("dominant root is not simple");
    if (boost::multiprecision::abs(r.value.imag()) > tol) throw std::domain_error("dominant root is not real");
    if (r.value.real() <= 0) throw std::domain_error("dominant root is not positive");
    DominantRoot d;
    d.root = r.value.real();
    if (rs.roots.size() < 2) {
        d.next_modulus = std::numeric_limits<double>::infinity();
    } else {
        d.next_modulus = boost::multiprecision::abs(rs.roots[1].value);
        if (d.next_modulus - d.root <= tol) throw std::domain_error("dominant root is not unique in modulus");
    }
    d.margin = d.next_modulus - d.root;
    return d;
}

/// a_n ~ amplitude * growth^n from a simple dominant pole.
struct AsymptoticForm {
    Real amplitude;
    Real growth;
    Real root;
    Real next_modulus;
    int valid_from = 0;  // first n where the subdominant part is estimated below 1%
};

inline AsymptoticForm asymptotic_form(const RationalFunction& f, int precision = 30) {
    const DominantRoot d = dominant_singularity(f, precision);
    const Complex r(d.root);
    const Complex num = detail::horner(f.num(), r);
    const Complex dden = detail::horner(f.den().derivative(), r);
    AsymptoticForm a;
    a.root = d.root;
    a.next_modulus = d.next_modulus;
    a.growth = 1 / d.root;
    a.amplitude = (-num / (r * dden)).real();
    const Real ratio = d.root / d.next_modulus;
    a.valid_from = ratio > 0 && ratio < 1
                       ? static_cast<int>(std::ceil(std::log(0.01) / static_cast<double>(boost::multiprecision::log(ratio))))
                       : 0;
    return a;
}

/// |a_n / (amplitude * growth^n) - 1|
inline Real relative_error(const BigInt& a_n, const Real& amplitude, const Real& growth, int n) {
    return boost::multiprecision::abs(to_real(a_n) / (amplitude * boost::multiprecision::pow(growth, n)) - 1);
}

/// Relative error of the asymptotic form at order n, using exact a_n.  Empty
/// when f = 0, where the question has no answer.
inline std::optional<Real> asymptotic_check(const RationalFunction& f, int n, int precision = 30) {
    if (f.is_zero()) return std::nullopt;
    const AsymptoticForm form = asymptotic_form(f, precision);
    const auto a = series_expand(f, n);
    return relative_error(a.back(), form.amplitude, form.growth, n);
}

/// Heuristic limit of a sequence of growth constants.
struct ExtrapolationEstimate {
    std::vector<double> rounded;      // constants rounded to 3 decimals
    std::vector<double> differences;  // first differences of the rounded values
    int ratio_num = 0;                // assumed common ratio of the differences
    int ratio_den = 1;
    double rounded_estimate = 0;  // second-last rounded value + last difference / (1 - ratio)
    double measured_ratio = 0;    // last / second-last difference, unrounded
    double measured_estimate = 0; // last value + geometric tail with the measured ratio
};

namespace detail {

inline double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

// Closest fraction p/q with 1 <= q <= 5 and 0 < p < q.
inline std::pair<int, int> snap_ratio(double r) {
    std::pair<int, int> best{1, 2};
    double err = 2.0;
    for (int den = 2; den <= 5; ++den) {
        for (int num = 1; num < den; ++num) {
            const double e = std::abs(r - static_cast<double>(num) / den);
            if (e < err - 1e-12) {
                err = e;
                best = {num, den};
            }
        }
    }
    return best;
}

}  // namespace detail

/// Extrapolates growth constants of successive levels.  Rounded mode: round to
/// three decimals, take first differences, snap their mean successive ratio
/// to a simple fraction rho, and add the geometric tail
/// d_last / (1 - rho) to the second-last rounded value.  `ratio` overrides
/// the snapped fraction when given as {num, den}.
inline ExtrapolationEstimate extrapolate_growth(std::span<const double> constants,
                                                std::optional<std::pair<int, int>> ratio = std::nullopt) {
    if (constants.size() < 4) throw std::invalid_argument("extrapolation needs at least 4 growth constants");
    ExtrapolationEstimate e;
    for (double c : constants) e.rounded.push_back(detail::round3(c));
    for (std::size_t i = 1; i < e.rounded.size(); ++i) e.differences.push_back(detail::round3(e.rounded[i] - e.rounded[i - 1]));

    const double last_d = e.differences.back();
    const double second_last = e.rounded[e.rounded.size() - 2];
    if (ratio) {
        std::tie(e.ratio_num, e.ratio_den) = *ratio;
    } else {
        double sum = 0;
        int terms = 0;
        for (std::size_t i = 1; i < e.differences.size(); ++i) {
            if (e.differences[i - 1] != 0) {
                sum += e.differences[i] / e.differences[i - 1];
                ++terms;
            }
        }
        std::tie(e.ratio_num, e.ratio_den) = terms > 0 ? detail::snap_ratio(sum / terms) : std::pair<int, int>{0, 1};
    }
    const double rho = static_cast<double>(e.ratio_num) / e.ratio_den;
    e.rounded_estimate = second_last + last_d / (1.0 - rho);

    const std::size_t n = constants.size();
    const double d2 = constants[n - 2] - constants[n - 3];
    const double d3 = constants[n - 1] - constants[n - 2];
    e.measured_ratio = d2 != 0 ? d3 / d2 : 0.0;
    e.measured_estimate = e.measured_ratio < 1 ? constants[n - 1] + d3 * e.measured_ratio / (1.0 - e.measured_ratio)
                                               : std::numeric_limits<double>::infinity();
    return e;
}

}  // namespace cheesy
