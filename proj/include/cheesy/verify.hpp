#pragma once

// Verification suites shared by the command-line tool and the acceptance
// runner.  Each check recomputes its numbers from scratch and compares them
// against reference values or against an independent computation.

#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cheesy/asymptotics.hpp"
#include "cheesy/classify.hpp"
#include "cheesy/closed_forms.hpp"
#include "cheesy/enumerate.hpp"
#include "cheesy/functional_equations.hpp"
#include "cheesy/rational_function.hpp"
#include "cheesy/series.hpp"
#include "cheesy/transfer.hpp"

namespace cheesy {

namespace reference {

// Counts by area 1..12: column-convex, then levels 1, 2, 3.
inline const std::array<std::array<std::uint64_t, 12>, 4> kCounts = {{
    {1, 3, 11, 42, 162, 626, 2419, 9346, 36106, 139483, 538841, 2081612},
    {1, 3, 11, 44, 184, 784, 3363, 14451, 62097, 266716, 1145074, 4914448},
    {1, 3, 11, 44, 186, 810, 3582, 15952, 71242, 318441, 1423411, 6360809},
    {1, 3, 11, 44, 186, 812, 3614, 16259, 73558, 333683, 1515454, 6885303},
}};

// Growth constants of levels 0..3.
inline const std::array<double, 4> kBlocksGrowth = {3.863131, 4.289698, 4.462811, 4.538766};
// Levels 1..3.
inline const std::array<double, 3> kBlocksAmplitude = {0.126651, 0.102214, 0.090504};

// Cheesy polyominoes, levels 0..3.  Their generating functions are not
// derived here; these are carried as external input.
inline const std::array<double, 4> kCheesyGrowth = {3.863131, 4.114908, 4.231836, 4.288631};

// Roots of the level-1 denominator, six decimals.
inline const std::array<std::pair<double, double>, 6> kLevel1Roots = {{
    {-6.109867, 0.0},
    {0.233117, 0.0},
    {0.449922, -0.087757},
    {0.449922, 0.087757},
    {0.988454, -1.537589},
    {0.988454, 1.537589},
}};

inline constexpr double kBlocksLimit = 4.590;
inline constexpr double kCheesyLimit = 4.346;

}  // namespace reference

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool ok() const {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
    void add(std::string name, bool passed, std::string detail) {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
    void append(const SuiteReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

namespace detail {

inline std::string str(const BigInt& v) { return v.get_str(); }

inline bool close(const Real& a, double b, double tol) { return boost::multiprecision::abs(a - Real(b)) <= Real(tol); }

inline std::string versus(const Real& computed, double ref) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(6);
    s << ref;
    return fixed(computed, 6) + " (reference " + s.str() + ")";
}

}  // namespace detail

/// Transfer counts against the 48 reference entries.
inline SuiteReport verify_table1() {
    SuiteReport r{"table1", {}};
    int matched = 0;
    std::ostringstream bad;
    for (int col = 0; col < 4; ++col) {
        const CountTable t = count_blocks(col, 12);
        for (int n = 1; n <= 12; ++n) {
            const BigInt want = reference::kCounts[col][n - 1];
            if (t.by_area[n] == want) {
                ++matched;
            } else {
                bad << " level " << col << " area " << n << ": " << t.by_area[n] << " != " << want << ";";
            }
        }
    }
    r.add("count table entries", matched == 48, std::to_string(matched) + "/48 entries matched" + bad.str());
    return r;
}

/// Series of the closed forms against the transfer counts.
inline SuiteReport verify_gf_cross(int order = 30) {
    SuiteReport r{"gf-cross", {}};
    for (int m = 1; m <= 3; ++m) {
        const auto gf = series_expand(closed_form_gf(m), order);
        const CountTable t = count_blocks(m, order);
        int first_bad = -1;
        for (int n = 0; n <= order && first_bad < 0; ++n) {
            if (gf[n] != t.by_area[n]) first_bad = n;
        }
        r.add("level " + std::to_string(m) + " closed form vs transfer", first_bad < 0,
              first_bad < 0 ? "equal through order " + std::to_string(order)
                            : "differ at order " + std::to_string(first_bad) + ": " + detail::str(gf[first_bad]) +
                                  " vs " + detail::str(t.by_area[first_bad]));
    }
    return r;
}

/// Exhaustive enumeration against the transfer counts.
inline SuiteReport verify_oracle(int max_area = 9, int max_level = 3) {
    detail::check_oracle_area(max_area);
    SuiteReport r{"oracle", {}};
    for (int m = 0; m <= max_level; ++m) {
        const CountTable blocks = count_blocks(m, max_area);
        const CountTable incomplete = count_incomplete(m, max_area);
        for (const auto kind : {ClassKind::cheesy_blocks, ClassKind::incomplete_cheesy_blocks}) {
            const CountTable& dp = kind == ClassKind::cheesy_blocks ? blocks : incomplete;
            std::ostringstream bad;
            bool ok = true;
            for (int n = 1; n <= max_area; ++n) {
                const BigInt brute = static_cast<unsigned long>(count_class({kind, m}, n));
                if (brute != dp.by_area[n]) {
                    ok = false;
                    bad << " area " << n << ": brute " << brute << " dp " << dp.by_area[n] << ";";
                }
            }
            r.add(to_string(kind) + " level " + std::to_string(m), ok,
                  ok ? "areas 1.." + std::to_string(max_area) + " agree" : bad.str());
        }
    }
    return r;
}

/// Exact elimination on the level-1 system.
inline SuiteReport verify_symbolic(int order = 20) {
    SuiteReport r{"symbolic", {}};
    const EquationSystem sys = level1_system();
    const auto sol = solve_linear_system(to_matrix(sys));
    const RationalFunction& e1 = sol[sys.index_of("E1")];
    const RationalFunction& g = sol[sys.index_of("G")];
    r.add("solved E1 equals the closed form", e1 == closed_form_gf(1), "E1 = " + e1.to_string());

    const auto gs = series_expand(g, order);
    const CountTable v = count_incomplete(1, order);
    int first_bad = -1;
    for (int n = 0; n <= order && first_bad < 0; ++n) {
        if (gs[n] != v.by_area[n]) first_bad = n;
    }
    r.add("solved G equals incomplete totals", first_bad < 0,
          first_bad < 0 ? "through order " + std::to_string(order) : "differ at order " + std::to_string(first_bad));

    // Column-convex figures through the same machinery.
    const EquationSystem sys0 = level0_system();
    const auto sol0 = solve_linear_system(to_matrix(sys0));
    const auto cs = series_expand(sol0[0], order);
    const CountTable cc = count_blocks(0, order);
    bool same = true;
    for (int n = 0; n <= order; ++n) same = same && cs[n] == cc.by_area[n];
    r.add("column-convex system matches level 0", same, "E1 = " + sol0[0].to_string());
    return r;
}

namespace detail {

inline std::string describe(const EquationReport& rep) {
    if (rep.ok()) return std::to_string(rep.equations_checked) + " equations hold to order " + std::to_string(rep.max_order);
    std::ostringstream s;
    for (const auto& f : rep.failures) s << f.equation << " fails at order " << f.order << "; ";
    return s.str();
}

}  // namespace detail

/// Level-1 equations as series identities, with injected faults.
inline SuiteReport verify_eq1(int order = 20) {
    SuiteReport r{"eq1", {}};
    const EquationSystem sys = level1_system();
    const TransferStatistics st = statistics_series(1, order);
    const EquationReport rep = check_level1_equations(st, order);
    r.add("level-1 identities", rep.ok(), detail::describe(rep));

    for (const std::string& victim : sys.unknowns) {
        auto values = st.select(sys.unknowns);
        values[sys.index_of(victim)][5] += 1;
        const EquationReport bad = check_identities(sys, values, order);
        r.add("fault in " + victim + " at q^5 detected", !bad.ok(), detail::describe(bad));
    }
    return r;
}

/// Level-2 equations for the two-cell hole, with injected faults.
inline SuiteReport verify_eq2(int order = 20) {
    SuiteReport r{"eq2", {}};
    const EquationSystem sys = level2_hole2_equations();
    const TransferStatistics st = statistics_series(2, order);
    const EquationReport rep = check_level2_equations(st, order);
    r.add("level-2 identities", rep.ok(), detail::describe(rep));

    for (const std::string& victim : {std::string("C1"), std::string("E0"), std::string("B1")}) {
        auto values = st.select(sys.unknowns);
        values[sys.index_of(victim)][7] += 1;
        const EquationReport bad = check_identities(sys, values, order);
        r.add("fault in " + victim + " at q^7 detected", !bad.ok(), detail::describe(bad));
    }
    return r;
}

/// reflect() maps the member set onto itself.
inline SuiteReport verify_reflection(int max_area = 8, int level = 1) {
    detail::check_oracle_area(max_area);
    SuiteReport r{"reflection", {}};
    for (int n = 1; n <= max_area; ++n) {
        const auto members = collect_class({ClassKind::cheesy_blocks, level}, n);
        std::set<CellSet> image;
        bool closed = true;
        for (const CellSet& s : members) {
            const CellSet t = reflect(s);
            closed = closed && is_cheesy_blocks(t, level);
            image.insert(t);
        }
        const bool same = closed && image == std::set<CellSet>(members.begin(), members.end());
        r.add("area " + std::to_string(n), same,
              std::to_string(members.size()) + " members, " + std::to_string(image.size()) + " images" +
                  (closed ? "" : ", some image is not a member"));
    }
    return r;
}

/// Dominant-pole constants against the reference values.
inline SuiteReport verify_asymptotics(int precision = 30) {
    SuiteReport r{"asymptotics", {}};
    const auto sol0 = solve_linear_system(to_matrix(level0_system()));
    const AsymptoticForm f0 = asymptotic_form(sol0[0], precision);
    r.add("level 0 growth", detail::close(f0.growth, reference::kBlocksGrowth[0], 1e-6),
          detail::versus(f0.growth, reference::kBlocksGrowth[0]));
    for (int m = 1; m <= 3; ++m) {
        const AsymptoticForm f = asymptotic_form(closed_form_gf(m), precision);
        const std::string lv = "level " + std::to_string(m);
        r.add(lv + " growth", detail::close(f.growth, reference::kBlocksGrowth[m], 1e-6),
              detail::versus(f.growth, reference::kBlocksGrowth[m]));
        r.add(lv + " amplitude", detail::close(f.amplitude, reference::kBlocksAmplitude[m - 1], 1e-6),
              detail::versus(f.amplitude, reference::kBlocksAmplitude[m - 1]));
    }

    const RootSet rs = find_roots(closed_form_gf(1).den(), precision);
    bool all = rs.roots.size() == reference::kLevel1Roots.size();
    std::ostringstream got;
    for (const auto& [re, im] : reference::kLevel1Roots) {
        bool found = false;
        for (const Root& root : rs.roots) {
            found = found || (detail::close(root.value.real(), re, 1e-6) && detail::close(root.value.imag(), im, 1e-6));
        }
        all = all && found;
    }
    for (const Root& root : rs.roots) got << fixed(root.value.real(), 6) << (root.value.imag() < 0 ? "" : "+") << fixed(root.value.imag(), 6) << "i ";
    r.add("level 1 denominator roots", all, got.str());
    return r;
}

/// Exact a_40 against the reference asymptotic form.
inline SuiteReport verify_a40(int n = 40) {
    SuiteReport r{"a40", {}};
    const auto a = series_expand(closed_form_gf(1), n);
    const Real err = relative_error(a[n], Real("0.126651"), Real("4.289698"), n);
    std::ostringstream d;
    d << "a_" << n << " = " << a[n] << ", relative error " << std::scientific << static_cast<double>(err);
    r.add("level 1 asymptotic consistency", err < Real("1e-3"), d.str());
    return r;
}

/// Limit estimates from growth constants of levels 0..3.
inline SuiteReport verify_extrapolate(int precision = 30) {
    SuiteReport r{"extrapolate", {}};
    std::vector<double> blocks{static_cast<double>(asymptotic_form(solve_linear_system(to_matrix(level0_system()))[0],
                                                                   precision).growth)};
    for (int m = 1; m <= 3; ++m) blocks.push_back(static_cast<double>(asymptotic_form(closed_form_gf(m), precision).growth));
    const ExtrapolationEstimate b = extrapolate_growth(blocks);
    const ExtrapolationEstimate c = extrapolate_growth(reference::kCheesyGrowth);
    auto text = [](const ExtrapolationEstimate& e) {
        std::ostringstream s;
        s.setf(std::ios::fixed);
        s.precision(4);
        s << e.rounded_estimate << " (ratio " << e.ratio_num << "/" << e.ratio_den << "; measured ratio " << e.measured_ratio
          << " gives " << e.measured_estimate << ")";
        return s.str();
    };
    r.add("blocks limit", std::abs(b.rounded_estimate - reference::kBlocksLimit) <= 0.0005, text(b));
    r.add("cheesy limit (external constants)", std::abs(c.rounded_estimate - reference::kCheesyLimit) <= 0.0005, text(c));
    return r;
}

/// a_{n+1}/a_n of level-1 cheesy polyominoes against their growth constant.
inline SuiteReport verify_cheesy_ratio(int n = 100) {
    SuiteReport r{"cheesy-ratio", {}};
    const CountTable t = count_cheesy(1, n + 1);
    const Real ratio = to_real(t.by_area[n + 1]) / to_real(t.by_area[n]);
    r.add("level 1 cheesy a_" + std::to_string(n + 1) + "/a_" + std::to_string(n),
          detail::close(ratio, reference::kCheesyGrowth[1], 1e-2), fixed(ratio, 6));
    return r;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"table1", "gf-cross", "oracle", "eq1", "eq2", "reflection",
                                                   "asymptotics", "extrapolate", "cheesy-ratio", "all"};
    return names;
}

/// Runs a suite by name; "eq1" includes the symbolic solve and
/// "asymptotics" the a_40 comparison.
inline SuiteReport run_suite(const std::string& name, int precision = 30) {
    if (name == "table1") return verify_table1();
    if (name == "gf-cross") return verify_gf_cross();
    if (name == "oracle") return verify_oracle();
    if (name == "eq1") {
        SuiteReport r = verify_symbolic();
        r.suite = "eq1";
        r.append(verify_eq1());
        return r;
    }
    if (name == "eq2") return verify_eq2();
    if (name == "reflection") return verify_reflection();
    if (name == "asymptotics") {
        SuiteReport r = verify_asymptotics(precision);
        r.append(verify_a40());
        return r;
    }
    if (name == "extrapolate") return verify_extrapolate(precision);
    if (name == "cheesy-ratio") return verify_cheesy_ratio();
    if (name == "all") {
        SuiteReport r{"all", {}};
        for (const auto& s : suite_names()) {
            if (s == "all") continue;
            for (Check c : run_suite(s, precision).checks) {
                c.name = s + ": " + c.name;
                r.checks.push_back(std::move(c));
            }
        }
        return r;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace cheesy
