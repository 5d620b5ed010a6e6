#pragma once

// The `cheesy` command-line front end.  Kept in a header so the tests can
// drive it with in-memory streams.

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cheesy/asymptotics.hpp"
#include "cheesy/classify.hpp"
#include "cheesy/closed_forms.hpp"
#include "cheesy/enumerate.hpp"
#include "cheesy/series.hpp"
#include "cheesy/transfer.hpp"
#include "cheesy/verify.hpp"

namespace cheesy::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;

inline constexpr int kDefaultDpMaxArea = 200;

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string class_name = "blocks";
    int level = 1;
    int max_area = 12;
    std::string method = "dp";
    std::string output = "csv";
    int precision = 30;
    std::string suite;
    int table = 1;
    std::string emit_figures;
};

namespace detail {

inline int env_cap(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    try {
        std::size_t used = 0;
        const int cap = std::stoi(v, &used);
        if (used != std::string(v).size() || cap < 1) throw std::invalid_argument(v);
        return cap;
    } catch (const std::exception&) {
        throw usage_error(std::string(name) + " must be a positive integer");
    }
}

inline std::vector<BigInt> counts_for(const RunConfig& cfg, ClassId id) {
    std::vector<BigInt> out;
    if (cfg.method == "brute") {
        const int cap = env_cap("CHEESY_BRUTE_MAX_AREA", kOracleSoftMaxArea);
        if (cfg.max_area > std::min(cap, kOracleHardMaxArea))
            throw usage_error("method brute allows max-area <= " + std::to_string(std::min(cap, kOracleHardMaxArea)));
        std::ofstream figures;
        if (!cfg.emit_figures.empty()) {
            figures.open(cfg.emit_figures);
            if (!figures) throw usage_error("cannot open " + cfg.emit_figures);
        }
        for (int n = 1; n <= cfg.max_area; ++n) {
            const std::uint64_t c = figures.is_open() ? emit_figures(id, n, figures) : count_class(id, n);
            out.emplace_back(static_cast<unsigned long>(c));
        }
        return out;
    }
    if (!cfg.emit_figures.empty()) throw usage_error("--emit-figures needs --method brute");

    if (cfg.method == "gf") {
        if (id.kind != ClassKind::cheesy_blocks || id.level < 1 || id.level > 3)
            throw usage_error("method gf is only available for --class blocks with level 1, 2 or 3");
        const auto a = series_expand(closed_form_gf(id.level), cfg.max_area);
        out.assign(a.begin() + 1, a.end());
        return out;
    }

    if (cfg.method == "dp") {
        const int cap = env_cap("CHEESY_DP_MAX_AREA", kDefaultDpMaxArea);
        if (cfg.max_area > cap) throw usage_error("method dp allows max-area <= " + std::to_string(cap));
        CountTable t;
        switch (id.kind) {
            case ClassKind::column_convex: t = count_blocks(0, cfg.max_area); break;
            case ClassKind::cheesy_blocks: t = count_blocks(id.level, cfg.max_area); break;
            case ClassKind::incomplete_cheesy_blocks: t = count_incomplete(id.level, cfg.max_area); break;
            case ClassKind::cheesy: t = count_cheesy(id.level, cfg.max_area); break;
            default:
                throw usage_error("method dp supports classes cc, blocks, incomplete and cheesy; use --method brute for " +
                                  to_string(id.kind));
        }
        out.assign(t.by_area.begin() + 1, t.by_area.end());
        return out;
    }
    throw usage_error("unknown method '" + cfg.method + "'");
}

inline RationalFunction blocks_gf(int level) {
    if (level == 0) return solve_linear_system(to_matrix(level0_system()))[0];
    return closed_form_gf(level);
}

}  // namespace detail

inline int cmd_count(const RunConfig& cfg, std::ostream& out) {
    if (cfg.max_area < 1) throw usage_error("--max-area must be at least 1");
    if (cfg.level < 0) throw usage_error("--level must be non-negative");
    ClassKind kind;
    try {
        kind = parse_class_kind(cfg.class_name);
    } catch (const std::invalid_argument&) {
        throw usage_error("unknown class '" + cfg.class_name + "'");
    }
    const ClassId id{kind, uses_level(kind) ? cfg.level : 0};
    const auto counts = detail::counts_for(cfg, id);

    if (cfg.output == "json") {
        nlohmann::ordered_json j;
        j["class"] = to_string(kind);
        if (uses_level(kind)) j["level"] = id.level;
        j["method"] = cfg.method;
        j["counts"] = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < counts.size(); ++i)
            j["counts"].push_back({{"area", i + 1}, {"count", counts[i].get_str()}});
        out << j.dump(2) << "\n";
    } else {
        out << "area,count\n";
        for (std::size_t i = 0; i < counts.size(); ++i) out << i + 1 << "," << counts[i] << "\n";
    }
    return kOk;
}

inline int cmd_growth(const RunConfig& cfg, std::ostream& out) {
    if (cfg.level < 0 || cfg.level > 3) throw usage_error("growth is available for levels 0 to 3");
    if (cfg.precision < 6 || cfg.precision > kMaxRootDigits)
        throw usage_error("--precision must be between 6 and " + std::to_string(kMaxRootDigits));
    const AsymptoticForm f = asymptotic_form(detail::blocks_gf(cfg.level), cfg.precision);
    const std::vector<std::pair<std::string, std::string>> fields = {
        {"growth", fixed(f.growth, 6)},
        {"amplitude", fixed(f.amplitude, 6)},
        {"dominant_root", fixed(f.root, 6)},
        {"next_modulus", fixed(f.next_modulus, 6)},
        {"margin", fixed(f.next_modulus - f.root, 6)},
    };
    if (cfg.output == "json") {
        nlohmann::ordered_json j;
        j["level"] = cfg.level;
        for (const auto& [k, v] : fields) j[k] = v;
        j["precision"] = cfg.precision;
        out << j.dump(2) << "\n";
    } else {
        out << "level";
        for (const auto& [k, v] : fields) out << "," << k;
        out << "\n" << cfg.level;
        for (const auto& [k, v] : fields) out << "," << v;
        out << "\n";
    }
    return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
        throw usage_error("unknown suite '" + cfg.suite + "'");
    const SuiteReport r = run_suite(cfg.suite, cfg.precision);
    std::size_t passed = 0;
    for (const auto& c : r.checks) passed += c.passed;
    if (cfg.output == "json") {
        nlohmann::ordered_json j;
        j["suite"] = cfg.suite;
        j["passed"] = passed;
        j["total"] = r.checks.size();
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        out << j.dump(2) << "\n";
    } else {
        for (const auto& c : r.checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        out << cfg.suite << ": " << passed << "/" << r.checks.size() << " checks passed\n";
    }
    return r.ok() ? kOk : kVerifyFailed;
}

inline int cmd_table(const RunConfig& cfg, std::ostream& out) {
    const bool json = cfg.output == "json";
    if (cfg.table == 1) {
        const int n = 12;
        std::vector<CountTable> cols;
        for (int m = 0; m <= 3; ++m) cols.push_back(count_blocks(m, n));
        const std::vector<std::string> names = {"cc", "level1", "level2", "level3"};
        if (json) {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (int a = 1; a <= n; ++a) {
                nlohmann::ordered_json row;
                row["area"] = a;
                for (std::size_t c = 0; c < cols.size(); ++c) row[names[c]] = cols[c].by_area[a].get_str();
                rows.push_back(row);
            }
            out << nlohmann::ordered_json{{"table", 1}, {"rows", rows}}.dump(2) << "\n";
        } else {
            out << "area,cc,level1,level2,level3\n";
            for (int a = 1; a <= n; ++a) {
                out << a;
                for (const auto& c : cols) out << "," << c.by_area[a];
                out << "\n";
            }
        }
        return kOk;
    }
    if (cfg.table == 2) {
        std::vector<std::string> blocks;
        for (int m = 0; m <= 3; ++m) blocks.push_back(fixed(asymptotic_form(detail::blocks_gf(m), cfg.precision).growth, 6));
        auto cheesy_value = [&](int m) {
            // Level-0 cheesy polyominoes are the column-convex ones.
            if (m == 0) return blocks[0];
            std::ostringstream s;
            s.setf(std::ios::fixed);
            s.precision(6);
            s << reference::kCheesyGrowth[static_cast<std::size_t>(m)];
            return s.str();
        };
        auto source = [](int m) { return m == 0 ? "computed" : "external input"; };
        if (json) {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (int m = 0; m <= 3; ++m)
                rows.push_back({{"level", m},
                                {"cheesy", cheesy_value(m)},
                                {"cheesy_source", source(m)},
                                {"blocks", blocks[static_cast<std::size_t>(m)]}});
            out << nlohmann::ordered_json{{"table", 2}, {"rows", rows}}.dump(2) << "\n";
        } else {
            out << "level,cheesy,cheesy_source,blocks\n";
            for (int m = 0; m <= 3; ++m)
                out << m << "," << cheesy_value(m) << "," << source(m) << "," << blocks[static_cast<std::size_t>(m)] << "\n";
        }
        return kOk;
    }
    throw usage_error("table must be 1 or 2");
}

/// Parses `args` (without the program name) and runs the command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counting hexagonal polyominoes with cheesy blocks", "cheesy"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_output = [&](CLI::App* c) {
        c->add_option("--output", cfg.output, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* count = app.add_subcommand("count", "exact counts by area");
    count->add_option("--class", cfg.class_name, "polyomino, cc, rightward, leftward, cheesy, bird, blocks, incomplete");
    count->add_option("--level", cfg.level, "maximum gap size");
    count->add_option("--max-area", cfg.max_area, "largest area");
    count->add_option("--method", cfg.method, "dp, brute or gf")->check(CLI::IsMember({"dp", "brute", "gf"}));
    count->add_option("--emit-figures", cfg.emit_figures, "write every figure to FILE (brute only)");
    add_output(count);

    auto* growth = app.add_subcommand("growth", "growth constant and amplitude");
    growth->add_option("--level", cfg.level, "0 to 3");
    growth->add_option("--precision", cfg.precision, "root-finding digits");
    add_output(growth);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", cfg.suite, "suite name")->required();
    verify->add_option("--precision", cfg.precision, "root-finding digits");
    add_output(verify);

    auto* table = app.add_subcommand("table", "reproduce a table");
    table->add_option("which", cfg.table, "1 or 2")->required();
    table->add_option("--precision", cfg.precision, "root-finding digits");
    add_output(table);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*count) return cmd_count(cfg, out);
        if (*growth) return cmd_growth(cfg, out);
        if (*verify) return cmd_verify(cfg, out);
        if (*table) return cmd_table(cfg, out);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}

}  // namespace cheesy::cli
