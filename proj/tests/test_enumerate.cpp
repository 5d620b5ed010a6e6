#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cheesy/enumerate.hpp"
#include "cheesy/functional_equations.hpp"
#include "cheesy/rational_function.hpp"
#include "cheesy/series.hpp"

using namespace cheesy;

TEST(Redelmeier, FixedPolyhexCounts) {
    const std::uint64_t want[] = {1, 3, 11, 44, 186, 814, 3652};
    for (int n = 1; n <= 7; ++n) {
        std::set<CellSet> seen;
        std::uint64_t calls = 0;
        generate_polyominoes(n, [&](const CellSet& s) {
            ++calls;
            ASSERT_EQ(s.size(), static_cast<std::size_t>(n));
            ASSERT_TRUE(is_connected(s));
            seen.insert(s);
        });
        EXPECT_EQ(calls, want[n - 1]) << "n=" << n;
        EXPECT_EQ(seen.size(), calls);
    }
}

TEST(Generator, SingleCell) {
    for (int m = 0; m <= 3; ++m) {
        int n = 0;
        generate(1, m, [&](const CellSet& s) { n += is_polyomino(s); });
        EXPECT_EQ(n, 1);
    }
}

TEST(Generator, MatchesRedelmeierOnConnectedFigures) {
    for (int m = 0; m <= 2; ++m) {
        for (int n = 1; n <= 7; ++n) {
            std::set<CellSet> expected;
            generate_polyominoes(n, [&](const CellSet& s) {
                for (const Column& c : columns(s)) {
                    if (c.runs.size() > 2) return;
                    if (c.runs.size() == 2 && c.runs[1].start - c.runs[0].top() - 1 > m) return;
                }
                expected.insert(s);
            });
            std::set<CellSet> got;
            std::uint64_t calls = 0;
            generate(n, m, [&](const CellSet& s) {
                ++calls;
                if (is_connected(s)) got.insert(s);
            });
            EXPECT_EQ(got, expected) << "m=" << m << " n=" << n;

            std::set<CellSet> all;
            generate(n, m, [&](const CellSet& s) { all.insert(s); });
            EXPECT_EQ(all.size(), calls) << "duplicates at m=" << m << " n=" << n;
        }
    }
}

TEST(Generator, FilteredCounts) {
    std::uint64_t n = 0;
    generate(4, 1, [&](const CellSet& s) { n += is_cheesy_blocks(s, 1); });
    EXPECT_EQ(n, 44u);
    n = 0;
    generate(6, 3, [&](const CellSet& s) { n += is_cheesy_blocks(s, 3); });
    EXPECT_EQ(n, 812u);
}

TEST(CountClass, KnownValues) {
    EXPECT_EQ(count_class({ClassKind::column_convex, 0}, 5), 162u);
    EXPECT_EQ(count_class({ClassKind::cheesy_blocks, 2}, 8), 15952u);
    EXPECT_EQ(count_class({ClassKind::polyomino, 0}, 6), 814u);
}

TEST(CountClass, IncompleteMatchesSolvedSeries) {
    const EquationSystem sys = level1_system();
    const auto sol = solve_linear_system(to_matrix(sys));
    const auto g = series_expand(sol[sys.index_of("G")], 7);
    for (int n = 1; n <= 7; ++n) {
        EXPECT_EQ(BigInt(static_cast<unsigned long>(count_class({ClassKind::incomplete_cheesy_blocks, 1}, n))), g[n])
            << "n=" << n;
    }
}

TEST(CountClass, AreaLimits) {
    EXPECT_THROW(count_class({ClassKind::polyomino, 0}, 0), std::invalid_argument);
    EXPECT_THROW(count_class({ClassKind::cheesy_blocks, 1}, kOracleHardMaxArea + 1), std::out_of_range);
}

TEST(EmitFigures, LineFormat) {
    std::ostringstream out;
    const auto n = emit_figures({ClassKind::cheesy_blocks, 1}, 4, out);
    EXPECT_EQ(n, 44u);
    std::istringstream in(out.str());
    std::string line;
    std::set<CellSet> parsed;
    while (std::getline(in, line)) parsed.insert(parse_line(line));
    const auto members = collect_class({ClassKind::cheesy_blocks, 1}, 4);
    EXPECT_EQ(parsed, std::set<CellSet>(members.begin(), members.end()));
}

TEST(EmitFigures, Deterministic) {
    std::ostringstream a, b;
    emit_figures({ClassKind::incomplete_cheesy_blocks, 2}, 6, a);
    emit_figures({ClassKind::incomplete_cheesy_blocks, 2}, 6, b);
    EXPECT_EQ(a.str(), b.str());
}
