#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cheesy/hexgrid.hpp"
#include "random_figures.hpp"

using namespace cheesy;

using testing_support::random_cloud;
using testing_support::random_polyomino;

TEST(Hexgrid, RightColumnNeighbours) {
    const auto n = neighbors({0, 0});
    EXPECT_NE(std::find(n.begin(), n.end(), Cell{1, 0}), n.end());
    EXPECT_NE(std::find(n.begin(), n.end(), Cell{1, -1}), n.end());
    EXPECT_EQ(std::set<Cell>(n.begin(), n.end()),
              (std::set<Cell>{{0, 1}, {0, -1}, {1, 0}, {1, -1}, {-1, 0}, {-1, 1}}));
}

TEST(Hexgrid, AdjacencySymmetricAndSixRegular) {
    for (int x = -50; x < 50; ++x) {
        for (int y = -50; y < 50; ++y) {
            const Cell c{x, y};
            const auto n = neighbors(c);
            ASSERT_EQ(std::set<Cell>(n.begin(), n.end()).size(), 6u);
            for (const Cell& m : n) {
                ASSERT_NE(m, c);
                ASSERT_TRUE(adjacent(m, c));
            }
        }
    }
}

TEST(Hexgrid, TwoCellPolyominoesUpToTranslation) {
    std::set<CellSet> dominoes;
    for (const Cell& n : neighbors({0, 0})) dominoes.insert(CellSet({{0, 0}, n}));
    EXPECT_EQ(dominoes.size(), 3u);
}

TEST(Hexgrid, Columns) {
    auto one = columns(CellSet::from_pairs({{0, 0}}));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].x, 0);
    EXPECT_EQ(one[0].runs, (std::vector<cheesy::Run>{{0, 1}}));

    auto holed = columns(CellSet::from_pairs({{0, 0}, {0, 2}}));
    ASSERT_EQ(holed.size(), 1u);
    ASSERT_EQ(holed[0].runs.size(), 2u);
    ColumnShape sh;
    ASSERT_TRUE(shape_of(holed[0], sh));
    EXPECT_EQ(sh, (ColumnShape{1, 1, 1}));

    auto two = columns(CellSet::from_pairs({{0, 0}, {1, 0}, {1, 1}}));
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].runs[0].length, 1);
    EXPECT_EQ(two[1].runs[0].length, 2);
}

TEST(Hexgrid, ColumnsCoverEveryCellOnce) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const CellSet s = random_cloud(rng, 12);
        std::size_t total = 0;
        for (const Column& c : columns(s)) {
            total += static_cast<std::size_t>(c.cell_count());
            for (std::size_t i = 1; i < c.runs.size(); ++i) ASSERT_GT(c.runs[i].start, c.runs[i - 1].top() + 1);
        }
        ASSERT_EQ(total, s.size());
        ASSERT_EQ(from_columns(columns(s)), s);
    }
}

TEST(Hexgrid, Connectivity) {
    EXPECT_TRUE(is_connected(CellSet::from_pairs({{0, 0}, {1, 0}})));
    EXPECT_FALSE(is_connected(CellSet::from_pairs({{0, 0}, {0, 2}})));
    EXPECT_TRUE(is_connected(CellSet::from_pairs({{0, 0}, {1, -1}})));
    EXPECT_TRUE(is_connected(CellSet{}));
}

TEST(Hexgrid, NormalizationAnchorsLowestCellOfFirstColumn) {
    const CellSet s = CellSet::from_pairs({{3, 7}, {3, 8}, {4, 5}});
    EXPECT_EQ(s.cells().front(), (Cell{0, 0}));
    EXPECT_EQ(normalize(s), s);
    EXPECT_EQ(s, CellSet::from_pairs({{-2, 1}, {-2, 2}, {-1, -1}}));
}

TEST(Hexgrid, ReflectSingleCellIsFixed) {
    const CellSet one = CellSet::from_pairs({{0, 0}});
    EXPECT_EQ(reflect(one), one);
}

TEST(Hexgrid, ReflectIsAdjacencyPreservingInvolution) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const CellSet s = random_cloud(rng, 1 + trial % 10);
        ASSERT_EQ(reflect(reflect(s)), s);
        ASSERT_EQ(reflect(s).size(), s.size());
        ASSERT_EQ(is_connected(reflect(s)), is_connected(s));
    }
    for (int x = -5; x <= 5; ++x) {
        for (int y = -5; y <= 5; ++y) {
            for (const Cell& n : neighbors({x, y})) {
                const Cell a{-x, x + y};
                const Cell b{-n.x, n.x + n.y};
                ASSERT_TRUE(adjacent(a, b));
            }
        }
    }
}

TEST(Hexgrid, ReflectReversesColumnsAndKeepsRunOrder) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const CellSet s = random_polyomino(rng, 2 + trial % 9);
        const auto a = columns(s);
        const auto b = columns(reflect(s));
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Column& l = a[i];
            const Column& r = b[b.size() - 1 - i];
            ASSERT_EQ(l.runs.size(), r.runs.size());
            for (std::size_t k = 0; k < l.runs.size(); ++k) ASSERT_EQ(l.runs[k].length, r.runs[k].length);
        }
    }
}

TEST(Hexgrid, SharedEdgeExamples) {
    auto touching_offsets = [](int k, int h) {
        int n = 0;
        for (int c = -40; c <= 40; ++c) n += shared_edges({0, k}, {c, h}) >= 1;
        return n;
    };
    EXPECT_EQ(touching_offsets(1, 1), 2);
    EXPECT_EQ(touching_offsets(2, 1), 3);
    EXPECT_EQ(shared_edges({0, 3}, {20, 3}), 0);
    EXPECT_EQ(shared_edges({0, 1}, {0, 1}), 1);
    EXPECT_EQ(shared_edges({0, 2}, {0, 1}), 2);
}

TEST(Hexgrid, OffsetCountLaw) {
    for (int k = 1; k <= 12; ++k) {
        for (int h = 1; h <= 12; ++h) {
            int n = 0;
            for (int c = -30; c <= 30; ++c) {
                const bool any = shared_edges({0, k}, {c, h}) >= 1;
                ASSERT_EQ(any, touches({0, k}, {c, h}));
                n += any;
            }
            ASSERT_EQ(n, k + h) << "k=" << k << " h=" << h;
        }
    }
}

TEST(Hexgrid, LineFormatRoundTrip) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const CellSet s = random_cloud(rng, 1 + trial % 8);
        ASSERT_EQ(parse_line(to_line(s)), s);
    }
    EXPECT_EQ(to_line(CellSet::from_pairs({{0, 0}, {1, -1}})), "0,0;1,-1");
    EXPECT_THROW(parse_line("0;1"), std::invalid_argument);
}
