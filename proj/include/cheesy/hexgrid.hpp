#pragma once

// Hexagonal lattice in sheared axial coordinates.
//
// A cell (x, y) sits in column x; its centre is at physical height y + x/2.
// Within a column the cells are stacked at consecutive y.  The two cells of
// column x+1 that share an edge with (x, y) are (x+1, y-1) and (x+1, y), so a
// vertical run y in [a, b] of column x is adjacent to the rows [a-1, b] of the
// next column.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cheesy {

struct Cell {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// The six edge-neighbours of `c`, in a fixed order.
constexpr std::array<Cell, 6> neighbors(Cell c) noexcept {
    return {{{c.x, c.y + 1},
             {c.x, c.y - 1},
             {c.x + 1, c.y},
             {c.x + 1, c.y - 1},
             {c.x - 1, c.y},
             {c.x - 1, c.y + 1}}};
}

constexpr bool adjacent(Cell a, Cell b) noexcept {
    for (const Cell& n : neighbors(a)) {
        if (n == b) return true;
    }
    return false;
}

/// A maximal vertical run of cells inside one column.
struct Run {
    int start = 0;   // lowest y
    int length = 0;  // number of cells, >= 1

    constexpr int top() const noexcept { return start + length - 1; }
    friend constexpr auto operator<=>(const Run&, const Run&) = default;
};

/// True if some cell of `left` (column x) shares an edge with some cell of
/// `right` (column x+1).
constexpr bool touches(Run left, Run right) noexcept {
    return right.start <= left.top() && right.top() >= left.start - 1;
}

/// Number of adjacent (left cell, right cell) pairs between two runs in
/// neighbouring columns.  Each left cell y contributes its right neighbours at
/// rows y-1 and y.
constexpr int shared_edges(Run left, Run right) noexcept {
    int count = 0;
    for (int y = left.start; y <= left.top(); ++y) {
        for (int r : {y - 1, y}) {
            if (r >= right.start && r <= right.top()) ++count;
        }
    }
    return count;
}

struct Column {
    int x = 0;
    std::vector<Run> runs;  // bottom-up, pairwise separated by >= 1 empty row

    int bottom() const { return runs.front().start; }
    int top() const { return runs.back().top(); }
    int height() const { return top() - bottom() + 1; }
    int cell_count() const {
        int n = 0;
        for (const Run& r : runs) n += r.length;
        return n;
    }
    bool gap_free() const { return runs.size() == 1; }

    friend bool operator==(const Column&, const Column&) = default;
};

/// Shape of a column with at most two components, independent of position.
/// A gap-free column is stored as a single lower run (gap = upper = 0).
struct ColumnShape {
    int lower = 1;
    int gap = 0;
    int upper = 0;

    constexpr bool valid() const noexcept {
        if (lower < 1 || gap < 0 || upper < 0) return false;
        return (gap == 0) == (upper == 0);
    }
    constexpr bool has_gap() const noexcept { return gap > 0; }
    constexpr int height() const noexcept { return lower + gap + upper; }
    constexpr int cells() const noexcept { return lower + upper; }

    /// Runs of this shape when its lowest cell sits at row `base`.
    std::vector<Run> runs_at(int base) const {
        std::vector<Run> r{{base, lower}};
        if (gap > 0) r.push_back({base + lower + gap, upper});
        return r;
    }

    friend constexpr auto operator<=>(const ColumnShape&, const ColumnShape&) = default;
};

/// Shape of a column, if it has at most two runs.
inline bool shape_of(const Column& c, ColumnShape& out) {
    if (c.runs.empty() || c.runs.size() > 2) return false;
    out.lower = c.runs[0].length;
    if (c.runs.size() == 1) {
        out.gap = out.upper = 0;
    } else {
        out.gap = c.runs[1].start - c.runs[0].top() - 1;
        out.upper = c.runs[1].length;
    }
    return true;
}

/// Finite set of cells, kept sorted and translated so that the lowest cell of
/// the leftmost column is (0, 0).  Equal translates compare equal.
class CellSet {
public:
    CellSet() = default;

    explicit CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) { normalize_in_place(); }

    static CellSet from_pairs(std::initializer_list<std::pair<int, int>> pairs) {
        std::vector<Cell> v;
        v.reserve(pairs.size());
        for (auto [x, y] : pairs) v.push_back({x, y});
        return CellSet(std::move(v));
    }

    std::span<const Cell> cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }

    bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

    friend bool operator==(const CellSet&, const CellSet&) = default;
    friend auto operator<=>(const CellSet& a, const CellSet& b) { return a.cells_ <=> b.cells_; }

private:
    void normalize_in_place() {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
        if (cells_.empty()) return;
        const Cell anchor = cells_.front();
        for (Cell& c : cells_) {
            c.x -= anchor.x;
            c.y -= anchor.y;
        }
    }

    std::vector<Cell> cells_;
};

inline CellSet normalize(const CellSet& s) { return CellSet(std::vector<Cell>(s.cells().begin(), s.cells().end())); }

/// Columns of `s` in increasing x, each with its runs bottom-up.  Only
/// non-empty columns are listed, so x values may skip for disconnected sets.
inline std::vector<Column> columns(const CellSet& s) {
    std::vector<Column> out;
    for (const Cell& c : s.cells()) {
        if (out.empty() || out.back().x != c.x) out.push_back({c.x, {}});
        auto& runs = out.back().runs;
        if (!runs.empty() && runs.back().top() + 1 == c.y) {
            ++runs.back().length;
        } else {
            runs.push_back({c.y, 1});
        }
    }
    return out;
}

/// Rebuilds a cell set from columns (inverse of `columns` up to translation).
inline CellSet from_columns(std::span<const Column> cols) {
    std::vector<Cell> v;
    for (const Column& col : cols) {
        for (const Run& r : col.runs) {
            for (int y = r.start; y <= r.top(); ++y) v.push_back({col.x, y});
        }
    }
    return CellSet(std::move(v));
}

inline bool is_connected(const CellSet& s) {
    const auto cells = s.cells();
    if (cells.empty()) return true;
    std::vector<bool> seen(cells.size(), false);
    std::queue<std::size_t> todo;
    seen[0] = true;
    todo.push(0);
    std::size_t reached = 1;
    while (!todo.empty()) {
        const Cell c = cells[todo.front()];
        todo.pop();
        for (const Cell& n : neighbors(c)) {
            auto it = std::lower_bound(cells.begin(), cells.end(), n);
            if (it == cells.end() || *it != n) continue;
            auto idx = static_cast<std::size_t>(it - cells.begin());
            if (!seen[idx]) {
                seen[idx] = true;
                ++reached;
                todo.push(idx);
            }
        }
    }
    return reached == cells.size();
}

/// Mirror image about a vertical axis: (x, y) -> (-x, x + y), which keeps the
/// physical height y + x/2 of every cell.  Column order is reversed.
inline CellSet reflect(const CellSet& s) {
    std::vector<Cell> v;
    v.reserve(s.size());
    for (const Cell& c : s.cells()) v.push_back({-c.x, c.x + c.y});
    return CellSet(std::move(v));
}

// Text form used for golden files: "x,y;x,y;..." in sorted order.
inline std::string to_line(const CellSet& s) {
    std::string out;
    for (const Cell& c : s.cells()) {
        if (!out.empty()) out += ';';
        out += std::to_string(c.x);
        out += ',';
        out += std::to_string(c.y);
    }
    return out;
}

inline CellSet parse_line(const std::string& line) {
    std::vector<Cell> v;
    std::istringstream in(line);
    std::string item;
    while (std::getline(in, item, ';')) {
        if (item.empty()) continue;
        auto comma = item.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad cell '" + item + "'");
        v.push_back({std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1))});
    }
    return CellSet(std::move(v));
}

}  // namespace cheesy
