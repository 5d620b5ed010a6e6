#pragma once

// Membership tests for the polyomino classes built from nearly convex
// columns.  All predicates work on the column/run decomposition of a cell set;
// only plain connectivity looks at individual cells.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cheesy/hexgrid.hpp"

namespace cheesy {

enum class ClassKind {
    polyomino,
    column_convex,
    rightward_semidirected,
    leftward_semidirected,
    cheesy,
    bird,
    cheesy_blocks,
    incomplete_cheesy_blocks,
};

/// A class of figures; `level` is the maximal gap size and is ignored by the
/// level-free kinds.  Level 0 makes the cheesy kinds column-convex.
struct ClassId {
    ClassKind kind = ClassKind::polyomino;
    int level = 0;

    friend bool operator==(const ClassId&, const ClassId&) = default;
};

inline bool uses_level(ClassKind k) {
    switch (k) {
        case ClassKind::cheesy:
        case ClassKind::bird:
        case ClassKind::cheesy_blocks:
        case ClassKind::incomplete_cheesy_blocks:
            return true;
        default:
            return false;
    }
}

inline std::string to_string(ClassKind k) {
    switch (k) {
        case ClassKind::polyomino: return "polyomino";
        case ClassKind::column_convex: return "cc";
        case ClassKind::rightward_semidirected: return "rightward";
        case ClassKind::leftward_semidirected: return "leftward";
        case ClassKind::cheesy: return "cheesy";
        case ClassKind::bird: return "bird";
        case ClassKind::cheesy_blocks: return "blocks";
        case ClassKind::incomplete_cheesy_blocks: return "incomplete";
    }
    return "?";
}

inline ClassKind parse_class_kind(const std::string& s) {
    for (ClassKind k : {ClassKind::polyomino, ClassKind::column_convex, ClassKind::rightward_semidirected,
                        ClassKind::leftward_semidirected, ClassKind::cheesy, ClassKind::bird,
                        ClassKind::cheesy_blocks, ClassKind::incomplete_cheesy_blocks}) {
        if (to_string(k) == s) return k;
    }
    throw std::invalid_argument("unknown class '" + s + "'");
}

namespace detail {

inline bool any_touch_right(Run r, const Column& right) {
    for (const Run& o : right.runs) {
        if (touches(r, o)) return true;
    }
    return false;
}

inline bool any_touch_left(Run r, const Column& left) {
    for (const Run& o : left.runs) {
        if (touches(o, r)) return true;
    }
    return false;
}

// Every component of `right` shares an edge with `left`.
inline bool right_attached(const Column& left, const Column& right) {
    if (right.x != left.x + 1) return false;
    for (const Run& r : right.runs) {
        if (!any_touch_left(r, left)) return false;
    }
    return true;
}

// Every component of `left` shares an edge with `right`.
inline bool left_attached(const Column& left, const Column& right) {
    if (right.x != left.x + 1) return false;
    for (const Run& r : left.runs) {
        if (!any_touch_right(r, right)) return false;
    }
    return true;
}

inline bool columns_within_level(std::span<const Column> cols, int level) {
    for (const Column& c : cols) {
        ColumnShape sh;
        if (!shape_of(c, sh)) return false;
        if (sh.gap > level) return false;
    }
    return true;
}

inline bool rightward_on(std::span<const Column> cols) {
    if (cols.empty() || !cols.front().gap_free()) return false;
    for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
        if (!right_attached(cols[i], cols[i + 1])) return false;
    }
    return true;
}

inline bool leftward_on(std::span<const Column> cols) {
    if (cols.empty() || !cols.back().gap_free()) return false;
    for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
        if (!left_attached(cols[i], cols[i + 1])) return false;
    }
    return true;
}

// The semidirected conditions chain every component to the unique gap-free
// column, so a block passing this test is connected on its own.
inline bool bird_on(std::span<const Column> cols) {
    std::size_t gap_free = 0;
    std::size_t body = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i].gap_free()) {
            ++gap_free;
            body = i;
        }
    }
    if (gap_free != 1) return false;
    return leftward_on(cols.first(body + 1)) && rightward_on(cols.subspan(body));
}

// Consecutive-bird decomposition as [first, last] column index pairs.
inline std::optional<std::vector<std::pair<std::size_t, std::size_t>>> bird_partition_on(
    std::span<const Column> cols) {
    const std::size_t n = cols.size();
    // reach[j]: the first j columns split into birds; from[j] remembers how.
    std::vector<bool> reach(n + 1, false);
    std::vector<std::size_t> from(n + 1, 0);
    reach[0] = true;
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 0; i < j && !reach[j]; ++i) {
            if (reach[i] && bird_on(cols.subspan(i, j - i))) {
                reach[j] = true;
                from[j] = i;
            }
        }
    }
    if (!reach[n]) return std::nullopt;
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t j = n; j > 0; j = from[j]) blocks.emplace_back(from[j], j - 1);
    return std::vector<std::pair<std::size_t, std::size_t>>(blocks.rbegin(), blocks.rend());
}

}  // namespace detail

inline bool is_polyomino(const CellSet& s) { return !s.empty() && is_connected(s); }

inline bool is_column_convex(const CellSet& s) {
    if (!is_polyomino(s)) return false;
    for (const Column& c : columns(s)) {
        if (!c.gap_free()) return false;
    }
    return true;
}

inline bool is_rightward_semidirected(const CellSet& s) {
    return is_polyomino(s) && detail::rightward_on(columns(s));
}

inline bool is_leftward_semidirected(const CellSet& s) {
    return is_polyomino(s) && detail::leftward_on(columns(s));
}

inline bool is_cheesy(const CellSet& s, int level) {
    if (!is_polyomino(s)) return false;
    const auto cols = columns(s);
    return detail::columns_within_level(cols, level) && detail::rightward_on(cols);
}

inline bool is_bird(const CellSet& s, int level) {
    if (!is_polyomino(s)) return false;
    const auto cols = columns(s);
    return detail::columns_within_level(cols, level) && detail::bird_on(cols);
}

/// Block decomposition witness: column index ranges, each forming a bird.
inline std::optional<std::vector<std::pair<std::size_t, std::size_t>>> bird_partition(const CellSet& s,
                                                                                      int level) {
    if (!is_polyomino(s)) return std::nullopt;
    const auto cols = columns(s);
    if (!detail::columns_within_level(cols, level)) return std::nullopt;
    return detail::bird_partition_on(cols);
}

inline bool is_cheesy_blocks(const CellSet& s, int level) { return bird_partition(s, level).has_value(); }

/// The gap-free column right of the last column of `s` that covers every row
/// adjacent to it.
inline Column completing_column(const CellSet& s) {
    const auto cols = columns(s);
    const Column& last = cols.back();
    return Column{last.x + 1, {Run{last.bottom() - 1, last.height() + 1}}};
}

// Incompleteness is decided with the single candidate from
// completing_column().  If s is not a member but s + c is, then c cannot lie
// in a bird's right wing (dropping it would leave a member) and cannot be a
// one-column bird (s would be a member), so c is the gap-free column of the
// last bird and only needs every component of the last column of s to touch
// it.  That condition is local to the last two columns and is satisfied by the
// covering column whenever it is satisfied by any column.
inline bool is_incomplete_cheesy_blocks(const CellSet& s, int level) {
    if (s.empty() || is_cheesy_blocks(s, level)) return false;
    auto cols = columns(s);
    if (!detail::columns_within_level(cols, level)) return false;
    cols.push_back(completing_column(s));
    return is_cheesy_blocks(from_columns(cols), level);
}

inline bool is_member(const ClassId& id, const CellSet& s) {
    switch (id.kind) {
        case ClassKind::polyomino: return is_polyomino(s);
        case ClassKind::column_convex: return is_column_convex(s);
        case ClassKind::rightward_semidirected: return is_rightward_semidirected(s);
        case ClassKind::leftward_semidirected: return is_leftward_semidirected(s);
        case ClassKind::cheesy: return is_cheesy(s, id.level);
        case ClassKind::bird: return is_bird(s, id.level);
        case ClassKind::cheesy_blocks: return is_cheesy_blocks(s, id.level);
        case ClassKind::incomplete_cheesy_blocks: return is_incomplete_cheesy_blocks(s, id.level);
    }
    return false;
}

}  // namespace cheesy
