#pragma once

// Brute-force oracle.  Figures are generated explicitly and filtered with the
// predicates from classify.hpp; nothing here knows how the transfer counter
// works.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cheesy/classify.hpp"
#include "cheesy/hexgrid.hpp"

namespace cheesy {

inline constexpr int kOracleSoftMaxArea = 12;
inline constexpr int kOracleHardMaxArea = 14;

namespace detail {

inline void check_oracle_area(int area) {
    if (area <= 0) throw std::invalid_argument("area must be positive, got " + std::to_string(area));
    if (area > kOracleHardMaxArea)
        throw std::out_of_range("brute-force area " + std::to_string(area) + " exceeds hard limit " +
                                std::to_string(kOracleHardMaxArea));
}

template <class Emit>
class ColumnGenerator {
public:
    ColumnGenerator(int area, int max_gap, Emit& emit) : area_(area), max_gap_(max_gap), emit_(emit) {}

    void run() {
        for (const ColumnShape& sh : shapes_up_to(area_)) {
            cols_.push_back({0, sh.runs_at(0)});
            extend(area_ - sh.cells());
            cols_.pop_back();
        }
    }

private:
    std::vector<ColumnShape> shapes_up_to(int cells) const {
        std::vector<ColumnShape> out;
        for (int c = 1; c <= cells; ++c) out.push_back({c, 0, 0});
        for (int g = 1; g <= max_gap_; ++g) {
            for (int lo = 1; lo < cells; ++lo) {
                for (int up = 1; lo + up <= cells; ++up) out.push_back({lo, g, up});
            }
        }
        return out;
    }

    // Every figure that is connected, or becomes connected after one column
    // is appended on the right, has an edge between each pair of neighbouring
    // columns.  Requiring that contact keeps the search finite and loses
    // nothing for the classes counted here.
    void extend(int remaining) {
        if (remaining == 0) {
            emit_(from_columns(cols_));
            return;
        }
        const Column prev = cols_.back();
        for (const ColumnShape& sh : shapes_up_to(remaining)) {
            for (int base = prev.bottom() - sh.height() - 1; base <= prev.top() + 1; ++base) {
                Column next{prev.x + 1, sh.runs_at(base)};
                bool contact = false;
                for (const Run& a : prev.runs) {
                    for (const Run& b : next.runs) contact = contact || touches(a, b);
                }
                if (!contact) continue;
                cols_.push_back(std::move(next));
                extend(remaining - sh.cells());
                cols_.pop_back();
            }
        }
    }

    int area_;
    int max_gap_;
    Emit& emit_;
    std::vector<Column> cols_;
};

// Redelmeier's method on the half-plane of cells lexicographically >= (0,0).
template <class Emit>
class Redelmeier {
public:
    Redelmeier(int area, Emit& emit) : area_(area), emit_(emit) {}

    void run() {
        std::vector<Cell> untried{{0, 0}};
        seen_.push_back({0, 0});
        grow(untried);
    }

private:
    static bool allowed(Cell c) { return c.x > 0 || (c.x == 0 && c.y >= 0); }

    bool is_seen(Cell c) const { return std::find(seen_.begin(), seen_.end(), c) != seen_.end(); }

    void grow(std::vector<Cell> untried) {
        while (!untried.empty()) {
            const Cell c = untried.back();
            untried.pop_back();
            poly_.push_back(c);
            if (static_cast<int>(poly_.size()) == area_) {
                emit_(CellSet(poly_));
            } else {
                std::vector<Cell> next = untried;
                std::size_t added = 0;
                for (const Cell& n : neighbors(c)) {
                    if (allowed(n) && !is_seen(n)) {
                        seen_.push_back(n);
                        next.push_back(n);
                        ++added;
                    }
                }
                grow(std::move(next));
                seen_.resize(seen_.size() - added);
            }
            poly_.pop_back();
        }
    }

    int area_;
    Emit& emit_;
    std::vector<Cell> poly_;
    std::vector<Cell> seen_;
};

}  // namespace detail

/// Calls `emit(const CellSet&)` once for every figure with `area` cells whose
/// columns have at most two runs separated by at most `max_gap` empty cells
/// and whose neighbouring columns share an edge.  Output order is
/// deterministic.
template <class Emit>
void generate(int area, int max_gap, Emit&& emit) {
    detail::check_oracle_area(area);
    if (max_gap < 0) throw std::invalid_argument("max_gap must be non-negative");
    detail::ColumnGenerator<std::remove_reference_t<Emit>> gen(area, max_gap, emit);
    gen.run();
}

/// All fixed polyhexes (connected, any column structure) with `area` cells.
template <class Emit>
void generate_polyominoes(int area, Emit&& emit) {
    detail::check_oracle_area(area);
    detail::Redelmeier<std::remove_reference_t<Emit>> gen(area, emit);
    gen.run();
}

/// Visits every candidate figure that can belong to `id` at this area.
template <class Emit>
void for_each_candidate(const ClassId& id, int area, Emit&& emit) {
    switch (id.kind) {
        case ClassKind::polyomino:
        case ClassKind::rightward_semidirected:
        case ClassKind::leftward_semidirected:
            generate_polyominoes(area, emit);
            break;
        case ClassKind::column_convex:
            generate(area, 0, emit);
            break;
        default:
            generate(area, std::max(id.level, 0), emit);
    }
}

template <class Visit>
void for_each_member(const ClassId& id, int area, Visit&& visit) {
    for_each_candidate(id, area, [&](const CellSet& s) {
        if (is_member(id, s)) visit(s);
    });
}

inline std::uint64_t count_class(const ClassId& id, int area) {
    std::uint64_t n = 0;
    for_each_member(id, area, [&](const CellSet&) { ++n; });
    return n;
}

inline std::vector<CellSet> collect_class(const ClassId& id, int area) {
    std::vector<CellSet> out;
    for_each_member(id, area, [&](const CellSet& s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    return out;
}

/// Writes members one per line in the `to_line` format.
inline std::uint64_t emit_figures(const ClassId& id, int area, std::ostream& out) {
    std::uint64_t n = 0;
    for_each_member(id, area, [&](const CellSet& s) {
        out << to_line(s) << '\n';
        ++n;
    });
    return n;
}

}  // namespace cheesy
