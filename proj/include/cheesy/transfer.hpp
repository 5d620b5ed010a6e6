#pragma once

// Column-by-column counting of level-m polyominoes with cheesy blocks.
//
// A figure is built left to right.  After each column it is either a member
// (class U: it splits into consecutive birds) or incomplete (class V: not a
// member, but one more column on the right makes it one).  Which class the
// extended figure falls into depends only on the class of the old figure, the
// shapes of the last two columns and which of their components touch, so the
// dynamic program runs over (area, last-column shape, class).

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cheesy/functional_equations.hpp"
#include "cheesy/hexgrid.hpp"
#include "cheesy/polynomial.hpp"
#include "cheesy/series.hpp"

namespace cheesy {

enum class FigureClass { member, incomplete };

struct TransferState {
    ColumnShape shape;
    FigureClass cls = FigureClass::member;

    friend bool operator==(const TransferState&, const TransferState&) = default;
};

/// Which components of two neighbouring columns share an edge with the other
/// column.  Index 0 is the lower component, 1 the upper one (absent when the
/// column has no gap).
struct ContactProfile {
    std::array<bool, 2> old_touching_new{false, false};
    std::array<bool, 2> new_touching_old{false, false};

    bool any() const noexcept { return new_touching_old[0] || new_touching_old[1]; }
    friend bool operator==(const ContactProfile&, const ContactProfile&) = default;
};

struct Placement {
    int offset = 0;  // bottom row of the new column minus bottom row of the old one
    ContactProfile contact;
};

enum class Transition { member, incomplete, invalid };

namespace detail {

inline ContactProfile contact_at(const ColumnShape& old, const ColumnShape& next, int offset) {
    const std::array<Run, 2> a{Run{0, old.lower}, Run{old.lower + old.gap, old.upper}};
    const std::array<Run, 2> b{Run{offset, next.lower}, Run{offset + next.lower + next.gap, next.upper}};
    const std::size_t na = old.has_gap() ? 2 : 1;
    const std::size_t nb = next.has_gap() ? 2 : 1;
    ContactProfile p;
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            if (touches(a[i], b[j])) {
                p.old_touching_new[i] = true;
                p.new_touching_old[j] = true;
            }
        }
    }
    return p;
}

// Offsets outside this window leave the columns without a shared edge.
inline std::pair<int, int> offset_window(const ColumnShape& old, const ColumnShape& next) {
    return {-next.height(), old.height()};
}

}  // namespace detail

/// Every offset of `next` right of `old` at which the two columns share at
/// least one edge, with the contact profile at that offset.
inline std::vector<Placement> placements(const ColumnShape& old, const ColumnShape& next) {
    std::vector<Placement> out;
    const auto [lo, hi] = detail::offset_window(old, next);
    for (int off = lo; off <= hi; ++off) {
        ContactProfile p = detail::contact_at(old, next, off);
        if (p.any()) out.push_back({off, p});
    }
    return out;
}

// The class rules.
//
// From a member: the new column either continues the last bird's right wing
// or starts a new bird, and both need every new component to touch the old
// column.  A new holed column with only one attached component can still be
// the first column of a new bird's left wing; its free component lies wholly
// above or below the old column and waits for the next column, so the figure
// becomes incomplete.
//
// From an incomplete figure: the old column sits in a pending left wing, so
// each of its components must touch the new column.  A gap-free new column
// closes the bird (it corks the old hole); a holed one extends the wing, and
// its components need not touch the old column.
inline Transition classify_transition(FigureClass from, const ContactProfile& contact, const ColumnShape& next) {
    const bool two = next.has_gap();
    if (from == FigureClass::member) {
        const bool lower = contact.new_touching_old[0];
        const bool upper = two && contact.new_touching_old[1];
        if (lower && (upper || !two)) return Transition::member;
        if (two && lower != upper) return Transition::incomplete;
        return Transition::invalid;
    }
    // from incomplete: the old column always has two components
    if (!contact.old_touching_new[0] || !contact.old_touching_new[1]) return Transition::invalid;
    return two ? Transition::incomplete : Transition::member;
}

/// Exact counts indexed by area; entry 0 is area 0 and always zero.
struct CountTable {
    std::vector<BigInt> by_area;

    int max_area() const noexcept { return static_cast<int>(by_area.size()) - 1; }
    const BigInt& operator[](int area) const { return by_area.at(static_cast<std::size_t>(area)); }
};

enum class TransferMode {
    blocks,  // polyominoes with cheesy blocks, plus incomplete figures
    cheesy,  // rightward-semidirected only: every new component touches the old column
};

/// State table of one transfer run.
class TransferTable {
public:
    TransferTable(int level, int n_max, TransferMode mode) : level_(level), n_max_(n_max), mode_(mode) {
        if (level < 0) throw std::invalid_argument("level must be non-negative");
        if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
        build_shapes();
        run();
    }

    int level() const noexcept { return level_; }
    int n_max() const noexcept { return n_max_; }
    TransferMode mode() const noexcept { return mode_; }
    const std::vector<ColumnShape>& shapes() const noexcept { return shapes_; }

    const BigInt& count(int area, std::size_t shape, FigureClass cls) const {
        return table(cls).at(static_cast<std::size_t>(area)).at(shape);
    }

    /// sum over states at `area` of class `cls` of weight(shape) * count.
    BigInt sum(int area, FigureClass cls, const std::function<long(const ColumnShape&)>& weight) const {
        BigInt acc = 0;
        const auto& row = table(cls).at(static_cast<std::size_t>(area));
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] == 0) continue;
            const long w = weight(shapes_[i]);
            if (w != 0) acc += row[i] * w;
        }
        return acc;
    }

    CountTable totals(FigureClass cls) const {
        CountTable t;
        t.by_area.assign(static_cast<std::size_t>(n_max_) + 1, 0);
        for (int a = 1; a <= n_max_; ++a) t.by_area[static_cast<std::size_t>(a)] = sum(a, cls, [](const ColumnShape&) { return 1L; });
        return t;
    }

    PowerSeries series(FigureClass cls, const std::function<long(const ColumnShape&)>& weight) const {
        PowerSeries s(n_max_);
        for (int a = 1; a <= n_max_; ++a) s[static_cast<std::size_t>(a)] = sum(a, cls, weight);
        return s;
    }

private:
    struct Weights {
        std::uint16_t to_member_from_member = 0;
        std::uint16_t to_incomplete_from_member = 0;
        std::uint16_t to_member_from_incomplete = 0;
        std::uint16_t to_incomplete_from_incomplete = 0;
    };

    using Table = std::vector<std::vector<BigInt>>;

    const Table& table(FigureClass cls) const { return cls == FigureClass::member ? member_ : incomplete_; }

    void build_shapes() {
        // Sorted by cell count so that "cells <= k" is a prefix.
        for (int c = 1; c <= n_max_; ++c) {
            shapes_.push_back({c, 0, 0});
            for (int g = 1; g <= level_; ++g) {
                for (int lo = 1; lo < c; ++lo) shapes_.push_back({lo, g, c - lo});
            }
            prefix_end_.push_back(shapes_.size());
        }
    }

    std::size_t shapes_with_cells_at_most(int cells) const {
        if (cells <= 0) return 0;
        return prefix_end_.at(static_cast<std::size_t>(std::min(cells, n_max_) - 1));
    }

    const std::vector<Weights>& weights_for(std::size_t old_idx) {
        auto& w = weights_[old_idx];
        if (!w.empty()) return w;
        const ColumnShape& old = shapes_[old_idx];
        const std::size_t count = shapes_with_cells_at_most(n_max_ - old.cells());
        w.resize(count);
        for (std::size_t j = 0; j < count; ++j) {
            const ColumnShape& next = shapes_[j];
            Weights& out = w[j];
            const auto [lo, hi] = detail::offset_window(old, next);
            for (int off = lo; off <= hi; ++off) {
                const ContactProfile p = detail::contact_at(old, next, off);
                if (!p.any()) continue;
                if (mode_ == TransferMode::cheesy) {
                    const bool all = p.new_touching_old[0] && (!next.has_gap() || p.new_touching_old[1]);
                    if (all) ++out.to_member_from_member;
                    continue;
                }
                switch (classify_transition(FigureClass::member, p, next)) {
                    case Transition::member: ++out.to_member_from_member; break;
                    case Transition::incomplete: ++out.to_incomplete_from_member; break;
                    case Transition::invalid: break;
                }
                if (old.has_gap()) {
                    switch (classify_transition(FigureClass::incomplete, p, next)) {
                        case Transition::member: ++out.to_member_from_incomplete; break;
                        case Transition::incomplete: ++out.to_incomplete_from_incomplete; break;
                        case Transition::invalid: break;
                    }
                }
            }
        }
        return w;
    }

    void run() {
        const std::size_t rows = static_cast<std::size_t>(n_max_) + 1;
        member_.assign(rows, {});
        incomplete_.assign(rows, {});
        for (int a = 1; a <= n_max_; ++a) {
            const std::size_t width = shapes_with_cells_at_most(a);
            member_[static_cast<std::size_t>(a)].assign(width, 0);
            incomplete_[static_cast<std::size_t>(a)].assign(width, 0);
        }
        weights_.assign(shapes_.size(), {});

        // One-column figures: gap-free columns are birds, holed ones wait for
        // their cork.
        for (std::size_t i = 0; i < shapes_.size(); ++i) {
            const ColumnShape& s = shapes_[i];
            auto& target = s.has_gap() ? incomplete_ : member_;
            if (s.has_gap() && mode_ == TransferMode::cheesy) continue;
            target[static_cast<std::size_t>(s.cells())][i] += 1;
        }

        for (int a = 1; a < n_max_; ++a) {
            const std::size_t width = shapes_with_cells_at_most(a);
            for (std::size_t i = 0; i < width; ++i) {
                const BigInt& from_member = member_[static_cast<std::size_t>(a)][i];
                const BigInt& from_incomplete = incomplete_[static_cast<std::size_t>(a)][i];
                if (from_member == 0 && from_incomplete == 0) continue;
                const auto& w = weights_for(i);
                const std::size_t reach = shapes_with_cells_at_most(n_max_ - a);
                for (std::size_t j = 0; j < reach; ++j) {
                    const Weights& k = w[j];
                    const auto dest = static_cast<std::size_t>(a + shapes_[j].cells());
                    addmul(member_[dest][j], from_member, k.to_member_from_member);
                    addmul(member_[dest][j], from_incomplete, k.to_member_from_incomplete);
                    addmul(incomplete_[dest][j], from_member, k.to_incomplete_from_member);
                    addmul(incomplete_[dest][j], from_incomplete, k.to_incomplete_from_incomplete);
                }
            }
        }
        weights_.clear();
        weights_.shrink_to_fit();
    }

    static void addmul(BigInt& target, const BigInt& value, unsigned long k) {
        if (k != 0 && value != 0) mpz_addmul_ui(target.get_mpz_t(), value.get_mpz_t(), k);
    }

    int level_;
    int n_max_;
    TransferMode mode_;
    std::vector<ColumnShape> shapes_;
    std::vector<std::size_t> prefix_end_;
    std::vector<std::vector<Weights>> weights_;
    Table member_;
    Table incomplete_;
};

/// a_n for level-m polyominoes with cheesy blocks, n = 0..n_max.  Level 0
/// gives column-convex polyominoes.
inline CountTable count_blocks(int level, int n_max) {
    return TransferTable(level, n_max, TransferMode::blocks).totals(FigureClass::member);
}

/// Incomplete figures (class V) by area.
inline CountTable count_incomplete(int level, int n_max) {
    return TransferTable(level, n_max, TransferMode::blocks).totals(FigureClass::incomplete);
}

/// Level-m cheesy polyominoes by area.
inline CountTable count_cheesy(int level, int n_max) {
    return TransferTable(level, n_max, TransferMode::cheesy).totals(FigureClass::member);
}

/// Named generating-function specialisations extracted from a transfer run.
struct TransferStatistics {
    int level = 0;
    std::vector<std::string> names;
    std::vector<PowerSeries> series;

    const PowerSeries& operator[](const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == name) return series[i];
        }
        throw std::out_of_range("no statistic named '" + name + "'");
    }

    std::vector<PowerSeries> select(const std::vector<std::string>& wanted) const {
        std::vector<PowerSeries> out;
        for (const auto& w : wanted) out.push_back((*this)[w]);
        return out;
    }
};

/// Level 1 and 2 statistics.  Always present: E1 (members), F1 (members
/// weighted by last-column height), G (incomplete figures).  At level 2 also,
/// with "holed" meaning the last column has a hole of the stated size:
///   A1, B0, B1   members, hole size <= 1: count, height 1, height-weighted
///   C1, D1       members, hole 2: count, height-weighted
///   E0, F0       members, hole 2, upper / lower component of height 1
///   G1, H0, I0   incomplete, hole 1: count, upper / lower component height 1
///   J1, K0, L0   incomplete, hole 2: count, upper / lower component height 1
inline TransferStatistics statistics_series(int level, int n_max) {
    if (level != 1 && level != 2) throw std::invalid_argument("statistics are defined for levels 1 and 2 only");
    const TransferTable t(level, n_max, TransferMode::blocks);
    const auto M = FigureClass::member;
    const auto V = FigureClass::incomplete;
    using S = const ColumnShape&;

    TransferStatistics st;
    st.level = level;
    auto add = [&](std::string name, FigureClass cls, std::function<long(S)> w) {
        st.names.push_back(std::move(name));
        st.series.push_back(t.series(cls, w));
    };
    add("E1", M, [](S) { return 1L; });
    add("F1", M, [](S s) { return static_cast<long>(s.height()); });
    add("G", V, [](S) { return 1L; });
    if (level == 2) {
        add("A1", M, [](S s) { return s.gap <= 1 ? 1L : 0L; });
        add("B0", M, [](S s) { return s.gap <= 1 && s.height() == 1 ? 1L : 0L; });
        add("B1", M, [](S s) { return s.gap <= 1 ? static_cast<long>(s.height()) : 0L; });
        add("C1", M, [](S s) { return s.gap == 2 ? 1L : 0L; });
        add("D1", M, [](S s) { return s.gap == 2 ? static_cast<long>(s.height()) : 0L; });
        add("E0", M, [](S s) { return s.gap == 2 && s.upper == 1 ? 1L : 0L; });
        add("F0", M, [](S s) { return s.gap == 2 && s.lower == 1 ? 1L : 0L; });
        add("G1", V, [](S s) { return s.gap == 1 ? 1L : 0L; });
        add("H0", V, [](S s) { return s.gap == 1 && s.upper == 1 ? 1L : 0L; });
        add("I0", V, [](S s) { return s.gap == 1 && s.lower == 1 ? 1L : 0L; });
        add("J1", V, [](S s) { return s.gap == 2 ? 1L : 0L; });
        add("K0", V, [](S s) { return s.gap == 2 && s.upper == 1 ? 1L : 0L; });
        add("L0", V, [](S s) { return s.gap == 2 && s.lower == 1 ? 1L : 0L; });
    }
    return st;
}

/// The level-1 equations (members, height-weighted members, incomplete) as
/// series identities over the given statistics.
inline EquationReport check_level1_equations(const TransferStatistics& st, int n_max) {
    const EquationSystem sys = level1_system();
    return check_identities(sys, st.select(sys.unknowns), n_max);
}

inline EquationReport check_level1_equations(int n_max) {
    if (n_max < 5) throw std::invalid_argument("level-1 equation check needs n_max >= 5");
    return check_level1_equations(statistics_series(1, n_max), n_max);
}

inline EquationReport check_level2_equations(const TransferStatistics& st, int n_max) {
    const EquationSystem sys = level2_hole2_equations();
    return check_identities(sys, st.select(sys.unknowns), n_max);
}

inline EquationReport check_level2_equations(int n_max) {
    if (n_max < 6) throw std::invalid_argument("level-2 equation check needs n_max >= 6");
    return check_level2_equations(statistics_series(2, n_max), n_max);
}

/// Builds actual figures by replaying the transfer rules column by column;
/// returns the normalized figures of class `cls` with exactly `area` cells.
inline std::vector<CellSet> replay_figures(int level, int area, FigureClass cls) {
    if (area < 1) throw std::invalid_argument("area must be positive");
    std::vector<CellSet> out;
    std::vector<Column> cols;
    std::vector<ColumnShape> shapes;
    for (int c = 1; c <= area; ++c) {
        shapes.push_back({c, 0, 0});
        for (int g = 1; g <= level; ++g) {
            for (int lo = 1; lo < c; ++lo) shapes.push_back({lo, g, c - lo});
        }
    }
    std::function<void(int, int, const ColumnShape&, FigureClass)> extend = [&](int remaining, int base,
                                                                                 const ColumnShape& last,
                                                                                 FigureClass now) {
        if (remaining == 0) {
            if (now == cls) out.push_back(from_columns(cols));
            return;
        }
        for (const ColumnShape& next : shapes) {
            if (next.cells() > remaining) continue;
            for (const Placement& p : placements(last, next)) {
                const Transition t = classify_transition(now, p.contact, next);
                if (t == Transition::invalid) continue;
                cols.push_back({cols.back().x + 1, next.runs_at(base + p.offset)});
                extend(remaining - next.cells(), base + p.offset, next,
                       t == Transition::member ? FigureClass::member : FigureClass::incomplete);
                cols.pop_back();
            }
        }
    };
    for (const ColumnShape& first : shapes) {
        if (first.cells() > area) continue;
        cols.push_back({0, first.runs_at(0)});
        extend(area - first.cells(), 0, first, first.has_gap() ? FigureClass::incomplete : FigureClass::member);
        cols.pop_back();
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cheesy
