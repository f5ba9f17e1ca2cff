#pragma once

#include <cstddef>
#include <limits>
#include <optional>

#include "paretosum/counters.hpp"
#include "paretosum/pareto_set.hpp"

namespace paretosum {

/// Query rectangle [x_min, x_max) x [y_min, y_max). The optional bounds
/// default to unbounded.
struct SearchRange {
    Coord x_min = std::numeric_limits<Coord>::min();
    Coord y_max = std::numeric_limits<Coord>::max();
    std::optional<Coord> x_max;
    std::optional<Coord> y_min;

    /// The range that follows an emitted point p: [p.x, inf) x (-inf, p.y).
    static SearchRange after(const Point& p) { return {p.x, p.y, std::nullopt, std::nullopt}; }

    // The two constraints the sweep walks along.
    bool open_side(const Point& p) const { return p.x >= x_min && p.y < y_max; }
    bool closed_side(const Point& p) const {
        return (!x_max || p.x < *x_max) && (!y_min || p.y >= *y_min);
    }
    bool contains(const Point& p) const { return open_side(p) && closed_side(p); }
};

/// Per-column search positions (zero-based rows). Rows [f_x, l_x] satisfy
/// the x bounds and rows [f_y, l_y] the y bounds; an absent value means the
/// corresponding set is empty.
struct ColumnProbe {
    std::optional<std::size_t> f_x, l_x, f_y, l_y;

    /// max(f_x, f_y) when the two row intervals intersect.
    std::optional<std::size_t> first_row() const;
};

/// A matrix cell returned by a range-minimum oracle.
struct RangeHit {
    Point point;
    std::size_t row = 0;
    std::size_t col = 0;
};

struct SweepOptions {
    std::size_t delta = 1;  // skip threshold; 1 disables skipping
};

/// ceil(sqrt(max(rows, cols))), at least 1.
std::size_t default_delta(std::size_t rows, std::size_t cols);

/// Four binary searches for column j.
ColumnProbe probe_column(const MinkowskiView& m, std::size_t j, const SearchRange& r);

/// Lexicographic minimum in r via a ColumnProbe per column. O(n log n).
std::optional<RangeHit> range_min_binary(const MinkowskiView& m, const SearchRange& r,
                                         Counters* counters = nullptr);

/// Lexicographic minimum in r via one monotone staircase sweep from the
/// bottom-left cell. O(rows + cols), plus optional delta skipping.
std::optional<RangeHit> range_min_sweep(const MinkowskiView& m, const SearchRange& r,
                                        const SweepOptions& opts = {},
                                        Counters* counters = nullptr);

enum class Oracle { binary, sweep };

/// Discovers the Pareto sum one point at a time in increasing x, each via a
/// range-minimum query. O(n + k) space with a streaming sink.
std::size_t successive(const ParetoSet& a, const ParetoSet& b, Oracle oracle,
                       const SweepOptions& opts, PointSink& sink, Counters& counters);

/// Runs the sweep-based successive search for at most max(|a|, |b|) oracle
/// calls; falls back to sort & compare if that budget does not finish.
/// Returns the emitted count; `completed_early` reports which phase answered.
std::size_t hybrid_sss_sc(const ParetoSet& a, const ParetoSet& b, const SweepOptions& opts,
                          PointSink& sink, Counters& counters, bool* completed_early = nullptr);

}  // namespace paretosum
