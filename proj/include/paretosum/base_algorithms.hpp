#pragma once

#include <cstddef>
#include <optional>

#include "paretosum/counters.hpp"
#include "paretosum/pareto_set.hpp"

namespace paretosum {

// All algorithms take two valid Pareto sets, push the Pareto sum to the sink
// in strictly increasing lexicographic order and return its size k.

/// Pairwise comparison of every cell against every other cell. O((|a||b|)^2).
std::size_t brute_force(const ParetoSet& a, const ParetoSet& b, PointSink& sink, Counters& counters);

/// Per-column binary searches decide whether a cell is dominated.
std::size_t binary_search(const ParetoSet& a, const ParetoSet& b, PointSink& sink, Counters& counters);

/// Rows of cells in one column of the Minkowski matrix dominated by (or
/// equal to) some confirmed output point. Inclusive, zero-based.
struct DominatedInterval {
    std::size_t lo = 0;
    std::size_t hi = 0;

    std::size_t length() const { return hi - lo + 1; }
    bool contains(std::size_t row) const { return lo <= row && row <= hi; }
};

/// Binary search with pruning and priority order: seeds the output with the
/// hull-derived subset, keeps the longest dominated interval per column and
/// visits the seed's columns, then its rows, before all other cells.
std::size_t priority_binary_search(const ParetoSet& a, const ParetoSet& b, PointSink& sink,
                                   Counters& counters);

/// Heap-based k-way merge of the columns, filtering in sorted order. The
/// heap holds at most one cell per column.
std::size_t sort_compare(const ParetoSet& a, const ParetoSet& b, PointSink& sink, Counters& counters);

/// Kirkpatrick-Seidel style baseline on the fully materialized matrix. The
/// hint (expected output size) controls the initial partition into
/// x-disjoint buckets; a wrong hint costs time, never correctness.
std::size_t kirkpatrick_seidel(const ParetoSet& a, const ParetoSet& b, std::size_t k_hint,
                               PointSink& sink, Counters& counters);

}  // namespace paretosum
