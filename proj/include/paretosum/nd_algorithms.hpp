#pragma once

#include <cstddef>
#include <vector>

#include "paretosum/counters.hpp"
#include "paretosum/pareto_set.hpp"
#include "paretosum/spnd_tree.hpp"

namespace paretosum {

/// Offers every matrix cell to one Pareto tree, seeded with the first and
/// last cell or, with `seed_with_hull`, with the convex-hull subset.
std::size_t pareto_tree_filter(const ParetoSet& a, const ParetoSet& b, bool seed_with_hull, PointSink& sink,
                               Counters& counters, const SpndConfig& config = {});

/// Sequential NonDomDC: folds the columns one by one into a single tree
/// holding the running frontier P_j. `frontier_peak` records max |P_j|.
std::size_t nondomdc_sequential(const ParetoSet& a, const ParetoSet& b, PointSink& sink, Counters& counters,
                                const SpndConfig& config = {});

/// Doubling NonDomDC: merges column frontiers pairwise, merge-sort style.
/// `frontier_peak` records the largest total frontier size over all levels;
/// per-level totals are appended to `level_sizes` when given.
std::size_t nondomdc_doubling(const ParetoSet& a, const ParetoSet& b, PointSink& sink, Counters& counters,
                              std::vector<std::size_t>* level_sizes = nullptr, const SpndConfig& config = {});

}  // namespace paretosum
