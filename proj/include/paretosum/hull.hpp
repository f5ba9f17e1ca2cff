#pragma once

#include <cstddef>
#include <vector>

#include "paretosum/pareto_set.hpp"

namespace paretosum {

/// Lower-left convex chain of a sorted Pareto set, first point to last.
/// Edge slopes are strictly increasing; `ranks[k]` is the index of
/// `vertices[k]` in the source set.
struct ConvexChain {
    std::vector<Point> vertices;
    std::vector<std::size_t> ranks;

    std::size_t size() const { return vertices.size(); }
};

/// Output of the chain Minkowski sum: each vertex with the (row, column)
/// ranks of the inputs that produced it, so point == a[row] + b[col].
struct SeedPoint {
    Point point;
    std::size_t row = 0;
    std::size_t col = 0;

    friend bool operator==(const SeedPoint&, const SeedPoint&) = default;
};

/// Andrew's monotone chain restricted to the lower hull. O(|s|).
ConvexChain lower_hull(const ParetoSet& s);

/// True iff every point of s is a strict vertex of its lower hull.
bool is_convex(const ParetoSet& s);

/// Lower-left chain of p ⊕ q by merging edge vectors in slope order.
/// Collinear vertices from equal-slope edges are kept.
std::vector<SeedPoint> convex_minkowski(const ConvexChain& p, const ConvexChain& q);

/// Subset C' of the Pareto sum from the hull chains of a and b, sorted, with
/// cell provenance. Equals the full Pareto sum when both inputs are convex.
std::vector<SeedPoint> convex_seed(const ParetoSet& a, const ParetoSet& b);

}  // namespace paretosum
