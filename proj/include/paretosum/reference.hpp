#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "paretosum/pareto_set.hpp"
#include "paretosum/successive.hpp"

namespace paretosum {

/// Brute-force oracles. They materialize the whole Minkowski matrix and are
/// guarded against instances with more than this many cells.
inline constexpr std::size_t kReferenceCellLimit = 10'000'000;

struct ReferenceResult {
    ParetoSet points;              // distinct non-dominated values
    std::size_t nondominated_cells = 0;  // cells no other cell strictly dominates
};

/// Throws std::length_error when |a|·|b| exceeds kReferenceCellLimit.
ReferenceResult pareto_sum_reference(const ParetoSet& a, const ParetoSet& b);

/// Full scan for the lexicographically smallest cell inside r.
std::optional<RangeHit> range_min_reference(const MinkowskiView& m, const SearchRange& r);

/// Canonical instances shared by tests, the CLI and the Python package.
struct Fixture {
    std::string name;
    ParetoSet a;
    ParetoSet b;
};

/// The 10x10 example matrix. a is its first row and b its first column
/// translated so that b[0] is the origin; a[i] + b[j] reproduces every
/// printed cell.
Fixture figure_fixture();

/// a = b = {(0,3),(1,1),(3,0)}: a convex 3x3 instance.
Fixture small_fixture();

}  // namespace paretosum
