#include "paretosum/reference.hpp"

#include <algorithm>
#include <stdexcept>

namespace paretosum {

namespace {

void guard(std::size_t rows, std::size_t cols) {
    if (rows != 0 && cols > kReferenceCellLimit / rows) {
        throw std::length_error("reference oracle refuses " + std::to_string(rows) + "x" + std::to_string(cols) +
                                " cells (limit " + std::to_string(kReferenceCellLimit) + ")");
    }
}

}  // namespace

ReferenceResult pareto_sum_reference(const ParetoSet& a, const ParetoSet& b) {
    guard(a.size(), b.size());
    std::vector<Point> cells;
    cells.reserve(a.size() * b.size());
    for (const auto& p : a) {
        for (const auto& q : b) cells.push_back(p + q);
    }
    std::sort(cells.begin(), cells.end());
    auto front = filter_sorted(cells);
    // A cell is non-dominated exactly when its value survives the filter.
    std::size_t hits = 0;
    for (const auto& c : cells) hits += std::binary_search(front.begin(), front.end(), c) ? 1 : 0;
    return {ParetoSet::from_trusted(std::move(front)), hits};
}

std::optional<RangeHit> range_min_reference(const MinkowskiView& m, const SearchRange& r) {
    guard(m.rows(), m.cols());
    std::optional<RangeHit> best;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Point c = m.cell(i, j);
            if (r.contains(c) && (!best || c < best->point)) best = RangeHit{c, i, j};
        }
    }
    return best;
}

Fixture figure_fixture() {
    return {"grid10",
            ParetoSet{{1, 60}, {3, 58}, {5, 51}, {13, 50}, {14, 46}, {15, 43}, {21, 42}, {22, 38}, {24, 36}, {26, 34}},
            ParetoSet{{0, 0}, {3, -4}, {6, -6}, {9, -7}, {12, -10}, {15, -11}, {16, -12}, {20, -13}, {23, -15},
                      {27, -19}}};
}

Fixture small_fixture() {
    return {"small3", ParetoSet{{0, 3}, {1, 1}, {3, 0}}, ParetoSet{{0, 3}, {1, 1}, {3, 0}}};
}

}  // namespace paretosum
