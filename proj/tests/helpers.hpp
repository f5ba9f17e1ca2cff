#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "paretosum/generators.hpp"
#include "paretosum/pareto_set.hpp"

namespace test {

using paretosum::ParetoSet;
using paretosum::Point;

inline std::vector<Point> pts(std::initializer_list<Point> list) { return list; }

/// Random staircase with n points and small coordinates, so duplicate cells
/// and ties show up often.
inline ParetoSet small_staircase(std::mt19937_64& rng, std::size_t n, std::int64_t range = 40) {
    std::uniform_int_distribution<std::int64_t> coord(0, range);
    std::vector<std::int64_t> xs, ys;
    while (xs.size() < n) {
        auto v = coord(rng);
        if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);
    }
    while (ys.size() < n) {
        auto v = coord(rng);
        if (std::find(ys.begin(), ys.end(), v) == ys.end()) ys.push_back(v);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.rbegin(), ys.rend());
    std::vector<Point> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = {xs[i], ys[i]};
    return ParetoSet(std::move(out));
}

inline constexpr paretosum::Family kFamilies[] = {
    paretosum::Family::naive, paretosum::Family::incremental, paretosum::Family::sorted,
    paretosum::Family::curve, paretosum::Family::linear};

}  // namespace test
