#include "paretosum/minplus.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace paretosum {

std::int64_t ConvInstance::U() const {
    return *std::max_element(a.begin(), a.end()) + *std::max_element(b.begin(), b.end()) + 1;
}

void ConvInstance::check() const {
    if (a.empty() || a.size() != b.size()) {
        throw std::invalid_argument("convolution arrays must be non-empty and of equal length (got " +
                                    std::to_string(a.size()) + " and " + std::to_string(b.size()) + ")");
    }
    auto in_range = [&](std::int64_t v) { return 0 <= v && v <= entry_limit; };
    if (!std::all_of(a.begin(), a.end(), in_range) || !std::all_of(b.begin(), b.end(), in_range)) {
        throw std::invalid_argument("convolution entries must lie in [0, " + std::to_string(entry_limit) + "]");
    }
    // Largest lifted coordinate is max(entry) + n * U.
    const auto n = static_cast<__int128>(a.size());
    const __int128 top = n * U() + U();
    if (top >= static_cast<__int128>(kCoordLimit)) {
        throw std::invalid_argument("lifted coordinates would exceed 2^31 for n=" + std::to_string(a.size()) +
                                    " and U=" + std::to_string(U()));
    }
}

std::pair<ParetoSet, ParetoSet> lift(const ConvInstance& inst) {
    inst.check();
    const auto n = static_cast<std::int64_t>(inst.a.size());
    const std::int64_t u = inst.U();
    auto lift_one = [&](const std::vector<std::int64_t>& v) {
        std::vector<Point> pts(v.size());
        for (std::int64_t i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = {i, v[static_cast<std::size_t>(i)] + (n - i) * u};
        return ParetoSet(std::move(pts));
    };
    return {lift_one(inst.a), lift_one(inst.b)};
}

std::vector<std::int64_t> minplus_via_pareto(const ConvInstance& inst, const ParetoSumFn& pareto_sum,
                                             std::size_t* c_size) {
    const auto [A, B] = lift(inst);
    const ParetoSet C = pareto_sum(A, B);
    if (c_size) *c_size = C.size();
    const auto n = static_cast<std::int64_t>(inst.a.size());
    const std::int64_t u = inst.U();
    constexpr auto kMissing = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> c(inst.a.size(), kMissing);
    for (const auto& p : C) {
        if (p.x >= 0 && p.x < n) c[static_cast<std::size_t>(p.x)] = p.y - (2 * n - p.x) * u;
    }
    if (auto gap = std::find(c.begin(), c.end(), kMissing); gap != c.end()) {
        throw std::logic_error("Pareto sum of the lifted sets has no point at x=" +
                               std::to_string(gap - c.begin()));
    }
    return c;
}

std::vector<std::int64_t> minplus_naive(const ConvInstance& inst) {
    const std::size_t n = inst.a.size();
    std::vector<std::int64_t> c(n, std::numeric_limits<std::int64_t>::max());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) c[i + j] = std::min(c[i + j], inst.a[i] + inst.b[j]);
    }
    return c;
}

}  // namespace paretosum
