#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "paretosum/pareto_set.hpp"

namespace paretosum {

/// Default ceiling on input entries; keeps every lifted coordinate inside
/// the point bound for moderate n.
inline constexpr std::int64_t kMinplusEntryLimit = std::int64_t{1} << 20;

struct ConvInstance {
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;
    std::int64_t entry_limit = kMinplusEntryLimit;

    /// max(a) + max(b) + 1.
    std::int64_t U() const;
    /// Throws std::invalid_argument unless both arrays have the same
    /// length n >= 1, entries lie in [0, entry_limit] and the lifted
    /// coordinates stay below 2^31.
    void check() const;
};

/// A = {(i, a[i] + (n - i) U)} and B likewise for b.
std::pair<ParetoSet, ParetoSet> lift(const ConvInstance& inst);

/// Any Pareto-sum routine: (a, b) -> C.
using ParetoSumFn = std::function<ParetoSet(const ParetoSet&, const ParetoSet&)>;

/// Solves the convolution through `pareto_sum` on the lifted sets.
/// Throws std::logic_error if C misses some x in [0, n).
std::vector<std::int64_t> minplus_via_pareto(const ConvInstance& inst, const ParetoSumFn& pareto_sum,
                                             std::size_t* c_size = nullptr);

/// c[x] = min over i + j = x of a[i] + b[j], for x in [0, n).
std::vector<std::int64_t> minplus_naive(const ConvInstance& inst);

}  // namespace paretosum
