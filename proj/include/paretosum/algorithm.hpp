#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "paretosum/counters.hpp"
#include "paretosum/pareto_set.hpp"

namespace paretosum {

enum class Algorithm { bf, bs, pbs, sc, ks, sbs, sss, hybrid, ptree, snd, dnd };

inline constexpr std::array kAllAlgorithms = {
    Algorithm::bf,  Algorithm::bs,     Algorithm::pbs,   Algorithm::sc,  Algorithm::ks,  Algorithm::sbs,
    Algorithm::sss, Algorithm::hybrid, Algorithm::ptree, Algorithm::snd, Algorithm::dnd,
};

std::string_view to_string(Algorithm algo);
/// Throws std::invalid_argument on unknown names.
Algorithm parse_algorithm(std::string_view name);

struct RunOptions {
    /// Sweep skip threshold for sss and hybrid; 0 selects ceil(sqrt(n)).
    std::size_t delta = 0;
    /// Output size handed to ks. When absent, ks first runs sc to learn it.
    std::optional<std::size_t> k_hint;
};

/// Runs one algorithm, streaming the Pareto sum into `sink`. Returns k.
std::size_t run_algorithm(Algorithm algo, const ParetoSet& a, const ParetoSet& b, const RunOptions& opts,
                          PointSink& sink, Counters& counters);

/// Convenience wrapper collecting the output.
ParetoSet pareto_sum(Algorithm algo, const ParetoSet& a, const ParetoSet& b, const RunOptions& opts = {});

}  // namespace paretosum
