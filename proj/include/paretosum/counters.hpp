#pragma once

#include <algorithm>
#include <cstdint>

namespace paretosum {

/// Per-run instrumentation. Fields an algorithm does not use stay zero.
struct Counters {
    std::uint64_t checks = 0;         // candidate cells put through a dominance test
    std::uint64_t oracle_calls = 0;   // range-minimum queries
    std::uint64_t cells = 0;          // matrix cells evaluated
    std::uint64_t heap_peak = 0;      // largest heap / buffer held
    std::uint64_t frontier_peak = 0;  // largest intermediate frontier (P)
    std::uint64_t rebuilds = 0;       // Pareto-tree rebuilds
    std::uint64_t delta_jumps = 0;    // successful skip-ahead moves in the sweep
    std::uint64_t nodes_peak = 0;     // Pareto-tree node count high-water mark

    void note_heap(std::uint64_t size) { heap_peak = std::max(heap_peak, size); }
    void note_frontier(std::uint64_t size) { frontier_peak = std::max(frontier_peak, size); }

    friend bool operator==(const Counters&, const Counters&) = default;
};

}  // namespace paretosum
