#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paretosum/algorithm.hpp"
#include "paretosum/generators.hpp"

namespace paretosum {

/// One CSV row. Summary rows carry no seed and hold per-field medians.
struct RunRecord {
    std::string algo;
    std::string gen;
    std::string dist;
    std::size_t n_a = 0;
    std::size_t n_b = 0;
    std::optional<std::uint64_t> seed;
    std::size_t k = 0;
    std::uint64_t time_ns = 0;
    std::uint64_t checks = 0;
    std::uint64_t oracle_calls = 0;
    std::uint64_t cells = 0;
    std::uint64_t heap_peak = 0;
    std::uint64_t frontier_peak = 0;
    std::uint64_t rebuilds = 0;
    bool verified = false;

    void take_counters(const Counters& c);
    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "algo,gen,dist,n_a,n_b,seed,k,time_ns,checks,oracle_calls,cells,heap_peak,frontier_peak,rebuilds,verified";

std::string to_csv(const RunRecord& r);
/// Throws std::invalid_argument on malformed rows.
RunRecord parse_csv(std::string_view row);

/// Result of timing one algorithm on one instance.
struct TimedRun {
    RunRecord record;
    /// Time spent by sc computing the ks output-size hint, when it ran.
    std::optional<std::uint64_t> ks_prep_ns;
};

/// Times `run_algorithm` alone (no I/O). With `verify`, compares the output
/// with the reference oracle and throws std::runtime_error on mismatch.
/// The sink, when given, receives the points as they are produced.
TimedRun timed_run(Algorithm algo, const ParetoSet& a, const ParetoSet& b, const RunOptions& opts, bool verify,
                   PointSink* sink = nullptr);

struct BenchMatrix {
    std::vector<Algorithm> algorithms;
    std::vector<std::pair<Family, Distribution>> generators;
    std::vector<std::size_t> sizes;
    std::vector<std::uint64_t> seeds;
    std::int64_t scale = 1'000'000;
    RunOptions options;
    bool verify = false;
    bool warmup = true;
};

/// Writes one row per (algorithm, generator, size, seed) and a median row
/// after each seed group, flushing every row. Stops between runs once
/// `stop` is set. Returns the number of rows written.
std::size_t run_bench(const BenchMatrix& matrix, std::ostream& csv, bool write_header,
                      const std::atomic<bool>* stop = nullptr);

/// Per-field median of a seed group; seed is cleared, verified is the
/// conjunction.
RunRecord median_record(const std::vector<RunRecord>& group);

}  // namespace paretosum
