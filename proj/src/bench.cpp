#include "paretosum/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "paretosum/base_algorithms.hpp"
#include "paretosum/reference.hpp"

namespace paretosum {

namespace {

template <typename T>
T parse_number(std::string_view field, std::string_view name) {
    T value{};
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size()) {
        throw std::invalid_argument("CSV field " + std::string(name) + " is not a number: '" + std::string(field) +
                                    "'");
    }
    return value;
}

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count());
}

template <typename T>
T median_of(std::vector<T> v) {
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>((v.size() - 1) / 2);
    std::nth_element(v.begin(), mid, v.end());
    return *mid;
}

}  // namespace

void RunRecord::take_counters(const Counters& c) {
    checks = c.checks;
    oracle_calls = c.oracle_calls;
    cells = c.cells;
    heap_peak = c.heap_peak;
    frontier_peak = c.frontier_peak;
    rebuilds = c.rebuilds;
}

std::string to_csv(const RunRecord& r) {
    std::ostringstream os;
    os << r.algo << ',' << r.gen << ',' << r.dist << ',' << r.n_a << ',' << r.n_b << ',';
    if (r.seed) {
        os << *r.seed;
    } else {
        os << "median";
    }
    os << ',' << r.k << ',' << r.time_ns << ',' << r.checks << ',' << r.oracle_calls << ',' << r.cells << ','
       << r.heap_peak << ',' << r.frontier_peak << ',' << r.rebuilds << ',' << (r.verified ? 1 : 0);
    return os.str();
}

RunRecord parse_csv(std::string_view row) {
    std::vector<std::string_view> f;
    for (std::size_t start = 0;;) {
        const auto comma = row.find(',', start);
        f.push_back(row.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (f.size() != 15) {
        throw std::invalid_argument("CSV row has " + std::to_string(f.size()) + " fields, expected 15");
    }
    RunRecord r;
    r.algo = f[0];
    r.gen = f[1];
    r.dist = f[2];
    r.n_a = parse_number<std::size_t>(f[3], "n_a");
    r.n_b = parse_number<std::size_t>(f[4], "n_b");
    if (f[5] != "median") r.seed = parse_number<std::uint64_t>(f[5], "seed");
    r.k = parse_number<std::size_t>(f[6], "k");
    r.time_ns = parse_number<std::uint64_t>(f[7], "time_ns");
    r.checks = parse_number<std::uint64_t>(f[8], "checks");
    r.oracle_calls = parse_number<std::uint64_t>(f[9], "oracle_calls");
    r.cells = parse_number<std::uint64_t>(f[10], "cells");
    r.heap_peak = parse_number<std::uint64_t>(f[11], "heap_peak");
    r.frontier_peak = parse_number<std::uint64_t>(f[12], "frontier_peak");
    r.rebuilds = parse_number<std::uint64_t>(f[13], "rebuilds");
    if (f[14] != "0" && f[14] != "1") throw std::invalid_argument("CSV field verified must be 0 or 1");
    r.verified = f[14] == "1";
    return r;
}

TimedRun timed_run(Algorithm algo, const ParetoSet& a, const ParetoSet& b, const RunOptions& opts, bool verify,
                   PointSink* sink) {
    TimedRun out;
    RunOptions run_opts = opts;
    if (algo == Algorithm::ks && !run_opts.k_hint) {
        CountSink probe;
        Counters scratch;
        const auto start = std::chrono::steady_clock::now();
        run_opts.k_hint = sort_compare(a, b, probe, scratch);
        out.ks_prep_ns = elapsed_ns(start);
    }

    // Verification needs the points; buffer them alongside the caller's sink.
    class Tee final : public PointSink {
    public:
        Tee(PointSink* first, CollectSink* second) : first_(first), second_(second) {}
        void accept(const Point& p) override {
            if (first_) first_->accept(p);
            if (second_) second_->accept(p);
        }

    private:
        PointSink* first_;
        CollectSink* second_;
    };
    CollectSink collected;
    CountSink counted;
    Tee tee(sink ? sink : &counted, verify ? &collected : nullptr);

    Counters counters;
    const auto start = std::chrono::steady_clock::now();
    const std::size_t k = run_algorithm(algo, a, b, run_opts, tee, counters);
    const std::uint64_t ns = elapsed_ns(start);

    auto& r = out.record;
    r.algo = to_string(algo);
    r.n_a = a.size();
    r.n_b = b.size();
    r.k = k;
    r.time_ns = ns;
    r.take_counters(counters);
    if (verify) {
        const auto expected = pareto_sum_reference(a, b);
        if (collected.points() != expected.points.vec()) {
            throw std::runtime_error(std::string(to_string(algo)) + " disagrees with the reference oracle: k=" +
                                     std::to_string(k) + ", expected " + std::to_string(expected.points.size()));
        }
        r.verified = true;
    }
    return out;
}

RunRecord median_record(const std::vector<RunRecord>& group) {
    if (group.empty()) throw std::invalid_argument("median of an empty seed group");
    RunRecord m = group.front();
    m.seed.reset();
    auto field = [&](auto member) {
        using T = std::remove_cvref_t<decltype(group.front().*member)>;
        std::vector<T> v;
        v.reserve(group.size());
        for (const auto& r : group) v.push_back(r.*member);
        m.*member = median_of(std::move(v));
    };
    field(&RunRecord::n_a);
    field(&RunRecord::n_b);
    field(&RunRecord::k);
    field(&RunRecord::time_ns);
    field(&RunRecord::checks);
    field(&RunRecord::oracle_calls);
    field(&RunRecord::cells);
    field(&RunRecord::heap_peak);
    field(&RunRecord::frontier_peak);
    field(&RunRecord::rebuilds);
    m.verified = std::all_of(group.begin(), group.end(), [](const RunRecord& r) { return r.verified; });
    return m;
}

std::size_t run_bench(const BenchMatrix& matrix, std::ostream& csv, bool write_header,
                      const std::atomic<bool>* stop) {
    auto stopped = [&] { return stop && stop->load(); };
    std::size_t rows = 0;
    auto emit = [&](const RunRecord& r) {
        csv << to_csv(r) << '\n' << std::flush;
        ++rows;
    };
    if (write_header) csv << kCsvHeader << '\n' << std::flush;

    for (const auto& [family, dist] : matrix.generators) {
        for (const auto n : matrix.sizes) {
            std::vector<std::pair<ParetoSet, ParetoSet>> instances;
            instances.reserve(matrix.seeds.size());
            for (const auto seed : matrix.seeds) {
                GenSpec spec{family, dist, n, seed, matrix.scale, Role::a};
                instances.push_back(generate_pair(spec));
            }
            for (const auto algo : matrix.algorithms) {
                if (stopped()) return rows;
                if (matrix.warmup && !instances.empty()) {
                    timed_run(algo, instances.front().first, instances.front().second, matrix.options, false);
                }
                std::vector<RunRecord> group;
                for (std::size_t s = 0; s < matrix.seeds.size(); ++s) {
                    if (stopped()) return rows;
                    auto run = timed_run(algo, instances[s].first, instances[s].second, matrix.options,
                                         matrix.verify);
                    run.record.gen = to_string(family);
                    run.record.dist = to_string(dist);
                    run.record.seed = matrix.seeds[s];
                    emit(run.record);
                    group.push_back(std::move(run.record));
                }
                if (!group.empty()) emit(median_record(group));
            }
        }
    }
    return rows;
}

}  // namespace paretosum
