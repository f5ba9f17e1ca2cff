// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <new>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "paretosum/algorithm.hpp"
#include "paretosum/bench.hpp"
#include "paretosum/generators.hpp"
#include "paretosum/minplus.hpp"
#include "paretosum/reference.hpp"
#include "paretosum/spnd_tree.hpp"
#include "paretosum/successive.hpp"

// Allocation accounting for the streaming criterion.
namespace alloc {
std::atomic<bool> tracking{false};
std::atomic<std::size_t> bytes{0};
std::atomic<std::size_t> count{0};
}  // namespace alloc

void* operator new(std::size_t size) {
    if (alloc::tracking.load(std::memory_order_relaxed)) {
        alloc::bytes += size;
        ++alloc::count;
    }
    if (void* p = std::malloc(size ? size : 1)) return p;
    throw std::bad_alloc();
}
void operator delete(void* p) noexcept { std::free(p); }
void operator delete(void* p, std::size_t) noexcept { std::free(p); }

namespace {

using namespace paretosum;
using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr std::size_t kOracleSeeds = 100;
constexpr std::size_t kOracleSizes[] = {1, 2, 3, 10, 50, 200};
constexpr double kFigureBudgetMs = 1.0;
constexpr std::size_t kFigureCells = 27;
constexpr std::size_t kFigureDistinct = 25;
constexpr std::size_t kMinplusSeeds = 100;
constexpr std::size_t kMinplusMaxN = 200;
constexpr std::size_t kOutputSizeN = 10'000;
constexpr std::size_t kOutputSizeFactor = 6;
constexpr std::size_t kOutputSizeSeeds = 3;
constexpr std::size_t kLinearMaxN = 200;
constexpr std::size_t kNaiveN = 1'000'000;
constexpr std::size_t kNaiveSeeds = 10;
constexpr std::size_t kNaiveMaxSurvivors = 40;
constexpr double kNaiveBudgetS = 10.0;
constexpr std::size_t kOrderingN = 2000;
constexpr std::size_t kOrderingSeeds = 5;
constexpr double kBfOverBs = 10.0;
constexpr std::size_t kLargeN = 10'000;
constexpr double kLargeBudgetS = 5.0;
constexpr std::size_t kScalingN = 10'000;
constexpr double kScalingMaxRatio = 3.0;
constexpr std::size_t kScalingSeeds = 5;
constexpr std::size_t kLinearRaceN = 2000;
constexpr std::size_t kStreamN = 10'000;
constexpr std::size_t kStreamCounterFactor = 4;      // counters <= c * n
constexpr std::size_t kStreamAllocBytesPerPoint = 64;  // allocation <= this * (n_a + n_b)
constexpr std::size_t kSpndOps = 10'000;
constexpr std::size_t kRebuildEvery = 520;

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail, Clock::time_point start) {
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%s; %.1f s)\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double seconds(const std::function<void()>& fn) {
    const auto start = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Median wall time of `algo` over instances, optionally after one discarded warm-up run.
double median_time(Algorithm algo, const std::vector<std::pair<ParetoSet, ParetoSet>>& instances,
                   std::size_t* k_out = nullptr, bool warmup = true) {
    RunOptions opts;
    if (warmup) timed_run(algo, instances.front().first, instances.front().second, opts, false);
    std::vector<double> times;
    std::vector<std::size_t> ks;
    for (const auto& [a, b] : instances) {
        const auto run = timed_run(algo, a, b, opts, false);
        times.push_back(static_cast<double>(run.record.time_ns) * 1e-9);
        ks.push_back(run.record.k);
    }
    std::sort(times.begin(), times.end());
    if (k_out) {
        std::sort(ks.begin(), ks.end());
        *k_out = ks[ks.size() / 2];
    }
    return times.size() % 2 ? times[times.size() / 2]
                            : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2.0;
}

std::vector<std::pair<ParetoSet, ParetoSet>> instances(Family f, Distribution d, std::size_t n, std::size_t seeds) {
    std::vector<std::pair<ParetoSet, ParetoSet>> out;
    for (std::uint64_t s = 1; s <= seeds; ++s) out.push_back(generate_pair({f, d, n, s}));
    return out;
}

void criterion_oracle_equivalence() {
    const auto start = Clock::now();
    std::size_t runs = 0, mismatches = 0;
    std::string first_bad;
    const Family families[] = {Family::naive, Family::incremental, Family::sorted, Family::curve, Family::linear};
    for (auto family : families) {
        for (auto n : kOracleSizes) {
            for (std::uint64_t seed = 1; seed <= kOracleSeeds; ++seed) {
                const auto [a, b] = generate_pair({family, Distribution::uniform, n, seed});
                const auto expected = pareto_sum_reference(a, b).points;
                for (auto algo : kAllAlgorithms) {
                    ++runs;
                    if (pareto_sum(algo, a, b) != expected) {
                        ++mismatches;
                        if (first_bad.empty()) {
                            first_bad = std::string(to_string(algo)) + "/" + std::string(to_string(family)) +
                                        "/n=" + std::to_string(n) + "/seed=" + std::to_string(seed);
                        }
                    }
                }
            }
        }
    }
    std::string detail = std::to_string(runs) + " runs, " + std::to_string(mismatches) + " mismatches";
    if (!first_bad.empty()) detail += ", first " + first_bad;
    report(1, "oracle equivalence, 11 algorithms x 5 generators x 6 sizes x 100 seeds", mismatches == 0, detail,
           start);
}

void criterion_figure_fixture() {
    const auto start = Clock::now();
    const auto fig = figure_fixture();
    const auto ref = pareto_sum_reference(fig.a, fig.b);
    bool ok = ref.nondominated_cells == kFigureCells && ref.points.size() == kFigureDistinct;

    // Every non-dominated cell value is in the output.
    const MinkowskiView m(fig.a, fig.b);
    std::vector<Point> green;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Point c = m.cell(i, j);
            bool dominated = false;
            for (std::size_t r = 0; r < m.rows() && !dominated; ++r)
                for (std::size_t s = 0; s < m.cols() && !dominated; ++s) dominated = dominates(m.cell(r, s), c);
            if (!dominated) green.push_back(c);
        }
    }
    ok = ok && green.size() == kFigureCells;

    double worst_ms = 0;
    std::string worst;
    for (auto algo : kAllAlgorithms) {
        const auto out = pareto_sum(algo, fig.a, fig.b);
        ok = ok && out == ref.points;
        for (const auto& g : green) ok = ok && std::binary_search(out.begin(), out.end(), g);
        std::vector<double> ms;
        for (int rep = 0; rep < 5; ++rep) ms.push_back(1e3 * seconds([&] { pareto_sum(algo, fig.a, fig.b); }));
        std::sort(ms.begin(), ms.end());
        if (ms[2] > worst_ms) {
            worst_ms = ms[2];
            worst = std::string(to_string(algo));
        }
    }
    ok = ok && worst_ms < kFigureBudgetMs;
    std::ostringstream detail;
    detail << "cells=" << ref.nondominated_cells << " distinct=" << ref.points.size() << " slowest " << worst << " "
           << worst_ms << " ms";
    report(2, "figure fixture: 27 cells, 25 points, < 1 ms each", ok, detail.str(), start);
}

void criterion_range_minimum() {
    const auto start = Clock::now();
    const auto fig = figure_fixture();
    const MinkowskiView m(fig.a, fig.b);
    const SearchRange r{14, 44};
    const Point want{15, 43};
    const auto bin = range_min_binary(m, r);
    const auto sw1 = range_min_sweep(m, r, {1});
    const auto sw3 = range_min_sweep(m, r, {3});
    const bool ok = bin && sw1 && sw3 && bin->point == want && sw1->point == want && sw3->point == want;
    report(3, "range minimum (15,43) via binary, sweep d=1, sweep d=3", ok, ok ? "all three agree" : "mismatch",
           start);
}

void criterion_minplus() {
    const auto start = Clock::now();
    std::mt19937_64 rng(20240601);
    std::size_t checked = 0, wrong = 0, too_big = 0;
    const Algorithm algos[] = {Algorithm::sc, Algorithm::sss, Algorithm::sbs, Algorithm::hybrid, Algorithm::dnd};
    for (std::size_t seed = 1; seed <= kMinplusSeeds; ++seed) {
        const std::size_t n = seed == 1 ? 1 : std::min<std::size_t>(kMinplusMaxN, 2 * seed);
        std::uniform_int_distribution<std::int64_t> v(0, seed % 3 == 0 ? 10 : kMinplusEntryLimit);
        ConvInstance inst;
        for (std::size_t i = 0; i < n; ++i) {
            inst.a.push_back(v(rng));
            inst.b.push_back(v(rng));
        }
        const auto expected = minplus_naive(inst);
        for (auto algo : algos) {
            std::size_t c_size = 0;
            const auto got = minplus_via_pareto(
                inst, [&](const ParetoSet& a, const ParetoSet& b) { return pareto_sum(algo, a, b); }, &c_size);
            ++checked;
            wrong += got == expected ? 0 : 1;
            too_big += c_size < 2 * n ? 0 : 1;
        }
    }
    report(4, "min-plus witness through sc, sss, sbs, hybrid, dnd; |C| < 2n", wrong == 0 && too_big == 0,
           std::to_string(checked) + " convolutions, " + std::to_string(wrong) + " wrong, " +
               std::to_string(too_big) + " with |C| >= 2n",
           start);
}

void criterion_output_size() {
    const auto start = Clock::now();
    bool ok = true;
    std::ostringstream detail;
    detail << "sorted-uniform n=" << kOutputSizeN << " k/n:";
    for (std::uint64_t seed = 1; seed <= kOutputSizeSeeds; ++seed) {
        const auto [a, b] = generate_pair({Family::sorted, Distribution::uniform, kOutputSizeN, seed});
        CountSink sink;
        Counters c;
        run_algorithm(Algorithm::sss, a, b, {}, sink, c);
        ok = ok && sink.count() <= kOutputSizeFactor * kOutputSizeN;
        detail << ' ' << static_cast<double>(sink.count()) / kOutputSizeN;
    }
    bool linear_ok = true;
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{10}, std::size_t{50}, std::size_t{100}, std::size_t{150}, kLinearMaxN}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const auto [a, b] = generate_pair({Family::linear, Distribution::uniform, n, seed});
            linear_ok = linear_ok && pareto_sum_reference(a, b).points.size() == n * n &&
                        pareto_sum_reference(a, a).nondominated_cells == n * n;
        }
    }
    detail << "; linear k=n^2 " << (linear_ok ? "holds" : "violated");
    report(5, "output sizes: sorted-uniform k <= 6n, linear k = n^2", ok && linear_ok, detail.str(), start);
}

void criterion_naive_skyline() {
    const auto start = Clock::now();
    std::vector<std::size_t> sizes;
    const double secs = seconds([&] {
        for (std::uint64_t seed = 1; seed <= kNaiveSeeds; ++seed) {
            sizes.push_back(gen_naive({Family::naive, Distribution::uniform, kNaiveN, seed}).size());
        }
    });
    std::sort(sizes.begin(), sizes.end());
    const std::size_t median = sizes[sizes.size() / 2];
    std::ostringstream detail;
    detail << "median survivors " << median << " (max " << sizes.back() << "), " << secs << " s for "
           << kNaiveSeeds << " seeds";
    report(6, "naive generator: <= 40 survivors of 10^6 points in < 10 s", median <= kNaiveMaxSurvivors &&
           secs < kNaiveBudgetS, detail.str(), start);
}

void criterion_runtime_ordering() {
    const auto start = Clock::now();
    const auto mid = instances(Family::sorted, Distribution::uniform, kOrderingN, kOrderingSeeds);
    const double bf = median_time(Algorithm::bf, mid, nullptr, false);
    const double bs = median_time(Algorithm::bs, mid);
    const double sc = median_time(Algorithm::sc, mid);
    const auto large = instances(Family::sorted, Distribution::uniform, kLargeN, kOrderingSeeds);
    const double sc_large = median_time(Algorithm::sc, large);
    const double sss_large = median_time(Algorithm::sss, large);
    const bool ok = bf > kBfOverBs * bs && bs > sc && sc_large < kLargeBudgetS && sss_large < kLargeBudgetS;
    std::ostringstream detail;
    detail << "n=" << kOrderingN << ": bf " << bf << " s, bs " << bs << " s, sc " << sc << " s; n=" << kLargeN
           << ": sc " << sc_large << " s, sss " << sss_large << " s";
    report(7, "runtime ordering bf > 10 bs > sc, sc and sss < 5 s at 10^4", ok, detail.str(), start);
}

void criterion_output_sensitivity() {
    const auto start = Clock::now();
    std::size_t k1 = 0, k2 = 0;
    const double t1 = median_time(Algorithm::sss, instances(Family::sorted, Distribution::gaussian, kScalingN,
                                                            kScalingSeeds), &k1);
    const double t2 = median_time(Algorithm::sss, instances(Family::sorted, Distribution::gaussian, 2 * kScalingN,
                                                            kScalingSeeds), &k2);
    const auto linear = instances(Family::linear, Distribution::uniform, kLinearRaceN, 3);
    const double sc = median_time(Algorithm::sc, linear);
    const double sss = median_time(Algorithm::sss, linear);
    const double ratio = t2 / t1;
    const bool ok = ratio <= kScalingMaxRatio && sc < sss;
    std::ostringstream detail;
    detail << "gaussian sss " << t1 << " s (k=" << k1 << ") -> " << t2 << " s (k=" << k2 << "), ratio " << ratio
           << "; linear n=" << kLinearRaceN << " sc " << sc << " s vs sss " << sss << " s";
    report(8, "sss doubling ratio <= 3 on gaussian, sc beats sss on linear", ok, detail.str(), start);
}

void criterion_streaming_space() {
    const auto start = Clock::now();
    const auto [a, b] = generate_pair({Family::sorted, Distribution::uniform, kStreamN, 1});
    CountSink sink;
    Counters c;
    alloc::bytes = 0;
    alloc::count = 0;
    alloc::tracking = true;
    successive(a, b, Oracle::sweep, {default_delta(a.size(), b.size())}, sink, c);
    alloc::tracking = false;
    const std::size_t n = a.size() + b.size();
    const bool ok = alloc::bytes <= kStreamAllocBytesPerPoint * n &&
                    c.heap_peak <= kStreamCounterFactor * kStreamN &&
                    c.frontier_peak <= kStreamCounterFactor * kStreamN && c.oracle_calls == sink.count();
    std::ostringstream detail;
    detail << "k=" << sink.count() << ", " << alloc::count << " allocations / " << alloc::bytes
           << " bytes during the run, heap_peak " << c.heap_peak << ", frontier_peak " << c.frontier_peak;
    report(9, "sss with a count-only sink allocates no output buffer", ok, detail.str(), start);
}

void criterion_spnd_state_machine() {
    const auto start = Clock::now();
    std::mt19937_64 rng(10'000);
    std::uniform_int_distribution<Coord> along(0, 1'000'000);
    std::uniform_int_distribution<Coord> noise(-2'000, 2'000);
    SpndTree tree;
    std::vector<Point> model;  // brute-force Pareto filter of everything offered
    std::size_t inserts = 0;
    bool ok = true, rebuild_ok = true;
    for (std::size_t op = 0; op < kSpndOps && ok; ++op) {
        // Candidates scatter around a slowly sinking anti-diagonal, so
        // accepts, rejects and removals all keep happening.
        const Coord x = along(rng);
        const Coord level = 1'000'000 - static_cast<Coord>(op) * 20;
        const Point p{x, std::max<Coord>(0, level - x + noise(rng))};
        const bool covered = std::any_of(model.begin(), model.end(), [&](const Point& q) { return weakly_dominates(q, p); });
        const bool accepted = tree.non_dom_prune(p);
        ok = accepted == !covered;
        if (accepted) {
            tree.insert(p);
            ++inserts;
            std::erase_if(model, [&](const Point& q) { return dominates(p, q); });
            model.push_back(p);
        }
        rebuild_ok = rebuild_ok && tree.rebuilds() == inserts / kRebuildEvery &&
                     tree.inserts_since_rebuild() == inserts % kRebuildEvery;
        if (op % 500 == 0 || op + 1 == kSpndOps) {
            std::sort(model.begin(), model.end());
            ok = ok && tree.extract() == model && tree.check_invariants();
        }
    }
    std::sort(model.begin(), model.end());
    ok = ok && tree.extract() == model;
    std::ostringstream detail;
    detail << kSpndOps << " operations, " << inserts << " inserts, " << tree.rebuilds() << " rebuilds, final size "
           << tree.size();
    report(10, "SPND prune/insert state machine, rebuild every 520 inserts", ok && rebuild_ok, detail.str(), start);
}

}  // namespace

int main(int argc, char** argv) {
    // Optional list of criterion numbers to run, e.g. "acceptance 2 3".
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    auto wanted = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };

    const std::function<void()> criteria[] = {
        criterion_oracle_equivalence, criterion_figure_fixture,     criterion_range_minimum,
        criterion_minplus,            criterion_output_size,        criterion_naive_skyline,
        criterion_runtime_ordering,   criterion_output_sensitivity, criterion_streaming_space,
        criterion_spnd_state_machine,
    };
    for (int id = 1; id <= 10; ++id) {
        if (!wanted(id)) continue;
        try {
            criteria[id - 1]();
        } catch (const std::exception& e) {
            report(id, "raised an exception", false, e.what(), Clock::now());
        }
    }
    std::printf("%d criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
