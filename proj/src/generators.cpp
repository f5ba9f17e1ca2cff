#include "paretosum/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace paretosum {

namespace {

constexpr std::int64_t kRangeCap = std::int64_t{1} << 30;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::int64_t capped_mul(std::int64_t a, std::int64_t b) {
    const __int128 p = static_cast<__int128>(a) * b;
    return p > kRangeCap ? kRangeCap : static_cast<std::int64_t>(p);
}

// Portable sampling: the engine's output sequence is fixed by the standard;
// every distribution is derived from it here rather than via <random>'s
// implementation-defined distributions.
class Rng {
public:
    Rng(const GenSpec& spec, std::uint64_t stream)
        : engine_(splitmix64(spec.seed ^ splitmix64(stream + 0x51ED * (spec.role == Role::b ? 2 : 1) +
                                                     static_cast<std::uint64_t>(spec.family) * 0x1000))) {}

    // Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return lo + static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal() {
        const double u1 = 1.0 - unit();
        const double u2 = unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

// One draw in [0, hi] following the distribution; nullopt when the draw
// falls outside and must be redrawn.
std::optional<std::int64_t> draw(Rng& rng, Distribution dist, std::int64_t hi) {
    switch (dist) {
        case Distribution::uniform:
        case Distribution::shifted:
            return rng.uniform(0, hi);
        case Distribution::gaussian: {
            const double mean = static_cast<double>(hi) / 2.0;
            const double sigma = static_cast<double>(hi) / 6.0;
            const double v = std::round(mean + sigma * rng.normal());
            if (v < 0.0 || v > static_cast<double>(hi)) return std::nullopt;
            return static_cast<std::int64_t>(v);
        }
        case Distribution::exponential: {
            // Rate chosen so the 99th percentile sits at hi.
            const double lambda = std::log(100.0) / static_cast<double>(hi);
            const double v = std::round(-std::log(1.0 - rng.unit()) / lambda);
            if (v > static_cast<double>(hi)) return std::nullopt;
            return static_cast<std::int64_t>(v);
        }
    }
    return std::nullopt;
}

std::size_t retry_budget(std::size_t n) { return 64 * n + 4096; }

// n distinct values in [0, hi], sorted ascending.
std::vector<std::int64_t> sample_unique(Rng& rng, Distribution dist, std::size_t n, std::int64_t hi) {
    if (static_cast<std::uint64_t>(hi) + 1 < n) {
        throw std::invalid_argument("cannot draw " + std::to_string(n) + " distinct values from [0, " +
                                    std::to_string(hi) + "]");
    }
    std::unordered_set<std::int64_t> seen;
    seen.reserve(n * 2);
    std::vector<std::int64_t> out;
    out.reserve(n);
    if (dist == Distribution::uniform || dist == Distribution::shifted) {
        // Floyd's subset sampling.
        const std::int64_t total = hi + 1;
        for (std::int64_t j = total - static_cast<std::int64_t>(n); j < total; ++j) {
            const std::int64_t t = rng.uniform(0, j);
            const std::int64_t pick = seen.contains(t) ? j : t;
            seen.insert(pick);
            out.push_back(pick);
        }
    } else {
        const std::size_t budget = retry_budget(n);
        std::size_t attempts = 0;
        while (out.size() < n) {
            if (++attempts > budget) {
                throw std::runtime_error("unique sampling exceeded its budget of " + std::to_string(budget) +
                                         " draws");
            }
            const auto v = draw(rng, dist, hi);
            if (v && seen.insert(*v).second) out.push_back(*v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ParetoSet zip_staircase(const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys_ascending) {
    std::vector<Point> pts(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) pts[i] = {xs[i], ys_ascending[xs.size() - 1 - i]};
    return ParetoSet(std::move(pts));
}

void require_n(const GenSpec& spec) {
    if (spec.n == 0) throw std::invalid_argument("generator size n must be at least 1");
    if (spec.scale < 1) throw std::invalid_argument("generator scale must be at least 1");
}

ParetoSet gen_curve(const GenSpec& spec) {
    // y = K / x on integer x keeps distinct y only while K / x^2 >= 1.
    constexpr std::int64_t kCurveK = kRangeCap;
    constexpr std::int64_t kCurveDomain = std::int64_t{1} << 15;
    if (spec.n > static_cast<std::size_t>(kCurveDomain)) {
        throw std::invalid_argument("curve generator supports n up to " + std::to_string(kCurveDomain));
    }
    Rng rng(spec, 3);
    const std::int64_t domain = std::min(spec.range(), kCurveDomain);
    auto y_of = [](std::int64_t x) { return (2 * kCurveK + x) / (2 * x); };

    std::vector<std::int64_t> xs = sample_unique(rng, Distribution::uniform, spec.n, domain - 1);
    for (auto& x : xs) x += 1;
    const std::size_t budget = retry_budget(spec.n);
    for (std::size_t attempts = 0;; ++attempts) {
        std::sort(xs.begin(), xs.end());
        auto clash = std::adjacent_find(xs.begin(), xs.end(), [&](std::int64_t l, std::int64_t r) {
            return y_of(l) == y_of(r);
        });
        if (clash == xs.end()) break;
        if (attempts >= budget) {
            throw std::runtime_error("curve generator exceeded its budget of " + std::to_string(budget) +
                                     " redraws");
        }
        std::int64_t fresh;
        do {
            fresh = rng.uniform(1, domain);
        } while (std::binary_search(xs.begin(), xs.end(), fresh));
        *std::next(clash) = fresh;
    }
    std::vector<Point> pts;
    pts.reserve(xs.size());
    for (auto x : xs) pts.push_back({x, y_of(x)});
    return ParetoSet(std::move(pts));
}

ParetoSet gen_linear(const GenSpec& spec) {
    Rng rng(spec, 4);
    const std::int64_t range = spec.range();
    const auto n = static_cast<std::int64_t>(spec.n);
    std::vector<std::int64_t> xs;
    const std::int64_t cells = range / n;
    if (cells >= n) {
        // Role a uses multiples of n, role b one distinct residue mod n per
        // point, so every pairwise x-sum identifies its pair.
        if (spec.role == Role::a) {
            xs = sample_unique(rng, Distribution::uniform, spec.n, cells - 1);
            for (auto& x : xs) x = (x + 1) * n;
        } else {
            std::vector<std::int64_t> residues(spec.n);
            for (std::int64_t r = 0; r < n; ++r) residues[static_cast<std::size_t>(r)] = r;
            for (std::size_t i = residues.size(); i > 1; --i) {
                std::swap(residues[i - 1], residues[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
            }
            xs.reserve(spec.n);
            for (auto r : residues) xs.push_back(rng.uniform(0, cells - 1) * n + r);
            std::sort(xs.begin(), xs.end());
        }
    } else {
        xs = sample_unique(rng, Distribution::uniform, spec.n, range - 1);
        for (auto& x : xs) x += 1;
    }
    std::vector<Point> pts;
    pts.reserve(xs.size());
    for (auto x : xs) pts.push_back({x, range - x});
    return ParetoSet(std::move(pts));
}

}  // namespace

std::int64_t GenSpec::range() const {
    const auto r = capped_mul(static_cast<std::int64_t>(n), scale);
    return std::max<std::int64_t>(r, static_cast<std::int64_t>(n));
}

std::string GenSpec::describe() const {
    return "gen=" + std::string(to_string(family)) + " dist=" + std::string(to_string(distribution)) +
           " n=" + std::to_string(n) + " seed=" + std::to_string(seed) + " scale=" + std::to_string(scale) +
           " role=" + std::string(to_string(role)) + " rng=" + std::string(kRngName);
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::naive: return "naive";
        case Family::incremental: return "incremental";
        case Family::sorted: return "sorted";
        case Family::curve: return "curve";
        case Family::linear: return "linear";
    }
    return "?";
}

std::string_view to_string(Distribution d) {
    switch (d) {
        case Distribution::uniform: return "uniform";
        case Distribution::gaussian: return "gaussian";
        case Distribution::exponential: return "exponential";
        case Distribution::shifted: return "shifted";
    }
    return "?";
}

std::string_view to_string(Role r) { return r == Role::a ? "a" : "b"; }

Family parse_family(std::string_view s) {
    for (auto f : {Family::naive, Family::incremental, Family::sorted, Family::curve, Family::linear}) {
        if (s == to_string(f)) return f;
    }
    throw std::invalid_argument("unknown generator '" + std::string(s) + "'");
}

Distribution parse_distribution(std::string_view s) {
    for (auto d : {Distribution::uniform, Distribution::gaussian, Distribution::exponential, Distribution::shifted}) {
        if (s == to_string(d)) return d;
    }
    if (s == "shifted-uniform") return Distribution::shifted;
    throw std::invalid_argument("unknown distribution '" + std::string(s) + "'");
}

Role parse_role(std::string_view s) {
    if (s == "a") return Role::a;
    if (s == "b") return Role::b;
    throw std::invalid_argument("unknown role '" + std::string(s) + "' (expected a or b)");
}

ParetoSet gen_naive(const GenSpec& spec) {
    require_n(spec);
    Rng rng(spec, 1);
    const std::int64_t hi = spec.range();
    const Distribution dist = spec.distribution == Distribution::shifted ? Distribution::uniform : spec.distribution;
    auto sample = [&] {
        for (;;) {
            if (auto v = draw(rng, dist, hi)) return *v;
        }
    };
    std::vector<Point> pts(spec.n);
    for (auto& p : pts) {
        p.x = sample();
        p.y = sample();
    }
    std::sort(pts.begin(), pts.end());
    return ParetoSet::from_trusted(filter_sorted(pts));
}

ParetoSet gen_incremental(const GenSpec& spec) {
    require_n(spec);
    Rng rng(spec, 2);
    const std::int64_t hi = spec.range();
    std::map<std::int64_t, std::int64_t> staircase;  // x -> y
    const std::size_t budget = 1000 * spec.n + 10000;
    std::size_t attempts = 0;
    while (staircase.size() < spec.n) {
        if (++attempts > budget) {
            throw std::runtime_error("incremental generator exceeded its budget of " + std::to_string(budget) +
                                     " samples after " + std::to_string(staircase.size()) + " points");
        }
        const std::int64_t x = rng.uniform(0, hi);
        auto right = staircase.lower_bound(x);
        if (right != staircase.end() && right->first == x) continue;
        // Free y values lie strictly between the neighbours' y.
        const std::int64_t y_hi = right == staircase.begin() ? hi : std::prev(right)->second - 1;
        const std::int64_t y_lo = right == staircase.end() ? 0 : right->second + 1;
        if (y_lo > y_hi) continue;
        staircase.emplace_hint(right, x, rng.uniform(y_lo, y_hi));
    }
    std::vector<Point> pts;
    pts.reserve(staircase.size());
    for (const auto& [x, y] : staircase) pts.push_back({x, y});
    return ParetoSet(std::move(pts));
}

ParetoSet gen_sorted(const GenSpec& spec) {
    require_n(spec);
    Rng rng(spec, 0);
    const std::int64_t x_hi = spec.range();
    std::int64_t y_hi = x_hi;
    Distribution dist = spec.distribution;
    if (dist == Distribution::shifted) {
        const auto n = static_cast<std::int64_t>(spec.n);
        const auto root = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
        y_hi = spec.role == Role::a ? capped_mul(root, spec.scale) : capped_mul(capped_mul(n, n), spec.scale);
        y_hi = std::max(y_hi, n);
        dist = Distribution::uniform;
    }
    const auto xs = sample_unique(rng, dist, spec.n, x_hi);
    const auto ys = sample_unique(rng, dist, spec.n, y_hi);
    return zip_staircase(xs, ys);
}

ParetoSet gen_function(const GenSpec& spec) {
    require_n(spec);
    if (spec.family == Family::curve) return gen_curve(spec);
    if (spec.family == Family::linear) return gen_linear(spec);
    throw std::invalid_argument("gen_function expects the curve or linear family");
}

ParetoSet generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::naive: return gen_naive(spec);
        case Family::incremental: return gen_incremental(spec);
        case Family::sorted: return gen_sorted(spec);
        case Family::curve:
        case Family::linear: return gen_function(spec);
    }
    throw std::invalid_argument("unknown generator family");
}

std::pair<ParetoSet, ParetoSet> generate_pair(GenSpec spec) {
    spec.role = Role::a;
    auto a = generate(spec);
    spec.role = Role::b;
    auto b = generate(spec);
    return {std::move(a), std::move(b)};
}

}  // namespace paretosum
