#include <doctest.h>

#include <numeric>
#include <sstream>

#include "helpers.hpp"
#include "paretosum/generators.hpp"
#include "paretosum/io.hpp"
#include "paretosum/reference.hpp"

using namespace paretosum;

namespace {

std::string bytes(const GenSpec& spec) {
    std::ostringstream os;
    const std::vector<std::string> header{spec.describe()};
    write_ps(os, generate(spec).points(), header);
    return os.str();
}

}  // namespace

TEST_CASE("every family yields valid sets") {
    for (auto family : test::kFamilies) {
        for (auto dist : {Distribution::uniform, Distribution::gaussian, Distribution::exponential,
                          Distribution::shifted}) {
            for (std::size_t n : {1u, 2u, 3u, 10u, 50u, 200u}) {
                for (auto role : {Role::a, Role::b}) {
                    CAPTURE(to_string(family));
                    CAPTURE(to_string(dist));
                    CAPTURE(n);
                    const auto s = generate({family, dist, n, 17, 1'000'000, role});
                    CHECK(validate(s.points()));
                    CHECK_FALSE(s.empty());
                    if (family != Family::naive) CHECK(s.size() == n);
                }
            }
        }
    }
}

TEST_CASE("generation is deterministic and seed-dependent") {
    const GenSpec spec{Family::sorted, Distribution::uniform, 100, 7};
    CHECK(bytes(spec) == bytes(spec));
    const GenSpec naive{Family::naive, Distribution::uniform, 1000, 5};
    CHECK(bytes(naive) == bytes(naive));
    GenSpec other = spec;
    other.seed = 8;
    CHECK(generate(spec) != generate(other));
    GenSpec inc{Family::incremental, Distribution::uniform, 100, 1};
    GenSpec inc2 = inc;
    inc2.seed = 2;
    CHECK(generate(inc) != generate(inc2));
    auto [a, b] = generate_pair(spec);
    CHECK(a != b);
}

TEST_CASE("singletons") {
    for (auto family : test::kFamilies) CHECK(generate({family, Distribution::uniform, 1, 3}).size() == 1);
}

TEST_CASE("header records the spec and the RNG") {
    const GenSpec spec{Family::curve, Distribution::uniform, 10, 4, 1000, Role::b};
    CHECK(spec.describe() == "gen=curve dist=uniform n=10 seed=4 scale=1000 role=b rng=mt19937_64+splitmix64");
    CHECK(spec.range() == 10'000);
    CHECK(GenSpec{Family::sorted, Distribution::uniform, 10'000}.range() == (std::int64_t{1} << 30));
}

TEST_CASE("linear self-pairs are fully Pareto-optimal") {
    for (std::size_t n : {1u, 10u, 57u}) {
        // With a = b the mirrored cells a[i] + a[j] and a[j] + a[i] coincide:
        // every cell is non-dominated but at most n(n+1)/2 values are distinct.
        const auto s = generate({Family::linear, Distribution::uniform, n, 9});
        const auto self = pareto_sum_reference(s, s);
        CHECK(self.nondominated_cells == n * n);
        CHECK(self.points.size() <= n * (n + 1) / 2);
        auto [a, b] = generate_pair({Family::linear, Distribution::uniform, n, 9});
        CHECK(pareto_sum_reference(a, b).points.size() == n * n);
    }
}

TEST_CASE("curve output size lies in [n, n^2]") {
    const auto [a, b] = generate_pair({Family::curve, Distribution::uniform, 100, 5});
    const auto k = pareto_sum_reference(a, b).points.size();
    CHECK(k >= 100);
    CHECK(k <= 100 * 100);
}

TEST_CASE("sorted-uniform x values are centred") {
    const GenSpec spec{Family::sorted, Distribution::uniform, 10'000, 12};
    const auto s = generate(spec);
    const double mean =
        std::accumulate(s.begin(), s.end(), 0.0, [](double acc, const Point& p) { return acc + p.x; }) /
        static_cast<double>(s.size());
    const double mid = static_cast<double>(spec.range()) / 2.0;
    CHECK(std::abs(mean - mid) <= 0.1 * mid);
}

TEST_CASE("gaussian and exponential stay valid at scale") {
    for (auto dist : {Distribution::gaussian, Distribution::exponential}) {
        CHECK(validate(generate({Family::sorted, dist, 100'000, 3}).points()));
    }
}

TEST_CASE("shifted caps y per role") {
    const auto a = generate({Family::sorted, Distribution::shifted, 100, 1, 1000, Role::a});
    const auto b = generate({Family::sorted, Distribution::shifted, 100, 1, 1000, Role::b});
    CHECK(a.front().y <= 10 * 1000);
    CHECK(b.front().y > 10 * 1000);
}

TEST_CASE("parsing") {
    CHECK(parse_family("curve") == Family::curve);
    CHECK(parse_distribution("shifted-uniform") == Distribution::shifted);
    CHECK(parse_role("b") == Role::b);
    CHECK_THROWS_AS(parse_family("spiral"), std::invalid_argument);
    CHECK_THROWS_AS(parse_distribution("cauchy"), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::sorted, Distribution::uniform, 0, 1}), std::invalid_argument);
}
