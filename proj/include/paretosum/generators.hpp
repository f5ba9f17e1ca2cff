#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paretosum/pareto_set.hpp"

namespace paretosum {

enum class Family { naive, incremental, sorted, curve, linear };
enum class Distribution { uniform, gaussian, exponential, shifted };
/// Which member of an instance pair to generate; selects an independent
/// random stream and, for some families, a different layout.
enum class Role { a, b };

/// Identifier written into file headers; generation is reproducible across
/// platforms for a given engine and GenSpec.
inline constexpr std::string_view kRngName = "mt19937_64+splitmix64";

struct GenSpec {
    Family family = Family::sorted;
    Distribution distribution = Distribution::uniform;
    std::size_t n = 100;
    std::uint64_t seed = 1;
    std::int64_t scale = 1'000'000;
    Role role = Role::a;

    /// Upper end of the coordinate range: min(n * scale, 2^30).
    std::int64_t range() const;
    /// One-line key=value summary for file headers.
    std::string describe() const;
};

std::string_view to_string(Family f);
std::string_view to_string(Distribution d);
std::string_view to_string(Role r);
/// Throw std::invalid_argument on unknown names.
Family parse_family(std::string_view s);
Distribution parse_distribution(std::string_view s);
Role parse_role(std::string_view s);

/// Samples n points in [0, range]^2 and keeps their Pareto filter; the
/// result is usually tiny (logarithmic in n for uniform samples).
ParetoSet gen_naive(const GenSpec& spec);

/// Grows a Pareto set one accepted sample at a time. A sampled x is
/// rejected when it is taken or leaves no free y between its neighbours;
/// y is then drawn from the free interval. Throws std::runtime_error if
/// the retry budget runs out.
ParetoSet gen_incremental(const GenSpec& spec);

/// n unique x values ascending zipped with n unique y values descending.
/// The shifted distribution caps y at sqrt(n) * scale for role a and
/// n^2 * scale for role b.
ParetoSet gen_sorted(const GenSpec& spec);

/// curve: unique x in [1, range], y = round(K / x) with K = 2^30 (a scaled
/// y = 0.3 / x); colliding y values are redrawn.
/// linear: y = range - x; the pair's x values are laid out so every sum
/// a.x + b.x is distinct, making all n^2 cells distinct Pareto points.
ParetoSet gen_function(const GenSpec& spec);

/// Dispatch on spec.family.
ParetoSet generate(const GenSpec& spec);

/// Both members of a pair: roles a and b with the same seed.
std::pair<ParetoSet, ParetoSet> generate_pair(GenSpec spec);

}  // namespace paretosum
