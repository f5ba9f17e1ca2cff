#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "paretosum/pareto_set.hpp"

namespace paretosum {

/// ".ps" instance files: optional '#' comment lines, then a count line "n",
/// then n lines "x y". Readers reject anything that is not a valid sorted
/// Pareto set within the coordinate bound.
ParetoSet read_ps(std::istream& in, const std::string& source = "<stream>");
ParetoSet read_ps(const std::filesystem::path& path);

void write_ps(std::ostream& out, std::span<const Point> points,
              std::span<const std::string> header = {});
void write_ps(const std::filesystem::path& path, std::span<const Point> points,
              std::span<const std::string> header = {});

/// Integer arrays, one value per line ('#' comments and blank lines ignored).
std::vector<std::int64_t> read_int_array(const std::filesystem::path& path);

}  // namespace paretosum
