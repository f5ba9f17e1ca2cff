#include "paretosum/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace paretosum {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool parse_int(std::string_view s, std::int64_t& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
    throw std::runtime_error(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

ParetoSet read_ps(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t lineno = 0;
    std::int64_t n = -1;
    std::vector<Point> points;
    while (std::getline(in, line)) {
        ++lineno;
        auto s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        if (n < 0) {
            if (!parse_int(s, n) || n < 0) fail(source, lineno, "expected point count, got '" + line + "'");
            points.reserve(static_cast<std::size_t>(n));
            continue;
        }
        auto split = s.find_first_of(" \t");
        if (split == std::string_view::npos) fail(source, lineno, "expected 'x y', got '" + line + "'");
        Point p;
        if (!parse_int(trim(s.substr(0, split)), p.x) || !parse_int(trim(s.substr(split)), p.y)) {
            fail(source, lineno, "expected 'x y', got '" + line + "'");
        }
        if (!within_bounds(p)) fail(source, lineno, "coordinate magnitude must be below 2^31");
        if (static_cast<std::int64_t>(points.size()) == n) fail(source, lineno, "more points than declared");
        points.push_back(p);
    }
    if (n < 0) throw std::runtime_error(source + ": missing point count");
    if (static_cast<std::int64_t>(points.size()) != n) {
        throw std::runtime_error(source + ": declared " + std::to_string(n) + " points, found " +
                                 std::to_string(points.size()));
    }
    try {
        return ParetoSet(std::move(points));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(source + ": " + e.what());
    }
}

ParetoSet read_ps(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_ps(in, path.string());
}

void write_ps(std::ostream& out, std::span<const Point> points, std::span<const std::string> header) {
    for (const auto& h : header) out << "# " << h << '\n';
    out << points.size() << '\n';
    for (const auto& p : points) out << p.x << ' ' << p.y << '\n';
}

void write_ps(const std::filesystem::path& path, std::span<const Point> points,
              std::span<const std::string> header) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_ps(out, points, header);
    out.flush();
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

std::vector<std::int64_t> read_int_array(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<std::int64_t> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        std::int64_t v;
        if (!parse_int(s, v)) fail(path.string(), lineno, "expected an integer, got '" + line + "'");
        values.push_back(v);
    }
    return values;
}

}  // namespace paretosum
