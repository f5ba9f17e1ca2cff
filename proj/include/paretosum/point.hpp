#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace paretosum {

using Coord = std::int64_t;

/// Magnitude bound for input coordinates. Any sum of two in-bound points fits
/// comfortably in 64 bits.
inline constexpr Coord kCoordLimit = Coord{1} << 31;

/// Integer 2-D cost vector. Both coordinates are minimized.
struct Point {
    Coord x = 0;
    Coord y = 0;

    friend constexpr bool operator==(const Point&, const Point&) = default;

    // Lexicographic: x first, then smaller y.
    friend constexpr std::strong_ordering operator<=>(const Point& p, const Point& q) {
        if (auto c = p.x <=> q.x; c != 0) return c;
        return p.y <=> q.y;
    }

    friend constexpr Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
    friend constexpr Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
};

/// p dominates q: p != q and p is no worse in either coordinate.
constexpr bool dominates(const Point& p, const Point& q) {
    return p.x <= q.x && p.y <= q.y && p != q;
}

/// p dominates q or equals it.
constexpr bool weakly_dominates(const Point& p, const Point& q) {
    return p.x <= q.x && p.y <= q.y;
}

constexpr bool within_bounds(const Point& p) {
    return p.x > -kCoordLimit && p.x < kCoordLimit && p.y > -kCoordLimit && p.y < kCoordLimit;
}

std::ostream& operator<<(std::ostream& os, const Point& p);

}  // namespace paretosum
