#include "paretosum/hull.hpp"

#include <cassert>

namespace paretosum {

namespace {

using Wide = __int128;

// > 0 for a counter-clockwise turn o -> p -> q.
Wide cross(const Point& o, const Point& p, const Point& q) {
    return Wide(p.x - o.x) * Wide(q.y - o.y) - Wide(p.y - o.y) * Wide(q.x - o.x);
}

// Slope comparison of edges with positive dx, without division.
bool slope_less_equal(const Point& e, const Point& f) {
    return Wide(e.y) * Wide(f.x) <= Wide(f.y) * Wide(e.x);
}

}  // namespace

ConvexChain lower_hull(const ParetoSet& s) {
    ConvexChain chain;
    chain.vertices.reserve(s.size());
    chain.ranks.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& p = s[i];
        while (chain.vertices.size() >= 2 &&
               cross(chain.vertices[chain.vertices.size() - 2], chain.vertices.back(), p) <= 0) {
            chain.vertices.pop_back();
            chain.ranks.pop_back();
        }
        chain.vertices.push_back(p);
        chain.ranks.push_back(i);
    }
    return chain;
}

bool is_convex(const ParetoSet& s) { return lower_hull(s).size() == s.size(); }

std::vector<SeedPoint> convex_minkowski(const ConvexChain& p, const ConvexChain& q) {
    std::vector<SeedPoint> out;
    if (p.vertices.empty() || q.vertices.empty()) return out;
    out.reserve(p.size() + q.size() - 1);

    std::size_t i = 0;
    std::size_t j = 0;
    out.push_back({p.vertices[0] + q.vertices[0], p.ranks[0], q.ranks[0]});
    while (i + 1 < p.size() || j + 1 < q.size()) {
        bool take_p;
        if (i + 1 == p.size()) {
            take_p = false;
        } else if (j + 1 == q.size()) {
            take_p = true;
        } else {
            take_p = slope_less_equal(p.vertices[i + 1] - p.vertices[i], q.vertices[j + 1] - q.vertices[j]);
        }
        if (take_p) {
            ++i;
        } else {
            ++j;
        }
        out.push_back({p.vertices[i] + q.vertices[j], p.ranks[i], q.ranks[j]});
    }
    return out;
}

std::vector<SeedPoint> convex_seed(const ParetoSet& a, const ParetoSet& b) {
    return convex_minkowski(lower_hull(a), lower_hull(b));
}

}  // namespace paretosum
