#include "paretosum/pareto_set.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace paretosum {

std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x << ", " << p.y << ')';
}

void StreamSink::accept(const Point& p) { *os_ << p.x << ' ' << p.y << '\n'; }

bool validate(std::span<const Point> s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!(s[i - 1].x < s[i].x && s[i - 1].y > s[i].y)) return false;
    }
    return true;
}

ParetoSet::ParetoSet(std::vector<Point> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!within_bounds(points_[i])) {
            throw std::invalid_argument("point " + std::to_string(i) +
                                        " exceeds the coordinate bound of 2^31");
        }
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const auto& p = points_[i - 1];
        const auto& q = points_[i];
        if (!(p.x < q.x && p.y > q.y)) {
            throw std::invalid_argument("not a sorted Pareto set at index " + std::to_string(i) +
                                        ": (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                                        ") then (" + std::to_string(q.x) + "," +
                                        std::to_string(q.y) + ")");
        }
    }
}

std::size_t filter_sorted(std::span<const Point> sorted, PointSink& sink) {
    SortedFilter filter(sink);
    for (const auto& p : sorted) filter.push(p);
    return filter.count();
}

std::vector<Point> filter_sorted(std::span<const Point> sorted) {
    CollectSink sink;
    filter_sorted(sorted, sink);
    return sink.take();
}

std::size_t merge_union(const ParetoSet& s, const ParetoSet& t, PointSink& sink) {
    SortedFilter filter(sink);
    auto i = s.begin();
    auto j = t.begin();
    while (i != s.end() || j != t.end()) {
        if (j == t.end() || (i != s.end() && *i <= *j)) {
            filter.push(*i++);
        } else {
            filter.push(*j++);
        }
    }
    return filter.count();
}

ParetoSet merge_union(const ParetoSet& s, const ParetoSet& t) {
    CollectSink sink;
    merge_union(s, t, sink);
    return ParetoSet::from_trusted(sink.take());
}

}  // namespace paretosum
