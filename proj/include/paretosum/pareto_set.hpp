#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "paretosum/point.hpp"
#include "paretosum/sink.hpp"

namespace paretosum {

/// True iff the sequence is a sorted Pareto set: strictly increasing x and
/// strictly decreasing y (which rules out duplicates and domination).
bool validate(std::span<const Point> s);

/// Lexicographically sorted, mutually non-dominated points. Indices are
/// zero-based; rank i is element [i].
class ParetoSet {
public:
    ParetoSet() = default;

    /// Throws std::invalid_argument if the points are not a valid sorted
    /// Pareto set or a coordinate is out of bounds.
    explicit ParetoSet(std::vector<Point> points);
    ParetoSet(std::initializer_list<Point> points) : ParetoSet(std::vector<Point>(points)) {}

    /// Skips validation; caller guarantees the invariants.
    static ParetoSet from_trusted(std::vector<Point> points) {
        ParetoSet s;
        s.points_ = std::move(points);
        assert(validate(s.points_));
        return s;
    }

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const Point& front() const { return points_.front(); }
    const Point& back() const { return points_.back(); }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }
    std::span<const Point> points() const { return points_; }
    const std::vector<Point>& vec() const { return points_; }

    friend bool operator==(const ParetoSet&, const ParetoSet&) = default;

private:
    std::vector<Point> points_;
};

/// Implicit Minkowski matrix: cell(i, j) = a[i] + b[j]. Rows follow a,
/// columns follow b. Holds references; the sets must outlive the view.
class MinkowskiView {
public:
    MinkowskiView(const ParetoSet& a, const ParetoSet& b) : a_(a.points()), b_(b.points()) {}

    std::size_t rows() const { return a_.size(); }
    std::size_t cols() const { return b_.size(); }

    Point cell(std::size_t i, std::size_t j) const {
        assert(i < a_.size() && j < b_.size());
        return a_[i] + b_[j];
    }

    std::span<const Point> a() const { return a_; }
    std::span<const Point> b() const { return b_; }

private:
    std::span<const Point> a_;
    std::span<const Point> b_;
};

/// Sort & compare filter over a lexicographically sorted sequence (ties
/// allowed). Emits each point not dominated by or equal to the previously
/// emitted one. Returns the number emitted.
std::size_t filter_sorted(std::span<const Point> sorted, PointSink& sink);

/// Convenience overload that collects the filtered points.
std::vector<Point> filter_sorted(std::span<const Point> sorted);

/// Pareto filter of s ∪ t in O(|s| + |t|).
std::size_t merge_union(const ParetoSet& s, const ParetoSet& t, PointSink& sink);
ParetoSet merge_union(const ParetoSet& s, const ParetoSet& t);

/// Incremental form of the sorted filter: push points in lexicographic order,
/// forwards survivors to the sink.
class SortedFilter {
public:
    explicit SortedFilter(PointSink& sink) : sink_(&sink) {}

    bool push(const Point& p) {
        if (has_last_ && last_.y <= p.y) return false;
        last_ = p;
        has_last_ = true;
        ++count_;
        sink_->accept(p);
        return true;
    }

    /// Dominated by or equal to the last emitted point.
    bool covered(const Point& p) const { return has_last_ && weakly_dominates(last_, p); }

    std::size_t count() const { return count_; }

private:
    PointSink* sink_;
    Point last_{};
    bool has_last_ = false;
    std::size_t count_ = 0;
};

}  // namespace paretosum
