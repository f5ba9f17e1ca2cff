#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "paretosum/point.hpp"

namespace paretosum {

/// Consumer of Pareto-sum output. Producers push points in strictly
/// increasing lexicographic order, each exactly once. Not thread-safe.
class PointSink {
public:
    virtual ~PointSink() = default;
    virtual void accept(const Point& p) = 0;
};

/// Buffers everything it receives.
class CollectSink final : public PointSink {
public:
    void accept(const Point& p) override { points_.push_back(p); }

    const std::vector<Point>& points() const { return points_; }
    std::vector<Point> take() { return std::move(points_); }

private:
    std::vector<Point> points_;
};

/// Counts and remembers the last point only; O(1) space.
class CountSink final : public PointSink {
public:
    void accept(const Point& p) override {
        ++count_;
        last_ = p;
    }

    std::size_t count() const { return count_; }
    std::optional<Point> last() const { return last_; }

private:
    std::size_t count_ = 0;
    std::optional<Point> last_;
};

/// Writes "x y" lines as points arrive.
class StreamSink final : public PointSink {
public:
    explicit StreamSink(std::ostream& os) : os_(&os) {}
    void accept(const Point& p) override;

private:
    std::ostream* os_;
};

/// Forwards to another sink and records whether the stream ever went out of
/// strictly increasing lexicographic order.
class OrderCheckingSink final : public PointSink {
public:
    explicit OrderCheckingSink(PointSink& inner) : inner_(&inner) {}

    void accept(const Point& p) override {
        if (last_ && !(*last_ < p)) ordered_ = false;
        last_ = p;
        ++count_;
        inner_->accept(p);
    }

    bool ordered() const { return ordered_; }
    std::size_t count() const { return count_; }

private:
    PointSink* inner_;
    std::optional<Point> last_;
    std::size_t count_ = 0;
    bool ordered_ = true;
};

}  // namespace paretosum
