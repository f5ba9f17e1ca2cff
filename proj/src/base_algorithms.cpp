#include "paretosum/base_algorithms.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <limits>
#include <vector>

#include "paretosum/hull.hpp"

namespace paretosum {

namespace {

// Coordinates of one input set split into separate arrays for tight loops.
struct Columns {
    std::vector<Coord> x;
    std::vector<Coord> y;

    explicit Columns(const ParetoSet& s) {
        x.reserve(s.size());
        y.reserve(s.size());
        for (const auto& p : s) {
            x.push_back(p.x);
            y.push_back(p.y);
        }
    }
    std::size_t size() const { return x.size(); }
};

std::size_t emit_sorted_unique(std::vector<Point>& survivors, PointSink& sink) {
    std::sort(survivors.begin(), survivors.end());
    survivors.erase(std::unique(survivors.begin(), survivors.end()), survivors.end());
    for (const auto& p : survivors) sink.accept(p);
    return survivors.size();
}

// Compares a candidate against every cell, one column at a time. Columns
// are visited outwards from the candidate's own, where dominators tend to
// be; the order only affects how soon a dominated cell is rejected.
class BruteForceChecker {
public:
    BruteForceChecker(const ParetoSet& a, const ParetoSet& b) : b_(b) {
        // Input coordinates fit in 32 bits, which lets the scan vectorize.
        ax_.reserve(a.size());
        ay_.reserve(a.size());
        for (const auto& p : a) {
            ax_.push_back(static_cast<std::int32_t>(p.x));
            ay_.push_back(static_cast<std::int32_t>(p.y));
        }
    }

    bool dominated(const Point& p, std::size_t own_col) {
        if (cached_ && dominates(Point{ax_[ci_] + b_[cj_].x, ay_[ci_] + b_[cj_].y}, p)) return true;
        const std::size_t n = b_.size();
        const std::size_t span = std::min(own_col, n - 1 - own_col);
        for (std::size_t d = 0; d < n; ++d) {
            // own_col, own_col - 1, own_col + 1, ... then the longer side alone.
            std::size_t j;
            if (d <= 2 * span) {
                j = d % 2 ? own_col - (d + 1) / 2 : own_col + d / 2;
            } else {
                j = own_col < n - 1 - own_col ? d : n - 1 - d;
            }
            if (column_hit(j, p)) return true;
        }
        return false;
    }

private:
    bool column_hit(std::size_t j, const Point& p) {
        constexpr Coord lo = std::numeric_limits<std::int32_t>::min();
        constexpr Coord hi = std::numeric_limits<std::int32_t>::max();
        const Coord tx = p.x - b_[j].x;
        const Coord ty = p.y - b_[j].y;
        if (tx < lo || ty < lo) return false;
        // A clamped target exceeds every row, so no row can equal it.
        const int clamped = tx > hi || ty > hi;
        const auto tx32 = static_cast<std::int32_t>(std::min(tx, hi));
        const auto ty32 = static_cast<std::int32_t>(std::min(ty, hi));
        const std::int32_t* ax = ax_.data();
        const std::int32_t* ay = ay_.data();
        const std::size_t n = ax_.size();
        int hit = 0;
        for (std::size_t i = 0; i < n; ++i) {
            hit |= (ax[i] <= tx32) & (ay[i] <= ty32) & ((ax[i] != tx32) | (ay[i] != ty32) | clamped);
        }
        if (!hit) return false;
        for (std::size_t i = 0; i < n; ++i) {
            if (dominates(Point{ax[i] + b_[j].x, ay[i] + b_[j].y}, p)) {
                ci_ = i;
                cj_ = j;
                cached_ = true;
                break;
            }
        }
        return true;
    }

    std::vector<std::int32_t> ax_;
    std::vector<std::int32_t> ay_;
    const ParetoSet& b_;
    std::size_t ci_ = 0;
    std::size_t cj_ = 0;
    bool cached_ = false;
};

// Number of leading entries satisfying a predicate that holds on a prefix.
// Branch-free so the searches below pipeline well.
template <typename Pred>
std::size_t prefix_length(const std::int32_t* v, std::size_t n, Pred pred) {
    if (n == 0) return 0;
    std::size_t lo = 0;
    for (std::size_t len = n; len > 1;) {
        const std::size_t half = len / 2;
        lo += pred(v[lo + half - 1]) ? half : 0;
        len -= half;
    }
    return lo + (pred(v[lo]) ? 1 : 0);
}

// Column dominance test via two binary searches; remembers the column of the
// last dominator and tries it first.
class BinarySearchChecker {
public:
    BinarySearchChecker(const ParetoSet& a, const ParetoSet& b) : b_(b) {
        ax_.reserve(a.size());
        ay_.reserve(a.size());
        for (const auto& p : a) {
            ax_.push_back(static_cast<std::int32_t>(p.x));
            ay_.push_back(static_cast<std::int32_t>(p.y));
        }
    }

    bool column_dominates(std::size_t j, const Point& p) const {
        const Coord tx = p.x - b_[j].x;
        const Coord ty = p.y - b_[j].y;
        const std::size_t n = ax_.size();
        // Last row with x <= p.x.
        const std::size_t ix = prefix_length(ax_.data(), n, [tx](Coord v) { return v <= tx; });
        if (ix == 0) return false;
        const std::size_t last = ix - 1;
        // First row with y <= p.y (y is decreasing down a column).
        const std::size_t first = prefix_length(ay_.data(), n, [ty](Coord v) { return v > ty; });
        if (first > last) return false;
        if (first < last) return true;
        // A single candidate row; equal cells do not dominate.
        return ax_[first] != tx || ay_[first] != ty;
    }

    bool dominated(const Point& p) {
        const std::size_t n = b_.size();
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t j = hint_ + step;
            if (j >= n) j -= n;
            if (column_dominates(j, p)) {
                hint_ = j;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::int32_t>& xs() const { return ax_; }
    const std::vector<std::int32_t>& ys() const { return ay_; }

private:
    std::vector<std::int32_t> ax_;
    std::vector<std::int32_t> ay_;
    const ParetoSet& b_;
    std::size_t hint_ = 0;
};

}  // namespace

std::size_t brute_force(const ParetoSet& a, const ParetoSet& b, PointSink& sink, Counters& counters) {
    BruteForceChecker checker(a, b);
    std::vector<Point> survivors;
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Point p = a[i] + b[j];
            ++counters.checks;
            ++counters.cells;
            if (!checker.dominated(p, j)) survivors.push_back(p);
        }
    }
    counters.note_heap(survivors.size());
    return emit_sorted_unique(survivors, sink);
}

std::size_t binary_search(const ParetoSet& a, const ParetoSet& b, PointSink& sink, Counters& counters) {
    BinarySearchChecker checker(a, b);
    std::vector<Point> survivors;
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Point p = a[i] + b[j];
            ++counters.checks;
            ++counters.cells;
            if (!checker.dominated(p)) survivors.push_back(p);
        }
    }
    counters.note_heap(survivors.size());
    return emit_sorted_unique(survivors, sink);
}

std::size_t priority_binary_search(const ParetoSet& a, const ParetoSet& b, PointSink& sink,
                                   Counters& counters) {
    const std::size_t rows = a.size();
    const std::size_t cols = b.size();
    BinarySearchChecker checker(a, b);
    const auto& ax = checker.xs();
    const auto& ay = checker.ys();

    std::vector<std::optional<DominatedInterval>> pruned(cols);
    // Rows of column j weakly dominated by p form the interval
    // [first with x >= p.x, last with y >= p.y].
    auto mark = [&](const Point& p) {
        for (std::size_t j = 0; j < cols; ++j) {
            const Coord tx = p.x - b[j].x;
            const Coord ty = p.y - b[j].y;
            const auto lo = prefix_length(ax.data(), rows, [tx](Coord v) { return v < tx; });
            const auto end = prefix_length(ay.data(), rows, [ty](Coord v) { return v >= ty; });
            if (end == 0 || lo >= end) continue;
            DominatedInterval candidate{lo, end - 1};
            auto& slot = pruned[j];
            if (!slot || candidate.length() > slot->length()) slot = candidate;
        }
    };

    std::vector<Point> survivors;
    std::vector<char> prio_col(cols, 0);
    std::vector<char> prio_row(rows, 0);
    for (const auto& s : convex_seed(a, b)) {
        survivors.push_back(s.point);
        prio_col[s.col] = 1;
        prio_row[s.row] = 1;
        mark(s.point);
    }

    auto visit = [&](std::size_t i, std::size_t j) {
        ++counters.cells;
        if (pruned[j] && pruned[j]->contains(i)) return;
        const Point p = a[i] + b[j];
        ++counters.checks;
        if (!checker.dominated(p)) {
            survivors.push_back(p);
            mark(p);
        }
    };

    for (std::size_t j = 0; j < cols; ++j) {
        if (!prio_col[j]) continue;
        for (std::size_t i = 0; i < rows; ++i) visit(i, j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
        if (!prio_row[i]) continue;
        for (std::size_t j = 0; j < cols; ++j) {
            if (!prio_col[j]) visit(i, j);
        }
    }
    for (std::size_t j = 0; j < cols; ++j) {
        if (prio_col[j]) continue;
        for (std::size_t i = 0; i < rows; ++i) {
            if (!prio_row[i]) visit(i, j);
        }
    }
    counters.note_heap(survivors.size());
    return emit_sorted_unique(survivors, sink);
}

std::size_t sort_compare(const ParetoSet& a, const ParetoSet& b, PointSink& sink, Counters& counters) {
    struct Entry {
        Point p;
        std::size_t row;
        std::size_t col;
    };
    // std heap algorithms build a max-heap; invert to get the lexicographic minimum on top.
    auto later = [](const Entry& l, const Entry& r) { return r.p < l.p; };

    const std::size_t rows = a.size();
    std::vector<Entry> heap;
    heap.reserve(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) heap.push_back({a[0] + b[j], 0, j});
    std::make_heap(heap.begin(), heap.end(), later);
    counters.cells += heap.size();
    counters.note_heap(heap.size());

    SortedFilter filter(sink);
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), later);
        Entry e = heap.back();
        heap.pop_back();
        filter.push(e.p);

        std::size_t i = e.row + 1;
        for (; i < rows; ++i) {
            ++counters.cells;
            if (!filter.covered(a[i] + b[e.col])) break;
        }
        if (i < rows) {
            heap.push_back({a[i] + b[e.col], i, e.col});
            std::push_heap(heap.begin(), heap.end(), later);
        }
    }
    return filter.count();
}

namespace {

class MarriageBeforeConquest {
public:
    explicit MarriageBeforeConquest(PointSink& sink) : filter_(sink) {}

    // Splits the lexicographically ordered range into `buckets` x-disjoint
    // groups, then solves each group left to right.
    void partition(std::vector<Point>::iterator first, std::vector<Point>::iterator last,
                   std::size_t buckets) {
        const auto size = static_cast<std::size_t>(last - first);
        if (size == 0) return;
        if (buckets <= 1 || size <= 1) {
            solve_bucket(first, last);
            return;
        }
        const std::size_t left = buckets / 2;
        auto mid = first + static_cast<std::ptrdiff_t>(size * left / buckets);
        std::nth_element(first, mid, last);
        partition(first, mid, left);
        partition(mid, last, buckets - left);
    }

    std::size_t count() const { return filter_.count(); }

private:
    void solve_bucket(std::vector<Point>::iterator first, std::vector<Point>::iterator last) {
        // Everything here is lexicographically after the last emitted point,
        // so weak domination by it reduces to a y test.
        if (have_last_) last = std::partition(first, last, [y = last_y_](const Point& p) { return p.y < y; });
        solve(first, last);
    }

    void solve(std::vector<Point>::iterator first, std::vector<Point>::iterator last) {
        const auto size = last - first;
        if (size == 0) return;
        auto mid = first + (size - 1) / 2;
        std::nth_element(first, mid, last);
        // Bridge: lowest point of the left half (inclusive of mid); it is
        // part of the output.
        auto bridge_it = std::min_element(first, mid + 1, [](const Point& l, const Point& r) {
            return l.y < r.y || (l.y == r.y && l.x < r.x);
        });
        const Point bridge = *bridge_it;
        auto left_end = std::partition(first, mid + 1, [&](const Point& p) { return p.x < bridge.x; });
        auto right_end = std::partition(mid + 1, last, [&](const Point& p) { return p.y < bridge.y; });
        solve(first, left_end);
        emit(bridge);
        solve(mid + 1, right_end);
    }

    void emit(const Point& p) {
        filter_.push(p);
        last_y_ = p.y;
        have_last_ = true;
    }

    SortedFilter filter_;
    Coord last_y_ = 0;
    bool have_last_ = false;
};

}  // namespace

std::size_t kirkpatrick_seidel(const ParetoSet& a, const ParetoSet& b, std::size_t k_hint,
                               PointSink& sink, Counters& counters) {
    std::vector<Point> cells;
    cells.reserve(a.size() * b.size());
    for (const auto& q : b) {
        for (const auto& p : a) cells.push_back(p + q);
    }
    counters.cells += cells.size();
    counters.note_heap(cells.size());

    MarriageBeforeConquest mbc(sink);
    mbc.partition(cells.begin(), cells.end(), std::clamp<std::size_t>(k_hint, 1, cells.size()));
    const std::size_t k = mbc.count();
    if (k_hint != 0 && k_hint != k) {
        std::clog << "kirkpatrick_seidel: k hint " << k_hint << " differs from output size " << k << '\n';
    }
    return k;
}

}  // namespace paretosum
