#include "paretosum/successive.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "paretosum/base_algorithms.hpp"

namespace paretosum {

std::optional<std::size_t> ColumnProbe::first_row() const {
    if (!f_x || !l_x || !f_y || !l_y) return std::nullopt;
    const std::size_t lo = std::max(*f_x, *f_y);
    const std::size_t hi = std::min(*l_x, *l_y);
    if (lo > hi) return std::nullopt;
    return lo;
}

std::size_t default_delta(std::size_t rows, std::size_t cols) {
    const std::size_t n = std::max(rows, cols);
    auto d = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (d * d < n) ++d;
    while (d > 1 && (d - 1) * (d - 1) >= n) --d;
    return std::max<std::size_t>(d, 1);
}

ColumnProbe probe_column(const MinkowskiView& m, std::size_t j, const SearchRange& r) {
    const auto a = m.a();
    const Point off = m.b()[j];
    const std::size_t n = a.size();
    auto index = [&](auto it) { return static_cast<std::size_t>(it - a.begin()); };

    ColumnProbe probe;
    const std::size_t fx = index(std::partition_point(a.begin(), a.end(),
                                                      [&](const Point& p) { return p.x + off.x < r.x_min; }));
    if (fx < n) probe.f_x = fx;
    const std::size_t ex = r.x_max ? index(std::partition_point(a.begin(), a.end(),
                                                                [&](const Point& p) { return p.x + off.x < *r.x_max; }))
                                   : n;
    if (ex > 0) probe.l_x = ex - 1;
    const std::size_t fy = index(std::partition_point(a.begin(), a.end(),
                                                      [&](const Point& p) { return p.y + off.y >= r.y_max; }));
    if (fy < n) probe.f_y = fy;
    const std::size_t ey = r.y_min ? index(std::partition_point(a.begin(), a.end(),
                                                                [&](const Point& p) { return p.y + off.y >= *r.y_min; }))
                                   : n;
    if (ey > 0) probe.l_y = ey - 1;
    return probe;
}

std::optional<RangeHit> range_min_binary(const MinkowskiView& m, const SearchRange& r, Counters* counters) {
    std::optional<RangeHit> best;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const auto row = probe_column(m, j, r).first_row();
        if (!row) continue;
        const Point p = m.cell(*row, j);
        if (counters) ++counters->cells;
        if (!best || p < best->point) best = RangeHit{p, *row, j};
    }
    return best;
}

std::optional<RangeHit> range_min_sweep(const MinkowskiView& m, const SearchRange& r, const SweepOptions& opts,
                                        Counters* counters) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return std::nullopt;
    const std::size_t delta = std::max<std::size_t>(opts.delta, 1);

    std::uint64_t inspected = 0;
    std::uint64_t jumps = 0;
    auto feasible = [&](std::size_t i, std::size_t j) {
        ++inspected;
        return r.open_side(m.cell(i, j));
    };

    std::optional<RangeHit> best;
    std::size_t row = rows - 1;
    std::size_t j = 0;
    const Coord first_x = m.a().front().x;
    while (j < cols) {
        // Columns further right start beyond the best x found so far.
        if (best && m.b()[j].x + first_x > best->point.x) break;
        if (!feasible(row, j)) {
            // Columns without a feasible cell form a prefix; row is still the
            // bottom one here. A failing bottom cell further right proves
            // every column in between fails too.
            if (delta > 1) {
                while (j + delta < cols && !feasible(row, j + delta)) {
                    j += delta;
                    ++jumps;
                }
            }
            ++j;
            continue;
        }
        // Feasible rows of a column form a suffix; climb to its top.
        if (delta > 1) {
            while (row >= delta && feasible(row - delta, j)) {
                row -= delta;
                ++jumps;
            }
        }
        while (row > 0 && feasible(row - 1, j)) --row;

        const Point p = m.cell(row, j);
        if (r.closed_side(p) && (!best || p < best->point)) best = RangeHit{p, row, j};
        ++j;
    }
    if (counters) {
        counters->cells += inspected;
        counters->delta_jumps += jumps;
    }
    return best;
}

std::size_t successive(const ParetoSet& a, const ParetoSet& b, Oracle oracle, const SweepOptions& opts,
                       PointSink& sink, Counters& counters) {
    if (a.empty() || b.empty()) return 0;
    const MinkowskiView m(a, b);
    std::size_t k = 0;
    std::optional<Point> next = m.cell(0, 0);
    while (next) {
        sink.accept(*next);
        ++k;
        const auto range = SearchRange::after(*next);
        ++counters.oracle_calls;
        const auto hit = oracle == Oracle::sweep ? range_min_sweep(m, range, opts, &counters)
                                                 : range_min_binary(m, range, &counters);
        next = hit ? std::optional<Point>(hit->point) : std::nullopt;
    }
    return k;
}

std::size_t hybrid_sss_sc(const ParetoSet& a, const ParetoSet& b, const SweepOptions& opts, PointSink& sink,
                          Counters& counters, bool* completed_early) {
    if (completed_early) *completed_early = true;
    if (a.empty() || b.empty()) return 0;
    const MinkowskiView m(a, b);
    const std::size_t budget = std::max(a.size(), b.size());

    std::vector<Point> found{m.cell(0, 0)};
    for (std::size_t calls = 0; calls < budget; ++calls) {
        ++counters.oracle_calls;
        const auto hit = range_min_sweep(m, SearchRange::after(found.back()), opts, &counters);
        if (!hit) {
            counters.note_heap(found.size());
            for (const auto& p : found) sink.accept(p);
            return found.size();
        }
        found.push_back(hit->point);
    }
    counters.note_heap(found.size());
    found = {};
    if (completed_early) *completed_early = false;
    return sort_compare(a, b, sink, counters);
}

}  // namespace paretosum
