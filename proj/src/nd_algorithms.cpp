#include "paretosum/nd_algorithms.hpp"

#include <algorithm>

#include "paretosum/hull.hpp"

namespace paretosum {

namespace {

std::size_t emit_tree(const SpndTree& tree, PointSink& sink) {
    const auto points = tree.extract();
    for (const auto& p : points) sink.accept(p);
    return points.size();
}

void note_tree(const SpndTree& tree, Counters& counters) {
    counters.note_frontier(tree.size());
    counters.nodes_peak = std::max<std::uint64_t>(counters.nodes_peak, tree.node_count());
}

}  // namespace

std::size_t pareto_tree_filter(const ParetoSet& a, const ParetoSet& b, bool seed_with_hull, PointSink& sink,
                               Counters& counters, const SpndConfig& config) {
    if (a.empty() || b.empty()) return 0;
    SpndTree tree(config);
    if (seed_with_hull) {
        std::vector<Point> seed;
        for (const auto& s : convex_seed(a, b)) seed.push_back(s.point);
        tree = SpndTree::bulk_load(seed, config);
    } else {
        tree.offer(a.front() + b.front());
        tree.offer(a.back() + b.back());
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            ++counters.checks;
            ++counters.cells;
            tree.offer(a[i] + b[j]);
        }
        counters.note_frontier(tree.size());
    }
    note_tree(tree, counters);
    counters.rebuilds += tree.rebuilds();
    return emit_tree(tree, sink);
}

std::size_t nondomdc_sequential(const ParetoSet& a, const ParetoSet& b, PointSink& sink, Counters& counters,
                                const SpndConfig& config) {
    if (a.empty() || b.empty()) return 0;
    SpndTree tree(config);
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            ++counters.checks;
            ++counters.cells;
            tree.offer(a[i] + b[j]);
        }
        note_tree(tree, counters);
    }
    counters.rebuilds += tree.rebuilds();
    return emit_tree(tree, sink);
}

std::size_t nondomdc_doubling(const ParetoSet& a, const ParetoSet& b, PointSink& sink, Counters& counters,
                              std::vector<std::size_t>* level_sizes, const SpndConfig& config) {
    if (a.empty() || b.empty()) return 0;
    // Trees here live for a single merge and are never rebuilt.
    SpndConfig merge_config = config;
    merge_config.rebuild_threshold = 0;

    auto column = [&](std::size_t j) {
        std::vector<Point> col;
        col.reserve(a.size());
        for (const auto& p : a) col.push_back(p + b[j]);
        counters.cells += col.size();
        return col;
    };
    auto merge = [&](std::vector<Point> x, std::vector<Point> y) {
        if (x.size() < y.size()) std::swap(x, y);
        auto tree = SpndTree::bulk_load(x, merge_config);
        for (const auto& p : y) {
            ++counters.checks;
            tree.offer(p);
        }
        counters.nodes_peak = std::max<std::uint64_t>(counters.nodes_peak, tree.node_count());
        return tree.extract();
    };

    std::vector<std::vector<Point>> level;
    if (b.size() == 1) {
        level.push_back(column(0));
    } else {
        for (std::size_t j = 0; j + 1 < b.size(); j += 2) level.push_back(merge(column(j), column(j + 1)));
        if (b.size() % 2 == 1) level.push_back(column(b.size() - 1));
    }
    auto record = [&] {
        std::size_t total = 0;
        for (const auto& f : level) total += f.size();
        counters.note_frontier(total);
        if (level_sizes) level_sizes->push_back(total);
    };
    record();
    while (level.size() > 1) {
        std::vector<std::vector<Point>> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            next.push_back(merge(std::move(level[i]), std::move(level[i + 1])));
        }
        if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
        level = std::move(next);
        record();
    }
    for (const auto& p : level.front()) sink.accept(p);
    return level.front().size();
}

}  // namespace paretosum
