#include "paretosum/spnd_tree.hpp"

#include <algorithm>
#include <cassert>

#include "paretosum/pareto_set.hpp"

namespace paretosum {

struct SpndTree::Node {
    Point lo{};
    Point hi{};
    std::size_t count = 0;
    bool leaf = true;
    std::vector<Point> points;                    // leaf only, sorted by x
    std::vector<std::unique_ptr<Node>> children;  // internal only, ordered by x

    void refresh() {
        if (leaf) {
            count = points.size();
            if (count != 0) {
                lo = {points.front().x, points.back().y};
                hi = {points.back().x, points.front().y};
            }
            return;
        }
        count = 0;
        for (const auto& c : children) count += c->count;
        if (children.empty()) return;
        lo = children.front()->lo;
        hi = children.front()->hi;
        for (const auto& c : children) {
            lo = {std::min(lo.x, c->lo.x), std::min(lo.y, c->lo.y)};
            hi = {std::max(hi.x, c->hi.x), std::max(hi.y, c->hi.y)};
        }
    }

    void clear() {
        points.clear();
        children.clear();
        leaf = true;
        count = 0;
    }

    // Returns true if cand is dominated by or equal to a stored point.
    bool prune(const Point& cand) {
        if (count == 0) return false;
        // Every stored point is <= hi, so all of them cover cand.
        if (weakly_dominates(hi, cand)) return true;
        // cand lies strictly below-left of the whole subtree.
        if (dominates(cand, lo)) {
            clear();
            return false;
        }
        if (!weakly_dominates(lo, cand) && !weakly_dominates(cand, hi)) return false;

        if (leaf) {
            for (const auto& q : points) {
                if (weakly_dominates(q, cand)) return true;
            }
            std::erase_if(points, [&](const Point& q) { return weakly_dominates(cand, q); });
            refresh();
            return false;
        }
        // A point that covers cand and a point cand dominates cannot both be
        // stored, so rejection never follows a removal.
        for (auto& c : children) {
            if (c->prune(cand)) return true;
        }
        std::erase_if(children, [](const auto& c) { return c->count == 0; });
        if (children.empty()) {
            clear();
        } else if (children.size() == 1) {
            auto only = std::move(children.front());
            *this = std::move(*only);
        } else {
            refresh();
        }
        return false;
    }

    // Returns a new right sibling when this node had to split.
    std::unique_ptr<Node> insert(const Point& cand, const SpndConfig& cfg) {
        if (leaf) {
            points.insert(std::upper_bound(points.begin(), points.end(), cand), cand);
            refresh();
            if (points.size() <= cfg.leaf_capacity) return nullptr;
            // Median split on the longer side. On a staircase the x order and
            // the reversed y order coincide, so either axis cuts at the same index.
            auto right = std::make_unique<Node>();
            const auto mid = points.begin() + static_cast<std::ptrdiff_t>(points.size() / 2);
            right->points.assign(mid, points.end());
            points.erase(mid, points.end());
            refresh();
            right->refresh();
            return right;
        }
        std::size_t idx = 0;
        while (idx + 1 < children.size() && children[idx]->hi.x < cand.x) ++idx;
        if (auto split = children[idx]->insert(cand, cfg)) {
            children.insert(children.begin() + static_cast<std::ptrdiff_t>(idx + 1), std::move(split));
        }
        refresh();
        if (children.size() <= cfg.max_children) return nullptr;
        auto right = std::make_unique<Node>();
        right->leaf = false;
        const auto mid = children.begin() + static_cast<std::ptrdiff_t>(children.size() / 2);
        right->children.assign(std::make_move_iterator(mid), std::make_move_iterator(children.end()));
        children.erase(mid, children.end());
        refresh();
        right->refresh();
        return right;
    }

    void collect(std::vector<Point>& out) const {
        if (leaf) {
            out.insert(out.end(), points.begin(), points.end());
            return;
        }
        for (const auto& c : children) c->collect(out);
    }

    std::size_t nodes() const {
        std::size_t n = 1;
        for (const auto& c : children) n += c->nodes();
        return n;
    }

    std::size_t height() const {
        std::size_t h = 0;
        for (const auto& c : children) h = std::max(h, c->height());
        return h + 1;
    }

    // Recomputes the stored count while checking structure; -1 on failure.
    long long verify(const SpndConfig& cfg, bool is_root) const {
        auto inside = [&](const Point& p) { return lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y; };
        if (leaf) {
            if (!children.empty() || points.size() > cfg.leaf_capacity) return -1;
            if (points.empty() && !is_root) return -1;
            if (!validate(points)) return -1;
            for (const auto& p : points) {
                if (!inside(p)) return -1;
            }
            return points.size() == count ? static_cast<long long>(count) : -1;
        }
        if (!points.empty() || children.empty() || children.size() > cfg.max_children) return -1;
        long long total = 0;
        for (std::size_t i = 0; i < children.size(); ++i) {
            const auto& c = *children[i];
            if (!inside(c.lo) || !inside(c.hi)) return -1;
            if (i > 0) {
                const auto& prev = *children[i - 1];
                if (!(prev.hi.x < c.lo.x) || !(prev.lo.y > c.hi.y)) return -1;
            }
            const auto sub = c.verify(cfg, false);
            if (sub < 0) return -1;
            total += sub;
        }
        return total == static_cast<long long>(count) ? total : -1;
    }
};

SpndTree::SpndTree(SpndConfig config) : config_(config), root_(std::make_unique<Node>()) {
    assert(config_.leaf_capacity >= 1 && config_.max_children >= 2);
}

SpndTree::~SpndTree() = default;
SpndTree::SpndTree(SpndTree&&) noexcept = default;
SpndTree& SpndTree::operator=(SpndTree&&) noexcept = default;

SpndTree SpndTree::bulk_load(std::span<const Point> sorted, SpndConfig config) {
    SpndTree tree(config);
    if (sorted.empty()) return tree;
    assert(validate(sorted));

    // Spread n items over ceil(n / cap) groups of near-equal size.
    auto groups = [](std::size_t n, std::size_t cap) { return (n + cap - 1) / cap; };

    std::vector<std::unique_ptr<Node>> level;
    const std::size_t leaves = groups(sorted.size(), config.leaf_capacity);
    for (std::size_t g = 0, begin = 0; g < leaves; ++g) {
        const std::size_t end = sorted.size() * (g + 1) / leaves;
        auto leaf = std::make_unique<Node>();
        leaf->points.assign(sorted.begin() + static_cast<std::ptrdiff_t>(begin),
                            sorted.begin() + static_cast<std::ptrdiff_t>(end));
        leaf->refresh();
        level.push_back(std::move(leaf));
        begin = end;
    }
    while (level.size() > 1) {
        std::vector<std::unique_ptr<Node>> parents;
        const std::size_t count = groups(level.size(), config.max_children);
        for (std::size_t g = 0, begin = 0; g < count; ++g) {
            const std::size_t end = level.size() * (g + 1) / count;
            auto parent = std::make_unique<Node>();
            parent->leaf = false;
            for (std::size_t i = begin; i < end; ++i) parent->children.push_back(std::move(level[i]));
            parent->refresh();
            parents.push_back(std::move(parent));
            begin = end;
        }
        level = std::move(parents);
    }
    tree.root_ = std::move(level.front());
    return tree;
}

bool SpndTree::non_dom_prune(const Point& cand) { return !root_->prune(cand); }

void SpndTree::insert(const Point& cand) {
#ifndef NDEBUG
    const auto stored = extract();
    assert(std::none_of(stored.begin(), stored.end(), [&](const Point& q) { return weakly_dominates(q, cand); }));
#endif
    if (auto split = root_->insert(cand, config_)) {
        auto root = std::make_unique<Node>();
        root->leaf = false;
        root->children.push_back(std::move(root_));
        root->children.push_back(std::move(split));
        root->refresh();
        root_ = std::move(root);
    }
    if (config_.rebuild_threshold != 0 && ++pending_inserts_ >= config_.rebuild_threshold) rebuild();
}

void SpndTree::rebuild() {
    const auto points = extract();
    *this = [&] {
        auto fresh = bulk_load(points, config_);
        fresh.rebuilds_ = rebuilds_ + 1;
        return fresh;
    }();
}

std::size_t SpndTree::size() const { return root_->count; }

std::vector<Point> SpndTree::extract() const {
    std::vector<Point> out;
    out.reserve(size());
    root_->collect(out);
    return out;
}

std::size_t SpndTree::node_count() const { return root_->nodes(); }
std::size_t SpndTree::depth() const { return root_->height(); }

bool SpndTree::check_invariants() const { return root_->verify(config_, true) == static_cast<long long>(size()); }

}  // namespace paretosum
