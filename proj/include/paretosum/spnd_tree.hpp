#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "paretosum/point.hpp"

namespace paretosum {

struct SpndConfig {
    std::size_t leaf_capacity = 20;     // p
    std::size_t max_children = 3;       // c
    std::size_t rebuild_threshold = 520;  // 0 disables periodic rebuilds
};

/// Space-partitioned non-dominance tree holding a dynamic 2-D Pareto set.
///
/// Points live in leaves (at most `leaf_capacity` each); internal nodes have
/// at most `max_children` children ordered by x. Every node keeps the
/// bounding rectangle [lo, hi] of its subtree, and sibling rectangles are
/// disjoint along both axes. A full leaf splits at the median along its
/// longer side; overfull internal nodes split upwards, B-tree style. After
/// `rebuild_threshold` insertions the tree is bulk-loaded from its contents.
class SpndTree {
public:
    explicit SpndTree(SpndConfig config = {});
    ~SpndTree();
    SpndTree(SpndTree&&) noexcept;
    SpndTree& operator=(SpndTree&&) noexcept;

    /// Bulk-loads a sorted Pareto set.
    static SpndTree bulk_load(std::span<const Point> sorted, SpndConfig config = {});

    /// False iff some stored point dominates or equals cand. When true,
    /// every stored point dominated by cand has been removed.
    bool non_dom_prune(const Point& cand);

    /// Stores cand. Precondition: non_dom_prune(cand) just returned true.
    void insert(const Point& cand);

    /// non_dom_prune followed by insert when it succeeds.
    bool offer(const Point& cand) {
        if (!non_dom_prune(cand)) return false;
        insert(cand);
        return true;
    }

    std::size_t size() const;
    bool empty() const { return size() == 0; }

    /// Stored points in lexicographic order.
    std::vector<Point> extract() const;

    std::size_t node_count() const;
    std::size_t depth() const;
    std::size_t rebuilds() const { return rebuilds_; }
    std::size_t inserts_since_rebuild() const { return pending_inserts_; }
    const SpndConfig& config() const { return config_; }

    /// Structural self-check: bounds, capacities, sibling disjointness,
    /// cached counts and the Pareto property of the stored set.
    bool check_invariants() const;

private:
    struct Node;

    void rebuild();

    SpndConfig config_;
    std::unique_ptr<Node> root_;
    std::size_t rebuilds_ = 0;
    std::size_t pending_inserts_ = 0;
};

}  // namespace paretosum
