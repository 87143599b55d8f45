#pragma once

#include <vector>

#include "rrt/coloring.hpp"
#include "rrt/schedule.hpp"

namespace rrt {

/// S: tuples with h(k) <= t[k] < h(k+1) at every position; T: the members of
/// S that are tail rainbows. Both are closed under initial segments.
struct BlockTree {
    const Coloring* coloring = nullptr;  // borrowed
    BoundSchedule schedule{ScheduleKind::block_h, 0, 0};
    std::size_t depth = 0;
    std::vector<std::vector<std::vector<Element>>> s_levels;
    std::vector<std::vector<std::vector<Element>>> t_levels;
    // For each T node, how many of its S-children are in T (last level: 0).
    std::vector<std::vector<std::uint64_t>> t_children;
};

// Requires a pair coloring with domain size >= h(depth).
BlockTree build_block_tree(const Coloring& f, std::size_t depth,
                           std::uint64_t node_budget = 1'000'000);

} // namespace rrt
