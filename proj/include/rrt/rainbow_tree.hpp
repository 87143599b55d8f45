#pragma once

#include <cstdint>
#include <vector>

#include "rrt/rainbow_ops.hpp"
#include "rrt/schedule.hpp"

namespace rrt {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;

struct TreeNode {
    std::vector<Element> tau;
    std::uint32_t parent = 0;      // index into the previous level
    std::uint32_t child_rank = 0;  // position of max(tau) among the parent's viable candidates
    bool truncated = false;        // got fewer children than its quota
};

/// A levelled tree of rainbow extensions of sigma drawn from the reservoir.
/// Borrows the coloring it was built from; the coloring must outlive it.
class RainbowTree {
public:
    RainbowTree(ExtensionContext ctx, const Coloring& g, BoundSchedule schedule, ViabilityMode mode,
                std::vector<std::vector<TreeNode>> levels);

    const ExtensionContext& context() const noexcept { return ctx_; }
    const Coloring& coloring() const noexcept { return *g_; }
    const BoundSchedule& schedule() const noexcept { return schedule_; }
    ViabilityMode mode() const noexcept { return mode_; }
    std::size_t depth() const noexcept { return levels_.size() - 1; }
    const std::vector<TreeNode>& level(std::size_t l) const { return levels_.at(l); }
    const std::vector<std::vector<TreeNode>>& levels() const noexcept { return levels_; }

    // sigma followed by tau.
    std::vector<Element> extension(const TreeNode& node) const;

private:
    ExtensionContext ctx_;
    const Coloring* g_;
    BoundSchedule schedule_;
    ViabilityMode mode_;
    std::vector<std::vector<TreeNode>> levels_;
};

/// T(sigma, X, g) for a normal pair coloring: level 0 is the empty tuple and
/// a level-l node tau gets as children the least b_{l+1} elements of
/// V(sigma tau, g) in X. Requires g acceptable for ctx.
RainbowTree build_rainbow_tree(const ExtensionContext& ctx, const Coloring& g, std::size_t depth,
                               std::uint64_t node_budget = kDefaultNodeBudget);

/// The tail variant for a semi-normal triple coloring: a level-l node tau gets
/// the first c_{|sigma tau|} elements of tV(sigma tau, g) in X above max tau.
RainbowTree build_quadruple_tree(const ExtensionContext& ctx, const Coloring& g, std::size_t depth,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

} // namespace rrt
