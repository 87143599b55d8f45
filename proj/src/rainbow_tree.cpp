#include "rrt/rainbow_tree.hpp"

#include <algorithm>

#include "rrt/normalize.hpp"

namespace rrt {

RainbowTree::RainbowTree(ExtensionContext ctx, const Coloring& g, BoundSchedule schedule,
                         ViabilityMode mode, std::vector<std::vector<TreeNode>> levels)
    : ctx_(std::move(ctx)), g_(&g), schedule_(std::move(schedule)), mode_(mode),
      levels_(std::move(levels)) {}

std::vector<Element> RainbowTree::extension(const TreeNode& node) const {
    std::vector<Element> out = ctx_.sigma().vec();
    out.insert(out.end(), node.tau.begin(), node.tau.end());
    return out;
}

namespace {

RainbowTree grow(const ExtensionContext& ctx, const Coloring& g, BoundSchedule schedule,
                 ViabilityMode mode, std::size_t depth, std::uint64_t node_budget) {
    if (!is_acceptable(g, ctx)) {
        throw PreconditionError("coloring is not acceptable for (sigma, X): some reservoir element is "
                                "not viable for sigma");
    }
    if (schedule.capacity(depth) > node_budget) {
        throw PreconditionError("level " + std::to_string(depth) + " may hold " +
                                std::to_string(schedule.capacity(depth)) +
                                " nodes, above the node budget " + std::to_string(node_budget));
    }
    const auto reservoir = ctx.reservoir();
    std::vector<std::vector<TreeNode>> levels(1);
    levels[0].push_back(TreeNode{});
    for (std::size_t l = 0; l < depth; ++l) {
        const std::uint64_t quota = schedule.branching(l);
        std::vector<TreeNode> next;
        for (std::size_t p = 0; p < levels[l].size(); ++p) {
            TreeNode& parent = levels[l][p];
            std::vector<Element> base = ctx.sigma().vec();
            base.insert(base.end(), parent.tau.begin(), parent.tau.end());
            ViabilityChecker checker(g, base, mode);
            auto it = parent.tau.empty()
                          ? reservoir.begin()
                          : std::upper_bound(reservoir.begin(), reservoir.end(), parent.tau.back());
            std::uint32_t taken = 0;
            for (; it != reservoir.end() && taken < quota; ++it) {
                if (!checker.accepts(*it)) continue;
                TreeNode child;
                child.tau = parent.tau;
                child.tau.push_back(*it);
                child.parent = static_cast<std::uint32_t>(p);
                child.child_rank = taken++;
                next.push_back(std::move(child));
            }
            parent.truncated = taken < quota;
        }
        // A level never exceeds the schedule capacity.
        if (next.size() > schedule.capacity(l + 1)) {
            throw Error("internal: level " + std::to_string(l + 1) + " exceeds its capacity");
        }
        levels.push_back(std::move(next));
    }
    // Every node must extend sigma to a rainbow.
    RainbowTree tree(ctx, g, std::move(schedule), mode, std::move(levels));
    for (const auto& level : tree.levels()) {
        for (const auto& node : level) {
            const auto ext = tree.extension(node);
            const bool ok = mode == ViabilityMode::rainbow ? is_rainbow(ext, g) : is_tail_rainbow(ext, g);
            if (!ok) throw Error("internal: tree node is not a rainbow extension of sigma");
        }
    }
    return tree;
}

} // namespace

RainbowTree build_rainbow_tree(const ExtensionContext& ctx, const Coloring& g, std::size_t depth,
                               std::uint64_t node_budget) {
    if (g.arity() != 2) throw PreconditionError("rainbow trees need a pair coloring");
    return grow(ctx, g, BoundSchedule(ScheduleKind::pairs_b, ctx.sigma().size(), depth),
                ViabilityMode::rainbow, depth, node_budget);
}

RainbowTree build_quadruple_tree(const ExtensionContext& ctx, const Coloring& g, std::size_t depth,
                                 std::uint64_t node_budget) {
    if (g.arity() != 3) throw PreconditionError("tail rainbow trees need a triple coloring");
    return grow(ctx, g, BoundSchedule(ScheduleKind::quadruple_c, ctx.sigma().size(), depth),
                ViabilityMode::tail, depth, node_budget);
}

} // namespace rrt
