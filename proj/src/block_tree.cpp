#include "rrt/block_tree.hpp"

namespace rrt {

namespace {

// sigma + {x} stays a tail rainbow given that sigma is one: the new pairs
// (w, x) all share their last coordinate, so only clashes with [sigma]^2 count.
bool extends_tail_rainbow(const Coloring& f, const std::vector<Element>& sigma,
                          const std::vector<Color>& sigma_colors, Element x) {
    for (Element w : sigma) {
        const Color c = f(w, x);
        for (Color old : sigma_colors) {
            if (old == c) return false;
        }
    }
    return true;
}

} // namespace

BlockTree build_block_tree(const Coloring& f, std::size_t depth, std::uint64_t node_budget) {
    if (f.arity() != 2) throw PreconditionError("block trees need a pair coloring");
    BlockTree bt;
    bt.coloring = &f;
    bt.depth = depth;
    bt.schedule = BoundSchedule(ScheduleKind::block_h, 0, depth);
    if (f.domain_size() < bt.schedule.h(depth)) {
        throw PreconditionError("block tree of depth " + std::to_string(depth) + " needs n >= h(" +
                                std::to_string(depth) + ") = " + std::to_string(bt.schedule.h(depth)) +
                                ", got n = " + std::to_string(f.domain_size()));
    }
    if (bt.schedule.capacity(depth) > node_budget) {
        throw PreconditionError("block tree level " + std::to_string(depth) + " has " +
                                std::to_string(bt.schedule.capacity(depth)) +
                                " nodes, above the node budget");
    }
    bt.s_levels.assign(depth + 1, {});
    bt.t_levels.assign(depth + 1, {});
    bt.t_children.assign(depth + 1, {});
    bt.s_levels[0].push_back({});
    bt.t_levels[0].push_back({});
    for (std::size_t m = 0; m < depth; ++m) {
        const auto lo = static_cast<Element>(bt.schedule.h(m));
        const auto hi = static_cast<Element>(bt.schedule.h(m + 1));
        for (const auto& s : bt.s_levels[m]) {
            for (Element x = lo; x < hi; ++x) {
                auto child = s;
                child.push_back(x);
                bt.s_levels[m + 1].push_back(std::move(child));
            }
        }
        bt.t_children[m].assign(bt.t_levels[m].size(), 0);
        for (std::size_t i = 0; i < bt.t_levels[m].size(); ++i) {
            const auto& sigma = bt.t_levels[m][i];
            std::vector<Color> colors;
            for (std::size_t a = 0; a < sigma.size(); ++a) {
                for (std::size_t b = a + 1; b < sigma.size(); ++b) colors.push_back(f(sigma[a], sigma[b]));
            }
            for (Element x = lo; x < hi; ++x) {
                if (!extends_tail_rainbow(f, sigma, colors, x)) continue;
                auto child = sigma;
                child.push_back(x);
                bt.t_levels[m + 1].push_back(std::move(child));
                ++bt.t_children[m][i];
            }
        }
    }
    bt.t_children[depth].assign(bt.t_levels[depth].size(), 0);
    return bt;
}

} // namespace rrt
