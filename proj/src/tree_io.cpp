#include "rrt/tree_io.hpp"

#include <bit>

namespace rrt {

nlohmann::json to_json(const BoundSchedule& s) {
    nlohmann::json caps = nlohmann::json::array();
    for (std::size_t l = 0; l <= s.depth(); ++l) caps.push_back(s.capacity(l));
    return {{"kind", std::string(to_string(s.kind()))},
            {"sigma_len", s.sigma_len()},
            {"depth", s.depth()},
            {"values", s.values()},
            {"capacities", std::move(caps)}};
}

nlohmann::json to_json(const RainbowTree& tree) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& level : tree.levels()) {
        nlohmann::json nodes = nlohmann::json::array();
        for (const auto& node : level) nodes.push_back(node.tau);
        levels.push_back(std::move(nodes));
    }
    nlohmann::json measures = nlohmann::json::array();
    bool powers_of_two = true;
    for (std::size_t l = 0; l < tree.depth(); ++l) {
        powers_of_two = powers_of_two && std::has_single_bit(tree.schedule().branching(l));
    }
    if (powers_of_two) {
        for (const auto& m : binary_encode_tree(tree).measures) {
            measures.push_back({{"level", m.level},
                                {"cylinders", m.cylinders},
                                {"denominator", m.denominator},
                                {"bits", m.bits},
                                {"measure", m.value}});
        }
    }
    return {{"schedule", to_json(tree.schedule())},
            {"sigma", tree.context().sigma().vec()},
            {"levels", std::move(levels)},
            {"measures", std::move(measures)}};
}

nlohmann::json to_json(const BlockTree& bt) {
    nlohmann::json s_counts = nlohmann::json::array(), t_levels = nlohmann::json::array();
    for (const auto& level : bt.s_levels) s_counts.push_back(level.size());
    for (const auto& level : bt.t_levels) t_levels.push_back(level);
    return {{"schedule", to_json(bt.schedule)},
            {"s_counts", std::move(s_counts)},
            {"t_levels", std::move(t_levels)}};
}

} // namespace rrt
