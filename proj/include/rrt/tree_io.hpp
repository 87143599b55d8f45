#pragma once

#include <json.hpp>

#include "rrt/block_tree.hpp"
#include "rrt/rainbow_tree.hpp"
#include "rrt/tree_verify.hpp"

namespace rrt {

nlohmann::json to_json(const BoundSchedule& s);

// {schedule, sigma, levels: [[tau...]...], measures: [...]}
nlohmann::json to_json(const RainbowTree& tree);

nlohmann::json to_json(const BlockTree& bt);

} // namespace rrt
