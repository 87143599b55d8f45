#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rrt/coloring.hpp"

namespace rrt {

enum class ColoringFormat { rrcol, json };

ColoringFormat parse_format(std::string_view name);

// RRCOL v1 text: header `RRCOL 1 k=<arity> b=<bound> n=<domain>`, then one
// `x0 ... x{k-1} c` line per tuple in colex order. `#` starts a comment.
std::string to_rrcol(const Coloring& f);
Coloring parse_rrcol(std::string_view text);

nlohmann::json to_json(const Coloring& f);
Coloring coloring_from_json(const nlohmann::json& j);

std::string serialize(const Coloring& f, ColoringFormat format);
// Detects JSON by a leading '{', otherwise expects RRCOL.
Coloring parse_coloring(std::string_view text);

Coloring read_coloring(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

} // namespace rrt
