#pragma once

#include <span>

#include "rrt/coloring.hpp"

namespace rrt {

/// Dual of a b-bounded coloring: g(t) is the colex position of t inside its
/// f-color class, so g takes values in [0, b) and two tuples with the same
/// f-color always get different g-colors. Hence every g-homogeneous set is an
/// f-rainbow.
Coloring galvin_dual(const Coloring& f, std::size_t bound);

bool is_homogeneous(std::span<const Element> xs, const Coloring& g);

} // namespace rrt
