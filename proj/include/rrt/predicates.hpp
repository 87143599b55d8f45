#pragma once

#include <optional>
#include <span>

#include "rrt/coloring.hpp"

namespace rrt {

/// Two tuples of [X]^k that violate a (tail-)rainbow condition.
struct Collision {
    std::vector<Element> first;
    std::vector<Element> second;
    Color color;
};

// X must be strictly increasing and inside the coloring's domain.
bool is_rainbow(std::span<const Element> xs, const Coloring& f);

// True iff tuples of [X]^k whose last `tail_width` coordinates differ always
// get different colors. Width k is plain rainbowness; width k - 1 is the
// tail rainbow condition. Requires 1 <= tail_width <= k.
bool is_k_tail_rainbow(std::span<const Element> xs, const Coloring& f, std::size_t tail_width);

// Tail rainbow in the usual sense: width k - 1 (vacuous for k = 1).
bool is_tail_rainbow(std::span<const Element> xs, const Coloring& f);

std::optional<Collision> find_collision(std::span<const Element> xs, const Coloring& f,
                                        std::size_t tail_width);

// A color class spanning more than one value of the last coordinate, i.e. a
// witness that the whole domain is not a 1-tail rainbow.
std::optional<Collision> find_tail_domain_violation(const Coloring& f);

std::size_t default_tail_width(const Coloring& f);

} // namespace rrt
