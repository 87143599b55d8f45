#pragma once

#include "rrt/coloring.hpp"

namespace rrt {

/// Normal form of a 2-bounded pair coloring whose domain is a tail rainbow:
/// gbar(x0, x1) = <gtilde(x0, x1), x1>, where gtilde(x0, x1) is the least
/// x <= x0 with g(x, x1) = g(x0, x1). Colors of the result are pair codes.
/// The result has exactly the same rainbow subsets as g.
Coloring normalize_pairs(const Coloring& g);

// g is 2-bounded and g(x0, x1) == <gtilde(x0, x1), x1> at every pair.
bool is_normal(const Coloring& g);

/// Semi-normal form of a 2-bounded triple coloring whose domain is a 1-tail
/// rainbow. The color of (x0, x1, x2) is the triple code <y0, y1, x2> of the
/// least pair (y0, y1) with g(y0, y1, x2) = g(x0, x1, x2).
Coloring semi_normalize_triples(const Coloring& g);

bool is_semi_normal(const Coloring& g);

// Throws PreconditionError (with witness) unless g has the given arity, is
// 2-bounded, and its domain is a 1-tail rainbow.
void require_two_bounded_tail_domain(const Coloring& g, std::size_t arity, const char* op);

} // namespace rrt
