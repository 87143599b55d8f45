#include "rrt/normalize.hpp"

#include <algorithm>
#include <unordered_map>

#include "rrt/predicates.hpp"

namespace rrt {

namespace {

// Replaces every color by the least code in its class. Under a 1-tail domain
// the members of a class share the last coordinate, so the least code is the
// least (k-1)-prefix extended by that coordinate.
Coloring min_code_form(const Coloring& g) {
    std::vector<std::pair<Color, Code>> sorted;
    sorted.reserve(g.size());
    for (Code r = 0; r < g.size(); ++r) sorted.emplace_back(g.at(r), r);
    std::sort(sorted.begin(), sorted.end());
    std::vector<Color> table(g.size());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j].first == sorted[i].first) ++j;
        for (std::size_t t = i; t < j; ++t) table[sorted[t].second] = sorted[i].second;
        i = j;
    }
    return Coloring(g.arity(), 2, g.domain_size(), std::move(table));
}

} // namespace

void require_two_bounded_tail_domain(const Coloring& g, std::size_t arity, const char* op) {
    if (g.arity() != arity) {
        throw PreconditionError(std::string(op) + " needs an arity-" + std::to_string(arity) +
                                " coloring, got arity " + std::to_string(g.arity()));
    }
    if (g.bound() > 2) {
        if (auto w = find_bound_violation(arity, g.table(), 2)) {
            throw PreconditionError(std::string(op) + ": coloring is not 2-bounded", std::move(*w));
        }
    }
    if (auto c = find_tail_domain_violation(g)) {
        throw PreconditionError(std::string(op) + ": domain is not a 1-tail rainbow",
                                Witness{{c->first, c->second},
                                        "same color " + std::to_string(c->color) +
                                            " on tuples with different last coordinates"});
    }
}

Coloring normalize_pairs(const Coloring& g) {
    require_two_bounded_tail_domain(g, 2, "normalize_pairs");
    return min_code_form(g);
}

Coloring semi_normalize_triples(const Coloring& g) {
    require_two_bounded_tail_domain(g, 3, "semi_normalize_triples");
    return min_code_form(g);
}

bool is_normal(const Coloring& g) {
    if (g.arity() != 2) return false;
    if (g.bound() > 2 && g.max_class_size() > 2) return false;
    const Element n = static_cast<Element>(g.domain_size());
    std::unordered_map<Color, Element> first_seen;
    for (Element x1 = 1; x1 < n; ++x1) {
        first_seen.clear();
        for (Element x0 = 0; x0 < x1; ++x0) {
            const Color c = g(x0, x1);
            const Element least = first_seen.try_emplace(c, x0).first->second;
            if (c != pair_code(least, x1)) return false;
        }
    }
    return true;
}

bool is_semi_normal(const Coloring& g) {
    if (g.arity() != 3) return false;
    if (g.bound() > 2 && g.max_class_size() > 2) return false;
    const Element n = static_cast<Element>(g.domain_size());
    std::unordered_map<Color, std::pair<Element, Element>> first_seen;
    for (Element x2 = 2; x2 < n; ++x2) {
        first_seen.clear();
        // Pairs below x2 in increasing pair-code order.
        for (Element y1 = 1; y1 < x2; ++y1) {
            for (Element y0 = 0; y0 < y1; ++y0) {
                const Color c = g(y0, y1, x2);
                const auto [u0, u1] = first_seen.try_emplace(c, y0, y1).first->second;
                if (c != triple_code(u0, u1, x2)) return false;
            }
        }
    }
    return true;
}

} // namespace rrt
