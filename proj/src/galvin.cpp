#include "rrt/galvin.hpp"

#include <algorithm>
#include <optional>

#include "rrt/combinatorics.hpp"

namespace rrt {

Coloring galvin_dual(const Coloring& f, std::size_t bound) {
    if (bound < 1) throw PreconditionError("bound must be at least 1");
    if (auto w = find_bound_violation(f.arity(), f.table(), bound)) {
        throw PreconditionError("coloring is not " + std::to_string(bound) + "-bounded", std::move(*w));
    }
    // Stable sort by color keeps each class in increasing rank (colex) order.
    std::vector<Code> order(f.size());
    for (Code r = 0; r < order.size(); ++r) order[r] = r;
    std::stable_sort(order.begin(), order.end(), [&](Code a, Code b) { return f.at(a) < f.at(b); });
    std::vector<Color> table(f.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const bool starts_class = i == 0 || f.at(order[i]) != f.at(order[i - 1]);
        table[order[i]] = starts_class ? 0 : table[order[i - 1]] + 1;
    }
    // Values are bounded by `bound`, not class sizes; the table size is a
    // trivially valid declared bound.
    return Coloring(f.arity(), std::max<std::size_t>(1, f.size()), f.domain_size(), std::move(table));
}

bool is_homogeneous(std::span<const Element> xs, const Coloring& g) {
    require_increasing(xs, "set");
    if (!xs.empty() && xs.back() >= g.domain_size()) throw PreconditionError("set leaves the domain");
    std::optional<Color> seen;
    return for_each_subset(xs, g.arity(), [&](std::span<const Element> t) {
        const Color c = g.at(encode_tuple(t).rank);
        if (seen && *seen != c) return false;
        seen = c;
        return true;
    });
}

} // namespace rrt
