#include "rrt/coloring.hpp"

#include <algorithm>
#include <limits>

#include "rrt/combinatorics.hpp"

namespace rrt {

namespace {

// Colex tuples of the given arity are small enough to rebuild from rank.
std::vector<Element> tuple_at(std::size_t arity, Code rank) { return decode_tuple(arity, rank); }

} // namespace

std::size_t table_size(std::size_t arity, std::size_t n) {
    if (arity < 1 || arity > kMaxArity) {
        throw PreconditionError("arity must lie in [1, " + std::to_string(kMaxArity) + "], got " +
                                std::to_string(arity));
    }
    if (n > std::numeric_limits<Element>::max()) throw PreconditionError("domain too large");
    const std::uint64_t size = binomial(n, arity);
    if (size > (std::uint64_t{1} << 32)) {
        throw PreconditionError("C(" + std::to_string(n) + ", " + std::to_string(arity) +
                                ") entries exceed the supported table size");
    }
    return static_cast<std::size_t>(size);
}

std::optional<Witness> find_bound_violation(std::size_t arity, std::span<const Color> table,
                                            std::size_t bound) {
    std::vector<std::pair<Color, Code>> sorted;
    sorted.reserve(table.size());
    for (Code r = 0; r < table.size(); ++r) sorted.emplace_back(table[r], r);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j].first == sorted[i].first) ++j;
        if (j - i > bound) {
            Witness w;
            for (std::size_t t = i; t < j; ++t) w.tuples.push_back(tuple_at(arity, sorted[t].second));
            w.detail = "color " + std::to_string(sorted[i].first) + " used " +
                       std::to_string(j - i) + " times, bound is " + std::to_string(bound);
            return w;
        }
        i = j;
    }
    return std::nullopt;
}

Coloring::Coloring(std::size_t arity, std::size_t bound, std::size_t n, std::vector<Color> table)
    : arity_(arity), bound_(bound), n_(n), table_(std::move(table)) {
    const std::size_t expected = table_size(arity, n);
    if (bound_ < 1) throw PreconditionError("bound must be at least 1");
    if (table_.size() != expected) {
        throw PreconditionError("coloring table has " + std::to_string(table_.size()) +
                                " entries, expected C(n,k) = " + std::to_string(expected));
    }
    if (auto w = find_bound_violation(arity_, table_, bound_)) {
        throw PreconditionError("coloring is not " + std::to_string(bound_) + "-bounded",
                                std::move(*w));
    }
}

Color Coloring::color(std::span<const Element> tuple) const {
    if (tuple.size() != arity_) {
        throw PreconditionError("tuple of length " + std::to_string(tuple.size()) +
                                " given to an arity-" + std::to_string(arity_) + " coloring");
    }
    require_increasing(tuple, "tuple");
    if (!tuple.empty() && tuple.back() >= n_) {
        throw PreconditionError("tuple entry " + std::to_string(tuple.back()) +
                                " outside domain [0, " + std::to_string(n_) + ")");
    }
    return table_[encode_tuple(tuple).rank];
}

std::size_t Coloring::max_class_size() const {
    std::vector<Color> sorted(table_.begin(), table_.end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t best = 0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        best = std::max(best, j - i);
        i = j;
    }
    return best;
}

Coloring Coloring::induced(std::span<const Element> subset) const {
    require_increasing(subset, "subset");
    if (!subset.empty() && subset.back() >= n_) throw PreconditionError("subset leaves the domain");
    const std::size_t m = subset.size();
    std::vector<Color> table;
    table.reserve(table_size(arity_, m));
    // Images of local tuples come out in local colex order.
    for_each_subset(subset, arity_, [&](std::span<const Element> image) {
        table.push_back(table_[encode_tuple(image).rank]);
        return true;
    });
    return Coloring(arity_, bound_, m, std::move(table));
}

} // namespace rrt
