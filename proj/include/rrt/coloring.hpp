#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rrt/tuple_code.hpp"

namespace rrt {

inline constexpr std::size_t kMaxArity = 4;

/// A total b-bounded coloring of the increasing k-tuples over [0, n).
///
/// The table is indexed by colex rank, so tuples over [0, n) occupy exactly
/// ranks [0, C(n, k)). Colors are opaque naturals.
class Coloring {
public:
    // Validates arity, table size and b-boundedness of the table.
    Coloring(std::size_t arity, std::size_t bound, std::size_t n, std::vector<Color> table);

    std::size_t arity() const noexcept { return arity_; }
    std::size_t bound() const noexcept { return bound_; }
    std::size_t domain_size() const noexcept { return n_; }
    std::size_t size() const noexcept { return table_.size(); }
    std::span<const Color> table() const noexcept { return table_; }

    Color at(Code rank) const { return table_[rank]; }
    // Entries must be increasing, of length arity(), and below domain_size().
    Color color(std::span<const Element> tuple) const;
    Color operator()(Element x0, Element x1) const { return table_[pair_code(x0, x1)]; }
    Color operator()(Element x0, Element x1, Element x2) const {
        return table_[triple_code(x0, x1, x2)];
    }

    // Largest number of tuples sharing one color.
    std::size_t max_class_size() const;

    // Coloring of the subset, relabelled order-preservingly onto [0, |subset|).
    Coloring induced(std::span<const Element> subset) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::size_t arity_;
    std::size_t bound_;
    std::size_t n_;
    std::vector<Color> table_;
};

// C(n, k) with the range checks every table-building routine needs.
std::size_t table_size(std::size_t arity, std::size_t n);

// A color class with more than `bound` members, if any.
std::optional<Witness> find_bound_violation(std::size_t arity, std::span<const Color> table,
                                            std::size_t bound);

} // namespace rrt
