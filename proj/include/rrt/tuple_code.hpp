#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "rrt/error.hpp"

namespace rrt {

/// Binomial coefficient C(m, r); throws PreconditionError on 64-bit overflow.
std::uint64_t binomial(std::uint64_t m, std::uint64_t r);

/// Strictly increasing finite sequence of domain elements.
class IncreasingTuple {
public:
    IncreasingTuple() = default;
    explicit IncreasingTuple(std::vector<Element> entries);
    IncreasingTuple(std::initializer_list<Element> entries);

    std::span<const Element> entries() const noexcept { return entries_; }
    const std::vector<Element>& vec() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    Element operator[](std::size_t i) const { return entries_[i]; }
    Element back() const { return entries_.back(); }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    // Requires x > back().
    IncreasingTuple extended(Element x) const;
    IncreasingTuple concatenated(std::span<const Element> tail) const;

    friend bool operator==(const IncreasingTuple&, const IncreasingTuple&) = default;
    friend auto operator<=>(const IncreasingTuple&, const IncreasingTuple&) = default;

private:
    std::vector<Element> entries_;
};

bool is_strictly_increasing(std::span<const Element> xs) noexcept;

// Throws PreconditionError naming `what` when xs is not strictly increasing.
void require_increasing(std::span<const Element> xs, const char* what);

/// Colexicographic rank of an increasing tuple within its arity.
struct TupleCode {
    std::size_t arity = 0;
    Code rank = 0;

    friend bool operator==(const TupleCode&, const TupleCode&) = default;

    // Order within one arity; comparing codes of different arities throws.
    bool precedes(const TupleCode& other) const;
};

// rank = sum_i C(t_i, i + 1), the combinatorial number system.
TupleCode encode_tuple(std::span<const Element> t);
std::vector<Element> decode_tuple(std::size_t arity, Code rank);

// Unchecked fast paths for the arities colorings use.
constexpr Code pair_code(Element x0, Element x1) noexcept {
    return static_cast<Code>(x0) + static_cast<Code>(x1) * (x1 - 1) / 2;
}

constexpr Code triple_code(Element x0, Element x1, Element x2) noexcept {
    const Code z = x2;
    return pair_code(x0, x1) + (z * (z - 1) * (z - 2)) / 6;
}

std::pair<Element, Element> decode_pair(Code rank);

} // namespace rrt
