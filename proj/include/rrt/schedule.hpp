#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace rrt {

enum class ScheduleKind {
    pairs_b,      // b_l: branching of the pair rainbow tree
    quadruple_c,  // c_k: branching of the tail rainbow tree for triples
    block_h,      // h(k): block boundaries of the tail-rainbow block tree
};

std::string_view to_string(ScheduleKind kind);
ScheduleKind parse_schedule_kind(std::string_view name);

// Least power of two >= v; 1 for v = 0.
std::uint64_t pow2_ceil(std::uint64_t v);

/// The bounding sequences of the trees.
///
///   pairs_b:     b_0 = 1, b_l = least power of two >= 2^{l+3}(sigma_len + l).
///                Level l of the tree is produced with branching b_l, so
///                capacity(l) = b_1 * ... * b_l. values = b_0 .. b_{depth+1}.
///   quadruple_c: c_k = least power of two >= 2^{k+3} C(k,2), c_0 = c_1 = 1.
///                A level-l node (|sigma tau| = sigma_len + l) branches
///                c_{sigma_len + l}. values = c_0 .. c_{sigma_len+depth}.
///   block_h:     h(k) = k for k <= 2, then
///                h(k) = h(k-1) + least power of two >= 2^{k-1}(k-1)(k-2)/2.
///                values = h(0) .. h(depth + 1).
class BoundSchedule {
public:
    BoundSchedule(ScheduleKind kind, std::size_t sigma_len, std::size_t depth);

    ScheduleKind kind() const noexcept { return kind_; }
    std::size_t sigma_len() const noexcept { return sigma_len_; }
    std::size_t depth() const noexcept { return depth_; }
    const std::vector<std::uint64_t>& values() const noexcept { return values_; }

    // Children allowed per node at `level` (tree kinds only).
    std::uint64_t branching(std::size_t level) const;
    // Maximum node count at `level`: product of the branchings above it,
    // saturating at UINT64_MAX.
    std::uint64_t capacity(std::size_t level) const;
    // Block [h(k), h(k+1)) holding position k of a block-tree tuple.
    std::uint64_t h(std::size_t k) const;

private:
    ScheduleKind kind_;
    std::size_t sigma_len_;
    std::size_t depth_;
    std::vector<std::uint64_t> values_;
};

inline BoundSchedule compute_schedule(ScheduleKind kind, std::size_t sigma_len, std::size_t depth) {
    return BoundSchedule(kind, sigma_len, depth);
}

} // namespace rrt
