#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrt/block_tree.hpp"
#include "rrt/rainbow_tree.hpp"
#include "rrt/report.hpp"

namespace rrt {

/// Per level k: 2|T_k| >= |S_k|. Per T node sigma of length m:
/// 2^m * |T-children| >= (2^m - 1) * |S-children|.
VerificationReport verify_block_density(const BlockTree& bt);

/// Counting bound on non-viable extensions at one level of a pair rainbow
/// tree. For each reservoir y above every level-l node, N_{l,y} collects the
/// level-l nodes tau with y outside V(sigma tau, g); checks
///   4|N| < capacity(l),
///   |N| < (1/4 - 2^{-(l+2)}) capacity(l)   (|N| = 0 at l = 0),
/// and, when level l+1 exists, the one-step split of N_{l+1,y} into children
/// of N_{l,y} (at most |N_{l,y}| * b_{l+1}) and the rest (at most
/// (|level l| - |N_{l,y}|)(|sigma| + l)).
/// Throws PreconditionError("level not full") if a node above level l ran out
/// of reservoir before filling its quota.
VerificationReport verify_counting_lemma(const RainbowTree& tree, std::size_t level);

/// Every level holds more than 3/4 of its capacity, counted both raw and
/// restricted to nodes whose in-reservoir viable supply reaches the threshold
/// (default: four times the node's branching quota).
VerificationReport verify_bushiness(const RainbowTree& tree,
                                    std::optional<std::uint64_t> supply_threshold = std::nullopt);

struct LevelMeasure {
    std::size_t level;
    std::uint64_t cylinders;    // distinct binary codes at this level
    std::uint64_t denominator;  // capacity(level) = 2^{bits}
    std::size_t bits;
    double value;               // cylinders / denominator
};

struct BinaryImage {
    // codes[l][i] is the bit string of tree.level(l)[i].
    std::vector<std::vector<std::string>> codes;
    std::vector<LevelMeasure> measures;
};

/// Writes each child rank r in log2(branching) bits, bit i being (r >> i) & 1,
/// so a level-l node becomes a cylinder of measure 1 / capacity(l).
/// Throws if some branching factor is not a power of two.
BinaryImage binary_encode_tree(const RainbowTree& tree);

} // namespace rrt
