#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rrt/coloring.hpp"

namespace rrt {

/// Greedy upward scan of a triple coloring keeping x iff the kept set stays a
/// 1-tail rainbow (triples with different last coordinates differ in color).
std::vector<Element> extract_1tail_subset(const Coloring& f);

/// fbar(x, y, z) = least pair code <u, v> with f(u, v, z) = f(x, y, z).
/// Always <= <x, y>. Requires the domain to be a 1-tail f-rainbow.
class FBar {
public:
    explicit FBar(const Coloring& f);

    std::size_t domain_size() const noexcept { return n_; }
    Code operator()(Element x, Element y, Element z) const { return table_[triple_code(x, y, z)]; }
    std::span<const Code> table() const noexcept { return table_; }

private:
    std::size_t n_;
    std::vector<Code> table_;
};

inline FBar f_bar(const Coloring& f) { return FBar(f); }

/// R_{u,v,x,y} = {s > y : fbar(x, y, s) = <u, v>}.
struct RSet {
    Code uv;
    Code xy;
    std::vector<Element> members;
};

std::vector<Element> r_set(const FBar& fbar, Code uv, Element x, Element y);

// The non-empty R sets for one pair (x, y), ordered by <u, v>. Together they
// partition (y, n), the last one possibly being <x, y> itself.
std::vector<RSet> r_partition(const FBar& fbar, Element x, Element y);

// Non-empty R sets of every pair (x, y) with y < window, ordered by <x, y>
// then <u, v>. Empty members are omitted: bisecting by them is a no-op.
std::vector<RSet> r_family_window(const FBar& fbar, std::size_t window);

/// Iterated majority bisection: for each set R in order keep the larger of
/// C & R and C - R, ties going to the intersection. Throws on an empty domain.
std::vector<Element> cohesive_thin(std::span<const std::vector<Element>> sets,
                                   std::span<const Element> domain);

/// Limit pair coloring over a thinned set C, relabelled onto [0, |C|).
/// Colors are pair codes of f's domain: fhat(x, y) is the eventual value of
/// fbar(x, y, s) for s in C above max(y, threshold) when that pair lies in
/// [C]^2, and <x, y> otherwise (also when no s in C lies above the threshold).
struct LimitColoring {
    Coloring coloring;
    std::vector<Element> support;  // C, in f's labels
    Element threshold;
    std::size_t fallback_pairs = 0;    // "otherwise" branch taken
    std::size_t unobserved_pairs = 0;  // no s in C above the threshold
    bool two_bounded = true;
};

// Throws PreconditionError with a witness if fbar(x, y, .) is not constant on
// C above the threshold for some pair of [C]^2.
LimitColoring f_hat(const Coloring& f, std::span<const Element> support, Element threshold);

struct LiftStep {
    // nullopt for the final scan that ran out of candidates.
    std::optional<Element> added;
    std::uint64_t skipped = 0;
    // max over pairs (x, y) of X_n of max(y, s0); nullopt while X_n has no pair.
    std::optional<Element> threshold;
    std::uint64_t skipped_beyond_threshold = 0;
    std::vector<Element> skipped_candidates;
};

struct LiftTrace {
    std::vector<LiftStep> steps;
    std::vector<Element> rainbow;
    bool prefixes_rainbow = true;

    std::uint64_t skips_beyond_threshold() const;
};

/// X_0 = {}, X_{n+1} = X_n + {a_n} with a_n the least a in G above max X_n
/// such that X_n + {a} is an f-rainbow; stops when G has nothing left.
/// Requires G within C, G an fhat-rainbow and a 1-tail domain.
LiftTrace lift_rainbow(const Coloring& f, std::span<const Element> support,
                       std::span<const Element> pair_rainbow, Element threshold);

} // namespace rrt
