#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rrt/coloring.hpp"
#include "rrt/predicates.hpp"

namespace rrt {

/// A finite Mathias-style pair (sigma, X): an increasing head and a reservoir
/// lying entirely above it.
class ExtensionContext {
public:
    ExtensionContext(IncreasingTuple sigma, std::vector<Element> reservoir);

    const IncreasingTuple& sigma() const noexcept { return sigma_; }
    std::span<const Element> reservoir() const noexcept { return reservoir_; }

private:
    IncreasingTuple sigma_;
    std::vector<Element> reservoir_;
};

enum class ViabilityMode {
    rainbow,  // base + {x} stays a rainbow
    tail,     // base + {x} stays a tail rainbow (width arity - 1)
};

/// Answers "is base + {x} still a (tail) rainbow?" for many x against a fixed
/// base, touching only the tuples that end in x.
class ViabilityChecker {
public:
    ViabilityChecker(const Coloring& g, std::span<const Element> base, ViabilityMode mode);
    // Explicit tail width in [0, arity]; arity is plain rainbowness, 0 is vacuous.
    ViabilityChecker(const Coloring& g, std::span<const Element> base, std::size_t tail_width);

    // Whether the base itself satisfies the mode's condition. When it does
    // not, nothing is viable.
    bool base_ok() const noexcept { return base_ok_; }
    std::span<const Element> base() const noexcept { return base_; }

    // x lies above the base, inside the domain, and creates no collision.
    bool accepts(Element x) const;

    // The collision that rules x out, if any; ignores base_ok() and range.
    std::optional<Collision> blame(Element x) const;

    // Appends x (which must exceed the current maximum) to the base.
    void extend(Element x);

private:
    void rebuild_prefixes();

    const Coloring* g_;
    std::size_t width_;
    std::vector<Element> base_;
    std::vector<Color> base_colors_;  // sorted
    std::vector<std::vector<Element>> prefixes_;  // (k-1)-subsets of base
    bool base_ok_ = true;
};

// V(sigma, g) intersected with [0, domain_cap): all x > max sigma for which
// sigma + {x} is a g-rainbow. Throws when sigma itself is not a rainbow.
std::vector<Element> viable_set(const IncreasingTuple& sigma, const Coloring& g, Element domain_cap);

// tV(sigma, g) intersected with [0, domain_cap), using tail rainbows.
std::vector<Element> tail_viable_set(const IncreasingTuple& sigma, const Coloring& g,
                                     Element domain_cap);

// Every reservoir element is viable (arity 2, g normal) or tail viable
// (arity 3, g semi-normal) for sigma. Throws on the wrong normal form.
bool is_acceptable(const Coloring& g, const ExtensionContext& ctx);

/// Scan the domain upwards, keeping x iff the kept set stays a tail rainbow.
/// For 2-bounded pair colorings the result has m(m+1)/2 >= n.
IncreasingTuple greedy_tail_rainbow(const Coloring& f);

/// Scan the domain upwards, keeping x iff the kept set stays a rainbow (or a
/// tail rainbow when require_tail is set).
IncreasingTuple greedy_rainbow(const Coloring& f, bool require_tail);

std::size_t tail_width_for(ViabilityMode mode, std::size_t arity);

// Same scan restricted to the given candidates (increasing), keeping the set a
// tail_width-tail rainbow.
IncreasingTuple greedy_rainbow_over(const Coloring& f, std::span<const Element> candidates,
                                    std::size_t tail_width);

struct PartitionEntry {
    Element candidate;
    std::optional<std::size_t> index;  // least extension accepting it
};

// p(y) = least i with y in V(extensions[i], f); nullopt when none accepts y.
std::vector<PartitionEntry> viability_partition(std::span<const IncreasingTuple> extensions,
                                                const Coloring& f,
                                                std::span<const Element> candidates);

// sigma + {x_i} for the first |sigma| + 1 reservoir elements x_0 < ... < x_l.
std::vector<IncreasingTuple> first_element_extensions(const ExtensionContext& ctx);

} // namespace rrt
