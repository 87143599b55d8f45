#pragma once

#include <cstdint>
#include <random>

#include "rrt/coloring.hpp"

namespace rrt {

/// Seeded source for every generator; the draw sequence depends only on the
/// seed, not on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);

    template <typename It>
    void shuffle(It first, It last) {
        const auto len = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = len; i > 1; --i) {
            std::iter_swap(first + static_cast<std::ptrdiff_t>(i - 1),
                           first + static_cast<std::ptrdiff_t>(below(i)));
        }
    }

private:
    std::mt19937_64 engine_;
};

struct GeneratorOptions {
    // Only tuples sharing their last coordinate may share a color, so the
    // whole domain is a 1-tail rainbow.
    bool same_last = false;
};

/// Random b-bounded coloring: tuples are shuffled and cut into color classes
/// of size uniform in [1, bound].
Coloring random_bounded_coloring(std::size_t arity, std::size_t bound, std::size_t n,
                                 std::uint64_t seed, GeneratorOptions options = {});

/// 2-bounded triple coloring with a 1-tail domain whose fbar(x, y, .) is
/// constant on s > max(y, window).
struct StableTripleColoring {
    Coloring base;
    std::size_t window;
    // Indexed by pair code over the domain.
    std::vector<Element> thresholds;

    Element threshold(Element x, Element y) const { return thresholds[pair_code(x, y)]; }
};

StableTripleColoring make_stable_triple_coloring(std::size_t n, std::size_t window,
                                                 std::uint64_t seed);

} // namespace rrt
