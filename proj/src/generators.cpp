#include "rrt/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace rrt {

std::uint64_t Rng::below(std::uint64_t n) {
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

namespace {

constexpr Color kUnassigned = std::numeric_limits<Color>::max();

// Cuts ranks[first, last) into consecutive classes of size uniform in [1, bound].
void chunk(std::vector<Code>& ranks, std::size_t first, std::size_t last, std::size_t bound,
           Rng& rng, std::vector<Color>& table, Color& next_class) {
    std::size_t i = first;
    while (i < last) {
        const std::size_t size = std::min<std::size_t>(1 + rng.below(bound), last - i);
        for (std::size_t t = i; t < i + size; ++t) table[ranks[t]] = next_class;
        ++next_class;
        i += size;
    }
}

// Class ids are dense; a random relabelling makes colors carry no order hint.
void relabel_classes(std::vector<Color>& table, Color classes, Rng& rng) {
    std::vector<Color> perm(classes);
    std::iota(perm.begin(), perm.end(), Color{0});
    rng.shuffle(perm.begin(), perm.end());
    for (auto& c : table) c = perm[c];
}

} // namespace

Coloring random_bounded_coloring(std::size_t arity, std::size_t bound, std::size_t n,
                                 std::uint64_t seed, GeneratorOptions options) {
    if (bound < 1) throw PreconditionError("bound must be at least 1");
    if (n < arity) {
        throw PreconditionError("domain size " + std::to_string(n) + " is smaller than arity " +
                                std::to_string(arity));
    }
    const std::size_t total = table_size(arity, n);
    Rng rng(seed);
    std::vector<Color> table(total, kUnassigned);
    std::vector<Code> ranks(total);
    std::iota(ranks.begin(), ranks.end(), Code{0});
    Color classes = 0;
    if (options.same_last) {
        // Tuples with last coordinate z occupy ranks [C(z, k), C(z + 1, k)).
        for (std::size_t z = arity - 1; z < n; ++z) {
            const auto first = static_cast<std::size_t>(binomial(z, arity));
            const auto last = static_cast<std::size_t>(binomial(z + 1, arity));
            rng.shuffle(ranks.begin() + static_cast<std::ptrdiff_t>(first),
                        ranks.begin() + static_cast<std::ptrdiff_t>(last));
            chunk(ranks, first, last, bound, rng, table, classes);
        }
    } else {
        rng.shuffle(ranks.begin(), ranks.end());
        chunk(ranks, 0, total, bound, rng, table, classes);
    }
    relabel_classes(table, classes, rng);
    return Coloring(arity, bound, n, std::move(table));
}

StableTripleColoring make_stable_triple_coloring(std::size_t n, std::size_t window,
                                                 std::uint64_t seed) {
    if (n < 3) throw PreconditionError("stable triple colorings need n >= 3");
    if (window >= n) {
        throw PreconditionError("window " + std::to_string(window) + " must be below n = " +
                                std::to_string(n));
    }
    Rng rng(seed);
    const std::size_t pairs = table_size(2, n);

    // A random partial matching on pairs: matched pairs share a color in
    // every slice beyond the window where both are present.
    std::vector<Code> order(pairs);
    std::iota(order.begin(), order.end(), Code{0});
    rng.shuffle(order.begin(), order.end());
    constexpr Code kNone = std::numeric_limits<Code>::max();
    std::vector<Code> partner(pairs, kNone);
    for (std::size_t i = 0; i + 1 < pairs;) {
        if (rng.below(2) == 0) {
            partner[order[i]] = order[i + 1];
            partner[order[i + 1]] = order[i];
            i += 2;
        } else {
            ++i;
        }
    }

    std::vector<Color> table(table_size(3, n), kUnassigned);
    Color classes = 0;
    std::vector<Code> slice;
    for (Element z = 2; z < n; ++z) {
        const Code base = triple_code(0, 1, z);
        const Code slice_pairs = pair_code(0, z);  // pairs (x, y) with y < z
        if (z <= window) {
            slice.resize(slice_pairs);
            std::iota(slice.begin(), slice.end(), base);
            rng.shuffle(slice.begin(), slice.end());
            chunk(slice, 0, slice.size(), 2, rng, table, classes);
            continue;
        }
        for (Code p = 0; p < slice_pairs; ++p) {
            if (table[base + p] != kUnassigned) continue;
            table[base + p] = classes;
            if (partner[p] != kNone && partner[p] < slice_pairs) table[base + partner[p]] = classes;
            ++classes;
        }
    }
    relabel_classes(table, classes, rng);

    std::vector<Element> thresholds(pairs);
    for (Element y = 1; y < n; ++y) {
        for (Element x = 0; x < y; ++x) {
            thresholds[pair_code(x, y)] = std::max<Element>(y, static_cast<Element>(window));
        }
    }
    return {Coloring(3, 2, n, std::move(table)), window, std::move(thresholds)};
}

} // namespace rrt
