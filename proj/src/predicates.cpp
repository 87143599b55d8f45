#include "rrt/predicates.hpp"

#include <algorithm>
#include <array>

#include "rrt/combinatorics.hpp"

namespace rrt {

namespace {

struct Entry {
    Color color;
    std::array<Element, kMaxArity> tuple;
};

void check_set(std::span<const Element> xs, const Coloring& f) {
    require_increasing(xs, "set");
    if (!xs.empty() && xs.back() >= f.domain_size()) {
        throw PreconditionError("set element " + std::to_string(xs.back()) + " outside domain [0, " +
                                std::to_string(f.domain_size()) + ")");
    }
}

std::vector<Element> to_vec(const std::array<Element, kMaxArity>& t, std::size_t k) {
    return {t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k)};
}

} // namespace

std::size_t default_tail_width(const Coloring& f) { return f.arity() > 1 ? f.arity() - 1 : 1; }

std::optional<Collision> find_collision(std::span<const Element> xs, const Coloring& f,
                                        std::size_t tail_width) {
    const std::size_t k = f.arity();
    if (tail_width < 1 || tail_width > k) {
        throw PreconditionError("tail width " + std::to_string(tail_width) + " outside [1, " +
                                std::to_string(k) + "]");
    }
    check_set(xs, f);
    std::vector<Entry> entries;
    for_each_subset(xs, k, [&](std::span<const Element> t) {
        Entry e{f.at(encode_tuple(t).rank), {}};
        std::copy(t.begin(), t.end(), e.tuple.begin());
        entries.push_back(e);
        return true;
    });
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.color < b.color; });
    const std::size_t skip = k - tail_width;
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i + 1;
        while (j < entries.size() && entries[j].color == entries[i].color) ++j;
        for (std::size_t a = i; a < j; ++a) {
            for (std::size_t b = a + 1; b < j; ++b) {
                if (!std::equal(entries[a].tuple.begin() + skip, entries[a].tuple.begin() + k,
                                entries[b].tuple.begin() + skip)) {
                    return Collision{to_vec(entries[a].tuple, k), to_vec(entries[b].tuple, k),
                                     entries[a].color};
                }
            }
        }
        i = j;
    }
    return std::nullopt;
}

bool is_rainbow(std::span<const Element> xs, const Coloring& f) {
    return !find_collision(xs, f, f.arity()).has_value();
}

bool is_k_tail_rainbow(std::span<const Element> xs, const Coloring& f, std::size_t tail_width) {
    return !find_collision(xs, f, tail_width).has_value();
}

bool is_tail_rainbow(std::span<const Element> xs, const Coloring& f) {
    if (f.arity() == 1) {
        check_set(xs, f);
        return true;
    }
    return is_k_tail_rainbow(xs, f, f.arity() - 1);
}

std::optional<Collision> find_tail_domain_violation(const Coloring& f) {
    const std::size_t k = f.arity();
    // Per color: the first tuple seen and its last coordinate.
    std::vector<std::pair<Color, Code>> sorted;
    sorted.reserve(f.size());
    for (Code r = 0; r < f.size(); ++r) sorted.emplace_back(f.at(r), r);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (sorted[i].first != sorted[i + 1].first) continue;
        auto a = decode_tuple(k, sorted[i].second);
        auto b = decode_tuple(k, sorted[i + 1].second);
        if (a.back() != b.back()) return Collision{std::move(a), std::move(b), sorted[i].first};
    }
    return std::nullopt;
}

} // namespace rrt
