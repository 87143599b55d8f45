#include "rrt/tuple_code.hpp"

#include <algorithm>

namespace rrt {

std::uint64_t binomial(std::uint64_t m, std::uint64_t r) {
    if (r > m) return 0;
    r = std::min(r, m - r);
    __extension__ typedef unsigned __int128 u128;
    u128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        // acc * (m - r + i) / i stays integral at every step.
        acc = acc * (m - r + i) / i;
        if (acc > UINT64_MAX) throw PreconditionError("binomial coefficient overflows 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

bool is_strictly_increasing(std::span<const Element> xs) noexcept {
    return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>{}) == xs.end();
}

void require_increasing(std::span<const Element> xs, const char* what) {
    auto it = std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>{});
    if (it != xs.end()) {
        throw PreconditionError(std::string(what) + " is not strictly increasing",
                                Witness{{std::vector<Element>(xs.begin(), xs.end())},
                                        "entries " + std::to_string(*it) + " and " +
                                            std::to_string(*(it + 1)) + " out of order"});
    }
}

IncreasingTuple::IncreasingTuple(std::vector<Element> entries) : entries_(std::move(entries)) {
    require_increasing(entries_, "tuple");
}

IncreasingTuple::IncreasingTuple(std::initializer_list<Element> entries)
    : IncreasingTuple(std::vector<Element>(entries)) {}

IncreasingTuple IncreasingTuple::extended(Element x) const {
    std::vector<Element> out = entries_;
    out.push_back(x);
    return IncreasingTuple(std::move(out));
}

IncreasingTuple IncreasingTuple::concatenated(std::span<const Element> tail) const {
    std::vector<Element> out = entries_;
    out.insert(out.end(), tail.begin(), tail.end());
    return IncreasingTuple(std::move(out));
}

bool TupleCode::precedes(const TupleCode& other) const {
    if (arity != other.arity) {
        throw PreconditionError("tuple codes of arity " + std::to_string(arity) + " and " +
                                std::to_string(other.arity) + " are not comparable");
    }
    return rank < other.rank;
}

TupleCode encode_tuple(std::span<const Element> t) {
    require_increasing(t, "tuple");
    Code rank = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::uint64_t term = binomial(t[i], i + 1);
        if (rank > UINT64_MAX - term) throw PreconditionError("tuple code overflows 64 bits");
        rank += term;
    }
    return {t.size(), rank};
}

std::vector<Element> decode_tuple(std::size_t arity, Code rank) {
    std::vector<Element> out(arity);
    for (std::size_t i = arity; i-- > 0;) {
        // Largest c with C(c, i + 1) <= rank; c >= i always qualifies.
        std::uint64_t lo = i;
        std::uint64_t hi = i + 1;
        while (binomial(hi, i + 1) <= rank) hi *= 2;
        while (hi - lo > 1) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            if (binomial(mid, i + 1) <= rank) lo = mid; else hi = mid;
        }
        out[i] = static_cast<Element>(lo);
        rank -= binomial(lo, i + 1);
    }
    return out;
}

std::pair<Element, Element> decode_pair(Code rank) {
    const auto t = decode_tuple(2, rank);
    return {t[0], t[1]};
}

} // namespace rrt
