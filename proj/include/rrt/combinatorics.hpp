#pragma once

#include <span>
#include <vector>

#include "rrt/error.hpp"

namespace rrt {

// Calls fn(std::span<const Element>) for every k-subset of xs, in colex order
// when xs is increasing. Returns early when fn returns false.
template <typename Fn>
bool for_each_subset(std::span<const Element> xs, std::size_t k, Fn&& fn) {
    const std::size_t m = xs.size();
    if (k > m) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<Element> cur(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) cur[i] = xs[idx[i]];
        if (!fn(std::span<const Element>(cur))) return false;
        // Colex successor: bump the lowest index that has room.
        std::size_t i = 0;
        while (i < k && idx[i] + 1 == (i + 1 < k ? idx[i + 1] : m)) ++i;
        if (i == k) return true;
        ++idx[i];
        for (std::size_t j = 0; j < i; ++j) idx[j] = j;
    }
}

} // namespace rrt
