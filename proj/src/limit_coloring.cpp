#include "rrt/limit_coloring.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "rrt/predicates.hpp"
#include "rrt/rainbow_ops.hpp"

namespace rrt {

namespace {

void require_triples(const Coloring& f, const char* op) {
    if (f.arity() != 3) throw PreconditionError(std::string(op) + ": expected a triple coloring");
}

void require_tail_domain(const Coloring& f, const char* op) {
    if (auto c = find_tail_domain_violation(f)) {
        throw PreconditionError(std::string(op) + ": domain is not a 1-tail rainbow",
                                Witness{{c->first, c->second}, "same color, different last coordinate"});
    }
}

void require_subset_of_domain(std::span<const Element> xs, const Coloring& f, const char* what) {
    require_increasing(xs, what);
    if (!xs.empty() && xs.back() >= f.domain_size()) {
        throw PreconditionError(std::string(what) + " leaves the domain");
    }
}

} // namespace

std::vector<Element> extract_1tail_subset(const Coloring& f) {
    require_triples(f, "extract_1tail_subset");
    std::vector<Element> all(f.domain_size());
    for (Element x = 0; x < all.size(); ++x) all[x] = x;
    return greedy_rainbow_over(f, all, 1).vec();
}

FBar::FBar(const Coloring& f) : n_(f.domain_size()), table_(f.size()) {
    require_triples(f, "fbar");
    require_tail_domain(f, "fbar");
    std::unordered_map<Color, Code> least;
    for (Element z = 2; z < n_; ++z) {
        least.clear();
        // Pair codes ascend in this loop order, so the first hit is the least.
        for (Element y = 1; y < z; ++y) {
            for (Element x = 0; x < y; ++x) {
                const Code r = triple_code(x, y, z);
                const auto [it, fresh] = least.try_emplace(f.at(r), pair_code(x, y));
                table_[r] = it->second;
            }
        }
    }
}

std::vector<Element> r_set(const FBar& fbar, Code uv, Element x, Element y) {
    std::vector<Element> out;
    for (Element s = y + 1; s < fbar.domain_size(); ++s) {
        if (fbar(x, y, s) == uv) out.push_back(s);
    }
    return out;
}

std::vector<RSet> r_partition(const FBar& fbar, Element x, Element y) {
    if (!(x < y) || y >= fbar.domain_size()) throw PreconditionError("r_partition: bad pair");
    std::map<Code, std::vector<Element>> groups;
    for (Element s = y + 1; s < fbar.domain_size(); ++s) groups[fbar(x, y, s)].push_back(s);
    std::vector<RSet> out;
    for (auto& [uv, members] : groups) out.push_back({uv, pair_code(x, y), std::move(members)});
    return out;
}

std::vector<RSet> r_family_window(const FBar& fbar, std::size_t window) {
    std::vector<RSet> out;
    const std::size_t top = std::min(window, fbar.domain_size());
    for (Element y = 1; y < top; ++y) {
        for (Element x = 0; x < y; ++x) {
            auto part = r_partition(fbar, x, y);
            std::move(part.begin(), part.end(), std::back_inserter(out));
        }
    }
    return out;
}

std::vector<Element> cohesive_thin(std::span<const std::vector<Element>> sets,
                                   std::span<const Element> domain) {
    require_increasing(domain, "domain");
    if (domain.empty()) throw PreconditionError("cohesive_thin: empty domain");
    std::vector<Element> cur(domain.begin(), domain.end());
    std::vector<Element> inter, diff;
    for (const auto& r : sets) {
        require_increasing(r, "thinning set");
        inter.clear();
        diff.clear();
        std::set_intersection(cur.begin(), cur.end(), r.begin(), r.end(), std::back_inserter(inter));
        std::set_difference(cur.begin(), cur.end(), r.begin(), r.end(), std::back_inserter(diff));
        cur = inter.size() >= diff.size() ? inter : diff;
    }
    return cur;
}

LimitColoring f_hat(const Coloring& f, std::span<const Element> support, Element threshold) {
    require_triples(f, "f_hat");
    require_subset_of_domain(support, f, "support");
    const FBar fbar(f);
    const std::size_t m = support.size();
    if (m < 2) throw PreconditionError("f_hat: support needs at least two elements");
    std::vector<char> in_support(f.domain_size(), 0);
    for (Element c : support) in_support[c] = 1;

    std::vector<Color> table(table_size(2, m));
    std::size_t fallback = 0, unobserved = 0;
    for (Element j = 1; j < m; ++j) {
        const Element y = support[j];
        const Element lim = std::max(y, threshold);
        const auto first_above = std::upper_bound(support.begin(), support.end(), lim);
        for (Element i = 0; i < j; ++i) {
            const Element x = support[i];
            Color value = pair_code(x, y);
            if (first_above == support.end()) {
                ++unobserved;
                ++fallback;
            } else {
                const Code v = fbar(x, y, *first_above);
                for (auto it = first_above + 1; it != support.end(); ++it) {
                    if (fbar(x, y, *it) != v) {
                        throw PreconditionError(
                            "f_hat: fbar(x, y, .) not constant above the threshold",
                            Witness{{{x, y, *first_above}, {x, y, *it}},
                                    "limit values " + std::to_string(v) + " and " +
                                        std::to_string(fbar(x, y, *it))});
                    }
                }
                const auto [u, w] = decode_pair(v);
                if (in_support[u] && in_support[w]) {
                    value = v;
                } else {
                    ++fallback;
                }
            }
            table[pair_code(i, j)] = value;
        }
    }
    std::unordered_map<Color, std::size_t> counts;
    std::size_t worst = 0;
    for (Color c : table) worst = std::max(worst, ++counts[c]);
    const bool two = worst <= 2;
    LimitColoring out{Coloring(2, two ? 2 : worst, m, std::move(table)),
                      std::vector<Element>(support.begin(), support.end()),
                      threshold,
                      fallback,
                      unobserved,
                      two};
    return out;
}

std::uint64_t LiftTrace::skips_beyond_threshold() const {
    std::uint64_t total = 0;
    for (const auto& s : steps) total += s.skipped_beyond_threshold;
    return total;
}

LiftTrace lift_rainbow(const Coloring& f, std::span<const Element> support,
                       std::span<const Element> pair_rainbow, Element threshold) {
    require_triples(f, "lift_rainbow");
    require_subset_of_domain(pair_rainbow, f, "pair rainbow");
    require_tail_domain(f, "lift_rainbow");
    const LimitColoring fh = f_hat(f, support, threshold);
    std::vector<Element> idx;
    for (Element a : pair_rainbow) {
        auto it = std::lower_bound(support.begin(), support.end(), a);
        if (it == support.end() || *it != a) {
            throw PreconditionError("lift_rainbow: pair rainbow leaves the support",
                                    Witness{{{a}}, "not in support"});
        }
        idx.push_back(static_cast<Element>(it - support.begin()));
    }
    if (auto c = find_collision(idx, fh.coloring, 2)) {
        auto back = [&](const std::vector<Element>& t) {
            std::vector<Element> v;
            for (Element i : t) v.push_back(support[i]);
            return v;
        };
        throw PreconditionError("lift_rainbow: not a rainbow for the limit coloring",
                                Witness{{back(c->first), back(c->second)}, "equal limit color"});
    }

    LiftTrace trace;
    ViabilityChecker checker(f, std::span<const Element>{}, std::size_t{3});
    std::size_t p = 0;
    while (p < pair_rainbow.size()) {
        LiftStep step;
        if (trace.rainbow.size() >= 2) step.threshold = std::max(trace.rainbow.back(), threshold);
        while (p < pair_rainbow.size()) {
            const Element a = pair_rainbow[p++];
            if (checker.accepts(a)) {
                step.added = a;
                break;
            }
            ++step.skipped;
            step.skipped_candidates.push_back(a);
            if (!step.threshold || a > *step.threshold) ++step.skipped_beyond_threshold;
        }
        if (step.added) {
            checker.extend(*step.added);
            trace.rainbow.push_back(*step.added);
        }
        trace.steps.push_back(std::move(step));
    }
    trace.prefixes_rainbow = is_rainbow(trace.rainbow, f);
    return trace;
}

} // namespace rrt
