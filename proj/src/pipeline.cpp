#include "rrt/pipeline.hpp"

#include <algorithm>
#include <unordered_map>

#include "rrt/predicates.hpp"
#include "rrt/rainbow_ops.hpp"

namespace rrt {

namespace {

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const PreconditionError& e) {
        throw PreconditionError(std::string(name) + ": " + e.what(), e.witness());
    }
}

std::vector<Element> relabel(std::span<const Element> idx, std::span<const Element> labels) {
    std::vector<Element> out;
    out.reserve(idx.size());
    for (Element i : idx) out.push_back(labels[i]);
    return out;
}

bool check_partition(const FBar& fbar, std::span<const RSet> family) {
    // Group consecutive entries by pair and compare their union with (y, n).
    std::size_t i = 0;
    while (i < family.size()) {
        const Code xy = family[i].xy;
        const auto [x, y] = decode_pair(xy);
        std::vector<Element> all;
        for (; i < family.size() && family[i].xy == xy; ++i) {
            if (family[i].uv > xy) return false;
            all.insert(all.end(), family[i].members.begin(), family[i].members.end());
        }
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
        if (all.size() != fbar.domain_size() - y - 1) return false;
        (void)x;
    }
    return true;
}

// Pairs with equal limit color must agree on f at every s in C above both
// thresholds.
bool check_duplication(const Coloring& f, const LimitColoring& lim) {
    const auto& c = lim.support;
    const std::size_t m = c.size();
    std::unordered_map<Color, std::vector<std::pair<Element, Element>>> classes;
    for (Element j = 1; j < m; ++j) {
        for (Element i = 0; i < j; ++i) classes[lim.coloring(i, j)].push_back({c[i], c[j]});
    }
    for (const auto& [color, pairs] : classes) {
        for (std::size_t a = 0; a < pairs.size(); ++a) {
            for (std::size_t b = a + 1; b < pairs.size(); ++b) {
                const auto [x, y] = pairs[a];
                const auto [u, v] = pairs[b];
                const Element lo = std::max({y, v, lim.threshold});
                for (Element s : c) {
                    if (s > lo && f(x, y, s) != f(u, v, s)) return false;
                }
            }
        }
    }
    return true;
}

} // namespace

ReductionBundle run_triples_pipeline(const Coloring& f, const PipelineConfig& config) {
    if (f.arity() != 3) throw PreconditionError("input: expected a triple coloring");
    if (f.max_class_size() > 2) {
        throw PreconditionError("input: coloring is not 2-bounded",
                                *find_bound_violation(3, f.table(), 2));
    }
    const Element s0 = config.threshold.value_or(static_cast<Element>(config.window));

    auto tail_domain = stage("tail subset", [&] { return extract_1tail_subset(f); });
    if (tail_domain.size() < 3) throw PreconditionError("tail subset: fewer than three elements");
    Coloring restricted = f.induced(tail_domain);
    const FBar fbar = stage("fbar", [&] { return FBar(restricted); });
    auto family = r_family_window(fbar, config.window);

    std::vector<std::vector<Element>> sets;
    sets.reserve(family.size());
    for (const auto& r : family) sets.push_back(r.members);
    std::vector<Element> domain(restricted.domain_size());
    for (Element x = 0; x < domain.size(); ++x) domain[x] = x;
    auto cohesive = stage("thinning", [&] { return cohesive_thin(sets, domain); });

    LimitColoring limit = stage("f_hat", [&] { return f_hat(restricted, cohesive, s0); });
    const auto g_idx = greedy_rainbow(limit.coloring, false).vec();
    auto pair_rainbow = relabel(g_idx, cohesive);
    LiftTrace lift = stage("lift", [&] { return lift_rainbow(restricted, cohesive, pair_rainbow, s0); });
    auto rainbow = relabel(lift.rainbow, tail_domain);

    PipelineChecks checks;
    checks.r_partition = check_partition(fbar, family);
    checks.fhat_two_bounded = limit.two_bounded;
    checks.duplication_sound = check_duplication(restricted, limit);
    checks.lift_prefixes_rainbow = lift.prefixes_rainbow;
    checks.zero_skips_beyond_threshold = lift.skips_beyond_threshold() == 0;
    checks.final_rainbow = is_rainbow(rainbow, f);

    std::vector<Code> fbar_table(fbar.table().begin(), fbar.table().end());
    return ReductionBundle{config,
                           s0,
                           std::move(tail_domain),
                           std::move(restricted),
                           std::move(fbar_table),
                           std::move(family),
                           std::move(cohesive),
                           std::move(limit),
                           std::move(pair_rainbow),
                           std::move(lift),
                           std::move(rainbow),
                           checks};
}

nlohmann::json to_json(const ReductionBundle& b) {
    using nlohmann::json;
    json family = json::array();
    for (const auto& r : b.family) {
        const auto [x, y] = decode_pair(r.xy);
        const auto [u, v] = decode_pair(r.uv);
        family.push_back({{"pair", {x, y}}, {"value", {u, v}}, {"members", r.members}});
    }
    json fhat = json::array();
    const auto& c = b.limit.support;
    for (Element j = 1; j < c.size(); ++j) {
        for (Element i = 0; i < j; ++i) {
            const auto [u, v] = decode_pair(b.limit.coloring(i, j));
            fhat.push_back({{"pair", {c[i], c[j]}}, {"value", {u, v}}});
        }
    }
    json steps = json::array();
    for (const auto& s : b.lift.steps) {
        steps.push_back({{"added", s.added ? json(*s.added) : json(nullptr)},
                         {"skipped", s.skipped_candidates},
                         {"threshold", s.threshold ? json(*s.threshold) : json(nullptr)},
                         {"skipped_beyond_threshold", s.skipped_beyond_threshold}});
    }
    const auto& k = b.checks;
    return {
        {"config", {{"window", b.config.window}, {"threshold", b.threshold}}},
        {"tail_domain", b.tail_domain},
        {"fbar",
         {{"rule", "least pair code <u,v> with f(u,v,z) = f(x,y,z)"}, {"table", b.fbar}}},
        {"family", family},
        {"cohesive", b.cohesive},
        {"f_hat",
         {{"rule", "eventual fbar(x,y,s) for s in C above max(y, threshold)"},
          {"fallback_pairs", b.limit.fallback_pairs},
          {"unobserved_pairs", b.limit.unobserved_pairs},
          {"entries", fhat}}},
        {"pair_rainbow", b.pair_rainbow},
        {"lift", {{"steps", steps}, {"rainbow", b.lift.rainbow}}},
        {"rainbow", b.rainbow},
        {"checks",
         {{"r_partition", k.r_partition},
          {"fhat_two_bounded", k.fhat_two_bounded},
          {"duplication_sound", k.duplication_sound},
          {"lift_prefixes_rainbow", k.lift_prefixes_rainbow},
          {"zero_skips_beyond_threshold", k.zero_skips_beyond_threshold},
          {"final_rainbow", k.final_rainbow}}},
    };
}

} // namespace rrt
