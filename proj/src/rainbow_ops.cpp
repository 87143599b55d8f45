#include "rrt/rainbow_ops.hpp"

#include <algorithm>

#include "rrt/combinatorics.hpp"
#include "rrt/normalize.hpp"

namespace rrt {

ExtensionContext::ExtensionContext(IncreasingTuple sigma, std::vector<Element> reservoir)
    : sigma_(std::move(sigma)), reservoir_(std::move(reservoir)) {
    require_increasing(reservoir_, "reservoir");
    if (!sigma_.empty() && !reservoir_.empty() && sigma_.back() >= reservoir_.front()) {
        throw PreconditionError("reservoir must lie above max sigma",
                                Witness{{sigma_.vec(), {reservoir_.front()}},
                                        "max sigma " + std::to_string(sigma_.back()) +
                                            " >= min reservoir " + std::to_string(reservoir_.front())});
    }
}

std::size_t tail_width_for(ViabilityMode mode, std::size_t arity) {
    return mode == ViabilityMode::rainbow ? arity : arity - 1;
}

ViabilityChecker::ViabilityChecker(const Coloring& g, std::span<const Element> base, ViabilityMode mode)
    : ViabilityChecker(g, base, tail_width_for(mode, g.arity())) {}

ViabilityChecker::ViabilityChecker(const Coloring& g, std::span<const Element> base,
                                   std::size_t tail_width)
    : g_(&g), width_(tail_width), base_(base.begin(), base.end()) {
    if (width_ > g.arity()) throw PreconditionError("tail width exceeds arity");
    require_increasing(base_, "base");
    if (!base_.empty() && base_.back() >= g.domain_size()) {
        throw PreconditionError("base element " + std::to_string(base_.back()) + " outside domain");
    }
    for_each_subset(base_, g.arity(), [&](std::span<const Element> t) {
        base_colors_.push_back(g.at(encode_tuple(t).rank));
        return true;
    });
    std::sort(base_colors_.begin(), base_colors_.end());
    base_ok_ = width_ == 0 || is_k_tail_rainbow(base_, g, width_);
    rebuild_prefixes();
}

void ViabilityChecker::rebuild_prefixes() {
    prefixes_.clear();
    for_each_subset(base_, g_->arity() - 1, [&](std::span<const Element> t) {
        prefixes_.emplace_back(t.begin(), t.end());
        return true;
    });
}

std::optional<Collision> ViabilityChecker::blame(Element x) const {
    const std::size_t k = g_->arity();
    if (width_ == 0) return std::nullopt;
    if (x >= g_->domain_size() || (!base_.empty() && x <= base_.back())) return std::nullopt;

    std::vector<std::pair<Color, std::size_t>> fresh;
    fresh.reserve(prefixes_.size());
    std::vector<Element> t(k);
    for (std::size_t p = 0; p < prefixes_.size(); ++p) {
        std::copy(prefixes_[p].begin(), prefixes_[p].end(), t.begin());
        t[k - 1] = x;
        const Color c = g_->at(encode_tuple(t).rank);
        if (std::binary_search(base_colors_.begin(), base_colors_.end(), c)) {
            // Recover the base tuple for the witness.
            std::vector<Element> old;
            for_each_subset(base_, k, [&](std::span<const Element> s) {
                if (g_->at(encode_tuple(s).rank) != c) return true;
                old.assign(s.begin(), s.end());
                return false;
            });
            return Collision{std::move(old), t, c};
        }
        fresh.emplace_back(c, p);
    }
    std::sort(fresh.begin(), fresh.end());
    for (std::size_t i = 0; i + 1 < fresh.size(); ++i) {
        if (fresh[i].first != fresh[i + 1].first) continue;
        const auto& a = prefixes_[fresh[i].second];
        const auto& b = prefixes_[fresh[i + 1].second];
        // Both tuples end in x, so their tails agree iff the prefixes agree
        // from position k - width on.
        const auto from = static_cast<std::ptrdiff_t>(k - width_);
        const bool tails_agree = std::equal(a.begin() + from, a.end(), b.begin() + from);
        if (!tails_agree) {
            std::vector<Element> ta(a), tb(b);
            ta.push_back(x);
            tb.push_back(x);
            return Collision{std::move(ta), std::move(tb), fresh[i].first};
        }
    }
    return std::nullopt;
}

bool ViabilityChecker::accepts(Element x) const {
    if (!base_ok_ || x >= g_->domain_size() || (!base_.empty() && x <= base_.back())) return false;
    return !blame(x).has_value();
}

void ViabilityChecker::extend(Element x) {
    if (!base_.empty() && x <= base_.back()) {
        throw PreconditionError("extension element " + std::to_string(x) + " not above the base");
    }
    if (x >= g_->domain_size()) throw PreconditionError("extension element outside domain");
    if (blame(x)) base_ok_ = false;
    std::vector<Element> t(g_->arity());
    for (const auto& p : prefixes_) {
        std::copy(p.begin(), p.end(), t.begin());
        t.back() = x;
        base_colors_.push_back(g_->at(encode_tuple(t).rank));
    }
    std::sort(base_colors_.begin(), base_colors_.end());
    base_.push_back(x);
    rebuild_prefixes();
}

namespace {

std::vector<Element> collect_viable(const IncreasingTuple& sigma, const Coloring& g,
                                    Element domain_cap, ViabilityMode mode) {
    ViabilityChecker checker(g, sigma.entries(), mode);
    if (!checker.base_ok()) {
        const auto c = find_collision(sigma.entries(), g, tail_width_for(mode, g.arity()));
        throw PreconditionError(
            mode == ViabilityMode::rainbow ? "sigma is not a rainbow" : "sigma is not a tail rainbow",
            Witness{{c->first, c->second}, "colliding tuples inside sigma"});
    }
    std::vector<Element> out;
    const Element cap = std::min<Element>(domain_cap, static_cast<Element>(g.domain_size()));
    for (Element x = sigma.empty() ? 0 : sigma.back() + 1; x < cap; ++x) {
        if (checker.accepts(x)) out.push_back(x);
    }
    return out;
}

} // namespace

std::vector<Element> viable_set(const IncreasingTuple& sigma, const Coloring& g, Element domain_cap) {
    return collect_viable(sigma, g, domain_cap, ViabilityMode::rainbow);
}

std::vector<Element> tail_viable_set(const IncreasingTuple& sigma, const Coloring& g,
                                     Element domain_cap) {
    return collect_viable(sigma, g, domain_cap, ViabilityMode::tail);
}

bool is_acceptable(const Coloring& g, const ExtensionContext& ctx) {
    ViabilityMode mode;
    if (g.arity() == 2) {
        if (!is_normal(g)) throw PreconditionError("acceptability needs a normal pair coloring");
        mode = ViabilityMode::rainbow;
    } else if (g.arity() == 3) {
        if (!is_semi_normal(g)) throw PreconditionError("acceptability needs a semi-normal triple coloring");
        mode = ViabilityMode::tail;
    } else {
        throw PreconditionError("acceptability is defined for arity 2 and 3 only");
    }
    const auto reservoir = ctx.reservoir();
    if (!reservoir.empty() && reservoir.back() >= g.domain_size()) {
        throw PreconditionError("reservoir leaves the domain");
    }
    ViabilityChecker checker(g, ctx.sigma().entries(), mode);
    return std::all_of(reservoir.begin(), reservoir.end(),
                       [&](Element x) { return checker.accepts(x); });
}

IncreasingTuple greedy_rainbow_over(const Coloring& f, std::span<const Element> candidates,
                                    std::size_t tail_width) {
    require_increasing(candidates, "candidates");
    ViabilityChecker checker(f, {}, tail_width);
    for (Element x : candidates) {
        if (checker.accepts(x)) checker.extend(x);
    }
    return IncreasingTuple(std::vector<Element>(checker.base().begin(), checker.base().end()));
}

namespace {

std::vector<Element> whole_domain(const Coloring& f) {
    std::vector<Element> d(f.domain_size());
    for (Element i = 0; i < d.size(); ++i) d[i] = i;
    return d;
}

} // namespace

IncreasingTuple greedy_tail_rainbow(const Coloring& f) {
    return greedy_rainbow_over(f, whole_domain(f), tail_width_for(ViabilityMode::tail, f.arity()));
}

IncreasingTuple greedy_rainbow(const Coloring& f, bool require_tail) {
    return greedy_rainbow_over(
        f, whole_domain(f),
        tail_width_for(require_tail ? ViabilityMode::tail : ViabilityMode::rainbow, f.arity()));
}

std::vector<PartitionEntry> viability_partition(std::span<const IncreasingTuple> extensions,
                                                const Coloring& f,
                                                std::span<const Element> candidates) {
    std::vector<ViabilityChecker> checkers;
    checkers.reserve(extensions.size());
    for (const auto& ext : extensions) {
        checkers.emplace_back(f, ext.entries(), ViabilityMode::rainbow);
        if (!checkers.back().base_ok()) {
            throw PreconditionError("partition extension is not a rainbow", Witness{{ext.vec()}, {}});
        }
    }
    std::vector<PartitionEntry> out;
    out.reserve(candidates.size());
    for (Element y : candidates) {
        PartitionEntry e{y, std::nullopt};
        for (std::size_t i = 0; i < checkers.size(); ++i) {
            if (checkers[i].accepts(y)) {
                e.index = i;
                break;
            }
        }
        out.push_back(e);
    }
    return out;
}

std::vector<IncreasingTuple> first_element_extensions(const ExtensionContext& ctx) {
    const std::size_t l = ctx.sigma().size();
    const auto reservoir = ctx.reservoir();
    if (reservoir.size() < l + 1) {
        throw PreconditionError("reservoir has " + std::to_string(reservoir.size()) +
                                " elements, need |sigma| + 1 = " + std::to_string(l + 1));
    }
    std::vector<IncreasingTuple> out;
    out.reserve(l + 1);
    for (std::size_t i = 0; i <= l; ++i) out.push_back(ctx.sigma().extended(reservoir[i]));
    return out;
}

} // namespace rrt
