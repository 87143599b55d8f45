#include "rrt/tree_verify.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "rrt/normalize.hpp"

namespace rrt {

namespace {

__extension__ typedef unsigned __int128 u128;

void require_full_above(const RainbowTree& tree, std::size_t level) {
    for (std::size_t j = 0; j < level && j < tree.depth(); ++j) {
        for (const auto& node : tree.level(j)) {
            if (node.truncated) {
                throw PreconditionError(
                    "level not full: a level-" + std::to_string(j) +
                        " node ran out of reservoir before filling its quota",
                    Witness{{tree.extension(node)}, "reservoir exhausted"});
            }
        }
    }
}

bool preconditions_hold(const RainbowTree& tree) {
    try {
        return is_acceptable(tree.coloring(), tree.context());
    } catch (const PreconditionError&) {
        return false;
    }
}

std::vector<ViabilityChecker> checkers_for(const RainbowTree& tree, std::size_t level) {
    std::vector<ViabilityChecker> out;
    out.reserve(tree.level(level).size());
    for (const auto& node : tree.level(level)) {
        out.emplace_back(tree.coloring(), tree.extension(node), tree.mode());
    }
    return out;
}

// Largest element of any tau at the level; nullopt when no tau is non-empty.
std::optional<Element> level_max(const std::vector<TreeNode>& nodes) {
    std::optional<Element> m;
    for (const auto& n : nodes) {
        if (!n.tau.empty()) m = std::max(m.value_or(0), n.tau.back());
    }
    return m;
}

bool above(Element y, std::optional<Element> bound) { return !bound || y > *bound; }

nlohmann::json schedule_params(const RainbowTree& tree) {
    return {{"schedule", std::string(to_string(tree.schedule().kind()))},
            {"sigma", tree.context().sigma().vec()},
            {"sigma_len", tree.context().sigma().size()},
            {"reservoir_size", tree.context().reservoir().size()},
            {"depth", tree.depth()},
            {"n", tree.coloring().domain_size()}};
}

} // namespace

VerificationReport verify_counting_lemma(const RainbowTree& tree, std::size_t level) {
    if (tree.mode() != ViabilityMode::rainbow) {
        throw PreconditionError("the counting lemma is verified on pair rainbow trees only");
    }
    if (level > tree.depth()) throw PreconditionError("level beyond tree depth");
    require_full_above(tree, level);

    VerificationReport report;
    report.lemma = "lemma25";
    report.parameters = schedule_params(tree);
    report.parameters["level"] = level;
    report.preconditions_hold = preconditions_hold(tree);

    const auto& nodes = tree.level(level);
    const std::uint64_t cap = tree.schedule().capacity(level);
    const auto checkers = checkers_for(tree, level);
    const auto max_here = level_max(nodes);

    const bool has_next = level < tree.depth();
    std::vector<ViabilityChecker> next_checkers;
    std::optional<Element> max_next;
    if (has_next) {
        next_checkers = checkers_for(tree, level + 1);
        max_next = level_max(tree.level(level + 1));
    }
    const std::uint64_t sigma_len = tree.context().sigma().size();
    const std::uint64_t per_parent = sigma_len + level;
    const std::uint64_t branching = tree.schedule().branching(level);

    std::uint64_t eligible = 0, step_checked = 0, max_n = 0, max_n0 = 0, max_n1 = 0;
    std::vector<bool> in_n(nodes.size());
    for (Element y : tree.context().reservoir()) {
        if (!above(y, max_here)) continue;
        ++eligible;
        ++report.checked;
        std::uint64_t n = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            in_n[i] = !checkers[i].accepts(y);
            n += in_n[i];
        }
        max_n = std::max(max_n, n);
        auto witness = [&](const std::string& detail) {
            Witness w;
            w.tuples.push_back({y});
            for (std::size_t i = 0; i < nodes.size() && w.tuples.size() < 9; ++i) {
                if (in_n[i]) w.tuples.push_back(tree.extension(nodes[i]));
            }
            w.detail = detail;
            return w;
        };
        if (u128{4} * n >= cap) {
            report.add({"quarter-bound", {y},
                        witness("|N| = " + std::to_string(n) + " is not below capacity/4 = " +
                                std::to_string(cap) + "/4")});
        }
        // |N| < (1/4 - 2^{-(l+2)}) cap  <=>  2^{l+2} |N| < (2^l - 1) cap.
        const bool sharp_ok = level == 0
                                  ? n == 0
                                  : (u128{n} << (level + 2)) < ((u128{1} << level) - 1) * cap;
        if (!sharp_ok) {
            report.add({"sharper-bound", {y},
                        witness("|N| = " + std::to_string(n) + " breaks the inductive bound at level " +
                                std::to_string(level))});
        }
        if (!has_next || !above(y, max_next)) continue;
        ++step_checked;
        std::uint64_t n0 = 0, n1 = 0;
        const auto& next = tree.level(level + 1);
        for (std::size_t i = 0; i < next.size(); ++i) {
            if (next_checkers[i].accepts(y)) continue;
            (in_n[next[i].parent] ? n0 : n1)++;
        }
        max_n0 = std::max(max_n0, n0);
        max_n1 = std::max(max_n1, n1);
        if (u128{n0} > u128{n} * branching) {
            report.add({"step-inherited", {y},
                        witness("children of N exceed |N| * branching: " + std::to_string(n0))});
        }
        if (u128{n1} > u128{nodes.size() - n} * per_parent) {
            report.add({"step-fresh", {y},
                        witness("|N_{l+1,y,1}| = " + std::to_string(n1) + " exceeds (" +
                                std::to_string(nodes.size()) + " - " + std::to_string(n) + ") * " +
                                std::to_string(per_parent))});
        }
    }
    report.levels.push_back({{"level", level},
                             {"nodes", nodes.size()},
                             {"capacity", cap},
                             {"eligible_y", eligible},
                             {"max_N", max_n},
                             {"step_checked", step_checked},
                             {"max_N_inherited", max_n0},
                             {"max_N_fresh", max_n1}});
    if (!report.passed()) {
        report.notes.push_back(report.preconditions_hold
                                   ? "violation with preconditions intact: construction bug"
                                   : "preconditions fail on re-validation: input is not acceptable");
    }
    return report;
}

VerificationReport verify_bushiness(const RainbowTree& tree, std::optional<std::uint64_t> supply_threshold) {
    require_full_above(tree, tree.depth());
    VerificationReport report;
    report.lemma = "bushy";
    report.parameters = schedule_params(tree);
    if (supply_threshold) report.parameters["threshold"] = *supply_threshold;
    report.preconditions_hold = preconditions_hold(tree);
    if (tree.mode() == ViabilityMode::tail) report.notes.push_back("tail tree: bound checked experimentally");

    const auto reservoir = tree.context().reservoir();
    for (std::size_t l = 0; l <= tree.depth(); ++l) {
        const auto& nodes = tree.level(l);
        const std::uint64_t cap = tree.schedule().capacity(l);
        const std::uint64_t threshold = supply_threshold.value_or(4 * tree.schedule().branching(l));
        std::uint64_t supplied = 0;
        for (const auto& node : nodes) {
            ViabilityChecker checker(tree.coloring(), tree.extension(node), tree.mode());
            auto it = node.tau.empty() ? reservoir.begin()
                                       : std::upper_bound(reservoir.begin(), reservoir.end(), node.tau.back());
            std::uint64_t supply = 0;
            for (; it != reservoir.end() && supply < threshold; ++it) supply += checker.accepts(*it);
            supplied += supply >= threshold;
        }
        report.checked += 1 + (l > 0);
        if (u128{4} * nodes.size() <= u128{3} * cap) {
            report.add({"raw-bushiness", {},
                        Witness{{}, "level " + std::to_string(l) + " has " + std::to_string(nodes.size()) +
                                        " nodes, not above 3/4 of " + std::to_string(cap)}});
        }
        if (l > 0 && u128{4} * supplied <= u128{3} * cap) {
            report.add({"supplied-bushiness", {},
                        Witness{{}, "level " + std::to_string(l) + " has " + std::to_string(supplied) +
                                        " nodes with supply >= " + std::to_string(threshold) +
                                        ", not above 3/4 of " + std::to_string(cap)}});
        }
        report.levels.push_back({{"level", l},
                                 {"nodes", nodes.size()},
                                 {"capacity", cap},
                                 {"ratio", cap ? static_cast<double>(nodes.size()) / static_cast<double>(cap) : 0.0},
                                 {"supply_threshold", threshold},
                                 {"supplied_nodes", supplied}});
    }
    return report;
}

BinaryImage binary_encode_tree(const RainbowTree& tree) {
    BinaryImage image;
    std::vector<std::size_t> widths;
    for (std::size_t l = 0; l < tree.depth(); ++l) {
        const std::uint64_t b = tree.schedule().branching(l);
        if (!std::has_single_bit(b)) {
            throw PreconditionError("branching " + std::to_string(b) + " at level " + std::to_string(l) +
                                    " is not a power of two");
        }
        widths.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    image.codes.resize(tree.depth() + 1);
    image.codes[0].assign(tree.level(0).size(), "");
    std::size_t bits = 0;
    for (std::size_t l = 0; l <= tree.depth(); ++l) {
        if (l > 0) {
            const std::size_t w = widths[l - 1];
            bits += w;
            for (const auto& node : tree.level(l)) {
                std::string code = image.codes[l - 1][node.parent];
                for (std::size_t i = 0; i < w; ++i) code += ((node.child_rank >> i) & 1U) ? '1' : '0';
                image.codes[l].push_back(std::move(code));
            }
        }
        const std::set<std::string> distinct(image.codes[l].begin(), image.codes[l].end());
        const std::uint64_t cap = tree.schedule().capacity(l);
        image.measures.push_back(
            {l, distinct.size(), cap, bits, static_cast<double>(distinct.size()) / static_cast<double>(cap)});
    }
    return image;
}

VerificationReport verify_block_density(const BlockTree& bt) {
    VerificationReport report;
    report.lemma = "block";
    const Coloring& f = *bt.coloring;
    report.parameters = {{"depth", bt.depth}, {"n", f.domain_size()}, {"bound", f.bound()}};
    report.preconditions_hold = f.max_class_size() <= 2;
    for (std::size_t k = 0; k <= bt.depth; ++k) {
        const std::uint64_t s = bt.s_levels[k].size();
        const std::uint64_t t = bt.t_levels[k].size();
        ++report.checked;
        if (2 * t < s) {
            report.add({"level-density", {},
                        Witness{{}, "level " + std::to_string(k) + ": |T| = " + std::to_string(t) +
                                        " < |S|/2 = " + std::to_string(s) + "/2"}});
        }
        report.levels.push_back({{"level", k},
                                 {"s_nodes", s},
                                 {"t_nodes", t},
                                 {"density", s ? static_cast<double>(t) / static_cast<double>(s) : 1.0}});
    }
    for (std::size_t m = 0; m < bt.depth; ++m) {
        const std::uint64_t s_children = bt.schedule.branching(m);
        const u128 pow = u128{1} << m;
        for (std::size_t i = 0; i < bt.t_levels[m].size(); ++i) {
            ++report.checked;
            const std::uint64_t t_children = bt.t_children[m][i];
            if (pow * t_children < (pow - 1) * s_children) {
                report.add({"step-density", bt.t_levels[m][i],
                            Witness{{bt.t_levels[m][i]},
                                    std::to_string(t_children) + " of " + std::to_string(s_children) +
                                        " children stay tail rainbows, below the (1 - 2^-" +
                                        std::to_string(m) + ") fraction"}});
            }
        }
    }
    if (!report.passed() && !report.preconditions_hold) {
        report.notes.push_back("coloring is not 2-bounded; the density bound does not apply");
    }
    return report;
}

} // namespace rrt
