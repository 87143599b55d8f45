// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "rrt/galvin.hpp"
#include "rrt/generators.hpp"
#include "rrt/normalize.hpp"
#include "rrt/pipeline.hpp"
#include "rrt/tree_verify.hpp"
#include "rrt/coloring_io.hpp"
#include "rrt_cli.hpp"

using namespace rrt;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;
};

PipelineConfig with_window(std::size_t w) {
    PipelineConfig c;
    c.window = w;
    return c;
}

Coloring normal_pairs(std::size_t n, std::uint64_t seed) {
    return normalize_pairs(random_bounded_coloring(2, 2, n, seed, {.same_last = true}));
}

std::vector<Element> from_mask(std::uint64_t mask, std::size_t n) {
    std::vector<Element> xs;
    for (Element i = 0; i < n; ++i) {
        if (mask >> i & 1) xs.push_back(i);
    }
    return xs;
}

Verdict block_density() {
    std::uint64_t violations = 0, levels = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto f = random_bounded_coloring(2, 2, 166, seed);
        const auto bt = build_block_tree(f, 5);
        const auto r = verify_block_density(bt);
        violations += r.violation_count;
        for (std::size_t k = 0; k <= 5; ++k) {
            ++levels;
            if (2 * bt.t_levels[k].size() < bt.s_levels[k].size()) ++violations;
        }
    }
    return {violations == 0, "500 seeds, n=166, depth 5, " + std::to_string(levels) + " levels, " +
                                 std::to_string(violations) + " violations"};
}

struct TreeCorpus {
    std::vector<Coloring> colorings;
    std::vector<RainbowTree> trees;
};

const TreeCorpus& tree_corpus() {
    static const TreeCorpus corpus = [] {
        TreeCorpus c;
        c.colorings.reserve(20);
        for (std::uint64_t seed = 0; seed < 20; ++seed) c.colorings.push_back(normal_pairs(2000, seed));
        for (const auto& g : c.colorings) {
            ExtensionContext ctx(IncreasingTuple{}, viable_set({}, g, 2000));
            c.trees.push_back(build_rainbow_tree(ctx, g, 2));
        }
        return c;
    }();
    return corpus;
}

Verdict counting_bound() {
    std::uint64_t violations = 0, checked = 0;
    bool acceptable = true;
    for (const auto& tree : tree_corpus().trees) {
        for (std::size_t l = 0; l <= 2; ++l) {
            const auto r = verify_counting_lemma(tree, l);
            violations += r.violation_count;
            checked += r.checked;
            acceptable = acceptable && r.preconditions_hold;
        }
    }
    return {violations == 0 && acceptable, "20 seeds, n=2000, depth 2, " + std::to_string(checked) +
                                               " (level, y) checks, " + std::to_string(violations) + " violations"};
}

Verdict bushiness() {
    std::uint64_t violations = 0;
    std::uint64_t worst_num = 1, worst_den = 1;
    for (const auto& tree : tree_corpus().trees) {
        const auto r = verify_bushiness(tree);
        violations += r.violation_count;
        for (const auto& m : binary_encode_tree(tree).measures) {
            if (m.level == 0) continue;
            if (!(m.denominator % 4 == 0 ? m.cylinders > m.denominator - m.denominator / 4
                                         : 4 * m.cylinders > 3 * m.denominator)) {
                ++violations;
            }
            if (m.cylinders * worst_den < worst_num * m.denominator) {
                worst_num = m.cylinders;
                worst_den = m.denominator;
            }
        }
    }
    return {violations == 0, "20 seeds, levels 1-2, min measure " + std::to_string(worst_num) + "/" +
                                 std::to_string(worst_den) + ", " + std::to_string(violations) + " violations"};
}

Verdict normalization() {
    std::uint64_t mismatches = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto g = random_bounded_coloring(2, 2, 12, seed, {.same_last = true});
        const auto gbar = normalize_pairs(g);
        for (std::uint64_t mask = 0; mask < 4096; ++mask) {
            const auto xs = from_mask(mask, 12);
            if (is_rainbow(xs, g) != is_rainbow(xs, gbar)) ++mismatches;
        }
    }
    return {mismatches == 0, "100 seeds x 4096 subsets, " + std::to_string(mismatches) + " mismatches"};
}

Verdict galvin() {
    std::uint64_t homogeneous = 0, failures = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t b = 2 + seed % 2;
        const std::size_t k = 2 + (seed / 2) % 2;
        const auto f = random_bounded_coloring(k, b, 10, seed);
        const auto g = galvin_dual(f, b);
        for (std::uint64_t mask = 0; mask < 1024; ++mask) {
            const auto xs = from_mask(mask, 10);
            if (!is_homogeneous(xs, g)) continue;
            ++homogeneous;
            if (!is_rainbow(xs, f)) ++failures;
        }
    }
    return {failures == 0, "100 seeds, " + std::to_string(homogeneous) + " homogeneous sets, " +
                               std::to_string(failures) + " non-rainbow"};
}

Verdict greedy_floor() {
    std::uint64_t failures = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const std::size_t n = 10 + seed % 191;
        const auto f = random_bounded_coloring(2, 2, n, seed);
        const std::uint64_t m = greedy_tail_rainbow(f).size();
        if (m * (m + 1) / 2 < n) ++failures;
    }
    return {failures == 0, "500 seeds, n in [10, 200], " + std::to_string(failures) + " below floor"};
}

Verdict pipeline() {
    std::uint64_t bad = 0, skips = 0;
    std::size_t smallest = SIZE_MAX;
    std::string first_bad;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto f = make_stable_triple_coloring(60, 8, seed).base;
        try {
            const auto b = run_triples_pipeline(f, with_window(8));
            skips += b.lift.skips_beyond_threshold();
            smallest = std::min(smallest, b.rainbow.size());
            if (!b.checks.fhat_two_bounded || !b.checks.lift_prefixes_rainbow ||
                !b.checks.zero_skips_beyond_threshold || !b.checks.all()) {
                if (!bad++) first_bad = "seed " + std::to_string(seed);
            }
        } catch (const std::exception& e) {
            if (!bad++) first_bad = "seed " + std::to_string(seed) + ": " + e.what();
        }
    }
    std::string d = "200 seeds, n=60, window 8, " + std::to_string(skips) + " skips beyond threshold, min rainbow " +
                    std::to_string(smallest);
    if (bad) d += ", first failure " + first_bad;
    return {bad == 0, d};
}

Verdict partition_totality() {
    Rng rng(2024);
    std::uint64_t undefined = 0, candidates = 0, instances = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto g = normal_pairs(30, seed);
        // random rainbow prefix of length <= 3
        std::vector<Element> sigma;
        const std::size_t len = seed % 4;
        for (Element x = static_cast<Element>(rng.below(3)); x < 30 && sigma.size() < len;
             x += 1 + static_cast<Element>(rng.below(3))) {
            auto ext = sigma;
            ext.push_back(x);
            if (is_rainbow(ext, g)) sigma = std::move(ext);
        }
        const IncreasingTuple s(sigma);
        const auto reservoir = viable_set(s, g, 30);
        if (reservoir.size() < s.size() + 1) continue;
        ++instances;
        const ExtensionContext ctx(s, reservoir);
        const auto ext = first_element_extensions(ctx);
        std::vector<Element> above;
        for (Element y : reservoir) {
            if (y > ext.back().back()) above.push_back(y);
        }
        for (const auto& e : viability_partition(ext, g, above)) {
            ++candidates;
            if (!e.index) ++undefined;
        }
    }
    return {undefined == 0 && instances > 0, std::to_string(instances) + " instances, " + std::to_string(candidates) +
                                                 " candidates, " + std::to_string(undefined) + " undefined"};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Verdict determinism() {
    const fs::path dir = fs::temp_directory_path() / "rrt_acceptance_determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto p = [&](const char* name) { return (dir / name).string(); };
    write_text_file(p("pairs.rrcol"), to_rrcol(random_bounded_coloring(2, 2, 300, 5, {.same_last = true})));
    write_text_file(p("small.rrcol"), to_rrcol(random_bounded_coloring(2, 2, 10, 5)));
    write_text_file(p("block.rrcol"), to_rrcol(random_bounded_coloring(2, 2, 166, 5)));
    const std::vector<std::vector<std::string>> commands = {
        {"gen", "--arity", "3", "--bound", "2", "--n", "20", "--seed", "9", "--out", p("gen.rrcol")},
        {"gen", "--stable", "--n", "30", "--window", "5", "--seed", "9", "--format", "json"},
        {"normalize", "--in", p("pairs.rrcol"), "--out", p("normal.rrcol")},
        {"rainbow", "--tail", "--in", p("pairs.rrcol"), "--out", p("rainbow.json")},
        {"tree", "--in", p("normal.rrcol"), "--depth", "2", "--out", p("tree.json")},
        {"verify", "block", "--in", p("block.rrcol"), "--depth", "5"},
        {"verify", "lemma25", "--in", p("normal.rrcol"), "--depth", "2"},
        {"verify", "bushy", "--in", p("normal.rrcol"), "--depth", "1"},
        {"verify", "galvin", "--in", p("small.rrcol")},
        {"reduce", "--n", "60", "--window", "8", "--seed", "3", "--out", p("bundle.json")},
        {"sweep", "--kind", "reduce", "--seeds", "0..4", "--out", p("sweep.csv")},
        {"sweep", "--kind", "galvin", "--seeds", "0..9"},
    };
    std::size_t differing = 0;
    std::string first;
    for (const auto& args : commands) {
        std::string outputs[2];
        for (int round = 0; round < 2; ++round) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            outputs[round] = std::to_string(code) + "\n" + out.str() + err.str();
            for (const auto& a : args) {
                if (a.rfind(dir.string(), 0) == 0 && a != p("pairs.rrcol") && a != p("small.rrcol") &&
                    a != p("block.rrcol") && a != p("normal.rrcol")) {
                    outputs[round] += slurp(a);
                }
                if (a == p("normal.rrcol") && args[0] == "normalize") outputs[round] += slurp(a);
            }
        }
        if (outputs[0] != outputs[1] || outputs[0].rfind("0\n", 0) != 0) {
            if (!differing++) first = args[0] + (args[0] == "verify" ? " " + args[1] : std::string());
        }
    }
    fs::remove_all(dir);
    std::string d = std::to_string(commands.size()) + " command lines run twice, " + std::to_string(differing) +
                    " differing or failing";
    if (differing) d += " (first: " + first + ")";
    return {differing == 0, d};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"block tree density", block_density},
        {"non-viable extension counting bound", counting_bound},
        {"bushiness and binary measure", bushiness},
        {"normalization keeps rainbow sets", normalization},
        {"dual coloring homogeneous sets are rainbows", galvin},
        {"greedy tail rainbow size floor", greedy_floor},
        {"triple reduction soundness", pipeline},
        {"first-element partition is total", partition_totality},
        {"byte-identical reruns", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %zu %s: %s (%s; %.1fs)\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    v.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !v.ok;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
