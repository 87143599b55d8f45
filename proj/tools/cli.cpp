#include "rrt_cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "rrt/coloring_io.hpp"
#include "rrt/galvin.hpp"
#include "rrt/generators.hpp"
#include "rrt/normalize.hpp"
#include "rrt/pipeline.hpp"
#include "rrt/predicates.hpp"
#include "rrt/rainbow_ops.hpp"
#include "rrt/tree_io.hpp"
#include "rrt/tree_verify.hpp"

namespace rrt::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::string in;
    std::string out;
    std::string format = "rrcol";
    std::string sigma;
    std::string seeds;
    std::string kind;
    std::size_t arity = 2;
    std::optional<std::size_t> bound;
    std::optional<std::size_t> n;
    std::optional<std::size_t> depth;
    std::size_t window = 8;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultNodeBudget;
    std::optional<std::uint64_t> threshold;
    std::optional<std::size_t> tail_width;
    bool tail = false;
    bool stable = false;
    bool timing = false;
    bool table = false;
};

void add_options(CLI::App* app, Options& o, std::initializer_list<std::string_view> names) {
    for (std::string_view name : names) {
        if (name == "in") app->add_option("--in", o.in, "input coloring (RRCOL or JSON)");
        else if (name == "out") app->add_option("--out", o.out, "output path");
        else if (name == "format") app->add_option("--format", o.format, "rrcol or json")->check(CLI::IsMember({"rrcol", "json"}));
        else if (name == "arity") app->add_option("--arity", o.arity, "tuple size (1..4)");
        else if (name == "bound") app->add_option("--bound", o.bound, "color class size bound");
        else if (name == "n") app->add_option("--n", o.n, "domain size");
        else if (name == "seed") app->add_option("--seed", o.seed, "generator seed");
        else if (name == "seeds") app->add_option("--seeds", o.seeds, "inclusive seed range A..B")->required();
        else if (name == "depth") app->add_option("--depth", o.depth, "tree depth");
        else if (name == "sigma") app->add_option("--sigma", o.sigma, "increasing prefix, e.g. \"0,1,2\"");
        else if (name == "window") app->add_option("--window", o.window, "seed window for thinning / stable generator");
        else if (name == "threshold") app->add_option("--threshold", o.threshold, "stabilization threshold or supply threshold");
        else if (name == "budget") app->add_option("--budget", o.budget, "node budget for tree building");
        else if (name == "tail") app->add_flag("--tail", o.tail, "use tail rainbows");
        else if (name == "tail-width") app->add_option("--tail-width", o.tail_width, "explicit tail width");
        else if (name == "stable") app->add_flag("--stable", o.stable, "stable triple generator (uses --window)");
        else if (name == "kind") app->add_option("--kind", o.kind, "sweep kind")->required()->check(CLI::IsMember({"block", "lemma25", "bushy", "galvin", "rainbow", "reduce"}));
    }
    app->add_flag("--timing", o.timing, "include wall-clock timings (non-deterministic)");
    app->add_flag("--table", o.table, "human-readable table instead of JSON");
}

std::vector<Element> iota_elements(std::size_t n) {
    std::vector<Element> xs(n);
    for (Element i = 0; i < n; ++i) xs[i] = i;
    return xs;
}

std::uint64_t parse_number(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty()) {
        throw UsageError(std::string("bad ") + what + ": '" + std::string(s) + "'");
    }
    return v;
}

IncreasingTuple parse_sigma(std::string_view text) {
    std::vector<Element> xs;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        const auto v = parse_number(item, "sigma entry");
        if (v > UINT32_MAX) throw UsageError("sigma entry out of range");
        xs.push_back(static_cast<Element>(v));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (!is_strictly_increasing(xs)) throw UsageError("sigma must be strictly increasing");
    return IncreasingTuple(std::move(xs));
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto v = parse_number(text, "seed range");
        return {v, v};
    }
    const auto a = parse_number(text.substr(0, dots), "seed range");
    const auto b = parse_number(text.substr(dots + 2), "seed range");
    if (b < a) throw UsageError("empty seed range");
    return {a, b};
}

std::string fnv1a_hex(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Coloring require_input(const Options& o) {
    if (o.in.empty()) throw UsageError("--in is required");
    return read_coloring(o.in);
}

json check_entry(const std::string& name, bool ok, std::uint64_t count,
                 const std::optional<Witness>& witness = std::nullopt) {
    json j = {{"name", name}, {"status", ok ? "pass" : "fail"}, {"count", count}};
    if (witness) j["witness"] = to_json(*witness);
    return j;
}

json checks_from(const VerificationReport& r) {
    std::optional<Witness> w;
    if (!r.violations.empty()) {
        w = r.violations.front().witness;
        if (w->tuples.empty() && !r.violations.front().node.empty()) w->tuples.push_back(r.violations.front().node);
        w->detail = r.violations.front().check + ": " + w->detail;
    }
    json checks = json::array();
    checks.push_back(check_entry(r.lemma, r.passed(), r.violation_count, w));
    if (!r.preconditions_hold) {
        checks.push_back(check_entry("preconditions", false, 1, Witness{{}, "input fails the verifier's preconditions"}));
    }
    return checks;
}

bool all_pass(const json& checks) {
    for (const auto& c : checks) {
        if (c["status"] != "pass") return false;
    }
    return true;
}

class Session {
public:
    Session(const std::vector<std::string>& args, std::ostream& out)
        : out_(out), start_(std::chrono::steady_clock::now()) {
        report_ = {{"tool", "rrt"}, {"version", 1}, {"command", args}};
    }

    json& report() { return report_; }

    // Prints the report; returns the exit code it implies.
    int finish(const Options& o, const json& checks, bool preconditions_ok = true) {
        report_["checks"] = checks;
        if (o.timing) {
            report_["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                                        std::chrono::steady_clock::now() - start_).count();
        }
        if (o.table) {
            render_table();
        } else {
            out_ << report_.dump(2) << "\n";
        }
        if (!preconditions_ok) return kPrecondition;
        return all_pass(checks) ? kOk : kViolation;
    }

private:
    void render_table() {
        std::string cmd;
        for (const auto& a : report_["command"]) cmd += (cmd.empty() ? "" : " ") + a.get<std::string>();
        out_ << "command: " << cmd << "\n";
        out_ << std::left << std::setw(28) << "check" << std::setw(8) << "status" << "count\n";
        for (const auto& c : report_["checks"]) {
            out_ << std::left << std::setw(28) << c["name"].get<std::string>() << std::setw(8)
                 << c["status"].get<std::string>() << c["count"] << "\n";
            if (c.contains("witness")) out_ << "  witness: " << c["witness"].dump() << "\n";
        }
        if (report_.contains("elapsed_ms")) out_ << "elapsed_ms: " << report_["elapsed_ms"] << "\n";
    }

    std::ostream& out_;
    std::chrono::steady_clock::time_point start_;
    json report_;
};

// ---- shared work units, also used by sweep -------------------------------

Coloring normal_pairs(std::size_t n, std::uint64_t seed) {
    return normalize_pairs(random_bounded_coloring(2, 2, n, seed, {.same_last = true}));
}

RainbowTree make_tree(const Coloring& g, const IncreasingTuple& sigma, std::size_t depth,
                      std::uint64_t budget, bool tail) {
    const auto cap = static_cast<Element>(g.domain_size());
    auto reservoir = tail ? tail_viable_set(sigma, g, cap) : viable_set(sigma, g, cap);
    ExtensionContext ctx(sigma, std::move(reservoir));
    return tail ? build_quadruple_tree(ctx, g, depth, budget) : build_rainbow_tree(ctx, g, depth, budget);
}

struct Outcome {
    json checks = json::array();
    json detail = json::object();
    bool preconditions_ok = true;
    std::uint64_t size = 0;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::optional<double> min_ratio;
    std::optional<std::uint64_t> skips_beyond;
};

void note_ratio(Outcome& r, double v) { r.min_ratio = r.min_ratio ? std::min(*r.min_ratio, v) : v; }

Outcome do_block(const Coloring& f, std::size_t depth, std::uint64_t budget) {
    const BlockTree bt = build_block_tree(f, depth, budget);
    const VerificationReport vr = verify_block_density(bt);
    Outcome r;
    r.checks = checks_from(vr);
    r.detail = {{"report", to_json(vr)}};
    r.preconditions_ok = vr.preconditions_hold;
    r.size = bt.t_levels.back().size();
    r.checked = vr.checked;
    r.violations = vr.violation_count;
    for (const auto& l : vr.levels) note_ratio(r, l["density"].get<double>());
    return r;
}

Outcome do_lemma25(const Coloring& g, const IncreasingTuple& sigma, std::size_t depth, std::uint64_t budget) {
    const RainbowTree tree = make_tree(g, sigma, depth, budget, false);
    Outcome r;
    json reports = json::array();
    for (std::size_t l = 0; l <= tree.depth(); ++l) {
        const VerificationReport vr = verify_counting_lemma(tree, l);
        for (auto& c : checks_from(vr)) {
            c["name"] = c["name"].get<std::string>() + "/level" + std::to_string(l);
            r.checks.push_back(c);
        }
        reports.push_back(to_json(vr));
        r.preconditions_ok = r.preconditions_ok && vr.preconditions_hold;
        r.checked += vr.checked;
        r.violations += vr.violation_count;
    }
    r.size = tree.level(tree.depth()).size();
    r.detail = {{"reports", reports}};
    return r;
}

Outcome do_bushy(const Coloring& g, const IncreasingTuple& sigma, std::size_t depth, std::uint64_t budget,
                 std::optional<std::uint64_t> supply) {
    const RainbowTree tree = make_tree(g, sigma, depth, budget, false);
    const VerificationReport vr = verify_bushiness(tree, supply);
    Outcome r;
    r.checks = checks_from(vr);
    r.preconditions_ok = vr.preconditions_hold;
    r.checked = vr.checked;
    r.violations = vr.violation_count;
    r.size = tree.level(tree.depth()).size();

    const BinaryImage img = binary_encode_tree(tree);
    json measures = json::array();
    std::uint64_t low = 0;
    std::optional<Witness> w;
    for (const auto& m : img.measures) {
        measures.push_back({{"level", m.level}, {"cylinders", m.cylinders}, {"denominator", m.denominator},
                            {"value", m.value}});
        if (m.level == 0) continue;
        note_ratio(r, m.value);
        // measure > 3/4, exactly; the denominator is a power of two
        const bool ok = m.denominator % 4 == 0 ? m.cylinders > m.denominator - m.denominator / 4
                                               : 4 * m.cylinders > 3 * m.denominator;
        if (!ok) {
            ++low;
            if (!w) w = Witness{{}, "level " + std::to_string(m.level) + " measure " +
                                        std::to_string(m.cylinders) + "/" + std::to_string(m.denominator)};
        }
    }
    r.checks.push_back(check_entry("binary-measure", low == 0, low, w));
    r.violations += low;
    r.detail = {{"report", to_json(vr)}, {"measures", measures}};
    return r;
}

Outcome do_galvin(const Coloring& f, std::size_t bound, std::uint64_t seed) {
    const Coloring g = galvin_dual(f, bound);
    const std::size_t n = f.domain_size();
    VerificationReport vr;
    vr.lemma = "galvin";
    const bool exhaustive = n <= 16;
    vr.parameters = {{"n", n}, {"bound", bound}, {"mode", exhaustive ? "exhaustive" : "sampled"}};
    auto test = [&](const std::vector<Element>& xs) {
        if (!is_homogeneous(xs, g)) return;
        ++vr.checked;
        if (auto c = find_collision(xs, f, f.arity())) {
            vr.add({"homogeneous-not-rainbow", xs, Witness{{c->first, c->second}, "same f-color"}});
        }
    };
    std::vector<Element> xs;
    if (exhaustive) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            xs.clear();
            for (Element i = 0; i < n; ++i) {
                if (mask >> i & 1) xs.push_back(i);
            }
            test(xs);
        }
    } else {
        Rng rng(seed);
        for (int trial = 0; trial < 4096; ++trial) {
            // Grow a homogeneous set greedily from a random start so that the
            // sample is not dominated by trivially small sets.
            auto order = iota_elements(n);
            rng.shuffle(order.begin(), order.end());
            xs.clear();
            for (Element x : order) {
                auto ys = xs;
                ys.insert(std::upper_bound(ys.begin(), ys.end(), x), x);
                if (is_homogeneous(ys, g)) xs = std::move(ys);
            }
            test(xs);
        }
    }
    Outcome r;
    r.checks = checks_from(vr);
    r.checked = vr.checked;
    r.violations = vr.violation_count;
    r.detail = {{"report", to_json(vr)}};
    return r;
}

struct RainbowResult {
    Outcome outcome;
    std::vector<Element> set;
};

RainbowResult do_rainbow(const Coloring& f, bool tail, std::optional<std::size_t> tail_width) {
    const std::size_t k = f.arity();
    std::size_t width = k;
    if (tail_width) {
        if (*tail_width > k) throw UsageError("--tail-width exceeds the arity");
        width = *tail_width;
    } else if (tail) {
        width = k - 1;
    }
    const auto set = greedy_rainbow_over(f, iota_elements(f.domain_size()), width).vec();
    Outcome r;
    const bool valid = width == 0 || is_k_tail_rainbow(set, f, width);
    std::optional<Witness> w;
    if (!valid) {
        auto c = find_collision(set, f, width);
        w = Witness{{c->first, c->second}, "collision in the extracted set"};
    }
    r.checks.push_back(check_entry("valid", valid, valid ? 0 : 1, w));
    const std::uint64_t m = set.size(), n = f.domain_size();
    r.size = m;
    r.min_ratio = n ? static_cast<double>(m * (m + 1) / 2) / static_cast<double>(n) : 1.0;
    if (k == 2 && width == 1 && f.max_class_size() <= 2) {
        const bool floor = m * (m + 1) / 2 >= n;
        r.checks.push_back(check_entry("size-floor", floor, floor ? 0 : 1,
                                       floor ? std::nullopt
                                             : std::optional<Witness>(Witness{{set}, "m(m+1)/2 < n"})));
    }
    for (const auto& c : r.checks) r.violations += c["status"] == "pass" ? 0 : 1;
    r.checked = r.checks.size();
    r.detail = {{"rainbow", set}, {"size", m}, {"n", n}, {"tail_width", width}};
    return {std::move(r), set};
}

struct ReduceResult {
    Outcome outcome;
    json bundle;
};

ReduceResult do_reduce(const Coloring& f, std::size_t window, std::optional<std::uint64_t> threshold) {
    PipelineConfig cfg;
    cfg.window = window;
    if (threshold) {
        if (*threshold > UINT32_MAX) throw UsageError("--threshold out of range");
        cfg.threshold = static_cast<Element>(*threshold);
    }
    const ReductionBundle b = run_triples_pipeline(f, cfg);
    json bundle = to_json(b);
    const auto& k = b.checks;
    Outcome r;
    auto add = [&](const char* name, bool ok, std::optional<Witness> w) {
        r.checks.push_back(check_entry(name, ok, ok ? 0 : 1, ok ? std::nullopt : std::move(w)));
        if (!ok) ++r.violations;
    };
    add("r_partition", k.r_partition, Witness{{}, "R sets of a window pair do not partition its tail"});
    add("fhat_two_bounded", k.fhat_two_bounded, find_bound_violation(2, b.limit.coloring.table(), 2));
    add("duplication_sound", k.duplication_sound, Witness{{}, "equal limit colors disagree above the threshold"});
    std::optional<Witness> lw;
    if (auto c = find_collision(b.lift.rainbow, b.restricted, 3)) lw = Witness{{c->first, c->second}, "lift collision"};
    add("lift_prefixes_rainbow", k.lift_prefixes_rainbow, lw);
    std::optional<Witness> sw;
    for (const auto& s : b.lift.steps) {
        if (s.skipped_beyond_threshold) {
            sw = Witness{{s.skipped_candidates}, "skipped above threshold " +
                                                     (s.threshold ? std::to_string(*s.threshold) : "none")};
            break;
        }
    }
    add("zero_skips_beyond_threshold", k.zero_skips_beyond_threshold, sw);
    std::optional<Witness> fw;
    if (auto c = find_collision(b.rainbow, f, 3)) fw = Witness{{c->first, c->second}, "final collision"};
    add("final_rainbow", k.final_rainbow, fw);
    r.checked = r.checks.size();
    r.size = b.rainbow.size();
    r.skips_beyond = b.lift.skips_beyond_threshold();
    r.detail = {{"sizes",
                 {{"input", f.domain_size()},
                  {"tail_domain", b.tail_domain.size()},
                  {"cohesive", b.cohesive.size()},
                  {"pair_rainbow", b.pair_rainbow.size()},
                  {"rainbow", b.rainbow.size()}}},
                {"rainbow", b.rainbow},
                {"fallback_pairs", b.limit.fallback_pairs},
                {"skips_beyond_threshold", b.lift.skips_beyond_threshold()},
                {"bundle_hash", fnv1a_hex(bundle.dump())}};
    return {std::move(r), std::move(bundle)};
}

// ---- commands -------------------------------------------------------------

void write_or_print(const Options& o, std::ostream& out, const std::string& text) {
    if (o.out.empty()) {
        out << text;
    } else {
        write_text_file(o.out, text);
    }
}

int cmd_gen(const Options& o, Session& s, std::ostream& out) {
    if (!o.n) throw UsageError("--n is required");
    const std::size_t bound = o.bound.value_or(2);
    Coloring f = o.stable ? make_stable_triple_coloring(*o.n, o.window, o.seed).base
                          : random_bounded_coloring(o.arity, bound, *o.n, o.seed, {.same_last = o.tail});
    const std::string text = serialize(f, parse_format(o.format));
    if (o.out.empty()) {
        out << text;
        return kOk;
    }
    write_text_file(o.out, text);
    s.report()["result"] = {{"file", o.out}, {"arity", f.arity()}, {"bound", f.bound()},
                            {"n", f.domain_size()}, {"entries", f.size()}};
    return s.finish(o, json::array({check_entry("bounded", true, 0)}));
}

int cmd_normalize(const Options& o, Session& s, std::ostream& out) {
    const Coloring f = require_input(o);
    Coloring g = f.arity() == 2   ? normalize_pairs(f)
                 : f.arity() == 3 ? semi_normalize_triples(f)
                                  : throw PreconditionError("normalize expects a pair or triple coloring");
    const bool ok = g.arity() == 2 ? is_normal(g) : is_semi_normal(g);
    const std::string text = serialize(g, parse_format(o.format));
    if (o.out.empty()) {
        out << text;
        return ok ? kOk : kViolation;
    }
    write_text_file(o.out, text);
    s.report()["result"] = {{"file", o.out}, {"arity", g.arity()}, {"n", g.domain_size()}};
    return s.finish(o, json::array({check_entry(g.arity() == 2 ? "normal" : "semi-normal", ok, ok ? 0 : 1)}));
}

int cmd_rainbow(const Options& o, Session& s) {
    const Coloring f = require_input(o);
    auto [r, set] = do_rainbow(f, o.tail, o.tail_width);
    if (!o.out.empty() && r.violations == 0) write_text_file(o.out, json{{"rainbow", set}}.dump() + "\n");
    s.report()["result"] = r.detail;
    return s.finish(o, r.checks);
}

int cmd_tree(const Options& o, Session& s) {
    const Coloring g = require_input(o);
    const RainbowTree tree = make_tree(g, parse_sigma(o.sigma), o.depth.value_or(2), o.budget, o.tail);
    json t = to_json(tree);
    json sizes = json::array();
    for (const auto& level : tree.levels()) sizes.push_back(level.size());
    if (o.out.empty()) {
        s.report()["result"] = {{"tree", t}, {"level_sizes", sizes}};
    } else {
        write_text_file(o.out, t.dump(1) + "\n");
        s.report()["result"] = {{"file", o.out}, {"level_sizes", sizes}};
    }
    return s.finish(o, json::array({check_entry("built", true, 0)}));
}

int finish_outcome(const Options& o, Session& s, Outcome r) {
    s.report()["result"] = std::move(r.detail);
    return s.finish(o, r.checks, r.preconditions_ok);
}

int cmd_verify(const std::string& which, const Options& o, Session& s) {
    const Coloring f = require_input(o);
    if (which == "block") return finish_outcome(o, s, do_block(f, o.depth.value_or(5), o.budget));
    if (which == "lemma25") return finish_outcome(o, s, do_lemma25(f, parse_sigma(o.sigma), o.depth.value_or(2), o.budget));
    if (which == "bushy") {
        return finish_outcome(o, s, do_bushy(f, parse_sigma(o.sigma), o.depth.value_or(2), o.budget, o.threshold));
    }
    return finish_outcome(o, s, do_galvin(f, o.bound.value_or(f.bound()), o.seed));
}

int cmd_reduce(const Options& o, Session& s) {
    Coloring f = o.in.empty() ? (o.n ? make_stable_triple_coloring(*o.n, o.window, o.seed).base
                                     : throw UsageError("reduce needs --in or --n"))
                              : read_coloring(o.in);
    auto [r, bundle] = do_reduce(f, o.window, o.threshold);
    if (!o.out.empty()) write_text_file(o.out, bundle.dump(1) + "\n");
    return finish_outcome(o, s, std::move(r));
}

std::string csv_field(std::string s) {
    for (char& c : s) {
        if (c == ',' || c == '\n' || c == '"' || c == '\r') c = ' ';
    }
    return s;
}

template <typename T>
std::string opt_field(const std::optional<T>& v) {
    if (!v) return "";
    std::ostringstream os;
    os << std::setprecision(6) << *v;
    return os.str();
}

Outcome sweep_one(const Options& o, std::uint64_t seed) {
    const std::string& kind = o.kind;
    if (kind == "block") {
        const auto f = random_bounded_coloring(2, o.bound.value_or(2), o.n.value_or(166), seed);
        return do_block(f, o.depth.value_or(5), o.budget);
    }
    if (kind == "lemma25") return do_lemma25(normal_pairs(o.n.value_or(2000), seed), parse_sigma(o.sigma), o.depth.value_or(2), o.budget);
    if (kind == "bushy") {
        return do_bushy(normal_pairs(o.n.value_or(2000), seed), parse_sigma(o.sigma), o.depth.value_or(2), o.budget, o.threshold);
    }
    if (kind == "galvin") {
        const std::size_t b = o.bound.value_or(2);
        return do_galvin(random_bounded_coloring(o.arity, b, o.n.value_or(10), seed), b, seed);
    }
    if (kind == "rainbow") {
        const auto f = random_bounded_coloring(2, o.bound.value_or(2), o.n.value_or(100), seed);
        return do_rainbow(f, true, std::nullopt).outcome;
    }
    const auto f = make_stable_triple_coloring(o.n.value_or(60), o.window, seed).base;
    return do_reduce(f, o.window, o.threshold).outcome;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    const auto [first, last] = parse_seed_range(o.seeds);
    std::ostringstream csv;
    csv << "seed,kind,n,status,size,checked,violations,min_ratio,skips_beyond_threshold,detail";
    if (o.timing) csv << ",elapsed_ms";
    csv << "\n";
    bool clean = true;
    for (std::uint64_t seed = first;; ++seed) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string status = "ok", detail;
        Outcome r;
        try {
            r = sweep_one(o, seed);
            if (!r.preconditions_ok) status = "precondition";
            else if (!all_pass(r.checks)) status = "violation";
        } catch (const std::exception& e) {
            status = "error";
            detail = e.what();
        }
        clean = clean && status == "ok";
        const std::size_t n = o.n.value_or(o.kind == "block"     ? 166
                                           : o.kind == "galvin"  ? 10
                                           : o.kind == "rainbow" ? 100
                                           : o.kind == "reduce"  ? 60
                                                                 : 2000);
        csv << seed << ',' << o.kind << ',' << n << ',' << status << ',' << r.size << ',' << r.checked << ','
            << r.violations << ',' << opt_field(r.min_ratio) << ',' << opt_field(r.skips_beyond) << ','
            << csv_field(detail);
        if (o.timing) {
            csv << ',' << std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        }
        csv << "\n";
        if (seed == last) break;
    }
    write_or_print(o, out, csv.str());
    return clean ? kOk : kViolation;
}

void print_precondition(std::ostream& err, const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    if (!e.witness().tuples.empty() || !e.witness().detail.empty()) {
        err << "witness: " << to_json(e.witness()).dump() << "\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite experiments with bounded colorings and rainbow sets", "rrt"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "generate a seeded bounded coloring");
    add_options(gen, o, {"out", "format", "arity", "bound", "n", "seed", "tail", "stable", "window"});
    auto* normalize = app.add_subcommand("normalize", "normal form (pairs) or semi-normal form (triples)");
    add_options(normalize, o, {"in", "out", "format"});
    auto* rainbow = app.add_subcommand("rainbow", "greedy rainbow / tail-rainbow extraction");
    add_options(rainbow, o, {"in", "out", "tail", "tail-width"});
    auto* tree = app.add_subcommand("tree", "build a rainbow extension tree");
    add_options(tree, o, {"in", "out", "depth", "sigma", "budget", "tail"});
    auto* verify = app.add_subcommand("verify", "run a verifier");
    verify->require_subcommand(1);
    auto* v_block = verify->add_subcommand("block", "block tree density");
    add_options(v_block, o, {"in", "depth", "budget"});
    auto* v_lemma = verify->add_subcommand("lemma25", "counting bound on non-viable extensions");
    add_options(v_lemma, o, {"in", "depth", "sigma", "budget"});
    auto* v_bushy = verify->add_subcommand("bushy", "level sizes and binary measure");
    add_options(v_bushy, o, {"in", "depth", "sigma", "budget", "threshold"});
    auto* v_galvin = verify->add_subcommand("galvin", "homogeneous sets of the dual are rainbows");
    add_options(v_galvin, o, {"in", "bound", "seed"});
    auto* reduce = app.add_subcommand("reduce", "triple reduction pipeline");
    add_options(reduce, o, {"in", "out", "n", "seed", "window", "threshold"});
    auto* sweep = app.add_subcommand("sweep", "one CSV row per seed");
    add_options(sweep, o, {"out", "kind", "seeds", "arity", "bound", "n", "depth", "sigma", "window", "threshold", "budget"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kParse;
    }

    try {
        Session s(args, out);
        if (*gen) return cmd_gen(o, s, out);
        if (*normalize) return cmd_normalize(o, s, out);
        if (*rainbow) return cmd_rainbow(o, s);
        if (*tree) return cmd_tree(o, s);
        if (*v_block) return cmd_verify("block", o, s);
        if (*v_lemma) return cmd_verify("lemma25", o, s);
        if (*v_bushy) return cmd_verify("bushy", o, s);
        if (*v_galvin) return cmd_verify("galvin", o, s);
        if (*reduce) return cmd_reduce(o, s);
        if (*sweep) return cmd_sweep(o, out);
        return kParse;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kParse;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const PreconditionError& e) {
        print_precondition(err, e);
        return kPrecondition;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

} // namespace rrt::cli
