#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rrt/limit_coloring.hpp"

namespace rrt {

struct PipelineConfig {
    // Pairs (x, y) with y < window feed the thinning step.
    std::size_t window = 8;
    // Stabilization threshold s0; defaults to the window.
    std::optional<Element> threshold;
};

struct PipelineChecks {
    bool r_partition = true;           // R sets of each window pair partition (y, n)
    bool fhat_two_bounded = true;
    bool duplication_sound = true;     // equal fhat colors agree on f above the threshold
    bool lift_prefixes_rainbow = true;
    bool zero_skips_beyond_threshold = true;
    bool final_rainbow = true;         // checked against the input coloring

    bool all() const {
        return r_partition && fhat_two_bounded && duplication_sound && lift_prefixes_rainbow &&
               zero_skips_beyond_threshold && final_rainbow;
    }
};

/// Every stage of the triple reduction. Sets after the first stage are in the
/// labels of the 1-tail subset; `rainbow` is back in the input's labels.
struct ReductionBundle {
    PipelineConfig config;
    Element threshold = 0;
    std::vector<Element> tail_domain;  // input labels
    Coloring restricted;               // input restricted to tail_domain
    std::vector<Code> fbar;            // by triple rank over tail_domain
    std::vector<RSet> family;
    std::vector<Element> cohesive;
    LimitColoring limit;
    std::vector<Element> pair_rainbow;
    LiftTrace lift;
    std::vector<Element> rainbow;
    PipelineChecks checks;
};

// Throws PreconditionError (message prefixed with the failing stage) when an
// input precondition fails, e.g. the input is not 2-bounded or fbar does not
// stabilize on the thinned set.
ReductionBundle run_triples_pipeline(const Coloring& f, const PipelineConfig& config = {});

nlohmann::json to_json(const ReductionBundle& b);

} // namespace rrt
