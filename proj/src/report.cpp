#include "rrt/report.hpp"

namespace rrt {

void VerificationReport::add(Violation v) {
    ++violation_count;
    if (violations.size() < kMaxWitnesses) violations.push_back(std::move(v));
}

nlohmann::json to_json(const Witness& w) {
    return {{"tuples", w.tuples}, {"detail", w.detail}};
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"check", v.check}, {"node", v.node}, {"witness", to_json(v.witness)}});
    }
    return {{"lemma", r.lemma},
            {"parameters", r.parameters},
            {"checked", r.checked},
            {"passed", r.passed()},
            {"violation_count", r.violation_count},
            {"violations", std::move(violations)},
            {"levels", r.levels},
            {"preconditions_hold", r.preconditions_hold},
            {"notes", r.notes}};
}

} // namespace rrt
