#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rrt/error.hpp"

namespace rrt {

struct Violation {
    std::string check;
    std::vector<Element> node;
    Witness witness;
};

/// Outcome of a brute-force verifier. Violations are data, not errors.
struct VerificationReport {
    // Witnesses kept per report; violation_count keeps the full tally.
    static constexpr std::size_t kMaxWitnesses = 64;

    std::string lemma;
    nlohmann::json parameters = nlohmann::json::object();
    std::uint64_t checked = 0;
    std::uint64_t violation_count = 0;
    std::vector<Violation> violations;
    nlohmann::json levels = nlohmann::json::array();
    // Re-validated after the fact, so a violation can be blamed on the input
    // rather than on the construction.
    bool preconditions_hold = true;
    std::vector<std::string> notes;

    bool passed() const noexcept { return violation_count == 0; }
    void add(Violation v);
};

nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const VerificationReport& r);

} // namespace rrt
