#pragma once

#include "json.hpp"

#include "valforge/scenario.hpp"

namespace valforge {

inline constexpr const char* kToolVersion = "1.0.0";

// insertion-ordered so reports are byte-stable
using ReportJson = nlohmann::ordered_json;

struct RunOutcome {
    ReportJson report;
    int exit_code = 0;
};

// hypotheses -> H choices -> oracle -> classification -> axiom sweep ->
// conclusions; exit 0 clean, 1 violations found, 3 budget exhausted (partial
// report); schema/usage problems throw and the caller maps them to exit 2
RunOutcome run_construct(const Scenario& s, bool with_timing);

// prime-pair sweep for a global hypothesis violation, certified by
// k2_vanishes_mod_p; exit 0 on found/none, 3 on budget exhaustion
RunOutcome run_search(const Scenario& s, bool with_timing);

}  // namespace valforge
