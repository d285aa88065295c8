#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "valforge/fp_linalg.hpp"

namespace valforge {

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Budgets {
    std::int64_t witness_height = 100;
    int witness_count = 8;
    std::int64_t classify_height = 200;
    std::int64_t axiom_height = 100;
    std::int64_t search_height = 50;
    std::optional<std::uint64_t> factor_bound;
};

struct Scenario {
    int schema_version = 1;
    std::string field;                       // descriptor: "Q", "F7t", ...
    std::string place;                       // "5", "t", "inf", ...
    std::uint64_t p = 2;
    std::vector<FpVec> tbar_basis;
    bool h_all = true;                       // h_choice: "all" or explicit generators
    std::vector<FpVec> h_generators;
    Budgets budgets;
    std::vector<std::string> candidate_places;  // empty: derive a default list
    std::uint64_t seed = 0;
};

// strict parse: unknown fields anywhere are rejected, schema_version must be 1
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

}  // namespace valforge
