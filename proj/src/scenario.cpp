#include "valforge/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace valforge {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key()))
            throw SchemaError("unknown field \"" + it.key() + "\" in " + where);
}

std::vector<FpVec> parse_basis(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw SchemaError(where + " must be an array of vectors");
    std::vector<FpVec> out;
    for (const auto& row : arr) {
        if (!row.is_array()) throw SchemaError(where + " entries must be arrays");
        FpVec v;
        for (const auto& c : row) {
            if (!c.is_number_unsigned()) throw SchemaError(where + " coordinates must be non-negative integers");
            v.push_back(c.get<std::uint64_t>());
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("scenario must be a JSON object");
    reject_unknown(j, {"schema_version", "field", "place", "p", "tbar_basis", "h_choice",
                       "budgets", "candidate_places", "seed"}, "scenario");
    for (const char* req : {"schema_version", "field", "place", "p"})
        if (!j.contains(req)) throw SchemaError(std::string("missing required field \"") + req + "\"");

    Scenario s;
    if (!j["schema_version"].is_number_integer() || j["schema_version"].get<int>() != 1)
        throw SchemaError("unsupported schema_version (expected 1)");
    if (!j["field"].is_string()) throw SchemaError("field must be a string descriptor");
    s.field = j["field"].get<std::string>();
    if (!j["place"].is_string()) throw SchemaError("place must be a string");
    s.place = j["place"].get<std::string>();
    if (!j["p"].is_number_unsigned() || j["p"].get<std::uint64_t>() < 2)
        throw SchemaError("p must be a prime >= 2");
    s.p = j["p"].get<std::uint64_t>();

    if (j.contains("tbar_basis")) s.tbar_basis = parse_basis(j["tbar_basis"], "tbar_basis");
    if (j.contains("h_choice")) {
        const auto& h = j["h_choice"];
        if (h.is_string()) {
            if (h.get<std::string>() != "all") throw SchemaError("h_choice must be \"all\" or an array of generators");
            s.h_all = true;
        } else {
            s.h_generators = parse_basis(h, "h_choice");
            if (s.h_generators.empty()) throw SchemaError("h_choice generator list is empty");
            s.h_all = false;
        }
    }
    if (j.contains("budgets")) {
        const auto& b = j["budgets"];
        if (!b.is_object()) throw SchemaError("budgets must be an object");
        reject_unknown(b, {"witness_height", "witness_count", "classify_height", "axiom_height",
                           "search_height", "factor_bound"}, "budgets");
        auto get_pos = [&](const char* key, std::int64_t& slot) {
            if (!b.contains(key)) return;
            if (!b[key].is_number_unsigned() || b[key].get<std::int64_t>() < 1)
                throw SchemaError(std::string("budgets.") + key + " must be a positive integer");
            slot = b[key].get<std::int64_t>();
        };
        get_pos("witness_height", s.budgets.witness_height);
        get_pos("classify_height", s.budgets.classify_height);
        get_pos("axiom_height", s.budgets.axiom_height);
        get_pos("search_height", s.budgets.search_height);
        if (b.contains("witness_count")) {
            if (!b["witness_count"].is_number_unsigned() || b["witness_count"].get<int>() < 1)
                throw SchemaError("budgets.witness_count must be a positive integer");
            s.budgets.witness_count = b["witness_count"].get<int>();
        }
        if (b.contains("factor_bound")) {
            if (!b["factor_bound"].is_number_unsigned())
                throw SchemaError("budgets.factor_bound must be a non-negative integer");
            s.budgets.factor_bound = b["factor_bound"].get<std::uint64_t>();
        }
    }
    if (j.contains("candidate_places")) {
        if (!j["candidate_places"].is_array()) throw SchemaError("candidate_places must be an array of strings");
        for (const auto& c : j["candidate_places"]) {
            if (!c.is_string()) throw SchemaError("candidate_places must be an array of strings");
            s.candidate_places.push_back(c.get<std::string>());
        }
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw SchemaError("seed must be a non-negative integer");
        s.seed = j["seed"].get<std::uint64_t>();
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace valforge
