#include "valforge/pipeline.hpp"

#include <chrono>

#include "valforge/invariants.hpp"
#include "valforge/rigid.hpp"

namespace valforge {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

ReportJson vec_json(const FpVec& v) {
    ReportJson a = ReportJson::array();
    for (auto c : v) a.push_back(c);
    return a;
}

ReportJson basis_json(const std::vector<FpVec>& basis) {
    ReportJson a = ReportJson::array();
    for (const auto& v : basis) a.push_back(vec_json(v));
    return a;
}

ReportJson budgets_json(const Budgets& b) {
    ReportJson j;
    j["witness_height"] = b.witness_height;
    j["witness_count"] = b.witness_count;
    j["classify_height"] = b.classify_height;
    j["axiom_height"] = b.axiom_height;
    j["search_height"] = b.search_height;
    if (b.factor_bound) j["factor_bound"] = *b.factor_bound;
    return j;
}

ReportJson scenario_echo(const Scenario& s, const std::vector<std::string>& candidates) {
    ReportJson j;
    j["schema_version"] = s.schema_version;
    j["field"] = s.field;
    j["place"] = s.place;
    j["p"] = s.p;
    j["tbar_basis"] = basis_json(s.tbar_basis);
    if (s.h_all)
        j["h_choice"] = "all";
    else
        j["h_choice"] = basis_json(s.h_generators);
    j["budgets"] = budgets_json(s.budgets);
    if (!candidates.empty()) j["candidate_places"] = candidates;
    j["seed"] = s.seed;
    return j;
}

template <class G>
ReportJson class_space_json(const G& g, const ClassSpace<G>& V) {
    ReportJson j;
    j["field"] = g.descriptor();
    j["place"] = g.place_text(V.place());
    j["p"] = V.p();
    j["dim"] = V.dim();
    j["residue_size"] = V.residue_size();
    j["generator"] = to_string(V.generator());
    ReportJson lifts = ReportJson::array();
    for (const auto& l : V.canonical_lifts()) lifts.push_back(g.elem_text(l));
    j["canonical_lifts"] = lifts;
    j["class_of_minus_one"] = vec_json(V.class_of_minus_one());
    return j;
}

ReportJson hyp_json(const HypothesisReport& r) {
    ReportJson j;
    switch (r.status) {
        case HypStatus::holds: j["status"] = "holds"; break;
        case HypStatus::counterexample: j["status"] = "counterexample"; break;
        case HypStatus::too_small: j["status"] = "too_small"; break;
    }
    j["pairs_checked"] = r.pairs_checked;
    if (r.status == HypStatus::counterexample) {
        j["x"] = vec_json(r.x);
        j["y"] = vec_json(r.y);
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

ReportJson conclusions_json(const ConclusionReport& c) {
    ReportJson j;
    j["residue_char_ok"] = c.residue_char_ok;
    j["gamma_dim"] = c.gamma_dim;
    j["codim"] = c.codim;
    j["dim_inequality_ok"] = c.dim_inequality_ok;
    j["dichotomy"] = c.dichotomy;
    j["dichotomy_ok"] = c.dichotomy_ok;
    return j;
}

ReportJson certificate_json(const K2Result& cert) {
    ReportJson j;
    j["vanishes"] = cert.vanishes;
    ReportJson places = ReportJson::array();
    for (const auto& s : cert.places_checked) {
        ReportJson pj;
        pj["place"] = s.place;
        pj["value"] = s.value;
        pj["class"] = s.exponent;
        places.push_back(pj);
    }
    j["places"] = places;
    if (cert.witness) {
        ReportJson w;
        w["place"] = cert.witness->place;
        w["value"] = cert.witness->value;
        w["class"] = cert.witness->exponent;
        j["witness"] = w;
    }
    return j;
}

template <class G>
std::vector<typename G::PlaceT> resolve_candidates(const G& g, const Scenario& s,
                                                   const typename G::PlaceT& P) {
    std::vector<typename G::PlaceT> out;
    if (s.candidate_places.empty()) {
        auto en = g.prime_enumerator();
        for (int i = 0; i < 4; ++i) out.push_back(en.next().second);
        bool present = false;
        for (const auto& c : out)
            if (g.place_eq(c, P)) present = true;
        if (!present) out.push_back(P);
    } else {
        for (const auto& text : s.candidate_places) out.push_back(g.parse_place(text));
    }
    return out;
}

template <class G>
std::vector<HChoice> resolve_h_choices(const SubgroupSpec<G>& T, const Scenario& s) {
    if (s.h_all) return enumerate_H(T);
    std::vector<HChoice> out;
    for (const auto& gen : s.h_generators) {
        if (gen.size() != static_cast<size_t>(T.space().dim()))
            throw std::invalid_argument("h_choice generator dimension mismatch");
        FpVec r = gen;
        for (auto& c : r) c %= s.p;
        if (T.tbar().contains(r))
            throw std::invalid_argument("h_choice generator lies in T");
        out.push_back(HChoice{T.tbar().extended_by(r), r});
    }
    return out;
}

template <class G>
RunOutcome construct_on(const G& g, const Scenario& s, bool with_timing) {
    auto t0 = Clock::now();
    auto P = g.parse_place(s.place);
    ClassSpace<G> V(g, P, s.p);
    SubgroupSpec<G> T(V, FpSubspace(s.p, V.dim(), s.tbar_basis));
    auto candidates = resolve_candidates(g, s, P);
    std::vector<std::string> cand_text;
    for (const auto& c : candidates) cand_text.push_back(g.place_text(c));

    RunOutcome out;
    ReportJson& rep = out.report;
    rep["tool"] = "valforge";
    rep["version"] = kToolVersion;
    rep["command"] = "construct";
    rep["scenario"] = scenario_echo(s, cand_text);
    rep["class_space"] = class_space_json(g, V);

    std::int64_t violations = 0;
    try {
        auto ha = check_hypothesis_a(T);
        auto hb = check_hypothesis_b(T);
        if (ha.status == HypStatus::counterexample) ++violations;
        if (hb.status == HypStatus::counterexample) ++violations;
        ReportJson hyps;
        hyps["a"] = hyp_json(ha);
        hyps["b"] = hyp_json(hb);
        rep["hypotheses"] = hyps;

        auto choices = resolve_h_choices(T, s);
        ReportJson hlist = ReportJson::array();
        for (const auto& h : choices) {
            ReportJson hj;
            hj["generator"] = vec_json(h.generator);
            hj["w_basis"] = basis_json(h.W.basis());

            ValuationOracle<G> oracle(T, h, {s.budgets.witness_height, s.budgets.witness_count});
            ReportJson oj;
            oj["degenerate"] = oracle.degenerate();
            if (oracle.degenerate()) oj["note"] = "construction degenerate: O+ = H";
            ReportJson wits = ReportJson::array();
            for (const auto& w : oracle.witnesses()) wits.push_back(g.elem_text(w));
            oj["witnesses"] = wits;
            hj["oracle"] = oj;

            auto cls = classify_valuation(oracle, candidates, s.budgets.classify_height);
            ReportJson cj;
            switch (cls.status) {
                case ClassifyReport<G>::Status::matched:
                    cj["status"] = "matched";
                    cj["place"] = g.place_text(*cls.place);
                    break;
                case ClassifyReport<G>::Status::indistinguishable: {
                    cj["status"] = "indistinguishable";
                    cj["note"] = "indistinguishable at this budget";
                    ReportJson sv = ReportJson::array();
                    for (const auto& pl : cls.surviving) sv.push_back(g.place_text(pl));
                    cj["surviving"] = sv;
                    break;
                }
                case ClassifyReport<G>::Status::no_match: cj["status"] = "no_match"; break;
                case ClassifyReport<G>::Status::refused:
                    cj["status"] = "refused";
                    cj["note"] = "oracle degenerate";
                    break;
            }
            cj["elements_checked"] = cls.elements_checked;
            cj["sampled"] = cls.sampled;
            ReportJson excl = ReportJson::array();
            for (const auto& [pl, wit] : cls.exclusions) {
                ReportJson e;
                e["place"] = g.place_text(pl);
                e["witness"] = g.elem_text(wit);
                excl.push_back(e);
            }
            cj["exclusions"] = excl;
            hj["classification"] = cj;

            auto ax = valuation_axiom_test(oracle, s.budgets.axiom_height);
            violations += ax.violations;
            ReportJson aj;
            aj["degenerate"] = ax.degenerate;
            aj["elements"] = ax.elements;
            aj["members"] = ax.members;
            aj["pairs_checked"] = ax.pairs_checked;
            aj["violations"] = ax.violations;
            aj["sampled"] = ax.sampled;
            ReportJson fv = ReportJson::array();
            for (const auto& v : ax.first_violations) {
                ReportJson vj;
                vj["kind"] = v.kind;
                vj["x"] = g.elem_text(v.x);
                vj["y"] = g.elem_text(v.y);
                fv.push_back(vj);
            }
            aj["first_violations"] = fv;
            hj["axioms"] = aj;

            if (cls.status == ClassifyReport<G>::Status::matched)
                hj["conclusions"] = conclusions_json(verify_conclusions(T, *cls.place));
            else
                hj["conclusions"] = nullptr;
            hlist.push_back(hj);
        }
        rep["h_choices"] = hlist;
        rep["violations_total"] = violations;
        out.exit_code = violations > 0 ? 1 : 0;
    } catch (const BudgetExceeded& e) {
        rep["status"] = "budget_exceeded";
        rep["error"] = e.what();
        out.exit_code = 3;
    }
    if (with_timing) rep["timing_ms"] = elapsed_ms(t0);
    return out;
}

template <class G>
RunOutcome search_on(const G& g, const Scenario& s, bool with_timing) {
    auto t0 = Clock::now();
    auto P = g.parse_place(s.place);
    ClassSpace<G> V(g, P, s.p);
    SubgroupSpec<G> T(V, FpSubspace(s.p, V.dim(), s.tbar_basis));
    FactorBudget fb;
    if (s.budgets.factor_bound) fb.limit = Integer(*s.budgets.factor_bound);

    RunOutcome out;
    ReportJson& rep = out.report;
    rep["tool"] = "valforge";
    rep["version"] = kToolVersion;
    rep["command"] = "search";
    rep["scenario"] = scenario_echo(s, s.candidate_places);
    rep["class_space"] = class_space_json(g, V);

    auto res = global_counterexample_search(T, s.budgets.search_height, fb);
    ReportJson rj;
    switch (res.status) {
        case SearchReport<G>::Status::found:
            rj["status"] = "found";
            rj["x"] = g.elem_text(res.x);
            rj["y"] = g.elem_text(res.y);
            rj["violated"] = res.violated;
            rj["certificate"] = certificate_json(res.certificate);
            break;
        case SearchReport<G>::Status::none_found:
            rj["status"] = "none_within_bound";
            break;
        case SearchReport<G>::Status::budget_exceeded:
            rj["status"] = "budget_exceeded";
            out.exit_code = 3;
            break;
    }
    rj["pairs_scanned"] = res.pairs_scanned;
    rep["result"] = rj;
    if (with_timing) rep["timing_ms"] = elapsed_ms(t0);
    return out;
}

}  // namespace

RunOutcome run_construct(const Scenario& s, bool with_timing) {
    FieldDescriptor F = parse_descriptor(s.field);
    if (F.kind == FieldDescriptor::Kind::Q) {
        QGround g;
        return construct_on(g, s, with_timing);
    }
    if (F.kind == FieldDescriptor::Kind::Fqt) {
        FqtGround g(FqField::make_from_size(F.q));
        return construct_on(g, s, with_timing);
    }
    throw SchemaError("scenario field must be Q or a rational function field, got " + s.field);
}

RunOutcome run_search(const Scenario& s, bool with_timing) {
    FieldDescriptor F = parse_descriptor(s.field);
    if (F.kind == FieldDescriptor::Kind::Q) {
        QGround g;
        return search_on(g, s, with_timing);
    }
    if (F.kind == FieldDescriptor::Kind::Fqt) {
        FqtGround g(FqField::make_from_size(F.q));
        return search_on(g, s, with_timing);
    }
    throw SchemaError("scenario field must be Q or a rational function field, got " + s.field);
}

}  // namespace valforge
