#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "valforge/invariants.hpp"
#include "valforge/pipeline.hpp"
#include "valforge/rigid.hpp"

using namespace valforge;

namespace {

void emit(const ReportJson& rep) { std::cout << rep.dump(2) << "\n"; }

int cmd_symbol(const std::string& field, const std::string& place, std::uint64_t p,
               const std::string& xs, const std::string& ys, bool pretty) {
    ReportJson rep;
    rep["tool"] = "valforge";
    rep["version"] = kToolVersion;
    rep["command"] = "symbol";
    rep["field"] = field;
    rep["place"] = place;
    rep["p"] = p;
    rep["x"] = xs;
    rep["y"] = ys;

    FieldDescriptor F = parse_descriptor(field);
    std::string value;
    std::uint64_t cls = 0;
    if (F.kind == FieldDescriptor::Kind::Q) {
        QGround g;
        Rational x = g.parse_elem(xs), y = g.parse_elem(ys);
        QPlace P = g.parse_place(place);
        if (P.real) {
            int h = hilbert_at_real(x, y);
            value = h < 0 ? "-1" : "+1";
            cls = h < 0 ? 1 : 0;
        } else if (P.prime == 2 && p == 2) {
            int h = hilbert2_at_two(x, y);
            value = h < 0 ? "-1" : "+1";
            cls = h < 0 ? 1 : 0;
        } else {
            auto rd = g.residue_data(P);
            FqElem t = tame_symbol(g, x, y, P, rd);
            value = to_string(t);
            cls = residue_class_exponent(rd.k, t, p);
        }
    } else if (F.kind == FieldDescriptor::Kind::Fqt) {
        FqtGround g(FqField::make_from_size(F.q));
        auto x = g.parse_elem(xs);
        auto y = g.parse_elem(ys);
        auto P = g.parse_place(place);
        auto rd = g.residue_data(P);
        FqElem t = tame_symbol(g, x, y, P, rd);
        value = to_string(t);
        cls = residue_class_exponent(rd.k, t, p);
    } else {
        throw std::invalid_argument("symbol needs a field with places: Q or FqT");
    }
    rep["value"] = value;
    rep["class"] = cls;
    if (pretty)
        std::cout << "symbol at " << place << ": value " << value << ", class " << cls
                  << " mod " << p << "\n";
    else
        emit(rep);
    return 0;
}

void print_construct_summary(const ReportJson& rep) {
    std::cout << "construct " << rep["scenario"]["field"].get<std::string>() << " at "
              << rep["scenario"]["place"].get<std::string>() << ", p = " << rep["scenario"]["p"]
              << "\n";
    if (rep.contains("hypotheses"))
        std::cout << "  hypothesis (a): " << rep["hypotheses"]["a"]["status"].get<std::string>()
                  << ", (b): " << rep["hypotheses"]["b"]["status"].get<std::string>() << "\n";
    if (rep.contains("h_choices"))
        for (const auto& h : rep["h_choices"]) {
            std::cout << "  H " << h["generator"].dump() << ": classification "
                      << h["classification"]["status"].get<std::string>();
            if (h["classification"].contains("place"))
                std::cout << " -> " << h["classification"]["place"].get<std::string>();
            std::cout << ", axiom violations " << h["axioms"]["violations"] << "\n";
        }
    if (rep.contains("violations_total"))
        std::cout << "  violations total: " << rep["violations_total"] << "\n";
}

void print_search_summary(const ReportJson& rep) {
    const auto& r = rep["result"];
    std::string status = r["status"].get<std::string>();
    if (status == "found") {
        std::cout << "first violating pair: {" << r["x"].get<std::string>() << ", "
                  << r["y"].get<std::string>() << "} (hypothesis " << r["violated"].get<std::string>()
                  << "), certified at";
        for (const auto& pl : r["certificate"]["places"])
            std::cout << " " << pl["place"].get<std::string>();
        std::cout << "\n";
    } else if (status == "none_within_bound") {
        std::cout << "none within bound\n";
    } else {
        std::cout << "budget exceeded\n";
    }
}

int cmd_invariants(const std::string& desc, const std::string& place, std::uint64_t p,
                   int prop2_n, bool pretty) {
    FieldDescriptor F = parse_descriptor(desc);
    ReportJson rep;
    rep["tool"] = "valforge";
    rep["version"] = kToolVersion;
    rep["command"] = "invariants";
    rep["field"] = print_descriptor(F);
    rep["kronecker_dimension"] = kronecker_dimension(F);

    if (!place.empty()) {
        DefectReport d;
        if (place == "trivial") {
            d = one_defectless_trivial(F);
        } else if (F.kind == FieldDescriptor::Kind::Q) {
            QGround g;
            d = one_defectless_q(g.parse_place(place));
        } else if (F.kind == FieldDescriptor::Kind::Fqt) {
            FqtGround g(FqField::make_from_size(F.q));
            d = one_defectless_fqt(g, g.parse_place(place));
        } else {
            throw std::invalid_argument("places require Q or a function field");
        }
        ReportJson dj;
        dj["place"] = place;
        dj["one_defectless"] = d.one_defectless;
        dj["field_dim"] = d.field_dim;
        if (d.residue_dim >= 0) dj["residue_dim"] = d.residue_dim;
        if (!d.note.empty()) dj["note"] = d.note;
        rep["defect"] = dj;
    }
    if (prop2_n >= 0) {
        if (place.empty() || place == "trivial")
            throw std::invalid_argument("--prop2 needs a finite --place for the local model");
        Prop2Shadow sh;
        if (F.kind == FieldDescriptor::Kind::Q) {
            QGround g;
            ClassSpace<QGround> V(g, g.parse_place(place), p);
            sh = prop2_shadow_report(V, prop2_n);
        } else if (F.kind == FieldDescriptor::Kind::Fqt) {
            FqtGround g(FqField::make_from_size(F.q));
            ClassSpace<FqtGround> V(g, g.parse_place(place), p);
            sh = prop2_shadow_report(V, prop2_n);
        } else {
            throw std::invalid_argument("--prop2 requires Q or a function field");
        }
        ReportJson pj;
        pj["n"] = prop2_n;
        pj["p"] = p;
        pj["dim_matches"] = sh.dim_matches;
        ReportJson wj;
        wj["degenerate"] = sh.wedge.degenerate;
        wj["holds"] = sh.wedge.holds;
        if (!sh.wedge.degenerate) {
            ReportJson m = ReportJson::array();
            for (int i = 0; i < 2; ++i) {
                ReportJson row = ReportJson::array();
                for (int j = 0; j < 2; ++j) row.push_back(sh.wedge.m[i][j]);
                m.push_back(row);
            }
            wj["matrix"] = m;
        }
        if (!sh.wedge.note.empty()) wj["note"] = sh.wedge.note;
        pj["wedge"] = wj;
        pj["gamma_bound"] = sh.gamma_bound;
        pj["verdict"] = sh.verdict;
        pj["scope"] = sh.scope;
        rep["prop2"] = pj;
    }
    if (pretty) {
        std::cout << rep["field"].get<std::string>() << ": kronecker dimension "
                  << rep["kronecker_dimension"] << "\n";
        if (rep.contains("defect"))
            std::cout << "  place " << place << ": 1-defectless "
                      << (rep["defect"]["one_defectless"].get<bool>() ? "true" : "false") << "\n";
        if (rep.contains("prop2"))
            std::cout << "  prop2 shadow verdict: "
                      << (rep["prop2"]["verdict"].get<bool>() ? "pass" : "fail") << "\n";
    } else {
        emit(rep);
    }
    return 0;
}

int cmd_selftest() {
    int fails = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
        if (!ok) ++fails;
    };
    QGround q;
    struct M { std::uint64_t p; int ell; };
    for (M m : {M{2, 5}, M{2, 13}, M{3, 7}, M{3, 13}, M{5, 11}}) {
        ClassSpace<QGround> V(q, QPlace{false, m.ell}, m.p);
        SubgroupSpec<QGround> T(V, FpSubspace::zero_subspace(m.p, V.dim()));
        bool ok = check_hypothesis_a(T).status == HypStatus::holds &&
                  check_hypothesis_b(T).status == HypStatus::holds &&
                  wedge_iso_check(V).holds;
        check(ok, "hypotheses and wedge at (p=" + std::to_string(m.p) +
                      ", l=" + std::to_string(m.ell) + ")");
    }
    {
        ClassSpace<QGround> V(q, QPlace{false, 5}, 2);
        SubgroupSpec<QGround> T(V, FpSubspace::zero_subspace(2, 2));
        ValuationOracle<QGround> oracle(T, HChoice{T.tbar().extended_by({0, 1}), {0, 1}}, {100, 8});
        auto rep = classify_valuation(oracle, {QPlace{false, 2}, QPlace{false, 3}, QPlace{false, 5},
                                               QPlace{false, 7}}, 100);
        check(rep.status == ClassifyReport<QGround>::Status::matched && rep.place->prime == 5,
              "canonical construction classifies to P=5");
        check(valuation_axiom_test(oracle, 40).violations == 0, "axiom sweep clean at height 40");
    }
    check(k2_vanishes_mod_p(q, Rational(5), Rational(11), 2).vanishes, "{5,11} vanishes in K2(Q)/2");
    std::cout << (fails ? "SELFTEST FAILED\n" : "SELFTEST OK\n");
    return fails ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"valuation construction and symbol toolkit"};
    app.require_subcommand(1);

    auto* sym = app.add_subcommand("symbol", "tame/Hilbert symbol of a pair at a place");
    std::string sym_field = "Q", sym_place, sym_x, sym_y;
    std::uint64_t sym_p = 2;
    bool sym_pretty = false;
    sym->add_option("--field", sym_field, "field descriptor (Q, F7t, ...)");
    sym->add_option("--place", sym_place, "place: prime, monic irreducible, or inf")->required();
    sym->add_option("-p", sym_p, "symbol degree (prime)");
    sym->add_option("-x", sym_x, "first element")->required();
    sym->add_option("-y", sym_y, "second element")->required();
    sym->add_flag("--pretty", sym_pretty, "human summary instead of JSON");

    auto* con = app.add_subcommand("construct", "run the full pipeline on a scenario file");
    std::string con_path;
    bool con_no_timing = false, con_pretty = false;
    con->add_option("scenario", con_path, "scenario JSON path")->required();
    con->add_flag("--no-timing", con_no_timing, "omit timing for byte-stable output");
    con->add_flag("--pretty", con_pretty, "human summary instead of JSON");

    auto* sea = app.add_subcommand("search", "global counterexample search on a scenario file");
    std::string sea_path;
    bool sea_no_timing = false, sea_pretty = false, sea_global = false;
    sea->add_option("scenario", sea_path, "scenario JSON path")->required();
    sea->add_flag("--global", sea_global, "sweep prime pairs globally (the only mode)");
    sea->add_flag("--no-timing", sea_no_timing, "omit timing for byte-stable output");
    sea->add_flag("--pretty", sea_pretty, "human summary instead of JSON");

    auto* inv = app.add_subcommand("invariants", "Kronecker dimension and place reports");
    std::string inv_desc, inv_place;
    std::uint64_t inv_p = 2;
    int inv_prop2 = -1;
    bool inv_pretty = false;
    inv->add_option("descriptor", inv_desc, "field descriptor (Q, F7, F7t, ...)")->required();
    inv->add_option("--place", inv_place, "place, or \"trivial\" for the trivial valuation");
    inv->add_option("-p", inv_p, "prime for the prop2 local model");
    inv->add_option("--prop2", inv_prop2, "claimed Kronecker dimension n for the prop2 shadow");
    inv->add_flag("--pretty", inv_pretty, "human summary instead of JSON");

    auto* self = app.add_subcommand("selftest", "quick built-in checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sym->parsed()) return cmd_symbol(sym_field, sym_place, sym_p, sym_x, sym_y, sym_pretty);
        if (con->parsed()) {
            auto outcome = run_construct(load_scenario(con_path), !con_no_timing);
            if (con_pretty)
                print_construct_summary(outcome.report);
            else
                emit(outcome.report);
            return outcome.exit_code;
        }
        if (sea->parsed()) {
            auto outcome = run_search(load_scenario(sea_path), !sea_no_timing);
            if (sea_pretty)
                print_search_summary(outcome.report);
            else
                emit(outcome.report);
            return outcome.exit_code;
        }
        if (inv->parsed()) return cmd_invariants(inv_desc, inv_place, inv_p, inv_prop2, inv_pretty);
        if (self->parsed()) return cmd_selftest();
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
