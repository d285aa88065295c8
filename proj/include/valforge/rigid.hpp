#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "valforge/parallel.hpp"
#include "valforge/symbols.hpp"

namespace valforge {

// ---------------------------------------------------------------------------
// hypothesis checks on the finite local quotient
// ---------------------------------------------------------------------------

enum class HypStatus { holds, counterexample, too_small };

struct HypothesisReport {
    HypStatus status = HypStatus::holds;
    FpVec x, y;              // counterexample classes
    std::int64_t pairs_checked = 0;
    std::string note;
};

// (a): pairing(x, y) != 0 for every class x outside Tbar and nonzero y in Tbar
template <class G>
HypothesisReport check_hypothesis_a(const SubgroupSpec<G>& T) {
    const auto& V = T.space();
    HypothesisReport rep;
    if (V.dim() < 2) {
        rep.status = HypStatus::too_small;
        rep.note = "quotient too small to be meaningful";
        return rep;
    }
    for (std::int64_t xi = 1; xi < V.class_count(); ++xi) {
        FpVec cx = lex_vec(xi, V.p(), V.dim());
        if (T.tbar().contains(cx)) continue;
        for (std::int64_t yi = 1; yi < V.class_count(); ++yi) {
            FpVec cy = lex_vec(yi, V.p(), V.dim());
            if (!T.tbar().contains(cy)) continue;
            ++rep.pairs_checked;
            if (local_pairing(V, cx, cy) == 0) {
                rep.status = HypStatus::counterexample;
                rep.x = cx;
                rep.y = cy;
                return rep;
            }
        }
    }
    return rep;
}

// (b): pairing(x, y) != 0 for every pair of classes independent modulo Tbar
template <class G>
HypothesisReport check_hypothesis_b(const SubgroupSpec<G>& T) {
    const auto& V = T.space();
    HypothesisReport rep;
    if (V.dim() < 2) {
        rep.status = HypStatus::too_small;
        rep.note = "quotient too small to be meaningful";
        return rep;
    }
    for (std::int64_t xi = 1; xi < V.class_count(); ++xi) {
        FpVec cx = lex_vec(xi, V.p(), V.dim());
        if (T.tbar().contains(cx)) continue;
        FpSubspace ext = T.tbar().extended_by(cx);
        for (std::int64_t yi = 1; yi < V.class_count(); ++yi) {
            FpVec cy = lex_vec(yi, V.p(), V.dim());
            if (ext.contains(cy)) continue;
            ++rep.pairs_checked;
            if (local_pairing(V, cx, cy) == 0) {
                rep.status = HypStatus::counterexample;
                rep.x = cx;
                rep.y = cy;
                return rep;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// H choices and the O-/O+ membership oracle
// ---------------------------------------------------------------------------

// W with Tbar <= W <= V and dim W/Tbar = 1; H is its preimage in E*
struct HChoice {
    FpSubspace W;
    FpVec generator;   // first new generator in lexicographic class order
};

template <class G>
std::vector<HChoice> enumerate_H(const SubgroupSpec<G>& T) {
    if (T.codim() == 0) throw std::invalid_argument("no proper H exists");
    const auto& V = T.space();
    std::vector<HChoice> out;
    for (std::int64_t vi = 1; vi < V.class_count(); ++vi) {
        FpVec v = lex_vec(vi, V.p(), V.dim());
        if (T.tbar().contains(v)) continue;
        FpSubspace W = T.tbar().extended_by(v);
        bool dup = false;
        for (const auto& h : out)
            if (h.W.same_subspace(W)) dup = true;
        if (!dup) out.push_back(HChoice{std::move(W), std::move(v)});
    }
    return out;
}

struct OracleBudgets {
    std::int64_t witness_height = 100;
    int witness_count = 8;
};

// membership oracle for O = O- u O+; O- answers are exact, O+ "true" answers
// are sampled against the finite witness set
template <class G>
class ValuationOracle {
public:
    using Elem = typename G::Elem;

    ValuationOracle(const SubgroupSpec<G>& T, HChoice H, OracleBudgets budgets)
        : T_(&T), H_(std::move(H)), budgets_(budgets) {
        const auto& V = T.space();
        if (H_.W.ambient_dim() != V.dim() || H_.W.p() != V.p())
            throw std::invalid_argument("H subspace does not match the class space");
        if (H_.W.dim() != T.tbar().dim() + 1)
            throw std::invalid_argument("H must have index exactly p over T");
        for (const auto& b : T.tbar().basis())
            if (!H_.W.contains(b)) throw std::invalid_argument("H does not contain T");
        auto en = V.ground().enumerate(budgets_.witness_height);
        while (auto x = en.next()) {
            if (V.ground().is_one(*x)) continue;
            if (in_O_minus(*x)) {
                witnesses_.push_back(*x);
                if (static_cast<int>(witnesses_.size()) >= budgets_.witness_count) break;
            }
        }
        degenerate_ = witnesses_.empty();
    }

    const ClassSpace<G>& space() const { return T_->space(); }
    const SubgroupSpec<G>& subgroup() const { return *T_; }
    const HChoice& h_choice() const { return H_; }
    const OracleBudgets& budgets() const { return budgets_; }
    bool degenerate() const { return degenerate_; }
    const std::vector<Elem>& witnesses() const { return witnesses_; }

    bool in_H(const Elem& x) const { return H_.W.contains(space().class_of(x)); }

    bool in_O_minus(const Elem& x) const {
        const G& g = space().ground();
        if (g.is_zero(x) || g.is_one(x))
            throw std::domain_error("in_O_minus is undefined at 0 and 1");
        if (in_H(x)) return false;
        return T_->contains(g.one_minus(x));
    }

    struct PlusResult {
        bool value = false;
        bool exact = true;
        bool degenerate = false;            // construction degenerate: O+ = H within budget
        std::optional<Elem> failing_witness;
    };

    PlusResult in_O_plus(const Elem& x) const {
        const G& g = space().ground();
        if (g.is_zero(x)) throw std::domain_error("in_O_plus is undefined at 0");
        if (g.is_one(x)) return {true, true, false, {}};
        if (!in_H(x)) return {false, true, false, {}};
        if (degenerate_) return {true, false, true, {}};
        for (const auto& y : witnesses_) {
            // x in H, y outside H, so xy is outside H and in particular != 1
            if (!in_O_minus(x * y)) return {false, true, false, y};
        }
        return {true, false, false, {}};
    }

    struct InO {
        bool value = false;
        bool exact = true;
    };

    // 0 and 1 are members by ring convention
    InO in_O(const Elem& x) const {
        const G& g = space().ground();
        if (g.is_zero(x) || g.is_one(x)) return {true, true};
        if (!in_H(x)) return {in_O_minus(x), true};
        auto r = in_O_plus(x);
        return {r.value, r.exact};
    }

private:
    const SubgroupSpec<G>* T_;
    HChoice H_;
    OracleBudgets budgets_;
    std::vector<Elem> witnesses_;
    bool degenerate_ = false;
};

// ---------------------------------------------------------------------------
// classification against candidate places
// ---------------------------------------------------------------------------

template <class G>
struct ClassifyReport {
    enum class Status { matched, indistinguishable, no_match, refused };
    Status status = Status::refused;
    std::optional<typename G::PlaceT> place;
    std::vector<typename G::PlaceT> surviving;
    std::vector<std::pair<typename G::PlaceT, typename G::Elem>> exclusions;
    std::int64_t elements_checked = 0;
    bool sampled = false;
};

template <class G>
ClassifyReport<G> classify_valuation(const ValuationOracle<G>& oracle,
                                     const std::vector<typename G::PlaceT>& candidates,
                                     std::int64_t height_budget) {
    if (candidates.empty()) throw std::invalid_argument("empty candidate list");
    ClassifyReport<G> rep;
    if (oracle.degenerate()) return rep;  // refused
    const G& g = oracle.space().ground();
    std::vector<char> alive(candidates.size(), 1);
    auto en = g.enumerate(height_budget);
    while (auto x = en.next()) {
        ++rep.elements_checked;
        auto io = oracle.in_O(*x);
        if (!io.exact) rep.sampled = true;
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (!alive[i]) continue;
            if ((g.valuation(*x, candidates[i]) >= 0) != io.value) {
                alive[i] = 0;
                rep.exclusions.emplace_back(candidates[i], *x);
            }
        }
    }
    for (size_t i = 0; i < candidates.size(); ++i)
        if (alive[i]) rep.surviving.push_back(candidates[i]);
    if (rep.surviving.empty()) {
        rep.status = ClassifyReport<G>::Status::no_match;
    } else if (rep.surviving.size() == 1) {
        rep.status = ClassifyReport<G>::Status::matched;
        rep.place = rep.surviving.front();
    } else {
        rep.status = ClassifyReport<G>::Status::indistinguishable;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// valuation ring axioms on a bounded sweep
// ---------------------------------------------------------------------------

template <class G>
struct AxiomViolation {
    std::string kind;              // "inverse", "sum", "product"
    typename G::Elem x, y;
};

template <class G>
struct AxiomReport {
    std::int64_t elements = 0;
    std::int64_t members = 0;      // elements with in_O true
    std::int64_t pairs_checked = 0;
    std::int64_t violations = 0;
    std::vector<AxiomViolation<G>> first_violations;  // up to 5, canonical order
    bool sampled = false;
    bool degenerate = false;
};

namespace detail {

constexpr int kMaxRecordedViolations = 5;

template <class G>
AxiomReport<G> axiom_test_generic(const ValuationOracle<G>& oracle, std::int64_t height) {
    const G& g = oracle.space().ground();
    AxiomReport<G> rep;
    if (oracle.degenerate()) {
        rep.degenerate = true;
        return rep;
    }
    std::vector<typename G::Elem> xs;
    auto en = g.enumerate(height);
    while (auto x = en.next()) xs.push_back(*x);
    rep.elements = static_cast<std::int64_t>(xs.size());

    std::vector<char> member(xs.size(), 0);
    for (size_t i = 0; i < xs.size(); ++i) {
        auto io = oracle.in_O(xs[i]);
        if (!io.exact) rep.sampled = true;
        member[i] = io.value ? 1 : 0;
        if (!io.value) {
            auto inv = oracle.in_O(g.inv(xs[i]));
            if (!inv.exact) rep.sampled = true;
            if (!inv.value) {
                ++rep.violations;
                if (static_cast<int>(rep.first_violations.size()) < kMaxRecordedViolations)
                    rep.first_violations.push_back({"inverse", xs[i], xs[i]});
            }
        }
    }
    for (size_t i = 0; i < xs.size(); ++i)
        if (member[i]) ++rep.members;

    for (size_t i = 0; i < xs.size(); ++i) {
        if (!member[i]) continue;
        for (size_t j = i; j < xs.size(); ++j) {
            if (!member[j]) continue;
            ++rep.pairs_checked;
            auto s = xs[i] + xs[j];
            if (!g.is_zero(s)) {
                auto io = oracle.in_O(s);
                if (!io.exact) rep.sampled = true;
                if (!io.value) {
                    ++rep.violations;
                    if (static_cast<int>(rep.first_violations.size()) < kMaxRecordedViolations)
                        rep.first_violations.push_back({"sum", xs[i], xs[j]});
                }
            }
            auto m = xs[i] * xs[j];
            auto io = oracle.in_O(m);
            if (!io.exact) rep.sampled = true;
            if (!io.value) {
                ++rep.violations;
                if (static_cast<int>(rep.first_violations.size()) < kMaxRecordedViolations)
                    rep.first_violations.push_back({"product", xs[i], xs[j]});
            }
        }
    }
    return rep;
}

// int64 mirror of the oracle over Q: classes, witnesses and the O-membership
// predicate on unreduced fractions, with bounds small enough to never overflow
struct FastQOracle {
    std::int64_t ell = 0;
    std::int64_t p = 0;
    int dim = 1;
    std::vector<std::int64_t> unit_exp;   // dlog mod p by residue index
    std::vector<std::int64_t> inv_mod;    // inverses mod ell
    std::uint64_t tbar_mask = 0, w_mask = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> witnesses;
    bool any_sampled_possible = false;

    std::int64_t packed_class(std::int64_t n, std::int64_t d) const {
        std::int64_t v = 0;
        while (n % ell == 0) { n /= ell; ++v; }
        while (d % ell == 0) { d /= ell; --v; }
        std::int64_t vm = ((v % p) + p) % p;
        if (dim == 1) return vm;
        std::int64_t a = n % ell;
        if (a < 0) a += ell;
        std::int64_t b = d % ell;
        if (b < 0) b += ell;
        std::int64_t u = unit_exp[static_cast<size_t>(a * inv_mod[static_cast<size_t>(b)] % ell)];
        return vm + p * u;
    }

    // in_O for n/d (d != 0), unreduced; second value: answer was sampled
    std::pair<bool, bool> in_O(std::int64_t n, std::int64_t d) const {
        if (n == 0 || n == d) return {true, false};
        std::int64_t cls = packed_class(n, d);
        if (!(w_mask >> cls & 1)) {
            // O- branch: 1 - n/d = (d-n)/d
            return {(tbar_mask >> packed_class(d - n, d) & 1) != 0, false};
        }
        for (const auto& [wn, wd] : witnesses) {
            std::int64_t zn = n * wn, zd = d * wd;
            if (!(tbar_mask >> packed_class(zd - zn, zd) & 1)) return {false, false};
        }
        return {true, true};
    }
};

inline FastQOracle build_fast_q(const ValuationOracle<QGround>& oracle) {
    const auto& V = oracle.space();
    FastQOracle f;
    f.ell = V.residue_size();
    f.p = static_cast<std::int64_t>(V.p());
    f.dim = V.dim();
    f.inv_mod.assign(static_cast<size_t>(f.ell), 0);
    for (std::int64_t a = 1; a < f.ell; ++a)
        for (std::int64_t b = 1; b < f.ell; ++b)
            if (a * b % f.ell == 1) f.inv_mod[static_cast<size_t>(a)] = b;
    if (f.dim == 2) {
        f.unit_exp.assign(static_cast<size_t>(f.ell), 0);
        for (std::int64_t a = 1; a < f.ell; ++a)
            f.unit_exp[static_cast<size_t>(a)] =
                V.dlog_of(V.residue().k->from_index(a)) % f.p;
    }
    for (const auto& cls : oracle.subgroup().tbar().elements())
        f.tbar_mask |= std::uint64_t(1) << pack_fp(cls, V.p());
    for (const auto& cls : oracle.h_choice().W.elements())
        f.w_mask |= std::uint64_t(1) << pack_fp(cls, V.p());
    for (const auto& w : oracle.witnesses())
        f.witnesses.emplace_back(to_int64(num(w)), to_int64(den(w)));
    return f;
}

inline AxiomReport<QGround> axiom_test_fast_q(const ValuationOracle<QGround>& oracle,
                                              std::int64_t height) {
    AxiomReport<QGround> rep;
    if (oracle.degenerate()) {
        rep.degenerate = true;
        return rep;
    }
    if (height > 1'000'000) throw std::invalid_argument("axiom height too large for the fast path");
    const QGround& g = oracle.space().ground();
    FastQOracle f = build_fast_q(oracle);

    std::vector<std::pair<std::int64_t, std::int64_t>> xs;
    {
        auto en = g.enumerate(height);
        while (auto x = en.next()) xs.emplace_back(to_int64(num(*x)), to_int64(den(*x)));
    }
    const std::int64_t n = static_cast<std::int64_t>(xs.size());
    rep.elements = n;

    std::vector<char> member(xs.size(), 0);
    bool sampled = false;
    for (std::int64_t i = 0; i < n; ++i) {
        auto [in, smp] = f.in_O(xs[i].first, xs[i].second);
        sampled |= smp;
        member[static_cast<size_t>(i)] = in ? 1 : 0;
        if (in) {
            ++rep.members;
        } else {
            auto [inv_in, smp2] = f.in_O(xs[i].second, xs[i].first);
            sampled |= smp2;
            if (!inv_in) {
                ++rep.violations;
                if (static_cast<int>(rep.first_violations.size()) < kMaxRecordedViolations)
                    rep.first_violations.push_back(
                        {"inverse", Rational(xs[i].first, xs[i].second),
                         Rational(xs[i].first, xs[i].second)});
            }
        }
    }

    struct Part {
        std::int64_t pairs = 0, violations = 0;
        std::vector<std::pair<std::int64_t, std::int64_t>> first;  // (i, j), kind packed in sign of marker below
        std::vector<std::string> kinds;
        bool sampled = false;
    };
    unsigned workers = worker_count();
    std::vector<Part> parts(std::max(1u, workers));
    parallel_ranges(n, workers, [&](unsigned slot, std::int64_t lo, std::int64_t hi) {
        Part& part = parts[slot];
        for (std::int64_t i = lo; i < hi; ++i) {
            if (!member[static_cast<size_t>(i)]) continue;
            auto [a, b] = xs[static_cast<size_t>(i)];
            for (std::int64_t j = i; j < n; ++j) {
                if (!member[static_cast<size_t>(j)]) continue;
                auto [c, d] = xs[static_cast<size_t>(j)];
                ++part.pairs;
                std::int64_t sn = a * d + c * b, sd = b * d;
                if (sn != 0) {
                    auto [in, smp] = f.in_O(sn, sd);
                    part.sampled |= smp;
                    if (!in) {
                        ++part.violations;
                        if (static_cast<int>(part.first.size()) < kMaxRecordedViolations) {
                            part.first.emplace_back(i, j);
                            part.kinds.push_back("sum");
                        }
                    }
                }
                auto [in, smp] = f.in_O(a * c, b * d);
                part.sampled |= smp;
                if (!in) {
                    ++part.violations;
                    if (static_cast<int>(part.first.size()) < kMaxRecordedViolations) {
                        part.first.emplace_back(i, j);
                        part.kinds.push_back("product");
                    }
                }
            }
        }
    });
    for (const auto& part : parts) {
        rep.pairs_checked += part.pairs;
        rep.violations += part.violations;
        sampled |= part.sampled;
        for (size_t k = 0; k < part.first.size(); ++k) {
            if (static_cast<int>(rep.first_violations.size()) >= kMaxRecordedViolations) break;
            auto [i, j] = part.first[k];
            rep.first_violations.push_back({part.kinds[k],
                                            Rational(xs[static_cast<size_t>(i)].first,
                                                     xs[static_cast<size_t>(i)].second),
                                            Rational(xs[static_cast<size_t>(j)].first,
                                                     xs[static_cast<size_t>(j)].second)});
        }
    }
    rep.sampled = sampled;
    return rep;
}

}  // namespace detail

// pair sweep of the ring axioms; for Q an int64 fast path is used unless
// force_generic (the cross-check tests compare the two)
template <class G>
AxiomReport<G> valuation_axiom_test(const ValuationOracle<G>& oracle, std::int64_t height,
                                    bool force_generic = false) {
    if constexpr (std::is_same_v<G, QGround>) {
        if (!force_generic) return detail::axiom_test_fast_q(oracle, height);
    }
    return detail::axiom_test_generic(oracle, height);
}

// ---------------------------------------------------------------------------
// Theorem conclusions (i)-(iii) for the classified place
// ---------------------------------------------------------------------------

struct ConclusionReport {
    bool residue_char_ok = false;     // (i) char of k(P) != p
    std::int64_t gamma_dim = 1;       // dim Gamma/p for a discrete place
    std::int64_t codim = 0;           // dim E*/T in the local model
    bool dim_inequality_ok = false;   // (ii) gamma_dim >= codim - 1
    std::string dichotomy;            // "full-dimension" | "residue-imperfect-for-p" | "violation"
    bool dichotomy_ok = false;
};

template <class G>
ConclusionReport verify_conclusions(const SubgroupSpec<G>& T, const typename G::PlaceT& P) {
    const G& g = T.space().ground();
    ConclusionReport rep;
    auto rd = g.residue_data(P);
    std::uint64_t p = T.space().p();
    rep.residue_char_ok = rd.k->characteristic() != p;
    rep.codim = T.codim();
    rep.dim_inequality_ok = rep.gamma_dim >= rep.codim - 1;
    if (rep.gamma_dim >= rep.codim) {
        rep.dichotomy = "full-dimension";
        rep.dichotomy_ok = true;
    } else if ((rd.k->size() - 1) % static_cast<std::int64_t>(p) == 0) {
        rep.dichotomy = "residue-imperfect-for-p";
        rep.dichotomy_ok = true;
    } else {
        rep.dichotomy = "violation";
        rep.dichotomy_ok = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// global counterexample search over prime elements
// ---------------------------------------------------------------------------

template <class G>
struct SearchReport {
    enum class Status { found, none_found, budget_exceeded };
    Status status = Status::none_found;
    typename G::Elem x, y;
    std::string violated;             // "a" or "b"
    K2Result certificate;
    std::int64_t pairs_scanned = 0;
};

// sweeps ordered pairs of prime elements of height <= bound, ordered by
// (max height, x, y); returns the first pair that meets the element-side
// conditions of hypothesis (a) or (b) while {x,y} = 0 in K2(E)/p
template <class G>
SearchReport<G> global_counterexample_search(const SubgroupSpec<G>& T, std::int64_t bound,
                                             const FactorBudget& budget = {}) {
    const auto& V = T.space();
    const G& g = V.ground();
    SearchReport<G> rep;
    std::vector<typename G::Elem> primes;
    {
        auto en = g.prime_enumerator();
        for (;;) {
            auto [x, P] = en.next();
            if (g.height_of(x) > bound) break;
            primes.push_back(x);
        }
    }
    auto eligible = [&](const typename G::Elem& x, const typename G::Elem& y,
                        std::string& how) {
        FpVec cx = V.class_of(x), cy = V.class_of(y);
        if (!T.tbar().contains(cx) && T.tbar().contains(cy) && !g.is_pth_power(y, V.p(), budget)) {
            how = "a";
            return true;
        }
        if (!T.tbar().contains(cx) && !T.tbar().extended_by(cx).contains(cy)) {
            how = "b";
            return true;
        }
        return false;
    };
    try {
        for (size_t k = 0; k < primes.size(); ++k) {
            std::vector<std::pair<size_t, size_t>> order;
            for (size_t i = 0; i < k; ++i) order.emplace_back(i, k);
            for (size_t i = 0; i <= k; ++i) order.emplace_back(k, i);
            for (auto [i, j] : order) {
                ++rep.pairs_scanned;
                std::string how;
                if (!eligible(primes[i], primes[j], how)) continue;
                K2Result cert = k2_vanishes_mod_p(g, primes[i], primes[j], V.p(), budget);
                if (cert.vanishes) {
                    rep.status = SearchReport<G>::Status::found;
                    rep.x = primes[i];
                    rep.y = primes[j];
                    rep.violated = how;
                    rep.certificate = std::move(cert);
                    return rep;
                }
            }
        }
    } catch (const BudgetExceeded&) {
        rep.status = SearchReport<G>::Status::budget_exceeded;
        return rep;
    }
    rep.status = SearchReport<G>::Status::none_found;
    return rep;
}

}  // namespace valforge
