#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "valforge/class_space.hpp"
#include "valforge/ground.hpp"

namespace valforge {

// residue of (-1)^{v(x)v(y)} x^{v(y)} y^{-v(x)} at P
template <class G>
FqElem tame_symbol(const G& g, const typename G::Elem& x, const typename G::Elem& y,
                   const typename G::PlaceT& P, const typename G::ResidueData& rd) {
    std::int64_t a = g.valuation(x, P), b = g.valuation(y, P);
    const auto& k = rd.k;
    FqElem r = k->one();
    if ((a & 1) && (b & 1)) r = k->neg(r);
    if (b != 0) r = r * k->pow(g.angular(x, P, rd), Integer(b));
    if (a != 0) r = r * k->pow(g.angular(y, P, rd), Integer(-a));
    return r;
}

template <class G>
FqElem tame_symbol(const G& g, const typename G::Elem& x, const typename G::Elem& y,
                   const typename G::PlaceT& P) {
    return tame_symbol(g, x, y, P, g.residue_data(P));
}

// degree-2 Hilbert symbols over Q, +1 / -1
int hilbert2_at_two(const Rational& x, const Rational& y);
int hilbert_at_real(const Rational& x, const Rational& y);

// class of u in k*/(k*)^p as an exponent in [0, p) w.r.t. the smallest
// generator; 0 whenever p does not divide |k*|
std::uint64_t residue_class_exponent(const FqFieldPtr& k, const FqElem& u, std::uint64_t p);

struct SymbolAtPlace {
    std::string place;
    std::string value;            // residue element index, or "+1"/"-1" at 2 and the real place
    std::uint64_t exponent = 0;   // class mod p
};

struct K2Result {
    bool vanishes = true;
    std::optional<SymbolAtPlace> witness;       // first nonvanishing place, canonical order
    std::vector<SymbolAtPlace> places_checked;
};

// decides {x, y} = 0 in K2(E)/p by local symbol classes; canonical order puts
// tame places first: for Q, support primes ascending (for p = 2 the wild place
// 2 and the real place follow at the end); for F_q(t): finite places by
// (degree, index), then infinity. Relies on the classical description of K2 of
// these global fields: the listed symbols jointly detect every class mod p.
K2Result k2_vanishes_mod_p(const QGround& g, const Rational& x, const Rational& y,
                           std::uint64_t p, const FactorBudget& budget = {});
K2Result k2_vanishes_mod_p(const FqtGround& g, const RationalFunction& x,
                           const RationalFunction& y, std::uint64_t p,
                           const FactorBudget& budget = {});

// pairing from representatives: dlog exponent of the tame symbol mod p;
// class-determined, so any representatives of the same classes agree
template <class G>
std::uint64_t pairing_on_elements(const ClassSpace<G>& V, const typename G::Elem& x,
                                  const typename G::Elem& y) {
    if (V.dim() != 2)
        throw std::invalid_argument("pairing degenerate: p does not divide N(P)-1");
    FqElem s = tame_symbol(V.ground(), x, y, V.place(), V.residue());
    return static_cast<std::uint64_t>(V.dlog_of(s) % static_cast<std::int64_t>(V.p()));
}

template <class G>
std::uint64_t local_pairing(const ClassSpace<G>& V, const FpVec& a, const FpVec& b) {
    return pairing_on_elements(V, V.lift_of(a), V.lift_of(b));
}

struct WedgeReport {
    bool degenerate = false;      // d = 1: map onto the zero group
    bool holds = false;           // nondegenerate alternating 2x2 matrix
    std::uint64_t m[2][2] = {{0, 0}, {0, 0}};
    std::string note;
};

template <class G>
WedgeReport wedge_iso_check(const ClassSpace<G>& V) {
    WedgeReport rep;
    if (V.dim() != 2) {
        rep.degenerate = true;
        rep.note = "d = 1: p does not divide N(P)-1, wedge square maps onto 0";
        return rep;
    }
    std::uint64_t p = V.p();
    FpVec e0{1, 0}, e1{0, 1};
    rep.m[0][0] = local_pairing(V, e0, e0);
    rep.m[0][1] = local_pairing(V, e0, e1);
    rep.m[1][0] = local_pairing(V, e1, e0);
    rep.m[1][1] = local_pairing(V, e1, e1);
    bool alternating = rep.m[0][0] == 0 && rep.m[1][1] == 0 &&
                       (rep.m[0][1] + rep.m[1][0]) % p == 0;
    bool nondegenerate = rep.m[0][1] != 0;
    rep.holds = alternating && nondegenerate;
    if (!rep.holds) rep.note = alternating ? "pairing matrix is singular" : "pairing not alternating";
    return rep;
}

// product over all places (including infinity) of Norm_{k(P)/F_q} of the tame
// symbol equals 1
bool weil_reciprocity_check(const FqtGround& g, const RationalFunction& f,
                            const RationalFunction& h);

}  // namespace valforge
