#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "valforge/fp_linalg.hpp"
#include "valforge/ground.hpp"

namespace valforge {

// V = Z/p x k(P)*/(k(P)*)^p at a tame place P: the finite model of E*/E*^p.
// Coordinates of class(x) are (v_P(x) mod p, dlog_g(angular) mod p), the
// second present only when p | N(P)-1.
template <class G>
class ClassSpace {
public:
    using Elem = typename G::Elem;
    using PlaceT = typename G::PlaceT;

    ClassSpace(const G& g, PlaceT P, std::uint64_t p)
        : g_(&g), place_(std::move(P)), p_(p), rd_(g.residue_data(place_)) {
        if (p < 2) throw std::invalid_argument("p must be a prime");
        if (rd_.k->characteristic() == p_) throw std::invalid_argument("wild place unsupported");
        N_ = rd_.k->size();
        unit_dim_ = ((N_ - 1) % static_cast<std::int64_t>(p_) == 0) ? 1 : 0;
        d_ = 1 + unit_dim_;
        if (N_ > (1 << 20)) throw std::invalid_argument("residue field too large for a dlog table");
        if (unit_dim_) {
            gen_ = rd_.k->smallest_generator();
            dlog_.assign(static_cast<size_t>(N_), -1);
            FqElem acc = rd_.k->one();
            for (std::int64_t k = 0; k < N_ - 1; ++k) {
                dlog_[static_cast<size_t>(acc.index())] = k;
                acc = acc * gen_;
            }
            minus_one_exp_ = dlog_of(rd_.k->neg(rd_.k->one())) % static_cast<std::int64_t>(p_);
        }
        build_lifts();
    }

    const G& ground() const { return *g_; }
    const PlaceT& place() const { return place_; }
    const typename G::ResidueData& residue() const { return rd_; }
    std::uint64_t p() const { return p_; }
    int dim() const { return d_; }
    std::int64_t residue_size() const { return N_; }
    bool has_unit_coordinate() const { return unit_dim_ == 1; }
    FqElem generator() const {
        if (!unit_dim_) throw std::logic_error("no unit coordinate");
        return gen_;
    }

    // full discrete log of a nonzero residue element w.r.t. the fixed generator
    std::int64_t dlog_of(const FqElem& u) const {
        if (!unit_dim_) throw std::logic_error("no dlog table for this space");
        if (u.is_zero()) throw std::domain_error("dlog of zero");
        std::int64_t r = dlog_[static_cast<size_t>(u.index())];
        if (r < 0) throw std::logic_error("dlog table miss");
        return r;
    }

    std::uint64_t unit_class_of(const Elem& x) const {
        if (g_->is_zero(x)) throw std::domain_error("power class of zero");
        if (!unit_dim_) return 0;
        return static_cast<std::uint64_t>(dlog_of(g_->angular(x, place_, rd_)) %
                                          static_cast<std::int64_t>(p_));
    }

    FpVec class_of(const Elem& x) const {
        if (g_->is_zero(x)) throw std::domain_error("power class of zero");
        FpVec out(static_cast<size_t>(d_));
        std::int64_t v = g_->valuation(x, place_);
        std::int64_t pp = static_cast<std::int64_t>(p_);
        out[0] = static_cast<std::uint64_t>(((v % pp) + pp) % pp);
        if (unit_dim_) out[1] = unit_class_of(x);
        return out;
    }

    std::int64_t class_count() const {
        std::int64_t n = 1;
        for (int i = 0; i < d_; ++i) n *= static_cast<std::int64_t>(p_);
        return n;
    }

    // canonical lift for each class, indexed lexicographically; lifts are the
    // first preimages in the ground's integral enumeration order
    const std::vector<Elem>& canonical_lifts() const { return lifts_; }
    const Elem& lift_of(const FpVec& cls) const {
        return lifts_[static_cast<size_t>(lex_index(cls, p_))];
    }

    // exponent of -1 mod p (0 when p is odd or when there is no unit coordinate)
    std::uint64_t minus_one_exp() const { return static_cast<std::uint64_t>(minus_one_exp_); }
    FpVec class_of_minus_one() const { return class_of(g_->minus_one()); }

private:
    void build_lifts() {
        std::int64_t want = class_count();
        lifts_.assign(static_cast<size_t>(want), Elem{});
        std::vector<char> seen(static_cast<size_t>(want), 0);
        std::int64_t found = 0;
        auto en = g_->integral_enumerator();
        for (std::int64_t steps = 0; found < want; ++steps) {
            if (steps > 50'000'000) throw std::logic_error("canonical lift search did not terminate");
            Elem x = en.next();
            std::int64_t idx = lex_index(class_of(x), p_);
            if (!seen[static_cast<size_t>(idx)]) {
                seen[static_cast<size_t>(idx)] = 1;
                lifts_[static_cast<size_t>(idx)] = x;
                ++found;
            }
        }
    }

    const G* g_;
    PlaceT place_;
    std::uint64_t p_;
    typename G::ResidueData rd_;
    std::int64_t N_ = 0;
    int unit_dim_ = 0, d_ = 1;
    FqElem gen_;
    std::vector<std::int64_t> dlog_;
    std::int64_t minus_one_exp_ = 0;
    std::vector<Elem> lifts_;
};

// T = preimage in E* of a subspace Tbar <= V; always contains E*^p, and the
// class of -1 is required to lie in Tbar
template <class G>
class SubgroupSpec {
public:
    SubgroupSpec(const ClassSpace<G>& V, FpSubspace tbar) : V_(&V), tbar_(std::move(tbar)) {
        if (tbar_.ambient_dim() != V.dim() || tbar_.p() != V.p())
            throw std::invalid_argument("subspace does not match the class space");
        if (!tbar_.contains(V.class_of_minus_one()))
            throw std::invalid_argument("T must contain the class of -1");
    }

    const ClassSpace<G>& space() const { return *V_; }
    const FpSubspace& tbar() const { return tbar_; }
    int codim() const { return V_->dim() - tbar_.dim(); }

    bool contains(const typename G::Elem& x) const {
        if (V_->ground().is_zero(x)) throw std::domain_error("membership of zero");
        return tbar_.contains(V_->class_of(x));
    }

private:
    const ClassSpace<G>* V_;
    FpSubspace tbar_;
};

}  // namespace valforge
