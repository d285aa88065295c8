#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "valforge/int_factor.hpp"
#include "valforge/integers.hpp"
#include "valforge/poly.hpp"
#include "valforge/rational.hpp"
#include "valforge/rational_function.hpp"

namespace valforge {

// ---------------------------------------------------------------------------
// Ground field Q
// ---------------------------------------------------------------------------

struct QPlace {
    bool real = false;
    Integer prime;                       // meaningful when !real
};

class QGround {
public:
    using Elem = Rational;
    using PlaceT = QPlace;

    struct ResidueData {
        FqFieldPtr k;
        Integer ell;
    };

    std::string descriptor() const { return "Q"; }
    std::uint64_t characteristic() const { return 0; }

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem minus_one() const { return Rational(-1); }
    bool is_zero(const Elem& x) const { return x == 0; }
    bool is_one(const Elem& x) const { return x == 1; }
    Elem inv(const Elem& x) const;
    Elem one_minus(const Elem& x) const { return Rational(1) - x; }
    std::int64_t height_of(const Elem& x) const { return to_int64(height(x)); }
    std::string elem_text(const Elem& x) const { return to_string(x); }
    Elem parse_elem(const std::string& s) const { return parse_rational(s); }

    std::int64_t valuation(const Elem& x, const PlaceT& P) const;
    ResidueData residue_data(const PlaceT& P) const;
    FqElem angular(const Elem& x, const PlaceT& P, const ResidueData& rd) const;
    std::vector<PlaceT> support(const Elem& x, const FactorBudget& budget = {}) const;
    bool is_pth_power(const Elem& x, std::uint64_t p, const FactorBudget& budget = {}) const;

    bool place_is_special(const PlaceT& P) const { return P.real; }
    bool place_eq(const PlaceT& a, const PlaceT& b) const;
    std::string place_text(const PlaceT& P) const;
    PlaceT parse_place(const std::string& s) const;

    // field enumeration: heights ascending; within a height, positives by
    // (denominator, numerator), then the same values negated
    class Enumerator {
    public:
        explicit Enumerator(std::int64_t height_bound);
        std::optional<Elem> next();

    private:
        void refill();
        std::int64_t bound_, h_ = 0;
        std::vector<Elem> batch_;
        size_t pos_ = 0;
    };
    Enumerator enumerate(std::int64_t height_bound) const { return Enumerator(height_bound); }

    // integral enumeration used for canonical class lifts: 1, 2, 3, ...
    class IntegralEnumerator {
    public:
        Elem next() { return Rational(++n_); }

    private:
        std::int64_t n_ = 0;
    };
    IntegralEnumerator integral_enumerator() const { return {}; }

    // prime elements for generator sweeps: 2, 3, 5, ...
    class PrimeEnumerator {
    public:
        std::pair<Elem, PlaceT> next();

    private:
        Integer last_ = 1;
    };
    PrimeEnumerator prime_enumerator() const { return {}; }

    Elem random_element(std::mt19937_64& rng, std::int64_t height_bound) const;
};

// ---------------------------------------------------------------------------
// Ground field F_q(t)
// ---------------------------------------------------------------------------

struct FqtPlace {
    bool infinity = false;
    Poly pi;                             // monic irreducible, meaningful when !infinity
};

class FqtGround {
public:
    using Elem = RationalFunction;
    using PlaceT = FqtPlace;

    struct ResidueData {
        FqFieldPtr k;
        enum class Rep { base_eval, direct_mod, flattened, at_infinity } rep;
        Poly pi;                         // finite places
        FqElem eval_point;               // base_eval
        // flattened representation (extension base field):
        std::vector<FqElem> eps;         // embedding base -> k by element index
        std::vector<FqElem> tau_pow;     // powers of the chosen root of pi
        std::unordered_map<std::int64_t, std::int64_t> eps_inv;
    };

    explicit FqtGround(FqFieldPtr base);
    const FqFieldPtr& base() const { return base_; }

    std::string descriptor() const { return "F" + std::to_string(base_->size()) + "t"; }
    std::uint64_t characteristic() const { return base_->characteristic(); }

    Elem zero() const { return RationalFunction::zero(base_); }
    Elem one() const { return RationalFunction::one(base_); }
    Elem minus_one() const { return RationalFunction::from_poly(Poly::constant(base_->neg(base_->one()))); }
    bool is_zero(const Elem& x) const { return x.is_zero(); }
    bool is_one(const Elem& x) const { return x.is_one(); }
    Elem inv(const Elem& x) const { return x.inv(); }
    Elem one_minus(const Elem& x) const { return one() - x; }
    std::int64_t height_of(const Elem& x) const { return std::max(0, x.height()); }
    std::string elem_text(const Elem& x) const { return to_string(x); }
    Elem parse_elem(const std::string& s) const { return parse_rational_function(base_, s); }

    std::int64_t valuation(const Elem& x, const PlaceT& P) const;
    ResidueData residue_data(const PlaceT& P) const;
    FqElem angular(const Elem& x, const PlaceT& P, const ResidueData& rd) const;
    FqElem reduce_poly(const Poly& f, const ResidueData& rd) const;
    // Norm_{k(P)/F_q}, landing in the base field
    FqElem norm_to_base(const FqElem& z, const ResidueData& rd) const;
    std::vector<PlaceT> support(const Elem& x, const FactorBudget& budget = {}) const;
    bool is_pth_power(const Elem& x, std::uint64_t p, const FactorBudget& budget = {}) const;

    bool place_is_special(const PlaceT& P) const { return P.infinity; }
    bool place_eq(const PlaceT& a, const PlaceT& b) const;
    std::string place_text(const PlaceT& P) const;
    PlaceT parse_place(const std::string& s) const;

    // heights ascending; within a height, by (denominator index, numerator index)
    class Enumerator {
    public:
        Enumerator(FqFieldPtr base, std::int64_t height_bound);
        std::optional<Elem> next();

    private:
        bool advance_den();
        FqFieldPtr base_;
        std::int64_t bound_, q_;
        std::int64_t h_ = 0;
        int den_deg_ = 0;
        std::int64_t den_idx_ = 0, num_idx_ = 0;
        Poly den_;
        bool den_valid_ = false;
    };
    Enumerator enumerate(std::int64_t height_bound) const { return Enumerator(base_, height_bound); }

    // nonzero polynomials by canonical index
    class IntegralEnumerator {
    public:
        explicit IntegralEnumerator(FqFieldPtr base) : base_(std::move(base)) {}
        Elem next() { return RationalFunction::from_poly(Poly::from_index(base_, ++idx_)); }

    private:
        FqFieldPtr base_;
        std::int64_t idx_ = 0;
    };
    IntegralEnumerator integral_enumerator() const { return IntegralEnumerator(base_); }

    // monic irreducibles by canonical index (degree-graded)
    class PrimeEnumerator {
    public:
        explicit PrimeEnumerator(FqFieldPtr base) : base_(std::move(base)) {}
        std::pair<Elem, PlaceT> next();

    private:
        FqFieldPtr base_;
        std::int64_t idx_ = 0;
    };
    PrimeEnumerator prime_enumerator() const { return PrimeEnumerator(base_); }

    Elem random_element(std::mt19937_64& rng, std::int64_t height_bound) const;

private:
    FqFieldPtr base_;
};

// "Q:5", "Q:inf", "F7t:t^2+1", "F7t:inf" -> (descriptor, place part)
std::pair<std::string, std::string> split_place_text(const std::string& s);

}  // namespace valforge
