#pragma once

#include <string>

#include "valforge/poly.hpp"

namespace valforge {

// Element of F_q(t) in lowest terms with monic denominator; zero is 0/1.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(Poly num, Poly den);                  // normalizes
    static RationalFunction zero(const FqFieldPtr& f);
    static RationalFunction one(const FqFieldPtr& f);
    static RationalFunction from_poly(Poly p);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FqFieldPtr& base_field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    // max(deg num, deg den); nonzero constants have height 0
    int height() const { return std::max(num_.degree(), den_.degree()); }

    RationalFunction inv() const;
    friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator-(const RationalFunction&);
    friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);
    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

private:
    Poly num_, den_;
};

std::string to_string(const RationalFunction& x, const std::string& var = "t");
// "poly", "poly/poly", parens allowed around either side: "(t^2+t)/t^3"
RationalFunction parse_rational_function(const FqFieldPtr& f, const std::string& s,
                                         const std::string& var = "t");

}  // namespace valforge
