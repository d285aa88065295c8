#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "valforge/finite_field.hpp"

namespace valforge {

// Dense univariate polynomial over F_q, coefficients little-endian, trimmed.
// Canonical index: sum index(c_i) * q^i — degree-graded, lexicographic within
// a degree when coefficients are read from the constant term up.
class Poly {
public:
    Poly() = default;
    static Poly zero(const FqFieldPtr& f);
    static Poly one(const FqFieldPtr& f);
    static Poly constant(const FqElem& c);
    static Poly variable(const FqFieldPtr& f);             // t
    static Poly from_coeffs(const FqFieldPtr& f, std::vector<FqElem> coeffs);
    static Poly from_index(const FqFieldPtr& f, std::int64_t idx);

    const FqFieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_monic() const;
    const std::vector<FqElem>& coeffs() const { return coeffs_; }
    FqElem coeff(int i) const;                             // 0 beyond degree
    FqElem lc() const;                                     // leading coefficient, zero poly -> 0

    std::int64_t index() const;                            // guarded against overflow
    FqElem eval(const FqElem& x) const;
    Poly derivative() const;
    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly mul_scalar(const FqElem& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    FqFieldPtr field_;
    std::vector<FqElem> coeffs_;
    void trim();
};

// quotient and remainder by a nonzero divisor
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly pmod(const Poly& a, const Poly& b);
// monic gcd
Poly gcd(const Poly& a, const Poly& b);
// a^e mod f, e >= 0
Poly pow_mod(Poly a, Integer e, const Poly& f);
bool is_irreducible(const Poly& f);

// multiplicity of the irreducible pi in f (f != 0)
int valuation_of_poly(Poly f, const Poly& pi);

std::string to_string(const Poly& f, const std::string& var = "t");
// sums of terms like "t^2+3t+1"; coefficients are canonical element indexes
Poly parse_poly(const FqFieldPtr& f, const std::string& s, const std::string& var = "t");

}  // namespace valforge
