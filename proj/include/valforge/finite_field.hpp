#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "valforge/integers.hpp"

namespace valforge {

class FqField;
using FqFieldPtr = std::shared_ptr<const FqField>;

// Element of F_q, q = ell^r: coordinate vector over the prime field, length r.
// Canonical index of an element is sum c_i * ell^i (little-endian base-ell).
struct FqElem {
    FqFieldPtr field;
    std::vector<std::uint64_t> c;

    bool is_zero() const;
    bool is_one() const;
    std::int64_t index() const;
    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }
};

// F_q as F_ell[x]/(m), m monic irreducible over the prime field. Instances are
// interned: make()/with_modulus() return the same pointer for the same field,
// so pointer equality means field equality.
class FqField : public std::enable_shared_from_this<FqField> {
public:
    // canonical field of size ell^r: fixed modulus table for prime powers
    // <= 729, deterministic lex-smallest search beyond it
    static FqFieldPtr make(std::uint64_t ell, unsigned r);
    // q given as a prime power (9 -> F_3[x]/(x^2+1), ...)
    static FqFieldPtr make_from_size(std::uint64_t q);
    // caller-supplied modulus, little-endian incl. leading 1; validated
    static FqFieldPtr with_modulus(std::uint64_t ell, std::vector<std::uint64_t> modulus);

    std::uint64_t characteristic() const { return ell_; }
    unsigned degree() const { return r_; }
    std::int64_t size() const { return size_; }           // ell^r
    const std::vector<std::uint64_t>& modulus() const { return mod_; }

    FqElem zero() const;
    FqElem one() const;
    FqElem from_index(std::int64_t idx) const;
    FqElem from_integer(const Integer& n) const;          // n mod ell in the prime subfield
    FqElem from_coords(std::vector<std::uint64_t> c) const;

    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem sub(const FqElem& a, const FqElem& b) const;
    FqElem neg(const FqElem& a) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    FqElem inv(const FqElem& a) const;
    FqElem pow(const FqElem& a, Integer e) const;         // e may be negative

    bool is_pth_power(const FqElem& z, std::uint64_t p) const;
    std::int64_t multiplicative_order(const FqElem& z) const;
    // smallest generator of F_q* in canonical index order
    FqElem smallest_generator() const;

    // deterministic, exported so callers can build fields beyond the table
    static std::vector<std::uint64_t> lex_smallest_irreducible(std::uint64_t ell, unsigned r);

private:
    FqField(std::uint64_t ell, unsigned r, std::vector<std::uint64_t> mod);

    std::uint64_t ell_;
    unsigned r_;
    std::int64_t size_;
    std::vector<std::uint64_t> mod_;   // monic, length r_+1
};

inline FqElem operator+(const FqElem& a, const FqElem& b) { return a.field->add(a, b); }
inline FqElem operator-(const FqElem& a, const FqElem& b) { return a.field->sub(a, b); }
inline FqElem operator-(const FqElem& a) { return a.field->neg(a); }
inline FqElem operator*(const FqElem& a, const FqElem& b) { return a.field->mul(a, b); }

std::string to_string(const FqElem& z);                   // decimal canonical index

// all roots of sum coeffs[i] * x^i in the coefficient field, by exhaustive
// scan in index order (fields at desk scale only)
std::vector<FqElem> roots_by_search(const FqFieldPtr& f, const std::vector<FqElem>& coeffs);

}  // namespace valforge
