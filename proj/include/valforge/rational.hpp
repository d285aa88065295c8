#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "valforge/integers.hpp"

namespace valforge {

// Exact rational, always in lowest terms with positive denominator; zero is 0/1.
// cpp_rational maintains those invariants on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer den(const Rational& x) { return boost::multiprecision::denominator(x); }

// height(n/d) = max(|n|, d) for reduced n/d; height(0) = 0
inline Integer height(const Rational& x) {
    Integer n = abs(num(x)), d = den(x);
    return n > d ? n : d;
}

inline std::string to_string(const Rational& x) { return x.str(); }

// accepts "n" or "n/d", optional leading '-'
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw std::invalid_argument("bad rational literal: " + s);
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(n, d);
}

}  // namespace valforge
