#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace valforge {

using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer& a) {
    return boost::multiprecision::abs(a);
}

inline Integer pow(const Integer& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// floor(sqrt(n)), n >= 0
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

inline Integer mod_pow(Integer base, Integer exp, const Integer& m) {
    return boost::multiprecision::powm(base, exp, m);
}

inline std::int64_t to_int64(const Integer& n) {
    if (n > std::numeric_limits<std::int64_t>::max() ||
        n < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer does not fit in int64: " + n.str());
    return static_cast<std::int64_t>(n);
}

// multiplicity of d in n (n != 0, d >= 2); also divides n down
inline int strip_factor(Integer& n, const Integer& d) {
    int k = 0;
    while (n % d == 0) { n /= d; ++k; }
    return k;
}

}  // namespace valforge
