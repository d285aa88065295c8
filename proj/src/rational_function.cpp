#include "valforge/rational_function.hpp"

#include <stdexcept>

namespace valforge {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one(num_.field());
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    // make the denominator monic, folding its unit into the numerator
    FqElem lc = den_.lc();
    if (!lc.is_one()) {
        FqElem inv = den_.field()->inv(lc);
        num_ = num_.mul_scalar(inv);
        den_ = den_.mul_scalar(inv);
    }
}

RationalFunction RationalFunction::zero(const FqFieldPtr& f) {
    return from_poly(Poly::zero(f));
}

RationalFunction RationalFunction::one(const FqFieldPtr& f) {
    return from_poly(Poly::one(f));
}

RationalFunction RationalFunction::from_poly(Poly p) {
    RationalFunction x;
    x.den_ = Poly::one(p.field());
    x.num_ = std::move(p);
    return x;
}

RationalFunction RationalFunction::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a) {
    return RationalFunction(-a.num_, a.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

std::string to_string(const RationalFunction& x, const std::string& var) {
    if (x.den().is_one()) return to_string(x.num(), var);
    return "(" + to_string(x.num(), var) + ")/(" + to_string(x.den(), var) + ")";
}

RationalFunction parse_rational_function(const FqFieldPtr& f, const std::string& s,
                                         const std::string& var) {
    // split on the single '/' at paren depth 0, if any
    int depth = 0;
    size_t slash = std::string::npos;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == '/' && depth == 0) {
            if (slash != std::string::npos)
                throw std::invalid_argument("multiple '/' in rational function: " + s);
            slash = i;
        }
    }
    auto strip = [](std::string t) {
        size_t b = t.find_first_not_of(" \t");
        size_t e = t.find_last_not_of(" \t");
        if (b == std::string::npos) return std::string();
        t = t.substr(b, e - b + 1);
        if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
            int d = 0;
            bool outer = true;
            for (size_t i = 0; i + 1 < t.size(); ++i) {
                if (t[i] == '(') ++d;
                else if (t[i] == ')') --d;
                if (d == 0) { outer = false; break; }
            }
            if (outer) t = t.substr(1, t.size() - 2);
        }
        return t;
    };
    if (slash == std::string::npos)
        return RationalFunction::from_poly(parse_poly(f, strip(s), var));
    Poly num = parse_poly(f, strip(s.substr(0, slash)), var);
    Poly den = parse_poly(f, strip(s.substr(slash + 1)), var);
    return RationalFunction(std::move(num), std::move(den));
}

}  // namespace valforge
