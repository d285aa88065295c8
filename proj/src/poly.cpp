#include "valforge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace valforge {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::zero(const FqFieldPtr& f) {
    Poly p;
    p.field_ = f;
    return p;
}

Poly Poly::one(const FqFieldPtr& f) { return constant(f->one()); }

Poly Poly::constant(const FqElem& c) {
    Poly p;
    p.field_ = c.field;
    if (!c.is_zero()) p.coeffs_ = {c};
    return p;
}

Poly Poly::variable(const FqFieldPtr& f) {
    Poly p;
    p.field_ = f;
    p.coeffs_ = {f->zero(), f->one()};
    return p;
}

Poly Poly::from_coeffs(const FqFieldPtr& f, std::vector<FqElem> coeffs) {
    Poly p;
    p.field_ = f;
    for (const auto& c : coeffs)
        if (c.field.get() != f.get()) throw std::invalid_argument("coefficient from wrong field");
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::from_index(const FqFieldPtr& f, std::int64_t idx) {
    if (idx < 0) throw std::out_of_range("negative polynomial index");
    std::vector<FqElem> cs;
    const std::int64_t q = f->size();
    while (idx > 0) {
        cs.push_back(f->from_index(idx % q));
        idx /= q;
    }
    return from_coeffs(f, std::move(cs));
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

bool Poly::is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

FqElem Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_->zero();
    return coeffs_[static_cast<size_t>(i)];
}

FqElem Poly::lc() const { return is_zero() ? field_->zero() : coeffs_.back(); }

std::int64_t Poly::index() const {
    const std::int64_t q = field_->size();
    std::int64_t idx = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (idx > ((std::int64_t(1) << 62) - coeffs_[i].index()) / q)
            throw std::overflow_error("polynomial index out of range");
        idx = idx * q + coeffs_[i].index();
    }
    return idx;
}

FqElem Poly::eval(const FqElem& x) const {
    FqElem acc = field_->zero();
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Poly Poly::derivative() const {
    std::vector<FqElem> cs;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        cs.push_back(field_->mul(coeffs_[i], field_->from_integer(Integer(i))));
    return from_coeffs(field_, std::move(cs));
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    if (is_monic()) return *this;
    return mul_scalar(field_->inv(lc()));
}

Poly operator+(const Poly& a, const Poly& b) {
    const auto& f = a.field_;
    std::vector<FqElem> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), f->zero());
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff((int)i) + b.coeff((int)i);
    return Poly::from_coeffs(f, std::move(cs));
}

Poly operator-(const Poly& a, const Poly& b) {
    const auto& f = a.field_;
    std::vector<FqElem> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), f->zero());
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff((int)i) - b.coeff((int)i);
    return Poly::from_coeffs(f, std::move(cs));
}

Poly operator-(const Poly& a) {
    std::vector<FqElem> cs;
    cs.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) cs.push_back(-c);
    return Poly::from_coeffs(a.field_, std::move(cs));
}

Poly operator*(const Poly& a, const Poly& b) {
    const auto& f = a.field_;
    if (a.is_zero() || b.is_zero()) return Poly::zero(f);
    std::vector<FqElem> cs(a.coeffs_.size() + b.coeffs_.size() - 1, f->zero());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            cs[i + j] = cs[i + j] + f->mul(a.coeffs_[i], b.coeffs_[j]);
    }
    return Poly::from_coeffs(f, std::move(cs));
}

Poly Poly::mul_scalar(const FqElem& c) const {
    std::vector<FqElem> cs;
    cs.reserve(coeffs_.size());
    for (const auto& x : coeffs_) cs.push_back(field_->mul(x, c));
    return from_coeffs(field_, std::move(cs));
}

bool Poly::operator==(const Poly& o) const {
    return field_.get() == o.field_.get() && coeffs_ == o.coeffs_;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const auto& f = a.field();
    Poly r = a;
    std::vector<FqElem> q(std::max(0, a.degree() - b.degree() + 1), f->zero());
    FqElem lcinv = f->inv(b.lc());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        FqElem c = f->mul(r.lc(), lcinv);
        q[static_cast<size_t>(shift)] = c;
        // r -= c * x^shift * b
        std::vector<FqElem> sub(static_cast<size_t>(shift), f->zero());
        for (const auto& bc : b.coeffs()) sub.push_back(f->mul(c, bc));
        r = r - Poly::from_coeffs(f, std::move(sub));
    }
    return {Poly::from_coeffs(f, std::move(q)), r};
}

Poly pmod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = pmod(x, y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

Poly pow_mod(Poly a, Integer e, const Poly& f) {
    if (e < 0) throw std::invalid_argument("negative exponent in pow_mod");
    Poly result = Poly::one(a.field());
    a = pmod(a, f);
    while (e > 0) {
        if ((e & 1) != 0) result = pmod(result * a, f);
        a = pmod(a * a, f);
        e >>= 1;
    }
    return result;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const auto& k = f.field();
    const Integer q(k->size());
    const int r = f.degree();
    std::vector<int> prime_divs;
    int n = r;
    for (int s = 2; s * s <= n; ++s)
        if (n % s == 0) {
            prime_divs.push_back(s);
            while (n % s == 0) n /= s;
        }
    if (n > 1) prime_divs.push_back(n);

    const Poly x = Poly::variable(k);
    for (int s : prime_divs) {
        Poly h = pow_mod(x, pow(q, static_cast<unsigned>(r / s)), f);
        if (gcd(h - x, f).degree() != 0) return false;
    }
    Poly h = pow_mod(x, pow(q, static_cast<unsigned>(r)), f);
    return (h - x).is_zero() || pmod(h - x, f).is_zero();
}

int valuation_of_poly(Poly f, const Poly& pi) {
    if (f.is_zero()) throw std::domain_error("valuation of zero polynomial");
    int v = 0;
    while (true) {
        auto [q, r] = divmod(f, pi);
        if (!r.is_zero()) return v;
        f = q;
        ++v;
    }
}

std::string to_string(const Poly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        FqElem c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += to_string(c);
        } else {
            if (!c.is_one()) out += to_string(c);
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

struct PolyParser {
    const FqFieldPtr& f;
    const std::string& s;
    const std::string& var;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    std::int64_t parse_number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected number in polynomial: " + s);
        return std::stoll(s.substr(start, pos - start));
    }

    bool at_var() {
        skip_ws();
        return s.compare(pos, var.size(), var) == 0;
    }

    // term := number ['*'] [var ['^' k]] | var ['^' k]
    Poly parse_term() {
        skip_ws();
        FqElem c = f->one();
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::int64_t n = parse_number();
            if (n >= f->size()) throw std::invalid_argument("coefficient index out of range: " + s);
            c = f->from_index(n);
            have_coeff = true;
            eat('*');
        }
        int e = 0;
        if (at_var()) {
            pos += var.size();
            e = 1;
            if (eat('^')) e = static_cast<int>(parse_number());
        } else if (!have_coeff) {
            throw std::invalid_argument("expected term in polynomial: " + s);
        }
        std::vector<FqElem> cs(static_cast<size_t>(e) + 1, f->zero());
        cs.back() = c;
        return Poly::from_coeffs(f, std::move(cs));
    }

    Poly parse() {
        Poly acc = Poly::zero(f);
        bool negate = eat('-');
        while (true) {
            Poly t = parse_term();
            acc = negate ? acc - t : acc + t;
            skip_ws();
            if (eat('+')) negate = false;
            else if (eat('-')) negate = true;
            else break;
        }
        skip_ws();
        if (pos != s.size()) throw std::invalid_argument("trailing characters in polynomial: " + s);
        return acc;
    }
};

}  // namespace

Poly parse_poly(const FqFieldPtr& f, const std::string& s, const std::string& var) {
    PolyParser p{f, s, var};
    return p.parse();
}

}  // namespace valforge
