#include "valforge/symbols.hpp"

#include <algorithm>

namespace valforge {

namespace {

// (v_2, odd part mod 8) of a nonzero rational; odd denominators are
// self-inverse mod 8
std::pair<std::int64_t, int> two_adic_shape(const Rational& x) {
    Integer n = num(x), d = den(x);
    std::int64_t v = strip_factor(n, Integer(2)) - strip_factor(d, Integer(2));
    Integer r = (n * d) % 8;
    if (r < 0) r += 8;
    return {v, static_cast<int>(r)};
}

int eps_mod2(int u8) { return (u8 % 4 == 3) ? 1 : 0; }
int omega_mod2(int u8) { return (u8 == 3 || u8 == 5) ? 1 : 0; }

}  // namespace

int hilbert2_at_two(const Rational& x, const Rational& y) {
    if (x == 0 || y == 0) throw std::domain_error("Hilbert symbol of zero");
    auto [a, ux] = two_adic_shape(x);
    auto [b, uy] = two_adic_shape(y);
    std::int64_t e = eps_mod2(ux) * eps_mod2(uy) + a * omega_mod2(uy) + b * omega_mod2(ux);
    return (e % 2 == 0) ? 1 : -1;
}

int hilbert_at_real(const Rational& x, const Rational& y) {
    if (x == 0 || y == 0) throw std::domain_error("Hilbert symbol of zero");
    return (x < 0 && y < 0) ? -1 : 1;
}

std::uint64_t residue_class_exponent(const FqFieldPtr& k, const FqElem& u, std::uint64_t p) {
    if (u.is_zero()) throw std::domain_error("power class of zero");
    std::int64_t N = k->size();
    if ((N - 1) % static_cast<std::int64_t>(p) != 0) return 0;
    Integer q = (Integer(N) - 1) / p;
    FqElem z = k->pow(u, q);
    FqElem zeta = k->pow(k->smallest_generator(), q);
    FqElem acc = k->one();
    for (std::uint64_t e = 0; e < p; ++e) {
        if (acc == z) return e;
        acc = acc * zeta;
    }
    throw std::logic_error("residue class exponent not found");
}

K2Result k2_vanishes_mod_p(const QGround& g, const Rational& x, const Rational& y,
                           std::uint64_t p, const FactorBudget& budget) {
    if (x == 0 || y == 0) throw std::domain_error("symbol of zero");
    K2Result res;
    auto record = [&](const std::string& place, const std::string& value, std::uint64_t e) {
        res.places_checked.push_back(SymbolAtPlace{place, value, e});
        if (e != 0 && res.vanishes) {
            res.vanishes = false;
            res.witness = res.places_checked.back();
        }
        return e != 0;
    };

    std::vector<Integer> primes;
    for (const auto& P : g.support(x, budget)) primes.push_back(P.prime);
    for (const auto& P : g.support(y, budget)) primes.push_back(P.prime);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    for (const auto& ell : primes) {
        if (ell == 2 && p == 2) continue;  // wild place, handled by the Hilbert symbol below
        QPlace P{false, ell};
        auto rd = g.residue_data(P);
        FqElem t = tame_symbol(g, x, y, P, rd);
        std::uint64_t e = residue_class_exponent(rd.k, t, p);
        if (record(P.prime.str(), to_string(t), e)) return res;
    }
    if (p == 2) {
        int h2 = hilbert2_at_two(x, y);
        if (record("2", h2 < 0 ? "-1" : "+1", h2 < 0 ? 1 : 0)) return res;
        int hr = hilbert_at_real(x, y);
        if (record("inf", hr < 0 ? "-1" : "+1", hr < 0 ? 1 : 0)) return res;
    }
    return res;
}

K2Result k2_vanishes_mod_p(const FqtGround& g, const RationalFunction& x,
                           const RationalFunction& y, std::uint64_t p,
                           const FactorBudget& budget) {
    if (x.is_zero() || y.is_zero()) throw std::domain_error("symbol of zero");
    if (p == g.characteristic())
        throw std::invalid_argument("p equals the ground characteristic");
    K2Result res;
    auto sup_x = g.support(x, budget);
    auto sup_y = g.support(y, budget);
    std::vector<FqtPlace> places = sup_x;
    for (const auto& P : sup_y) {
        bool dup = false;
        for (const auto& Q : places)
            if (g.place_eq(P, Q)) dup = true;
        if (!dup) places.push_back(P);
    }
    std::sort(places.begin(), places.end(), [](const FqtPlace& a, const FqtPlace& b) {
        if (a.infinity != b.infinity) return b.infinity;  // finite first
        if (a.infinity) return false;
        if (a.pi.degree() != b.pi.degree()) return a.pi.degree() < b.pi.degree();
        return a.pi.index() < b.pi.index();
    });
    for (const auto& P : places) {
        auto rd = g.residue_data(P);
        FqElem t = tame_symbol(g, x, y, P, rd);
        std::uint64_t e = residue_class_exponent(rd.k, t, p);
        res.places_checked.push_back(SymbolAtPlace{g.place_text(P), to_string(t), e});
        if (e != 0) {
            res.vanishes = false;
            res.witness = res.places_checked.back();
            return res;
        }
    }
    return res;
}

bool weil_reciprocity_check(const FqtGround& g, const RationalFunction& f,
                            const RationalFunction& h) {
    if (f.is_zero() || h.is_zero()) throw std::domain_error("symbol of zero");
    std::vector<FqtPlace> places = g.support(f);
    for (const auto& P : g.support(h)) {
        bool dup = false;
        for (const auto& Q : places)
            if (g.place_eq(P, Q)) dup = true;
        if (!dup) places.push_back(P);
    }
    bool have_inf = false;
    for (const auto& P : places)
        if (P.infinity) have_inf = true;
    if (!have_inf) places.push_back(FqtPlace{true, Poly()});
    FqElem prod = g.base()->one();
    for (const auto& P : places) {
        auto rd = g.residue_data(P);
        prod = prod * g.norm_to_base(tame_symbol(g, f, h, P, rd), rd);
    }
    return prod.is_one();
}

}  // namespace valforge
