#include "valforge/poly_factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace valforge {

namespace {

constexpr std::uint64_t kEdfSeed = 0x76616c666f726765ull;

Poly random_poly_below(const FqFieldPtr& f, int deg_bound, std::mt19937_64& rng) {
    std::vector<FqElem> cs;
    std::uniform_int_distribution<std::int64_t> dist(0, f->size() - 1);
    for (int i = 0; i < deg_bound; ++i) cs.push_back(f->from_index(dist(rng)));
    return Poly::from_coeffs(f, std::move(cs));
}

// p-th root of g = sum a_j x^(jp): root = sum a_j^(q/p) x^j
Poly char_p_root(const Poly& g) {
    const auto& f = g.field();
    const std::int64_t p = static_cast<std::int64_t>(f->characteristic());
    std::vector<FqElem> cs;
    for (int j = 0; j * p <= g.degree(); ++j) {
        FqElem a = g.coeff(j * static_cast<int>(p));
        cs.push_back(f->pow(a, Integer(f->size() / p)));
    }
    return Poly::from_coeffs(f, std::move(cs));
}

// monic squarefree parts with multiplicities (standard char-p decomposition)
void squarefree_parts(const Poly& fin, int outer_mult,
                      std::vector<std::pair<Poly, int>>& out) {
    const std::int64_t p = static_cast<std::int64_t>(fin.field()->characteristic());
    Poly f = fin;
    Poly d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p) = (p-th root)^p
        squarefree_parts(char_p_root(f), outer_mult * static_cast<int>(p), out);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = divmod(f, c).first;
    int i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = divmod(w, y).first;
        if (!z.is_one()) out.emplace_back(z, i * outer_mult);
        ++i;
        w = y;
        c = divmod(c, y).first;
    }
    if (!c.is_one()) squarefree_parts(char_p_root(c), outer_mult * static_cast<int>(p), out);
}

// f monic squarefree -> (product of degree-d irreducibles, d) pieces
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
    const auto& k = f.field();
    const Integer q(k->size());
    std::vector<std::pair<Poly, int>> out;
    Poly x = Poly::variable(k);
    Poly h = x;
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = pow_mod(h, q, f);
        Poly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = divmod(f, g).first;
            h = pmod(h, f);
        }
    }
    // whatever remains has all factors of degree > d yet total degree < 2(d+1)
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

// split monic squarefree g, all factors of degree d
void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const auto& k = g.field();
    const Integer q(k->size());
    while (true) {
        Poly r = random_poly_below(k, g.degree(), rng);
        if (r.degree() < 1) continue;
        Poly c = gcd(r, g);
        if (c.degree() > 0 && c.degree() < g.degree()) {
            equal_degree(c, d, rng, out);
            equal_degree(divmod(g, c).first, d, rng, out);
            return;
        }
        Poly w;
        if (k->characteristic() == 2) {
            // absolute trace map over F_2
            unsigned bits = 0;
            Integer sz(k->size());
            while (sz > 1) { sz >>= 1; ++bits; }
            Poly acc = Poly::zero(k);
            Poly term = pmod(r, g);
            for (unsigned i = 0; i < bits * static_cast<unsigned>(d); ++i) {
                acc = acc + term;
                term = pmod(term * term, g);
            }
            w = acc;
        } else {
            Integer e = (pow(q, static_cast<unsigned>(d)) - 1) / 2;
            w = pow_mod(r, e, g) - Poly::one(k);
        }
        Poly h = gcd(w, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(divmod(g, h).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

PolyFactorization factor_poly(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    PolyFactorization out;
    out.unit = f.lc();
    if (f.degree() == 0) return out;

    std::mt19937_64 rng(kEdfSeed);
    std::vector<std::pair<Poly, int>> sf;
    squarefree_parts(f.monic(), 1, sf);

    std::map<std::pair<int, std::int64_t>, std::pair<Poly, int>> acc;
    for (const auto& [part, mult] : sf) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<Poly> irr;
            equal_degree(prod, d, rng, irr);
            for (const auto& g : irr) {
                auto key = std::make_pair(g.degree(), g.index());
                auto it = acc.find(key);
                if (it == acc.end()) acc.emplace(key, std::make_pair(g, mult));
                else it->second.second += mult;
            }
        }
    }
    for (auto& [key, fm] : acc) out.factors.push_back(fm);
    return out;
}

}  // namespace valforge
