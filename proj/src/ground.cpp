#include "valforge/ground.hpp"

#include <algorithm>
#include <stdexcept>

#include "valforge/poly_factor.hpp"

namespace valforge {

// ---------------------------------------------------------------------------
// QGround
// ---------------------------------------------------------------------------

QGround::Elem QGround::inv(const Elem& x) const {
    if (x == 0) throw std::domain_error("inverse of zero");
    return Rational(1) / x;
}

std::int64_t QGround::valuation(const Elem& x, const PlaceT& P) const {
    if (P.real) throw std::invalid_argument("archimedean place has no discrete valuation");
    if (x == 0) throw std::domain_error("valuation of zero");
    Integer n = num(x), d = den(x);
    return strip_factor(n, P.prime) - strip_factor(d, P.prime);
}

QGround::ResidueData QGround::residue_data(const PlaceT& P) const {
    if (P.real) throw std::invalid_argument("archimedean place has no residue field");
    std::uint64_t ell = static_cast<std::uint64_t>(to_int64(P.prime));
    return {FqField::make(ell, 1), P.prime};
}

FqElem QGround::angular(const Elem& x, const PlaceT& P, const ResidueData& rd) const {
    if (P.real) throw std::invalid_argument("archimedean place has no angular component");
    if (x == 0) throw std::domain_error("angular component of zero");
    Integer n = num(x), d = den(x);
    strip_factor(n, P.prime);
    strip_factor(d, P.prime);
    return rd.k->from_integer(n) * rd.k->inv(rd.k->from_integer(d));
}

std::vector<QPlace> QGround::support(const Elem& x, const FactorBudget& budget) const {
    if (x == 0) throw std::domain_error("support of zero");
    auto fn = factor_integer(num(x), budget);
    auto fd = factor_integer(den(x), budget);
    std::vector<Integer> primes;
    for (const auto& [p, e] : fn.factors) primes.push_back(p);
    for (const auto& [p, e] : fd.factors) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    std::vector<QPlace> out;
    for (const auto& p : primes) out.push_back({false, p});
    return out;
}

bool QGround::is_pth_power(const Elem& x, std::uint64_t p, const FactorBudget& budget) const {
    if (x == 0) throw std::domain_error("power class of zero");
    if (p == 2 && x < 0) return false;
    auto fn = factor_integer(num(x), budget);
    auto fd = factor_integer(den(x), budget);
    for (const auto& [q, e] : fn.factors)
        if (e % static_cast<int>(p) != 0) return false;
    for (const auto& [q, e] : fd.factors)
        if (e % static_cast<int>(p) != 0) return false;
    return true;
}

bool QGround::place_eq(const PlaceT& a, const PlaceT& b) const {
    if (a.real != b.real) return false;
    return a.real || a.prime == b.prime;
}

std::string QGround::place_text(const PlaceT& P) const {
    return P.real ? "inf" : P.prime.str();
}

QPlace QGround::parse_place(const std::string& s) const {
    if (s == "inf") return {true, 0};
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad place: " + s);
    Integer p(s);
    if (!is_probable_prime(p)) throw std::invalid_argument("not a prime: " + s);
    return {false, p};
}

QGround::Enumerator::Enumerator(std::int64_t height_bound) : bound_(height_bound) {}

void QGround::Enumerator::refill() {
    batch_.clear();
    pos_ = 0;
    ++h_;
    if (h_ > bound_) return;
    std::vector<Rational> pos;
    if (h_ == 1) {
        pos.emplace_back(1);
    } else {
        for (std::int64_t d = 1; d < h_; ++d)
            if (boost::multiprecision::gcd(Integer(h_), Integer(d)) == 1)
                pos.push_back(Rational(h_, d));
        for (std::int64_t n = 1; n < h_; ++n)
            if (boost::multiprecision::gcd(Integer(n), Integer(h_)) == 1)
                pos.push_back(Rational(n, h_));
    }
    for (const auto& r : pos) batch_.push_back(r);
    for (const auto& r : pos) batch_.push_back(-r);
}

std::optional<Rational> QGround::Enumerator::next() {
    while (pos_ >= batch_.size()) {
        if (h_ >= bound_) return std::nullopt;
        refill();
    }
    return batch_[pos_++];
}

std::pair<Rational, QPlace> QGround::PrimeEnumerator::next() {
    Integer p = last_ + 1;
    while (!is_probable_prime(p)) ++p;
    last_ = p;
    return {Rational(p), QPlace{false, p}};
}

Rational QGround::random_element(std::mt19937_64& rng, std::int64_t height_bound) const {
    std::uniform_int_distribution<std::int64_t> dist(1, height_bound);
    Rational r(dist(rng), dist(rng));
    return (rng() & 1) ? -r : r;
}

// ---------------------------------------------------------------------------
// FqtGround
// ---------------------------------------------------------------------------

FqtGround::FqtGround(FqFieldPtr base) : base_(std::move(base)) {
    if (!base_) throw std::invalid_argument("null base field");
}

std::int64_t FqtGround::valuation(const Elem& x, const PlaceT& P) const {
    if (x.is_zero()) throw std::domain_error("valuation of zero");
    if (P.infinity) return x.den().degree() - x.num().degree();
    return valuation_of_poly(x.num(), P.pi) - valuation_of_poly(x.den(), P.pi);
}

FqtGround::ResidueData FqtGround::residue_data(const PlaceT& P) const {
    ResidueData rd;
    if (P.infinity) {
        rd.k = base_;
        rd.rep = ResidueData::Rep::at_infinity;
        return rd;
    }
    rd.pi = P.pi;
    int d = P.pi.degree();
    if (d == 1) {
        rd.k = base_;
        rd.rep = ResidueData::Rep::base_eval;
        rd.eval_point = -P.pi.coeff(0);
        return rd;
    }
    unsigned s = base_->degree();
    if (s == 1) {
        std::vector<std::uint64_t> mod(static_cast<size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) mod[static_cast<size_t>(i)] = P.pi.coeff(i).c[0];
        rd.k = FqField::with_modulus(base_->characteristic(), mod);
        rd.rep = ResidueData::Rep::direct_mod;
        return rd;
    }
    // extension base field: flatten k(P) to one absolute extension so that
    // arithmetic stays single-level
    unsigned rk = s * static_cast<unsigned>(d);
    rd.k = FqField::make(base_->characteristic(), rk);
    rd.rep = ResidueData::Rep::flattened;
    const auto& bm = base_->modulus();
    std::vector<FqElem> bm_in_k;
    bm_in_k.reserve(bm.size());
    for (std::uint64_t c : bm) bm_in_k.push_back(rd.k->from_integer(Integer(c)));
    auto base_roots = roots_by_search(rd.k, bm_in_k);
    if (base_roots.empty()) throw std::logic_error("no embedding root found");
    FqElem g = base_roots.front();
    // ε over all base elements, indexed by canonical element index
    rd.eps.reserve(static_cast<size_t>(base_->size()));
    for (std::int64_t i = 0; i < base_->size(); ++i) {
        FqElem c = base_->from_index(i);
        FqElem acc = rd.k->zero();
        FqElem gp = rd.k->one();
        for (unsigned j = 0; j < s; ++j) {
            acc = acc + rd.k->from_integer(Integer(c.c[j])) * gp;
            gp = gp * g;
        }
        rd.eps.push_back(acc);
        rd.eps_inv[acc.index()] = i;
    }
    std::vector<FqElem> pi_in_k;
    pi_in_k.reserve(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) pi_in_k.push_back(rd.eps[static_cast<size_t>(P.pi.coeff(i).index())]);
    auto tau_roots = roots_by_search(rd.k, pi_in_k);
    if (tau_roots.empty()) throw std::logic_error("no root of the place polynomial found");
    FqElem tau = tau_roots.front();
    rd.tau_pow.resize(static_cast<size_t>(d));
    rd.tau_pow[0] = rd.k->one();
    for (int i = 1; i < d; ++i) rd.tau_pow[static_cast<size_t>(i)] = rd.tau_pow[static_cast<size_t>(i - 1)] * tau;
    return rd;
}

FqElem FqtGround::reduce_poly(const Poly& f, const ResidueData& rd) const {
    switch (rd.rep) {
        case ResidueData::Rep::base_eval:
            return f.eval(rd.eval_point);
        case ResidueData::Rep::direct_mod: {
            Poly r = pmod(f, rd.pi);
            std::vector<std::uint64_t> coords(static_cast<size_t>(rd.pi.degree()), 0);
            for (int i = 0; i <= r.degree(); ++i) coords[static_cast<size_t>(i)] = r.coeff(i).c[0];
            return rd.k->from_coords(coords);
        }
        case ResidueData::Rep::flattened: {
            Poly r = pmod(f, rd.pi);
            FqElem acc = rd.k->zero();
            for (int i = 0; i <= r.degree(); ++i)
                acc = acc + rd.eps[static_cast<size_t>(r.coeff(i).index())] * rd.tau_pow[static_cast<size_t>(i)];
            return acc;
        }
        case ResidueData::Rep::at_infinity:
            throw std::logic_error("reduce_poly at infinity");
    }
    throw std::logic_error("unreachable");
}

FqElem FqtGround::angular(const Elem& x, const PlaceT& P, const ResidueData& rd) const {
    if (x.is_zero()) throw std::domain_error("angular component of zero");
    if (P.infinity) return x.num().lc() * rd.k->inv(x.den().lc());
    Poly n = x.num(), d = x.den();
    auto strip = [&](Poly& f) {
        int v = valuation_of_poly(f, P.pi);
        for (int i = 0; i < v; ++i) f = divmod(f, P.pi).first;
    };
    strip(n);
    strip(d);
    return reduce_poly(n, rd) * rd.k->inv(reduce_poly(d, rd));
}

FqElem FqtGround::norm_to_base(const FqElem& z, const ResidueData& rd) const {
    if (rd.rep == ResidueData::Rep::base_eval || rd.rep == ResidueData::Rep::at_infinity) return z;
    if (z.is_zero()) return base_->zero();
    Integer e = (Integer(rd.k->size()) - 1) / (Integer(base_->size()) - 1);
    FqElem w = rd.k->pow(z, e);
    if (rd.rep == ResidueData::Rep::direct_mod) {
        return base_->from_coords({w.c[0]});
    }
    auto it = rd.eps_inv.find(w.index());
    if (it == rd.eps_inv.end()) throw std::logic_error("norm landed outside the embedded base field");
    return base_->from_index(it->second);
}

std::vector<FqtPlace> FqtGround::support(const Elem& x, const FactorBudget&) const {
    if (x.is_zero()) throw std::domain_error("support of zero");
    auto fn = factor_poly(x.num());
    auto fd = factor_poly(x.den());
    std::vector<Poly> pis;
    for (const auto& [pi, e] : fn.factors) pis.push_back(pi);
    for (const auto& [pi, e] : fd.factors) pis.push_back(pi);
    std::sort(pis.begin(), pis.end(), [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.index() < b.index();
    });
    std::vector<FqtPlace> out;
    for (const auto& pi : pis) out.push_back({false, pi});
    if (x.num().degree() != x.den().degree()) out.push_back({true, Poly()});
    return out;
}

bool FqtGround::is_pth_power(const Elem& x, std::uint64_t p, const FactorBudget&) const {
    if (x.is_zero()) throw std::domain_error("power class of zero");
    if (p == characteristic()) {
        // x in F_q(t)^p iff num and den are p-th powers up to a unit p-th power;
        // the Frobenius is bijective on F_q, so only exponents matter
        auto fn = factor_poly(x.num());
        auto fd = factor_poly(x.den());
        for (const auto& [q, e] : fn.factors)
            if (e % static_cast<int>(p) != 0) return false;
        for (const auto& [q, e] : fd.factors)
            if (e % static_cast<int>(p) != 0) return false;
        return true;
    }
    auto fn = factor_poly(x.num());
    auto fd = factor_poly(x.den());
    for (const auto& [q, e] : fn.factors)
        if (e % static_cast<int>(p) != 0) return false;
    for (const auto& [q, e] : fd.factors)
        if (e % static_cast<int>(p) != 0) return false;
    return base_->is_pth_power(fn.unit * base_->inv(fd.unit), p);
}

bool FqtGround::place_eq(const PlaceT& a, const PlaceT& b) const {
    if (a.infinity != b.infinity) return false;
    return a.infinity || a.pi == b.pi;
}

std::string FqtGround::place_text(const PlaceT& P) const {
    return P.infinity ? "inf" : to_string(P.pi);
}

FqtPlace FqtGround::parse_place(const std::string& s) const {
    if (s == "inf") return {true, Poly()};
    Poly pi = parse_poly(base_, s);
    if (pi.degree() < 1 || !pi.is_monic()) throw std::invalid_argument("place polynomial must be monic of positive degree: " + s);
    if (!is_irreducible(pi)) throw std::invalid_argument("place polynomial is reducible: " + s);
    return {false, pi};
}

FqtGround::Enumerator::Enumerator(FqFieldPtr base, std::int64_t height_bound)
    : base_(std::move(base)), bound_(height_bound), q_(base_->size()) {
    h_ = -1;
}

// move den_ to the next monic denominator for the current height, returns false when exhausted
bool FqtGround::Enumerator::advance_den() {
    std::int64_t qd = 1;
    for (int i = 0; i < den_deg_; ++i) qd *= q_;
    ++den_idx_;
    while (true) {
        if (den_idx_ >= 2 * qd) {  // monic degree-d indices live in [q^d, 2q^d)
            ++den_deg_;
            if (den_deg_ > h_) return false;
            qd *= q_;
            den_idx_ = qd;
        }
        den_ = Poly::from_index(base_, den_idx_);
        den_valid_ = true;
        // numerator range for this denominator
        std::int64_t lo = 1;
        if (den_deg_ < h_) {
            lo = 1;
            for (int i = 0; i < h_; ++i) lo *= q_;  // numerator must realize the height
        }
        num_idx_ = lo - 1;
        return true;
    }
}

std::optional<RationalFunction> FqtGround::Enumerator::next() {
    while (true) {
        if (!den_valid_) {
            ++h_;
            if (h_ > bound_) return std::nullopt;
            den_deg_ = 0;
            den_idx_ = 0;  // advance_den will move to index 1 (the constant 1)
            if (!advance_den()) continue;
        }
        std::int64_t hi = 1;
        for (int i = 0; i <= h_; ++i) hi *= q_;
        ++num_idx_;
        while (num_idx_ < hi) {
            Poly num = Poly::from_index(base_, num_idx_);
            if (std::max(num.degree(), den_.degree()) == h_ &&
                gcd(num, den_).is_one()) {
                return RationalFunction(num, den_);
            }
            ++num_idx_;
        }
        if (!advance_den()) den_valid_ = false;
    }
}

std::pair<RationalFunction, FqtPlace> FqtGround::PrimeEnumerator::next() {
    while (true) {
        ++idx_;
        Poly f = Poly::from_index(base_, idx_);
        if (f.degree() < 1 || !f.is_monic()) continue;
        if (is_irreducible(f)) return {RationalFunction::from_poly(f), FqtPlace{false, f}};
    }
}

RationalFunction FqtGround::random_element(std::mt19937_64& rng, std::int64_t height_bound) const {
    auto random_poly = [&](int deg_bound, bool monic) {
        std::uniform_int_distribution<int> ddeg(0, deg_bound);
        int d = ddeg(rng);
        std::vector<FqElem> cs(static_cast<size_t>(d) + 1, base_->zero());
        std::uniform_int_distribution<std::int64_t> dc(0, base_->size() - 1);
        for (int i = 0; i < d; ++i) cs[static_cast<size_t>(i)] = base_->from_index(dc(rng));
        if (monic) {
            cs[static_cast<size_t>(d)] = base_->one();
        } else {
            std::uniform_int_distribution<std::int64_t> dl(1, base_->size() - 1);
            cs[static_cast<size_t>(d)] = base_->from_index(dl(rng));
        }
        return Poly::from_coeffs(base_, cs);
    };
    int b = static_cast<int>(std::min<std::int64_t>(height_bound, 64));
    return RationalFunction(random_poly(b, false), random_poly(b, true));
}

std::pair<std::string, std::string> split_place_text(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected <field>:<place>, got: " + s);
    return {s.substr(0, colon), s.substr(colon + 1)};
}

}  // namespace valforge
