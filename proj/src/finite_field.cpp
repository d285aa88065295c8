#include "valforge/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "valforge/int_factor.hpp"

namespace valforge {

namespace {

constexpr std::uint64_t kMaxExtChar = 1u << 20;   // extension fields keep ell small
constexpr std::int64_t kMaxFieldSize = std::int64_t(1) << 62;

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((unsigned __int128)a * b % m);
}

// --- dense polynomials over the prime field, little-endian coeff vectors ---

using PP = std::vector<std::uint64_t>;

void pp_trim(PP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pp_deg(const PP& a) { return static_cast<int>(a.size()) - 1; }

PP pp_mul(const PP& a, const PP& b, std::uint64_t ell) {
    if (a.empty() || b.empty()) return {};
    PP out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + mulmod_u64(a[i], b[j], ell)) % ell;
    }
    pp_trim(out);
    return out;
}

// a mod f, f monic
PP pp_mod(PP a, const PP& f, std::uint64_t ell) {
    pp_trim(a);
    const int df = pp_deg(f);
    while (pp_deg(a) >= df) {
        std::uint64_t lc = a.back();
        int shift = pp_deg(a) - df;
        for (int i = 0; i <= df; ++i) {
            std::uint64_t t = mulmod_u64(lc, f[i], ell);
            a[shift + i] = (a[shift + i] + ell - t) % ell;
        }
        pp_trim(a);
    }
    return a;
}

PP pp_powmod(PP base, Integer e, const PP& f, std::uint64_t ell) {
    PP result{1};
    base = pp_mod(std::move(base), f, ell);
    while (e > 0) {
        if ((e & 1) != 0) result = pp_mod(pp_mul(result, base, ell), f, ell);
        base = pp_mod(pp_mul(base, base, ell), f, ell);
        e >>= 1;
    }
    return result;
}

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t ell) {
    // Fermat; ell prime
    std::uint64_t r = 1, b = a % ell, e = ell - 2;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, ell);
        b = mulmod_u64(b, b, ell);
        e >>= 1;
    }
    return r;
}

PP pp_gcd(PP a, PP b, std::uint64_t ell) {
    pp_trim(a); pp_trim(b);
    while (!b.empty()) {
        // reduce a mod b after making b monic
        std::uint64_t lcinv = inv_mod_u64(b.back(), ell);
        for (auto& x : b) x = mulmod_u64(x, lcinv, ell);
        a = pp_mod(std::move(a), b, ell);
        std::swap(a, b);
    }
    if (!a.empty()) {
        std::uint64_t lcinv = inv_mod_u64(a.back(), ell);
        for (auto& x : a) x = mulmod_u64(x, lcinv, ell);
    }
    return a;
}

// Rabin test: f (monic, deg r >= 1) irreducible over F_ell iff
// x^(ell^r) = x mod f and gcd(x^(ell^(r/s)) - x, f) = 1 for every prime s | r
bool pp_irreducible(const PP& f, std::uint64_t ell) {
    const int r = pp_deg(f);
    if (r < 1) return false;
    if (r == 1) return true;
    std::vector<int> prime_divs;
    int n = r;
    for (int s = 2; s * s <= n; ++s)
        if (n % s == 0) {
            prime_divs.push_back(s);
            while (n % s == 0) n /= s;
        }
    if (n > 1) prime_divs.push_back(n);

    const PP x{0, 1};
    for (int s : prime_divs) {
        Integer e = pow(Integer(ell), static_cast<unsigned>(r / s));
        PP h = pp_powmod(x, e, f, ell);
        // h - x
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] + ell - 1) % ell;
        pp_trim(h);
        PP g = pp_gcd(h, f, ell);
        if (pp_deg(g) != 0) return false;
    }
    Integer e = pow(Integer(ell), static_cast<unsigned>(r));
    PP h = pp_powmod(x, e, f, ell);
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + ell - 1) % ell;
    pp_trim(h);
    return h.empty();
}

struct TableEntry {
    std::uint64_t ell;
    unsigned r;
    std::vector<std::uint64_t> mod;
};

// lex-smallest monic irreducible of degree r over F_ell for prime powers <= 729
// (little-endian, incl. leading coefficient); generated offline by the same
// rule lex_smallest_irreducible implements
const std::vector<TableEntry>& modulus_table() {
    static const std::vector<TableEntry> t = {
        {2u, 2u, {1u, 1u, 1u}},
        {2u, 3u, {1u, 1u, 0u, 1u}},
        {2u, 4u, {1u, 1u, 0u, 0u, 1u}},
        {2u, 5u, {1u, 0u, 1u, 0u, 0u, 1u}},
        {2u, 6u, {1u, 1u, 0u, 0u, 0u, 0u, 1u}},
        {2u, 7u, {1u, 1u, 0u, 0u, 0u, 0u, 0u, 1u}},
        {2u, 8u, {1u, 1u, 0u, 1u, 1u, 0u, 0u, 0u, 1u}},
        {2u, 9u, {1u, 1u, 0u, 0u, 0u, 0u, 0u, 0u, 0u, 1u}},
        {3u, 2u, {1u, 0u, 1u}},
        {3u, 3u, {1u, 2u, 0u, 1u}},
        {3u, 4u, {2u, 1u, 0u, 0u, 1u}},
        {3u, 5u, {1u, 2u, 0u, 0u, 0u, 1u}},
        {3u, 6u, {2u, 1u, 0u, 0u, 0u, 0u, 1u}},
        {5u, 2u, {2u, 0u, 1u}},
        {5u, 3u, {1u, 1u, 0u, 1u}},
        {5u, 4u, {2u, 0u, 0u, 0u, 1u}},
        {7u, 2u, {1u, 0u, 1u}},
        {7u, 3u, {2u, 0u, 0u, 1u}},
        {11u, 2u, {1u, 0u, 1u}},
        {13u, 2u, {2u, 0u, 1u}},
        {17u, 2u, {3u, 0u, 1u}},
        {19u, 2u, {1u, 0u, 1u}},
        {23u, 2u, {1u, 0u, 1u}},
    };
    return t;
}

std::map<std::pair<std::uint64_t, std::vector<std::uint64_t>>, FqFieldPtr>& registry() {
    static std::map<std::pair<std::uint64_t, std::vector<std::uint64_t>>, FqFieldPtr> reg;
    return reg;
}
std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

FqField::FqField(std::uint64_t ell, unsigned r, std::vector<std::uint64_t> mod)
    : ell_(ell), r_(r), mod_(std::move(mod)) {
    Integer s = valforge::pow(Integer(ell), r);
    if (s > kMaxFieldSize) throw std::invalid_argument("field size exceeds supported range");
    size_ = to_int64(s);
}

std::vector<std::uint64_t> FqField::lex_smallest_irreducible(std::uint64_t ell, unsigned r) {
    if (!is_prime_u64(ell)) throw std::invalid_argument("characteristic must be prime");
    if (r == 1) return {0, 1};
    Integer count = valforge::pow(Integer(ell), r);
    if (count > 10'000'000) throw std::invalid_argument("modulus search space too large");
    std::int64_t n = to_int64(count);
    for (std::int64_t idx = 0; idx < n; ++idx) {
        PP f(r + 1, 0);
        std::int64_t x = idx;
        for (unsigned i = 0; i < r; ++i) { f[i] = static_cast<std::uint64_t>(x % (std::int64_t)ell); x /= (std::int64_t)ell; }
        f[r] = 1;
        if (pp_irreducible(f, ell)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FqFieldPtr FqField::with_modulus(std::uint64_t ell, std::vector<std::uint64_t> modulus) {
    if (!is_prime_u64(ell)) throw std::invalid_argument("characteristic must be prime");
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree >= 1");
    unsigned r = static_cast<unsigned>(modulus.size()) - 1;
    if (r >= 2 && ell >= kMaxExtChar)
        throw std::invalid_argument("extension fields supported only for small characteristic");
    for (auto& c : modulus) c %= ell;
    modulus.back() = 1;
    if (r >= 2 && !pp_irreducible(modulus, ell))
        throw std::invalid_argument("modulus is not irreducible");

    std::lock_guard<std::mutex> lock(registry_mutex());
    auto key = std::make_pair(ell, modulus);
    auto it = registry().find(key);
    if (it != registry().end()) return it->second;
    FqFieldPtr f(new FqField(ell, r, modulus));
    registry().emplace(std::move(key), f);
    return f;
}

FqFieldPtr FqField::make(std::uint64_t ell, unsigned r) {
    if (r == 0) throw std::invalid_argument("degree must be >= 1");
    if (r == 1) return with_modulus(ell, {0, 1});
    for (const auto& e : modulus_table())
        if (e.ell == ell && e.r == r) return with_modulus(ell, e.mod);
    return with_modulus(ell, lex_smallest_irreducible(ell, r));
}

FqFieldPtr FqField::make_from_size(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("field size must be >= 2");
    // extract ell^r
    std::uint64_t ell = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) { ell = d; break; }
    if (ell == 0) return make(q, 1);
    unsigned r = 0;
    std::uint64_t m = q;
    while (m % ell == 0) { m /= ell; ++r; }
    if (m != 1) throw std::invalid_argument("field size must be a prime power: " + std::to_string(q));
    return make(ell, r);
}

FqElem FqField::zero() const {
    return FqElem{shared_from_this(), std::vector<std::uint64_t>(r_, 0)};
}

FqElem FqField::one() const {
    std::vector<std::uint64_t> c(r_, 0);
    c[0] = 1;
    return FqElem{shared_from_this(), std::move(c)};
}

FqElem FqField::from_index(std::int64_t idx) const {
    if (idx < 0 || idx >= size_) throw std::out_of_range("element index out of range");
    std::vector<std::uint64_t> c(r_, 0);
    for (unsigned i = 0; i < r_; ++i) {
        c[i] = static_cast<std::uint64_t>(idx % (std::int64_t)ell_);
        idx /= (std::int64_t)ell_;
    }
    return FqElem{shared_from_this(), std::move(c)};
}

FqElem FqField::from_integer(const Integer& n) const {
    Integer m = n % Integer(ell_);
    if (m < 0) m += ell_;
    std::vector<std::uint64_t> c(r_, 0);
    c[0] = static_cast<std::uint64_t>(m.convert_to<std::uint64_t>());
    return FqElem{shared_from_this(), std::move(c)};
}

FqElem FqField::from_coords(std::vector<std::uint64_t> c) const {
    if (c.size() != r_) throw std::invalid_argument("coordinate vector has wrong length");
    for (auto& x : c) x %= ell_;
    return FqElem{shared_from_this(), std::move(c)};
}

namespace {
void check_same_field(const FqElem& a, const FqElem& b) {
    if (a.field.get() != b.field.get())
        throw std::invalid_argument("elements of different fields");
}
}  // namespace

FqElem FqField::add(const FqElem& a, const FqElem& b) const {
    check_same_field(a, b);
    FqElem out = a;
    for (unsigned i = 0; i < r_; ++i) out.c[i] = (a.c[i] + b.c[i]) % ell_;
    return out;
}

FqElem FqField::sub(const FqElem& a, const FqElem& b) const {
    check_same_field(a, b);
    FqElem out = a;
    for (unsigned i = 0; i < r_; ++i) out.c[i] = (a.c[i] + ell_ - b.c[i]) % ell_;
    return out;
}

FqElem FqField::neg(const FqElem& a) const {
    FqElem out = a;
    for (unsigned i = 0; i < r_; ++i) out.c[i] = (ell_ - a.c[i]) % ell_;
    return out;
}

FqElem FqField::mul(const FqElem& a, const FqElem& b) const {
    check_same_field(a, b);
    if (r_ == 1)
        return FqElem{shared_from_this(), {mulmod_u64(a.c[0], b.c[0], ell_)}};
    // convolution then reduction by the monic modulus; ell < 2^20 keeps the
    // uint64 accumulators safe
    std::vector<std::uint64_t> t(2 * r_ - 1, 0);
    for (unsigned i = 0; i < r_; ++i) {
        if (!a.c[i]) continue;
        for (unsigned j = 0; j < r_; ++j) t[i + j] += a.c[i] * b.c[j];
    }
    for (unsigned k = 2 * r_ - 2; k >= r_; --k) {
        std::uint64_t coef = t[k] % ell_;
        if (coef) {
            std::uint64_t m = ell_ - coef;  // add m*mod shifted: t[k] becomes 0 mod ell
            for (unsigned j = 0; j < r_; ++j) t[k - r_ + j] += m * mod_[j];
        }
        t[k] = 0;
    }
    std::vector<std::uint64_t> c(r_);
    for (unsigned i = 0; i < r_; ++i) c[i] = t[i] % ell_;
    return FqElem{shared_from_this(), std::move(c)};
}

FqElem FqField::pow(const FqElem& a, Integer e) const {
    if (e < 0) return pow(inv(a), -e);
    FqElem result = one();
    FqElem base = a;
    while (e > 0) {
        if ((e & 1) != 0) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FqElem FqField::inv(const FqElem& a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    return pow(a, Integer(size_) - 2);
}

bool FqField::is_pth_power(const FqElem& z, std::uint64_t p) const {
    if (z.is_zero()) return true;
    std::uint64_t g = std::uint64_t(size_ - 1) % p == 0 ? p : 1;
    if (g == 1) return true;
    return pow(z, Integer((size_ - 1) / (std::int64_t)g)).is_one();
}

std::int64_t FqField::multiplicative_order(const FqElem& z) const {
    if (z.is_zero()) throw std::domain_error("order of zero");
    std::int64_t order = size_ - 1;
    for (const auto& [prime, mult] : factor_integer(Integer(order)).factors) {
        std::int64_t pi = to_int64(prime);
        for (int i = 0; i < mult; ++i) {
            if (order % pi == 0 && pow(z, Integer(order / pi)).is_one()) order /= pi;
        }
    }
    return order;
}

FqElem FqField::smallest_generator() const {
    for (std::int64_t idx = 1; idx < size_; ++idx) {
        FqElem z = from_index(idx);
        if (multiplicative_order(z) == size_ - 1) return z;
    }
    throw std::logic_error("no generator found");  // unreachable for a field
}

bool FqElem::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](std::uint64_t x) { return x == 0; });
}

bool FqElem::is_one() const {
    if (c.empty() || c[0] != 1) return false;
    return std::all_of(c.begin() + 1, c.end(), [](std::uint64_t x) { return x == 0; });
}

std::int64_t FqElem::index() const {
    std::int64_t idx = 0;
    for (size_t i = c.size(); i-- > 0;)
        idx = idx * (std::int64_t)field->characteristic() + (std::int64_t)c[i];
    return idx;
}

bool FqElem::operator==(const FqElem& o) const {
    return field.get() == o.field.get() && c == o.c;
}

std::string to_string(const FqElem& z) { return std::to_string(z.index()); }

std::vector<FqElem> roots_by_search(const FqFieldPtr& f, const std::vector<FqElem>& coeffs) {
    if (f->size() > (std::int64_t(1) << 22))
        throw std::invalid_argument("root search field too large");
    std::vector<FqElem> roots;
    for (std::int64_t idx = 0; idx < f->size(); ++idx) {
        FqElem x = f->from_index(idx);
        FqElem acc = f->zero();
        for (size_t i = coeffs.size(); i-- > 0;) acc = f->add(f->mul(acc, x), coeffs[i]);
        if (acc.is_zero()) roots.push_back(x);
    }
    return roots;
}

}  // namespace valforge
