#include "valforge/int_factor.hpp"

#include <algorithm>
#include <map>

namespace valforge {

namespace {

constexpr std::int64_t kTrialBound = 100000;

bool miller_rabin_witness(const Integer& a, const Integer& n, const Integer& d, int s) {
    Integer x = mod_pow(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

// deterministic below 3,317,044,064,679,887,385,961,981
const std::int64_t kMRBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

Integer brent_rho(const Integer& n) {
    // n odd composite, no factors below kTrialBound; deterministic sweep over c
    for (Integer c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        Integer saved_y;
        std::int64_t power = 1, lam = 0;
        while (d == 1) {
            if (lam == power) { x = y; power *= 2; lam = 0; }
            y = (y * y + c) % n;
            ++lam;
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_into(Integer m, std::map<Integer, int>& out) {
    if (m == 1) return;
    if (is_probable_prime(m)) { out[m] += 1; return; }
    Integer d = brent_rho(m);
    factor_into(d, out);
    factor_into(m / d, out);
}

}  // namespace

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    for (std::int64_t p : kMRBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Integer d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (std::int64_t a : kMRBases)
        if (miller_rabin_witness(Integer(a), n, d, s)) return false;
    return true;
}

IntFactorization factor_integer(const Integer& n, const FactorBudget& budget) {
    if (n == 0) throw std::invalid_argument("cannot factor zero");
    if (abs(n) > budget.limit) throw BudgetExceeded("factorization budget exceeded");

    IntFactorization out;
    out.sign = n < 0 ? -1 : 1;
    Integer m = abs(n);

    std::map<Integer, int> acc;
    for (std::int64_t p = 2; p <= kTrialBound && Integer(p) * p <= m; p == 2 ? p = 3 : p += 2) {
        int k = 0;
        while (m % p == 0) { m /= p; ++k; }
        if (k) acc[Integer(p)] = k;
    }
    if (m > 1) {
        if (m <= Integer(kTrialBound) * kTrialBound) acc[m] += 1;  // below trial bound squared: prime
        else factor_into(m, acc);
    }
    out.factors.assign(acc.begin(), acc.end());
    return out;
}

std::vector<std::int64_t> primes_upto(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return out;
}

std::vector<std::int64_t> first_n_primes(int n) {
    std::vector<std::int64_t> out;
    std::int64_t bound = 16;
    while (true) {
        out = primes_upto(bound);
        if (static_cast<int>(out.size()) >= n) { out.resize(n); return out; }
        bound *= 2;
    }
}

}  // namespace valforge
