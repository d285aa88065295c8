#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "valforge/integers.hpp"

namespace valforge {

struct FactorBudget {
    // refuse inputs with |n| above this; the default covers desk-scale work
    Integer limit = pow(Integer(2), 80);
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// unit sign and prime factorization with multiplicities, primes ascending;
// factor_integer(1) = {+1, {}}, factor_integer(-50) = {-1, {(2,1),(5,2)}}
struct IntFactorization {
    int sign = 1;
    std::vector<std::pair<Integer, int>> factors;
};

// deterministic for |n| within the default budget (Miller-Rabin with the
// 12-prime base set, valid below 3.3e24)
bool is_probable_prime(const Integer& n);

// n != 0; trial division then Brent's rho, deterministic parameters
IntFactorization factor_integer(const Integer& n, const FactorBudget& budget = {});

std::vector<std::int64_t> primes_upto(std::int64_t bound);
std::vector<std::int64_t> first_n_primes(int n);

}  // namespace valforge
