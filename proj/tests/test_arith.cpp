#include "doctest.h"

#include <random>
#include <set>
#include <vector>

#include "valforge/finite_field.hpp"
#include "valforge/int_factor.hpp"
#include "valforge/integers.hpp"
#include "valforge/poly.hpp"
#include "valforge/poly_factor.hpp"
#include "valforge/rational.hpp"

using namespace valforge;

namespace {

std::vector<std::int64_t> prime_powers_upto(std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t ell : primes_upto(bound))
        for (std::int64_t q = ell; q <= bound; q *= ell) out.push_back(q);
    std::sort(out.begin(), out.end());
    return out;
}

FqElem random_nonzero(const FqFieldPtr& k, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dist(1, k->size() - 1);
    return k->from_index(dist(rng));
}

FqElem random_any(const FqFieldPtr& k, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dist(0, k->size() - 1);
    return k->from_index(dist(rng));
}

}  // namespace

TEST_CASE("finite field axioms hold on random samples") {
    std::mt19937_64 rng(7);
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 13, 25, 27, 49, 121}) {
        CAPTURE(q);
        auto k = FqField::make_from_size(static_cast<std::uint64_t>(q));
        REQUIRE(k->size() == q);
        for (int trial = 0; trial < 1000; ++trial) {
            FqElem a = random_any(k, rng), b = random_any(k, rng), c = random_any(k, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + k->neg(a) == k->zero());
        }
        for (int trial = 0; trial < 1000; ++trial) {
            FqElem x = random_nonzero(k, rng);
            REQUIRE(x * k->inv(x) == k->one());
        }
        // Frobenius is additive in characteristic ell
        Integer ell(k->characteristic());
        for (int trial = 0; trial < 200; ++trial) {
            FqElem a = random_any(k, rng), b = random_any(k, rng);
            REQUIRE(k->pow(a + b, ell) == k->pow(a, ell) + k->pow(b, ell));
        }
    }
}

TEST_CASE("smallest generator really is smallest, with full order") {
    for (std::int64_t q : {3, 4, 5, 7, 9, 13, 25, 49}) {
        CAPTURE(q);
        auto k = FqField::make_from_size(static_cast<std::uint64_t>(q));
        FqElem g = k->smallest_generator();
        CHECK(k->multiplicative_order(g) == q - 1);
        for (std::int64_t i = 1; i < g.index(); ++i)
            CHECK(k->multiplicative_order(k->from_index(i)) < q - 1);
    }
    CHECK(FqField::make_from_size(5)->smallest_generator().index() == 2);
    CHECK(FqField::make_from_size(7)->smallest_generator().index() == 3);
    CHECK(FqField::make_from_size(13)->smallest_generator().index() == 2);
}

TEST_CASE("is_pth_power agrees with brute-force enumeration for q <= 121") {
    for (std::int64_t q : prime_powers_upto(121)) {
        auto k = FqField::make_from_size(static_cast<std::uint64_t>(q));
        for (std::uint64_t p : {2, 3, 5, 7}) {
            CAPTURE(q);
            CAPTURE(p);
            std::set<std::int64_t> powers;
            for (std::int64_t i = 1; i < q; ++i)
                powers.insert(k->pow(k->from_index(i), Integer(p)).index());
            for (std::int64_t i = 1; i < q; ++i)
                REQUIRE(k->is_pth_power(k->from_index(i), p) == (powers.count(i) > 0));
            // p-th power map is bijective when p does not divide q-1
            if ((q - 1) % static_cast<std::int64_t>(p) != 0)
                CHECK(powers.size() == static_cast<size_t>(q - 1));
        }
    }
}

TEST_CASE("integer factorization: unit sign and ascending prime powers") {
    auto f1 = factor_integer(Integer(1));
    CHECK(f1.sign == 1);
    CHECK(f1.factors.empty());

    auto fm50 = factor_integer(Integer(-50));
    CHECK(fm50.sign == -1);
    REQUIRE(fm50.factors.size() == 2);
    CHECK(fm50.factors[0] == std::pair<Integer, int>(Integer(2), 1));
    CHECK(fm50.factors[1] == std::pair<Integer, int>(Integer(5), 2));

    auto f9991 = factor_integer(Integer(9991));
    REQUIRE(f9991.factors.size() == 2);
    CHECK(f9991.factors[0] == std::pair<Integer, int>(Integer(97), 1));
    CHECK(f9991.factors[1] == std::pair<Integer, int>(Integer(103), 1));
}

TEST_CASE("integer factorization round-trips on random inputs") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> dist(2, 4'000'000);
    for (int trial = 0; trial < 200; ++trial) {
        std::int64_t n = dist(rng);
        if (rng() & 1) n = -n;
        auto f = factor_integer(Integer(n));
        Integer back(f.sign);
        for (auto& [prime, e] : f.factors) {
            CHECK(is_probable_prime(prime));
            back *= pow(prime, static_cast<unsigned>(e));
        }
        REQUIRE(back == n);
        for (size_t i = 1; i < f.factors.size(); ++i)
            CHECK(f.factors[i - 1].first < f.factors[i].first);
    }
}

TEST_CASE("primality spot checks and the factoring budget") {
    CHECK(is_probable_prime(Integer(2)));
    CHECK(is_probable_prime(Integer(103)));
    CHECK(is_probable_prime((Integer(1) << 31) - 1));
    CHECK_FALSE(is_probable_prime(Integer(561)));  // Carmichael
    CHECK_FALSE(is_probable_prime(Integer(1)));

    CHECK_THROWS_AS(factor_integer(pow(Integer(2), 80) + 1), BudgetExceeded);
    FactorBudget tight;
    tight.limit = 100;
    CHECK_THROWS_AS(factor_integer(Integer(101), tight), BudgetExceeded);
    CHECK_NOTHROW(factor_integer(Integer(100), tight));
}

TEST_CASE("polynomial factorization over small fields") {
    auto f7 = FqField::make_from_size(7);
    auto f5 = FqField::make_from_size(5);
    Poly t7 = Poly::variable(f7);
    Poly one7 = Poly::one(f7);

    SUBCASE("t^2 - 1 over F7 splits into t+1 and t+6") {
        auto fac = factor_poly(t7 * t7 - one7);
        CHECK(fac.unit == f7->one());
        REQUIRE(fac.factors.size() == 2);
        CHECK(to_string(fac.factors[0].first) == "t+1");
        CHECK(to_string(fac.factors[1].first) == "t+6");
        CHECK(fac.factors[0].second == 1);
        CHECK(fac.factors[1].second == 1);
    }
    SUBCASE("t^2 + 1 is irreducible over F7") {
        auto fac = factor_poly(t7 * t7 + one7);
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].first.degree() == 2);
        CHECK(fac.factors[0].second == 1);
    }
    SUBCASE("t^2 + 1 over F5 splits at the square roots of -1") {
        Poly t5 = Poly::variable(f5);
        auto fac = factor_poly(t5 * t5 + Poly::one(f5));
        REQUIRE(fac.factors.size() == 2);
        CHECK(to_string(fac.factors[0].first) == "t+2");
        CHECK(to_string(fac.factors[1].first) == "t+3");
    }
    SUBCASE("t^7 - t over F7 is the product of all monic linear factors") {
        Poly f = t7;
        for (int i = 0; i < 6; ++i) f = f * t7;
        auto fac = factor_poly(f - t7);
        REQUIRE(fac.factors.size() == 7);
        for (auto& [g, e] : fac.factors) {
            CHECK(g.degree() == 1);
            CHECK(e == 1);
        }
    }
    SUBCASE("derivative-zero input: (t^2+1)^7 over F7") {
        Poly base = t7 * t7 + one7;
        Poly f = one7;
        for (int i = 0; i < 7; ++i) f = f * base;
        auto fac = factor_poly(f);
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].first == base);
        CHECK(fac.factors[0].second == 7);
    }
}

TEST_CASE("polynomial factorization round-trips and is deterministic") {
    std::mt19937_64 rng(13);
    for (std::int64_t q : {5, 9}) {
        auto k = FqField::make_from_size(static_cast<std::uint64_t>(q));
        std::uniform_int_distribution<std::int64_t> cdist(0, q - 1);
        for (int trial = 0; trial < 120; ++trial) {
            std::vector<FqElem> coeffs;
            int deg = 1 + static_cast<int>(rng() % 6);
            for (int i = 0; i < deg; ++i) coeffs.push_back(k->from_index(cdist(rng)));
            coeffs.push_back(random_nonzero(k, rng));
            Poly f = Poly::from_coeffs(k, coeffs);
            auto fac = factor_poly(f);
            Poly back = Poly::constant(fac.unit);
            for (auto& [g, e] : fac.factors) {
                CHECK(g.is_monic());
                for (int i = 0; i < e; ++i) back = back * g;
            }
            REQUIRE(back == f);

            auto again = factor_poly(f);
            REQUIRE(again.factors.size() == fac.factors.size());
            for (size_t i = 0; i < fac.factors.size(); ++i) {
                CHECK(again.factors[i].first == fac.factors[i].first);
                CHECK(again.factors[i].second == fac.factors[i].second);
            }
        }
    }
}

TEST_CASE("literal parsing round-trips and rejects garbage") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-22/7") == Rational(-22, 7));
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK(parse_rational("17") == Rational(17));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x+1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);

    auto f7 = FqField::make_from_size(7);
    Poly f = parse_poly(f7, "t^2+3t+1");
    CHECK(to_string(f) == "t^2+3t+1");
    CHECK(f.coeff(1) == f7->from_index(3));
    CHECK(parse_poly(f7, "3") == Poly::constant(f7->from_index(3)));
    // coefficients are canonical indexes, not integers to be reduced
    CHECK_THROWS_AS(parse_poly(f7, "10"), std::invalid_argument);
}

TEST_CASE("integer helper sanity") {
    CHECK(isqrt(Integer(99)) == 9);
    CHECK(isqrt(Integer(100)) == 10);
    Integer n(360);
    CHECK(strip_factor(n, Integer(2)) == 3);
    CHECK(n == 45);
    CHECK(mod_pow(Integer(3), Integer(100), Integer(101)) == 1);  // Fermat
    CHECK(mod_pow(Integer(2), Integer(10), Integer(1000)) == 24);
}
