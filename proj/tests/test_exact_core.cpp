#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "moduli/factored.hpp"
#include "moduli/factorizer.hpp"

using namespace moduli;

namespace {

// trial-division oracle, independent of the Pollard path
FactoredInteger::Map trial_division_oracle(BigInt n) {
    FactoredInteger::Map m;
    n = abs(n);
    for (BigInt p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++m[p];
            n /= p;
        }
    if (n > 1) ++m[n];
    return m;
}

}  // namespace

TEST_CASE("factorize small examples") {
    CHECK(factorize(12).str() == "2^2 * 3");
    CHECK(factorize(-12).str() == "-2^2 * 3");
    CHECK(factorize(1).str() == "1");
    CHECK(factorize(-1).str() == "-1");

    // a prime the norm tables display as-is
    FactoredInteger f = factorize(235849);
    CHECK(f.factors().size() == 1);
    CHECK(f.exponent_of(235849) == 1);

    // 23^5, via the independent trial-division oracle
    BigInt n = pow(BigInt(23), 5);
    REQUIRE(n == 6436343);
    CHECK(factorize(n).factors() == trial_division_oracle(n));
    CHECK(factorize(n).str() == "23^5");
}

TEST_CASE("factorize rejects zero") {
    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize beyond 64 bits") {
    // constant term of the degree-4 golden polynomial
    BigInt n = parse_integer("20919104368024767633");
    FactoredInteger f = factorize(n);
    CHECK(f.str() == "3^15 * 17^3 * 23^3 * 29^3");
    CHECK(f.value() == n);
}

TEST_CASE("factorize round-trip property") {
    std::mt19937_64 rng(20260810);
    for (int i = 0; i < 200; ++i) {
        BigInt n = BigInt(rng() >> (rng() % 32)) + 1;
        if (rng() % 2) n = -n;
        FactoredInteger f = factorize(n);
        CHECK(f.value() == n);
        for (const auto& [p, e] : f.factors()) {
            CHECK(is_prime(p));
            CHECK(e >= 1);
        }
    }
    // smooth and semiprime composites
    for (int i = 0; i < 50; ++i) {
        BigInt n = 1;
        for (int j = 0; j < 6; ++j) n *= detail::small_primes()[rng() % 100];
        CHECK(factorize(n).value() == n);
        BigInt p = detail::small_primes()[50000 + rng() % 20000];
        BigInt q = detail::small_primes()[50000 + rng() % 20000];
        CHECK(factorize(p * q).value() == p * q);
    }
}

TEST_CASE("factorize multiplicativity") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        BigInt m = BigInt(rng() % 1000000) + 2;
        BigInt n = BigInt(rng() % 1000000) + 2;
        FactoredInteger fm = factorize(m), fn = factorize(n);
        CHECK((fm * fn) == factorize(m * n));
    }
}

TEST_CASE("is_prime basics") {
    CHECK(is_prime(2));
    CHECK(is_prime(235849));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(BigInt("3215031751")));  // strong pseudoprime to bases 2,3,5,7
    CHECK(is_prime(BigInt("2007246533")));        // appears in the golden quartic
}

TEST_CASE("kronecker examples and error") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) CHECK(kronecker(BigInt(rng()) - BigInt(rng()), 1) == 1);
    CHECK(kronecker(-4, 13) == 1);
    CHECK(kronecker(-4, 3) == -1);
    CHECK_THROWS_AS(kronecker(5, 0), std::domain_error);
}

TEST_CASE("kronecker agrees with square enumeration at odd primes") {
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 101L}) {
        std::vector<bool> square(p, false);
        for (long r = 0; r < p; ++r) square[(r * r) % p] = true;
        for (long a = -2 * p; a <= 2 * p; ++a) {
            int expect = (a % p == 0) ? 0 : (square[((a % p) + p) % p] ? 1 : -1);
            CHECK(kronecker(a, p) == expect);
        }
    }
}

TEST_CASE("kronecker multiplicativity in the denominator") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        long m = 2 * static_cast<long>(rng() % 200) + 1;
        long n = 2 * static_cast<long>(rng() % 200) + 1;
        long a = static_cast<long>(rng() % 2000) - 1000;
        CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
    }
}

TEST_CASE("radical examples and properties") {
    CHECK(radical(1) == 1);
    CHECK(radical(720) == 30);
    BigInt n = BigInt(2) * pow(BigInt(3), 10) * 109 * pow(BigInt(23), 5);
    CHECK(radical(n) == 15042);
    CHECK_THROWS_AS(radical(0), std::domain_error);
    CHECK_THROWS_AS(radical(-6), std::domain_error);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        BigInt m = BigInt(rng() % 100000) + 1;
        BigInt r = radical(m);
        CHECK(m % r == 0);
        // squarefree: every exponent in its factorization is 1
        FactoredInteger fr = factorize(r);
        for (const auto& [p, e] : fr.factors()) CHECK(e == 1);
    }
}

TEST_CASE("factorizer is deterministic under a fixed seed") {
    BigInt n = BigInt("612889217047960533") * 7;  // arbitrary hard-ish composite
    CHECK(factorize(n, 42).str() == factorize(n, 42).str());
}

TEST_CASE("factored rational reduces eagerly") {
    FactoredRational q(factorize(360), factorize(48));
    CHECK(q.value() == BigRat(15, 2));
    CHECK(q.num().str() == "3 * 5");
    CHECK(q.den().str() == "2");

    FactoredRational neg(factorize(5), factorize(-10));
    CHECK(neg.value() == BigRat(-1, 2));
    CHECK(neg.den().sign() == 1);
}

TEST_CASE("parse_factored round trip") {
    CHECK(parse_factored("3^12 * 7^8 * 19^4 * 23^2").value() ==
          pow(BigInt(3), 12) * pow(BigInt(7), 8) * pow(BigInt(19), 4) * pow(BigInt(23), 2));
    CHECK(parse_factored("-2 * 5").value() == -10);
    CHECK(parse_factored("235849").value() == 235849);
    CHECK(parse_factored("1").value() == 1);
    CHECK(parse_factored("12").value() == 12);  // composite base accepted and refactored
    CHECK(parse_factored("12").str() == "2^2 * 3");
    CHECK_THROWS_AS(parse_factored("2 +"), std::invalid_argument);
}
