#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "moduli/gross_zagier.hpp"

using namespace moduli;

TEST_CASE("epsilon at primes dividing d1") {
    CHECK(epsilon(3, 39, 4) == -1);   // 3 | 39, kronecker(-4, 3) = -1
    CHECK(epsilon(13, 39, 4) == 1);   // 13 | 39, kronecker(-4, 13) = +1
    CHECK(epsilon(2, 39, 4) == 1);    // 2 | 4, kronecker(-39, 2) = +1
}

TEST_CASE("epsilon undefined where the Kronecker condition fails") {
    // (39*4 / 5) = +1, so the character is outside its defining domain
    REQUIRE(kronecker(39 * 4, 5) == 1);
    CHECK_THROWS_AS(epsilon(5, 39, 4), EpsilonUndefinedError);
}

TEST_CASE("epsilon_extend") {
    CHECK(epsilon_extend(1, 39, 4) == 1);
    CHECK(epsilon_extend(9, 39, 4) == 1);       // epsilon(3)^2
    CHECK(epsilon_extend(39, 39, 4) == -1);     // (-1) * (+1)
    CHECK_THROWS_AS(epsilon_extend(5, 39, 4), EpsilonUndefinedError);
    try {
        epsilon_extend(15, 39, 4);
        FAIL("expected EpsilonUndefinedError");
    } catch (const EpsilonUndefinedError& e) {
        CHECK(e.prime == 5);  // error names the offending prime
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(gz_norm(39, 3), std::domain_error);   // gcd(39,3) = 3
    CHECK_THROWS_AS(gz_norm(5, 4), std::domain_error);    // -5 is not a discriminant
    CHECK_THROWS_AS(epsilon(3, 39, 39), std::domain_error);
}

TEST_CASE("the five golden norms for d = 39") {
    CHECK(gz_norm(39, 4).norm.str() == "3^12 * 7^8 * 19^4 * 23^2");
    CHECK(gz_norm(39, 8).norm.str() == "7^8 * 13^2 * 23^2 * 29 * 31^2 * 37^2 * 53");
    CHECK(gz_norm(39, 7).norm.str() == "3^12 * 7^4 * 13^2 * 17^3 * 19^2 * 31^2");
    CHECK(gz_norm(39, 11).norm.str() == "7^8 * 13^2 * 17^3 * 19^2 * 29^2 * 101 * 107");
    CHECK(gz_norm(39, 19).norm.str() == "3^12 * 13^2 * 19^2 * 29 * 31^2 * 37^2 * 53 * 113 * 173 * 179");
}

TEST_CASE("exponent bookkeeping") {
    GZResult r = gz_norm(39, 4);
    CHECK(r.exponent_applied == BigRat(1));            // w = 2, 4: scale 2*4/8
    CHECK(r.norm.value() == r.product.value());
    GZResult r2 = gz_norm(39, 8);
    CHECK(r2.exponent_applied == BigRat(1, 2));        // w = 2, 2: the product is the square
    CHECK(r2.product.value() == r2.norm.value() * r2.norm.value());
}

TEST_CASE("norms against rational singular moduli match direct differences") {
    // both class numbers 1: the norm is literally |j1 - j2|
    CHECK(gz_norm(4, 3).norm.value() == 1728);
    CHECK(gz_norm(8, 3).norm.value() == 8000);
    CHECK(gz_norm(7, 3).norm.value() == 3375);
    CHECK(gz_norm(11, 3).norm.value() == 32768);
    CHECK(gz_norm(4, 7).norm.value() == 1728 + 3375);
    CHECK(gz_norm(8, 7).norm.value() == 8000 + 3375);
    CHECK(gz_norm(19, 4).norm.value() == 884736 + 1728);
    CHECK(gz_norm(19, 8).norm.value() == 884736 + 8000);
}

TEST_CASE("gz_norm symmetry") {
    std::vector<std::pair<long long, long long>> pairs;
    for (long long d1 : {3, 4, 7, 8, 11, 19, 23, 31, 39, 43, 52, 55})
        for (long long d2 : {3, 4, 7, 8, 11, 19, 23, 31})
            if (d1 > d2 && is_valid_discriminant(d1) && is_valid_discriminant(d2) && std::gcd(d1, d2) == 1)
                pairs.emplace_back(d1, d2);
    REQUIRE(pairs.size() >= 20);
    for (auto [d1, d2] : pairs) {
        CAPTURE(d1, d2);
        CHECK(gz_norm(d1, d2).norm == gz_norm(d2, d1).norm);
    }
}

TEST_CASE("norm primes admit a canonical epsilon value") {
    // Primes dividing the norm either divide d1*d2 (one branch) or have both
    // branches agree; the disagreeing case never shows up.
    for (auto [d1, d2] : std::vector<std::pair<long long, long long>>{{39, 4}, {39, 8}, {23, 4}, {31, 8}}) {
        GZResult r = gz_norm(d1, d2);
        for (const auto& [p, e] : r.norm.factors()) {
            CAPTURE(d1, d2, p.get_str());
            if (to_bigint(d1) * to_bigint(d2) % p != 0)
                CHECK(kronecker(to_bigint(-d1), p) == kronecker(to_bigint(-d2), p));
        }
    }
}
