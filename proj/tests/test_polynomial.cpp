#include <catch2/catch_amalgamated.hpp>

#include "moduli/polynomial.hpp"

using namespace moduli;

TEST_CASE("polynomial arithmetic") {
    PolyQ f({BigRat(1), BigRat(2), BigRat(1)});  // 1 + 2x + x^2
    PolyQ g({BigRat(-1), BigRat(1)});            // x - 1
    CHECK((f * g).degree() == 3);
    CHECK((f * g)(BigRat(2)) == f(BigRat(2)) * g(BigRat(2)));
    CHECK((f + g)(BigRat(3)) == f(BigRat(3)) + g(BigRat(3)));
    CHECK(f.derivative() == PolyQ({BigRat(2), BigRat(2)}));
    CHECK(PolyQ::zero().degree() == -1);
    CHECK(f.shifted(BigRat(1)) == PolyQ({BigRat(4), BigRat(4), BigRat(1)}));  // (x+1+1)^2
}

TEST_CASE("division and gcd") {
    PolyQ f({BigRat(-1), BigRat(0), BigRat(0), BigRat(0), BigRat(1)});  // x^4 - 1
    PolyQ g({BigRat(-1), BigRat(0), BigRat(1)});                        // x^2 - 1
    auto [q, r] = divrem(f, g);
    CHECK(r.is_zero());
    CHECK(q == PolyQ({BigRat(1), BigRat(0), BigRat(1)}));
    CHECK(gcd(f, g) == g);
    CHECK_THROWS_AS(divrem(f, PolyQ::zero()), std::domain_error);
}

TEST_CASE("resultant and discriminant") {
    // disc(x^2 + bx + c) = b^2 - 4c
    PolyQ f({BigRat(-3), BigRat(-1), BigRat(1)});
    CHECK(discriminant(f) == BigRat(13));
    // disc(x^3 + px + q) = -4p^3 - 27q^2
    PolyQ g({BigRat(2), BigRat(-1), BigRat(0), BigRat(1)});
    CHECK(discriminant(g) == BigRat(-4 * (-1) * (-1) * (-1) - 27 * 4));
    // resultant of coprime polynomials is nonzero; shared root gives zero
    PolyZ a({BigInt(-1), BigInt(1)});             // x - 1
    PolyZ b({BigInt(-2), BigInt(1)});             // x - 2
    CHECK(resultant(a, b) == -1);                 // res(x-1, x-2) = g(1) = -1
    CHECK(resultant(a * b, a) == 0);
    // res(f, g) = lc(g)^deg f * prod f(roots of g): res(x^2-2, x^2-3) = (2-3)^2 = 1
    PolyZ p({BigInt(-2), BigInt(0), BigInt(1)});
    PolyZ qq({BigInt(-3), BigInt(0), BigInt(1)});
    CHECK(resultant(p, qq) == 1);
}

TEST_CASE("integer/rational conversions") {
    PolyQ f({BigRat(1, 6), BigRat(3, 4), BigRat(1)});
    BigInt den;
    PolyZ z = to_integer_poly(f, &den);
    CHECK(den == 12);
    CHECK(z == PolyZ({BigInt(2), BigInt(9), BigInt(12)}));
    CHECK(content(z) == 1);
    CHECK(primitive_part(PolyZ({BigInt(-4), BigInt(-8)})) == PolyZ({BigInt(1), BigInt(2)}));
}

TEST_CASE("printing") {
    PolyQ f({BigRat(parse_integer("20919104368024767633")), BigRat(parse_integer("109873509788637459")),
             BigRat(parse_integer("-429878960946")), BigRat(parse_integer("331531596")), BigRat(1)});
    CHECK(to_string(f) ==
          "x^4 + 331531596*x^3 - 429878960946*x^2 + 109873509788637459*x + 20919104368024767633");
    CHECK(to_string(PolyQ({BigRat(1, 2), BigRat(-1)}), "t") == "-t + 1/2");
    CHECK(to_string(PolyQ::zero()) == "0");
}
