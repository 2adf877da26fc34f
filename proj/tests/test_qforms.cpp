#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "moduli/qforms.hpp"

using namespace moduli;

namespace {

// brute-force oracle: scan the whole (a, b) box allowed by |b| <= a <= sqrt(d/3)
long long naive_class_number(long long d) {
    long long count = 0;
    for (long long a = 1; 3 * a * a <= d; ++a) {
        for (long long b = -a; b <= a; ++b) {
            long long num = b * b + d;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if ((std::abs(b) == a || a == c) && b < 0) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            ++count;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("class numbers from the worked example") {
    CHECK(class_number(39).class_number == 4);
    CHECK(class_number(23).class_number == 3);
    QuadraticOrderData d4 = class_number(4);
    CHECK(d4.class_number == 1);
    CHECK(d4.unit_count == 4);
}

TEST_CASE("the nine rational singular moduli discriminants have h = 1") {
    for (long long d : {3, 4, 7, 8, 11, 19, 43, 67, 163}) {
        CAPTURE(d);
        CHECK(class_number(d).class_number == 1);
    }
}

TEST_CASE("unit counts") {
    CHECK(unit_count(3) == 6);
    CHECK(unit_count(4) == 4);
    CHECK(unit_count(163) == 2);
    CHECK(unit_count(39) == 2);
}

TEST_CASE("invalid discriminants are rejected") {
    for (long long d : {-4LL, 0LL, 1LL, 2LL, 5LL, 6LL, 13LL}) {
        CAPTURE(d);
        CHECK_THROWS_AS(class_number(d), std::domain_error);
        CHECK_THROWS_AS(unit_count(d), std::domain_error);
    }
}

TEST_CASE("enumerated forms satisfy the reduction inequalities") {
    for (long long d = 3; d <= 500; ++d) {
        if (!is_valid_discriminant(d)) continue;
        QuadraticOrderData data = class_number(d);
        CHECK(data.class_number >= 1);
        CHECK(data.class_number == static_cast<long long>(data.reduced_forms.size()));
        std::set<std::tuple<long long, long long, long long>> seen;
        for (const ReducedForm& f : data.reduced_forms) {
            CAPTURE(d, f.a, f.b, f.c);
            CHECK(f.b * f.b - 4 * f.a * f.c == -d);
            CHECK(f.a > 0);
            CHECK(std::abs(f.b) <= f.a);
            CHECK(f.a <= f.c);
            if (std::abs(f.b) == f.a || f.a == f.c) CHECK(f.b >= 0);
            CHECK(std::gcd(std::gcd(f.a, f.b), f.c) == 1);
            CHECK(seen.insert({f.a, f.b, f.c}).second);  // pairwise distinct
        }
    }
}

TEST_CASE("class number agrees with brute-force enumeration") {
    for (long long d = 3; d <= 400; ++d) {
        if (!is_valid_discriminant(d)) continue;
        CAPTURE(d);
        CHECK(class_number(d).class_number == naive_class_number(d));
    }
}
