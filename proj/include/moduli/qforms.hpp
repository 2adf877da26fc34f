#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli {

/// A reduced binary quadratic form a*x^2 + b*x*y + c*y^2 of discriminant
/// b^2 - 4ac = -d.
struct ReducedForm {
    long long a, b, c;
    bool operator==(const ReducedForm&) const = default;
};

struct QuadraticOrderData {
    long long d = 0;           // order discriminant is -d
    long long class_number = 0;
    int unit_count = 2;
    std::vector<ReducedForm> reduced_forms;
};

/// -d must be a discriminant: d > 0 and -d = 0 or 1 (mod 4), i.e. d = 0 or 3 (mod 4).
inline bool is_valid_discriminant(long long d) {
    return d > 0 && (d % 4 == 0 || d % 4 == 3);
}

inline void require_valid_discriminant(long long d) {
    if (!is_valid_discriminant(d))
        throw std::domain_error("-" + std::to_string(d) + " is not a quadratic discriminant (need d = 0 or 3 mod 4, d > 0)");
}

/// Roots of unity in the order of discriminant -d: 6 for d=3, 4 for d=4, else 2.
inline int unit_count(long long d) {
    require_valid_discriminant(d);
    if (d == 3) return 6;
    if (d == 4) return 4;
    return 2;
}

/// Enumerates the primitive reduced forms of discriminant -d: b^2 - 4ac = -d,
/// |b| <= a <= c, b >= 0 when |b| = a or a = c, gcd(a,b,c) = 1. The count is
/// the form class number h(-d) of the order.
inline QuadraticOrderData class_number(long long d) {
    require_valid_discriminant(d);
    QuadraticOrderData out;
    out.d = d;
    out.unit_count = unit_count(d);

    // |b| <= a <= c forces 3b^2 <= 4ac - ... <= ... <= d/3 bound on b.
    for (long long b = (d % 2 == 0) ? 0 : 1; 3 * b * b <= d; b += 2) {
        long long m4 = b * b + d;  // = 4ac
        if (m4 % 4 != 0) continue;
        long long m = m4 / 4;
        for (long long a = std::max(b, 1LL); a * a <= m; ++a) {
            if (m % a != 0) continue;
            long long c = m / a;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            out.reduced_forms.push_back({a, b, c});
            if (b != 0 && b != a && a != c) out.reduced_forms.push_back({a, -b, c});
        }
    }
    out.class_number = static_cast<long long>(out.reduced_forms.size());
    return out;
}

}  // namespace moduli
