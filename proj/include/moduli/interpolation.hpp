#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "moduli/polynomial.hpp"
#include "moduli/rational.hpp"

namespace moduli {

/// One sample of the curve y = |M(x)|: a rational singular modulus as
/// abscissa and the absolute norm computed for it.
struct EvaluationPoint {
    BigRat x;
    BigRat y;                        // > 0
    long long source_discriminant = 0;
};

/// A monic polynomial that survived the sign search, together with the sign
/// vector that produced it: the polynomial passes through (x_i, sign_i * y_i).
struct MonicCandidate {
    PolyQ poly;
    std::vector<int> signs;
};

enum class CoefficientFilter { IntegerCoefficients, RationalCoefficients };

class ReconstructionError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact Lagrange interpolation through distinct abscissas.
inline PolyQ lagrange_interpolate(const std::vector<std::pair<BigRat, BigRat>>& points) {
    if (points.empty()) throw std::domain_error("lagrange_interpolate: need at least one point");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::domain_error("lagrange_interpolate: duplicate abscissa " + to_string(points[i].first));

    PolyQ acc;
    for (size_t i = 0; i < points.size(); ++i) {
        PolyQ basis = PolyQ::constant(BigRat(1));
        BigRat denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * PolyQ({-points[j].first, BigRat(1)});
            denom *= points[i].first - points[j].first;
        }
        acc = acc + basis * (points[i].second / denom);
    }
    return acc;
}

inline bool has_integer_coefficients(const PolyQ& p) {
    for (const auto& c : p.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

/// Resolves the unknown signs of |M(x_i)| data by exhaustive search.
///
/// Interpolates each of the 2^h sign assignments with the first sign pinned
/// to +1; a hit whose leading coefficient is -1 is the global negation of a
/// monic solution, so it is flipped and reported with the negated sign
/// vector. Survivors must have degree exactly `degree`, be monic, and pass
/// the coefficient filter.
inline std::vector<MonicCandidate> sign_search_monic(const std::vector<EvaluationPoint>& points,
                                                     int degree, CoefficientFilter filter) {
    if (static_cast<int>(points.size()) != degree + 1)
        throw std::domain_error("sign_search_monic: need exactly degree+1 points, got " + std::to_string(points.size()));
    for (const auto& pt : points)
        if (pt.y <= 0) throw std::domain_error("sign_search_monic: norms must be positive");

    std::vector<MonicCandidate> survivors;
    const unsigned long combos = 1UL << degree;
    for (unsigned long mask = 0; mask < combos; ++mask) {
        std::vector<int> signs(points.size(), 1);
        for (int b = 0; b < degree; ++b)
            if (mask & (1UL << b)) signs[b + 1] = -1;

        std::vector<std::pair<BigRat, BigRat>> data;
        data.reserve(points.size());
        for (size_t i = 0; i < points.size(); ++i)
            data.emplace_back(points[i].x, signs[i] > 0 ? points[i].y : BigRat(-points[i].y));

        PolyQ p = lagrange_interpolate(data);
        if (p.degree() != degree) continue;
        if (p.leading() == -1) {
            p = -p;
            for (auto& s : signs) s = -s;
        }
        if (!p.is_monic()) continue;
        if (filter == CoefficientFilter::IntegerCoefficients && !has_integer_coefficients(p)) continue;
        survivors.push_back({std::move(p), std::move(signs)});
    }
    return survivors;
}

/// |M(x)| == y, exactly.
inline bool verifies_point(const PolyQ& m, const EvaluationPoint& pt) {
    BigRat v = m(pt.x);
    return v == pt.y || v == BigRat(-pt.y);
}

}  // namespace moduli
