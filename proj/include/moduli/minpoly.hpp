#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "moduli/gross_zagier.hpp"
#include "moduli/interpolation.hpp"
#include "moduli/qforms.hpp"
#include "moduli/shimura_data.hpp"

namespace moduli {

/// The nine discriminants whose classical singular modulus is rational.
inline const std::vector<long long>& rational_moduli_discriminants() {
    static const std::vector<long long> ds = {3, 4, 7, 8, 11, 19, 43, 67, 163};
    return ds;
}

/// j-value of the CM point of discriminant -d, for the nine class-number-one
/// discriminants. The small ones are pinned constants; 43, 67 and 163 are
/// reconstructed once from two norms: the unique rational r with
/// |r - j(i)| = N(d,4) and |r - j(i*sqrt(2))| = N(d,8).
inline BigRat rational_j(long long d) {
    static const std::map<long long, BigInt> table = [] {
        std::map<long long, BigInt> t;
        t[3] = 0;
        t[4] = 1728;        // 12^3
        t[7] = -3375;       // -15^3
        t[8] = 8000;        // 20^3
        t[11] = -32768;     // -32^3
        t[19] = -884736;    // -96^3
        for (long long d : {43LL, 67LL, 163LL}) {
            BigInt n1 = gz_norm(d, 4).norm.value();
            BigInt n2 = gz_norm(d, 8).norm.value();
            BigInt r;
            int hits = 0;
            const BigInt c1s[] = {BigInt(t[4] + n1), BigInt(t[4] - n1)};
            const BigInt c2s[] = {BigInt(t[8] + n2), BigInt(t[8] - n2)};
            for (const BigInt& c1 : c1s)
                for (const BigInt& c2 : c2s)
                    if (c1 == c2) { r = c1; ++hits; }
            if (hits != 1)
                throw std::runtime_error("rational_j: sign resolution for d = " + std::to_string(d) +
                                         " is not unique (norm computation bug)");
            t[d] = r;
        }
        return t;
    }();
    auto it = table.find(d);
    if (it == table.end())
        throw std::domain_error("rational_j: no rational singular modulus at d = " + std::to_string(d));
    return BigRat(it->second);
}

/// Minimal polynomial of the classical singular modulus of discriminant -d0,
/// reconstructed from Gross-Zagier norms against the rational moduli.
///
/// Uses the first h(-d0)+1 coprime rational-moduli discriminants, taking the
/// even ones (CM point on the imaginary axis) before the odd ones, each
/// ascending: for d0 = 39 that is 4, 8, 7, 11, 19, the published order. Each
/// remaining coprime discriminant serves as an extra verification point.
/// More than one survivor triggers verification-based disambiguation;
/// anything other than a single verified survivor is an error.
inline MonicCandidate classical_min_poly(long long d0, const Factorizer& fac = Factorizer()) {
    require_valid_discriminant(d0);
    const long long h = class_number(d0).class_number;

    std::vector<long long> coprime;
    for (long long d : rational_moduli_discriminants())
        if (d % 4 == 0 && std::gcd(d, d0) == 1) coprime.push_back(d);
    for (long long d : rational_moduli_discriminants())
        if (d % 4 != 0 && std::gcd(d, d0) == 1) coprime.push_back(d);
    if (static_cast<long long>(coprime.size()) < h + 1)
        throw ReconstructionError("classical reconstruction needs h+1 = " + std::to_string(h + 1) +
                                  " rational moduli coprime to " + std::to_string(d0) + " but only " +
                                  std::to_string(coprime.size()) + " exist (degree > 8 is out of reach)");

    auto eval_point = [&](long long d) {
        EvaluationPoint pt;
        pt.x = rational_j(d);
        pt.y = BigRat(gz_norm(d0, d, fac).norm.value());
        pt.source_discriminant = d;
        return pt;
    };

    std::vector<EvaluationPoint> points;
    for (long long i = 0; i < h + 1; ++i) points.push_back(eval_point(coprime[i]));

    std::vector<MonicCandidate> survivors =
        sign_search_monic(points, static_cast<int>(h), CoefficientFilter::IntegerCoefficients);
    if (survivors.empty())
        throw ReconstructionError("no monic candidate of degree " + std::to_string(h) +
                                  " for d0 = " + std::to_string(d0));

    // verification points: every remaining coprime rational modulus
    for (size_t i = h + 1; i < coprime.size(); ++i) {
        EvaluationPoint extra = eval_point(coprime[i]);
        std::erase_if(survivors, [&](const MonicCandidate& c) { return !verifies_point(c.poly, extra); });
        if (survivors.empty())
            throw ReconstructionError("all candidates failed verification at d = " +
                                      std::to_string(coprime[i]) + " for d0 = " + std::to_string(d0));
        if (survivors.size() == 1) break;  // unique and verified once
    }
    if (survivors.size() != 1)
        throw ReconstructionError("ambiguous reconstruction for d0 = " + std::to_string(d0) + ": " +
                                  std::to_string(survivors.size()) + " candidates survived");
    return survivors.front();
}

/// Minimal polynomial of a Shimura singular modulus from externally computed
/// norm data. The first degree+1 points feed the sign search; any extras are
/// exact verification points.
inline MonicCandidate shimura_min_poly(const ShimuraNormFile& file) {
    if (file.points.size() < static_cast<size_t>(file.degree) + 1)
        throw ReconstructionError("data file supplies " + std::to_string(file.points.size()) +
                                  " points but degree " + std::to_string(file.degree) + " needs " +
                                  std::to_string(file.degree + 1));

    std::vector<EvaluationPoint> points;
    for (size_t i = 0; i < static_cast<size_t>(file.degree) + 1; ++i) {
        EvaluationPoint pt;
        pt.x = file.points[i].zeta;
        pt.y = file.points[i].norm.value();
        pt.source_discriminant = file.points[i].d;
        points.push_back(std::move(pt));
    }

    std::vector<MonicCandidate> survivors =
        sign_search_monic(points, file.degree, CoefficientFilter::RationalCoefficients);
    for (size_t i = static_cast<size_t>(file.degree) + 1; i < file.points.size(); ++i) {
        EvaluationPoint extra{file.points[i].zeta, file.points[i].norm.value(), file.points[i].d};
        std::erase_if(survivors, [&](const MonicCandidate& c) { return !verifies_point(c.poly, extra); });
    }
    if (survivors.empty())
        throw ReconstructionError("no monic candidate for d' = " + std::to_string(file.cm_discriminant));
    if (survivors.size() > 1)
        throw ReconstructionError("ambiguous reconstruction for d' = " + std::to_string(file.cm_discriminant) +
                                  ": " + std::to_string(survivors.size()) + " candidates survived; supply more points");
    return survivors.front();
}

}  // namespace moduli
