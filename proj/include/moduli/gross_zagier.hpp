#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "moduli/factored.hpp"
#include "moduli/factorizer.hpp"
#include "moduli/qforms.hpp"

namespace moduli {

/// Raised when the epsilon character is requested at a prime where the
/// defining Kronecker condition fails.
class EpsilonUndefinedError : public std::domain_error {
public:
    EpsilonUndefinedError(const BigInt& p, const std::string& context)
        : std::domain_error("epsilon undefined at p = " + p.get_str() + context), prime(p) {}
    BigInt prime;
};

inline void require_gz_input(long long d1, long long d2) {
    require_valid_discriminant(d1);
    require_valid_discriminant(d2);
    if (std::gcd(d1, d2) != 1)
        throw std::domain_error("gross-zagier: discriminants -" + std::to_string(d1) + ", -" + std::to_string(d2) + " are not coprime");
}

namespace detail {

// The branch formula itself: (-d1/p) when p does not divide d1, else (-d2/p).
// Well defined whenever (d1 d2/p) != -1 or p | d1 d2; for the primes that
// occur as factors of n' in the norm product, p | d1 d2 or the two branches
// agree, so the choice of branch order is never observable there.
inline int epsilon_value(const BigInt& p, long long d1, long long d2) {
    int v = (to_bigint(d1) % p != 0) ? kronecker(to_bigint(-d1), p) : kronecker(to_bigint(-d2), p);
    if (v == 0) throw std::domain_error("epsilon: zero character value at p = " + p.get_str() + " (invalid discriminant pair)");
    return v;
}

}  // namespace detail

/// The completely multiplicative character of the norm formula, evaluated at
/// a prime. Only defined where kronecker(d1*d2, p) != 1.
inline int epsilon(const BigInt& p, long long d1, long long d2) {
    require_gz_input(d1, d2);
    if (kronecker(to_bigint(d1) * to_bigint(d2), p) == 1)
        throw EpsilonUndefinedError(p, " for discriminant pair (-" + std::to_string(d1) + ", -" + std::to_string(d2) + ")");
    return detail::epsilon_value(p, d1, d2);
}

/// Multiplicative extension of epsilon over the factorization of n >= 1.
inline int epsilon_extend(const BigInt& n, long long d1, long long d2,
                          const Factorizer& fac = Factorizer()) {
    require_gz_input(d1, d2);
    if (n < 1) throw std::domain_error("epsilon_extend: argument must be positive");
    int result = 1;
    const FactoredInteger fn = fac.factorize(n);
    for (const auto& [p, e] : fn.factors()) {
        if (kronecker(to_bigint(d1) * to_bigint(d2), p) == 1)
            throw EpsilonUndefinedError(p, " dividing " + n.get_str());
        if (e % 2 != 0) result *= detail::epsilon_value(p, d1, d2);
    }
    return result;
}

struct GZResult {
    FactoredInteger product;       // right-hand side of the norm identity
    FactoredInteger norm;          // |j(tau1) - j(tau2)| as a factored positive integer
    BigRat exponent_applied;       // norm == product ^ exponent_applied
};

/// Absolute norm of j(tau1) - j(tau2) for coprime discriminants -d1, -d2.
///
/// Enumerates every x (both signs) with x^2 < d1*d2 and x^2 = d1*d2 mod 4,
/// and every ordered pair n*n' = (d1*d2 - x^2)/4, accumulating n^epsilon(n').
/// The product equals the norm raised to 8/(w1*w2) with w_i the unit counts,
/// so the norm is recovered by scaling all exponents by w1*w2/8. That scaling
/// was validated against the five published norms for d1 = 39 before being
/// trusted.
inline GZResult gz_norm(long long d1, long long d2, const Factorizer& fac = Factorizer()) {
    require_gz_input(d1, d2);
    if (d1 > (1LL << 31) || d2 > (1LL << 31))
        throw std::domain_error("gz_norm: discriminant product too large for enumeration");
    const long long D = d1 * d2;

    // signed exponent accumulator; epsilon values per prime are cached
    std::map<BigInt, long long> exps;
    std::map<BigInt, int> eps_cache;
    auto eps_at = [&](const BigInt& p) {
        auto it = eps_cache.find(p);
        if (it != eps_cache.end()) return it->second;
        int v = detail::epsilon_value(p, d1, d2);
        eps_cache.emplace(p, v);
        return v;
    };

    for (long long x = (D % 2 == 0) ? 0 : 1; x * x < D; x += 2) {
        if ((D - x * x) % 4 != 0) continue;
        const long long m = (D - x * x) / 4;
        const long long weight = (x == 0) ? 1 : 2;  // x and -x contribute identically

        // divisors of m from its factorization, with the cofactor's character
        FactoredInteger fm = fac.factorize(to_bigint(m));
        std::vector<std::pair<BigInt, unsigned long>> pf(fm.factors().begin(), fm.factors().end());
        // walk all divisor exponent vectors
        std::vector<unsigned long> ev(pf.size(), 0);
        while (true) {
            // n = prod p^ev, n' = m/n; epsilon(n') from parity of remaining exponents
            int e = 1;
            for (size_t i = 0; i < pf.size(); ++i)
                if ((pf[i].second - ev[i]) % 2 != 0) e *= eps_at(pf[i].first);
            for (size_t i = 0; i < pf.size(); ++i)
                if (ev[i] > 0) exps[pf[i].first] += weight * e * static_cast<long long>(ev[i]);
            // increment exponent vector
            size_t k = 0;
            while (k < pf.size() && ev[k] == pf[k].second) { ev[k] = 0; ++k; }
            if (k == pf.size()) break;
            ++ev[k];
        }
    }

    FactoredInteger::Map pm;
    for (const auto& [p, e] : exps) {
        if (e == 0) continue;
        if (e < 0)
            throw std::runtime_error("gz_norm: internal error, negative aggregate exponent at p = " + p.get_str());
        pm[p] = static_cast<unsigned long>(e);
    }
    GZResult r;
    r.product = FactoredInteger(1, std::move(pm));
    r.exponent_applied = rat(BigInt(unit_count(d1) * unit_count(d2)), BigInt(8));
    r.norm = r.product.scale_exponents(r.exponent_applied);
    return r;
}

}  // namespace moduli
