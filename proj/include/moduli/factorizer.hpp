#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "moduli/factored.hpp"
#include "moduli/rational.hpp"

namespace moduli {

/// Full Kronecker symbol (a/n). n = 0 is a domain error.
inline int kronecker(const BigInt& a, const BigInt& n) {
    if (n == 0) throw std::domain_error("kronecker: modulus must be nonzero");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

inline int kronecker(long a, long n) { return kronecker(BigInt(a), BigInt(n)); }

namespace detail {

inline const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        constexpr uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// xorshift64*, used only to pick Pollard parameters deterministically.
struct SplitMix {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

}  // namespace detail

/// Deterministic primality for n < 3.317e24 via the 13-witness Miller-Rabin
/// set; falls back on GMP's BPSW + 25 rounds above that (no inputs of that
/// size arise from the norm pipelines).
inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    static const BigInt mr_bound("3317044064679887385961980");  // Sorenson-Webster bound
    if (n >= mr_bound) return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;

    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    unsigned long s = p_valuation(d, 2);
    d >>= s;
    for (uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        BigInt x;
        BigInt base = a;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

/// Integer factorization: trial division over a sieve of primes below 1e6,
/// then Brent-cycle Pollard rho with deterministic parameters derived from
/// `seed`, with Miller-Rabin certification of every reported prime.
class Factorizer {
public:
    static constexpr uint64_t kDefaultSeed = 0x6d6f64756c69ULL;

    explicit Factorizer(uint64_t seed = kDefaultSeed) : seed_(seed) {}

    FactoredInteger factorize(const BigInt& n) const {
        if (n == 0) throw std::domain_error("factorize: zero has no factorization");
        FactoredInteger::Map m;
        BigInt rest = abs(n);
        for (uint32_t p : detail::small_primes()) {
            if (rest == 1) break;
            if (BigInt(p) * p > rest) break;
            if (rest % p == 0) m[p] = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), BigInt(p).get_mpz_t());
        }
        if (rest > 1) split(rest, m);
        return FactoredInteger(sgn(n), std::move(m));
    }

    BigInt radical(const BigInt& n) const {
        if (n < 1) throw std::domain_error("radical: argument must be positive");
        return factorize(n).radical_value();
    }

private:
    uint64_t seed_;

    void split(const BigInt& n, FactoredInteger::Map& out) const {
        if (is_prime(n)) {
            out[n] += 1;
            return;
        }
        if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
            // n = b^k: factor the base and scale. Catches squares rho is slow on.
            for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
                BigInt root;
                if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                    FactoredInteger::Map base;
                    split(root, base);
                    for (const auto& [p, e] : base) out[p] += e * k;
                    return;
                }
            }
        }
        BigInt d = pollard_brent(n);
        split(d, out);
        split(n / d, out);
    }

    // Brent's variant; n must be odd composite, not a prime power's worst case.
    BigInt pollard_brent(const BigInt& n) const {
        detail::SplitMix rng{seed_ ^ mpz_fdiv_ui(n.get_mpz_t(), 0x7fffffffULL)};
        for (int attempt = 0; attempt < 64; ++attempt) {
            BigInt c = BigInt(static_cast<unsigned long>(rng.next() >> 32)) % (n - 1) + 1;
            BigInt y = BigInt(static_cast<unsigned long>(rng.next() >> 32)) % n;
            BigInt g = 1, r = 1, q = 1, x, ys;
            const long m = 128;
            while (g == 1) {
                x = y;
                for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
                BigInt k = 0;
                while (k < r && g == 1) {
                    ys = y;
                    for (long i = 0; i < m && BigInt(k + i) < r; ++i) {
                        y = (y * y + c) % n;
                        q = q * abs(x - y) % n;
                    }
                    g = gcd(q, n);
                    k += m;
                }
                r *= 2;
                if (r > (BigInt(1) << 24)) break;  // cycle too long, retry with new c
            }
            if (g == n) {
                // backtrack one step at a time
                do {
                    ys = (ys * ys + c) % n;
                    g = gcd(abs(x - ys), n);
                } while (g == 1);
            }
            if (g > 1 && g < n) return g;
        }
        throw std::runtime_error("factorize: Pollard rho gave up on " + n.get_str());
    }
};

inline FactoredInteger factorize(const BigInt& n, uint64_t seed = Factorizer::kDefaultSeed) {
    return Factorizer(seed).factorize(n);
}

inline BigInt radical(const BigInt& n, uint64_t seed = Factorizer::kDefaultSeed) {
    return Factorizer(seed).radical(n);
}

/// Parses "3^12 * 7^8", "-2 * 5", or a plain integer into a FactoredInteger.
/// Factors are re-certified prime and merged; this is the inverse of
/// FactoredInteger::str() but accepts arbitrary order and whitespace.
inline FactoredInteger parse_factored(std::string_view text) {
    std::string s(text);
    int sign = 1;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    FactoredInteger::Map m;
    bool any = false;
    while (true) {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("parse_factored: expected integer in '" + s + "'");
        BigInt base = parse_integer(s.substr(start, i - start));
        unsigned long exp = 1;
        skip_ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            skip_ws();
            size_t es = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (es == i) throw std::invalid_argument("parse_factored: expected exponent in '" + s + "'");
            exp = std::stoul(s.substr(es, i - es));
        }
        if (base == 1 && exp >= 1) {
            any = true;  // bare "1" is the unit
        } else {
            if (!is_prime(base)) {
                // composite base: factor it and merge
                FactoredInteger f = factorize(base);
                for (const auto& [p, e] : f.factors()) m[p] += e * exp;
            } else if (exp > 0) {
                m[base] += exp;
            }
            any = true;
        }
        skip_ws();
        if (i >= s.size()) break;
        if (s[i] != '*') throw std::invalid_argument("parse_factored: expected '*' in '" + s + "'");
        ++i;
    }
    if (!any) throw std::invalid_argument("parse_factored: empty input");
    return FactoredInteger(sign, std::move(m));
}

}  // namespace moduli
