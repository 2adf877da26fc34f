#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "moduli/factorizer.hpp"
#include "moduli/linalg.hpp"
#include "moduli/polynomial.hpp"
#include "moduli/rational.hpp"

namespace moduli {

/// Polynomial over Z/m with coefficients normalized into [0, m). m is a
/// prime for the factoring routines and a prime power for Hensel lifts.
class ModPoly {
public:
    ModPoly(BigInt mod, std::vector<BigInt> coeffs) : mod_(std::move(mod)), c_(std::move(coeffs)) {
        if (mod_ < 2) throw std::invalid_argument("ModPoly: modulus must be >= 2");
        for (auto& v : c_) v = linalg::mod_floor(v, mod_);
        trim();
    }
    static ModPoly zero(const BigInt& mod) { return ModPoly(mod, {}); }
    static ModPoly one(const BigInt& mod) { return ModPoly(mod, {BigInt(1)}); }
    static ModPoly from_int_poly(const PolyZ& p, const BigInt& mod) { return ModPoly(mod, p.coeffs()); }

    const BigInt& modulus() const { return mod_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const BigInt& operator[](size_t i) const {
        static const BigInt kZero(0);
        return i < c_.size() ? c_[i] : kZero;
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool operator==(const ModPoly& o) const { return mod_ == o.mod_ && c_ == o.c_; }

    /// Lift with coefficients centered into (-m/2, m/2].
    PolyZ to_int_poly_centered() const {
        std::vector<BigInt> out(c_);
        BigInt half = mod_ / 2;
        for (auto& v : out)
            if (v > half) v -= mod_;
        return PolyZ(std::move(out));
    }
    PolyZ to_int_poly() const { return PolyZ(c_); }

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
        a.check(b);
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (size_t i = 0; i < r.size(); ++i) r[i] = linalg::mod_floor(a[i] + b[i], a.mod_);
        return ModPoly(a.mod_, std::move(r));
    }
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
        a.check(b);
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (size_t i = 0; i < r.size(); ++i) r[i] = linalg::mod_floor(a[i] - b[i], a.mod_);
        return ModPoly(a.mod_, std::move(r));
    }
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return zero(a.mod_);
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return ModPoly(a.mod_, std::move(r));
    }
    friend ModPoly operator*(const ModPoly& a, const BigInt& s) {
        std::vector<BigInt> r = a.c_;
        for (auto& v : r) v = linalg::mod_floor(v * s, a.mod_);
        return ModPoly(a.mod_, std::move(r));
    }

    /// Division with remainder; the divisor's leading coefficient must be a
    /// unit mod m (always true for the monic divisors used here).
    friend std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b) {
        a.check(b);
        if (b.is_zero()) throw std::domain_error("ModPoly: division by zero");
        const BigInt inv = linalg::mod_inverse(b.c_.back(), a.mod_);
        std::vector<BigInt> rem = a.c_;
        const int db = b.degree();
        if (a.degree() < db) return {zero(a.mod_), a};
        std::vector<BigInt> quo(a.c_.size() - b.c_.size() + 1, BigInt(0));
        for (int i = a.degree(); i >= db; --i) {
            BigInt q = linalg::mod_floor(rem[i] * inv, a.mod_);
            if (q == 0) continue;
            quo[i - db] = q;
            for (int j = 0; j <= db; ++j)
                rem[i - db + j] = linalg::mod_floor(rem[i - db + j] - q * b.c_[j], a.mod_);
        }
        return {ModPoly(a.mod_, std::move(quo)), ModPoly(a.mod_, std::move(rem))};
    }
    friend ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divrem(a, b).second; }
    friend ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divrem(a, b).first; }

    ModPoly monic() const {
        if (is_zero()) return *this;
        return *this * linalg::mod_inverse(c_.back(), mod_);
    }

    ModPoly derivative() const {
        if (c_.size() <= 1) return zero(mod_);
        std::vector<BigInt> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = linalg::mod_floor(c_[i] * BigInt(static_cast<long>(i)), mod_);
        return ModPoly(mod_, std::move(r));
    }

    /// Changes the modulus (for lifting setups); coefficients are re-reduced.
    ModPoly with_modulus(const BigInt& m) const { return ModPoly(m, c_); }

private:
    BigInt mod_;
    std::vector<BigInt> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check(const ModPoly& o) const {
        if (mod_ != o.mod_) throw std::invalid_argument("ModPoly: modulus mismatch");
    }
};

namespace modp {

/// gcd over F_p, monic.
inline ModPoly gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

/// Extended gcd over F_p: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<ModPoly, ModPoly, ModPoly> xgcd(const ModPoly& a, const ModPoly& b) {
    const BigInt& p = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::one(p), s1 = ModPoly::zero(p);
    ModPoly t0 = ModPoly::zero(p), t1 = ModPoly::one(p);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = r1; r1 = r;
        ModPoly s2 = s0 - q * s1; s0 = s1; s1 = s2;
        ModPoly t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    BigInt inv = linalg::mod_inverse(r0.coeffs().back(), p);
    return {r0 * inv, s0 * inv, t0 * inv};
}

/// base^e mod (f, p) by square and multiply; e >= 0 may be huge.
inline ModPoly powmod(ModPoly base, BigInt e, const ModPoly& f) {
    ModPoly result = ModPoly::one(f.modulus());
    base = base % f;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = result * base % f;
        base = base * base % f;
        e >>= 1;
    }
    return result;
}

/// Squarefree decomposition over F_p: returns (g_i, m_i) with f = prod g_i^{m_i},
/// g_i squarefree pairwise coprime. Handles the f' = 0 (p-th power) case.
inline std::vector<std::pair<ModPoly, int>> squarefree_decomposition(const ModPoly& f_in) {
    const BigInt& p = f_in.modulus();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly f = f_in.monic();
    if (f.degree() < 1) return out;

    ModPoly d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p); over F_p the coefficients are their own p-th roots
        if (p > 64) throw std::domain_error("squarefree_decomposition: p-th power with huge p");
        unsigned long pi = p.get_ui();
        std::vector<BigInt> g((f.coeffs().size() - 1) / pi + 1, BigInt(0));
        for (size_t i = 0; i < f.coeffs().size(); ++i) {
            if (f.coeffs()[i] == 0) continue;
            if (i % pi != 0) throw std::runtime_error("squarefree_decomposition: inconsistent p-th power");
            g[i / pi] = f.coeffs()[i];
        }
        auto inner = squarefree_decomposition(ModPoly(p, std::move(g)));
        for (auto& [poly, mult] : inner) out.emplace_back(poly, mult * static_cast<int>(pi));
        return out;
    }

    // Yun-style pass; the p | multiplicity residue lands in a p-th power tail
    ModPoly c = gcd(f, d);
    ModPoly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        ModPoly y = gcd(w, c);
        ModPoly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        auto tail = squarefree_decomposition(c);  // c is a p-th power
        for (auto& [poly, mult] : tail) {
            bool merged = false;
            for (auto& [q, m2] : out)
                if (q == poly) { m2 += mult; merged = true; }
            if (!merged) out.emplace_back(poly, mult);
        }
    }
    return out;
}

namespace detail {

// deterministic 'random' polynomial source for the equal-degree splitter
struct PolyRng {
    moduli::detail::SplitMix rng;
    ModPoly next(const BigInt& p, int max_degree) {
        std::vector<BigInt> c(static_cast<size_t>(max_degree) + 1);
        for (auto& v : c) {
            BigInt r = static_cast<unsigned long>(rng.next() >> 16);
            v = linalg::mod_floor(r * static_cast<unsigned long>(rng.next() >> 32), p);
        }
        return ModPoly(p, std::move(c));
    }
};

// Berlekamp splitting for small p (deterministic); f squarefree monic.
inline void berlekamp_split(const ModPoly& f, std::vector<ModPoly>& out) {
    const BigInt& p = f.modulus();
    const int n = f.degree();
    if (n <= 1) { out.push_back(f); return; }

    // Q matrix: row i = coefficients of x^{i p} mod f
    ModPoly xp = powmod(ModPoly(p, {BigInt(0), BigInt(1)}), p, f);
    linalg::MatZ q(static_cast<size_t>(n), linalg::VecZ(static_cast<size_t>(n), BigInt(0)));
    ModPoly cur = ModPoly::one(p);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= cur.degree(); ++j) q[static_cast<size_t>(i)][static_cast<size_t>(j)] = cur[static_cast<size_t>(j)];
        cur = cur * xp % f;
    }
    // kernel of (Q - I)^T acting on coefficient vectors: v Q = v means v in Berlekamp subalgebra
    linalg::MatZ qt(static_cast<size_t>(n), linalg::VecZ(static_cast<size_t>(n), BigInt(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) qt[static_cast<size_t>(j)][static_cast<size_t>(i)] = q[static_cast<size_t>(i)][static_cast<size_t>(j)] - (i == j ? 1 : 0);
    auto kernel = linalg::kernel_mod_p(qt, static_cast<size_t>(n), p);
    const size_t r = kernel.size();  // number of irreducible factors

    std::vector<ModPoly> factors = {f};
    if (r == 1) { out.push_back(f); return; }
    unsigned long pl = p.get_ui();
    for (const auto& vcoef : kernel) {
        if (factors.size() == r) break;
        ModPoly v(p, vcoef);
        if (v.degree() < 1) continue;  // the constant kernel vector never splits
        std::vector<ModPoly> next;
        for (const ModPoly& g : factors) {
            if (factors.size() + next.size() > static_cast<size_t>(n)) break;
            if (g.degree() <= 1) { next.push_back(g); continue; }
            ModPoly rest = g;
            for (unsigned long s = 0; s < pl && rest.degree() > 0; ++s) {
                ModPoly h = gcd(rest, v - ModPoly(p, {BigInt(static_cast<long>(s))}));
                if (h.degree() > 0 && h.degree() < rest.degree()) {
                    next.push_back(h);
                    rest = rest / h;
                }
            }
            if (rest.degree() > 0) next.push_back(rest.monic());
        }
        factors = std::move(next);
    }
    for (auto& g : factors) out.push_back(g.monic());
}

// Cantor-Zassenhaus equal-degree splitting, p odd; f = product of distinct
// irreducibles all of degree d.
inline void equal_degree_split(const ModPoly& f, int d, PolyRng& rng, std::vector<ModPoly>& out) {
    if (f.degree() == d) { out.push_back(f.monic()); return; }
    const BigInt& p = f.modulus();
    BigInt e = (pow(p, static_cast<unsigned long>(d)) - 1) / 2;
    for (int tries = 0; tries < 200; ++tries) {
        ModPoly a = rng.next(p, f.degree() - 1);
        if (a.degree() < 1) continue;
        ModPoly g = gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
        ModPoly b = powmod(a, e, f) - ModPoly::one(p);
        g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
    }
    throw std::runtime_error("equal_degree_split: failed to split (rng exhausted)");
}

// distinct-degree then equal-degree; f squarefree monic, p odd and large.
inline void cantor_zassenhaus(const ModPoly& f_in, uint64_t seed, std::vector<ModPoly>& out) {
    const BigInt& p = f_in.modulus();
    ModPoly f = f_in;
    PolyRng rng{{seed ^ 0x5eedULL}};
    ModPoly x(p, {BigInt(0), BigInt(1)});
    ModPoly xq = x;
    for (int d = 1; f.degree() > 0 && d <= f.degree(); ++d) {
        xq = powmod(xq, p, f);  // x^{p^d} mod f
        ModPoly g = gcd(xq - x, f);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            f = f / g;
            xq = xq % f;
        }
        if (2 * (d + 1) > f.degree() && f.degree() > 0) {
            out.push_back(f.monic());  // what remains is irreducible
            return;
        }
    }
    if (f.degree() > 0) out.push_back(f.monic());
}

}  // namespace detail

/// Factorization of f mod p into monic irreducibles with multiplicities.
/// Deterministic Berlekamp for small p, seeded Cantor-Zassenhaus for large p.
inline std::vector<std::pair<ModPoly, int>> factor_mod_p(const PolyZ& f, const BigInt& p,
                                                         uint64_t seed = Factorizer::kDefaultSeed) {
    if (!is_prime(p)) throw std::domain_error("factor_mod_p: modulus must be prime");
    ModPoly fp = ModPoly::from_int_poly(f, p);
    if (fp.degree() < 1) throw std::domain_error("factor_mod_p: polynomial vanishes or is constant mod p");
    std::vector<std::pair<ModPoly, int>> result;
    for (const auto& [sqf, mult] : squarefree_decomposition(fp)) {
        std::vector<ModPoly> irr;
        if (p < 64)
            detail::berlekamp_split(sqf, irr);
        else
            detail::cantor_zassenhaus(sqf, seed, irr);
        for (auto& g : irr) result.emplace_back(std::move(g), mult);
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return result;
}

/// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m)
/// to the same congruences mod m^2. f, g, h monic.
struct HenselPair {
    ModPoly g, h, s, t;
};

inline HenselPair hensel_step(const PolyZ& f, const HenselPair& in, const BigInt& m) {
    BigInt m2 = m * m;
    ModPoly fm = ModPoly::from_int_poly(f, m2);
    ModPoly g = in.g.with_modulus(m2), h = in.h.with_modulus(m2);
    ModPoly s = in.s.with_modulus(m2), t = in.t.with_modulus(m2);

    ModPoly e = fm - g * h;
    auto [q, r] = divrem(s * e, h);
    ModPoly g1 = g + t * e + q * g;
    ModPoly h1 = h + r;

    ModPoly b = s * g1 + t * h1 - ModPoly::one(m2);
    auto [c, d] = divrem(s * b, h1);
    ModPoly s1 = s - d;
    ModPoly t1 = t - t * b - c * g1;

    if (!h1.is_monic() || !g1.is_monic() || !(ModPoly::from_int_poly(f, m2) == g1 * h1))
        throw std::runtime_error("hensel_step: lift invariant violated");
    return {g1, h1, s1, t1};
}

/// Lifts a pairwise-coprime monic factorization of monic f from mod p to
/// mod p^k with p^k >= bound (returns the actual modulus used). The factors
/// need not be irreducible.
inline std::vector<ModPoly> hensel_lift_list(const PolyZ& f, const std::vector<ModPoly>& factors,
                                             const BigInt& p, const BigInt& bound, BigInt* modulus_out) {
    BigInt target = p;
    while (target < bound) target *= target;  // p^(2^j), matching the quadratic lift ladder

    // recursive tree split
    struct Lifter {
        const BigInt& p;
        const BigInt& target;
        std::vector<ModPoly> result;

        void lift(const PolyZ& fpart, const std::vector<ModPoly>& fs) {
            if (fs.size() == 1) {
                ModPoly lifted = ModPoly::from_int_poly(fpart, target);
                if (!lifted.is_monic() || lifted.degree() != fs[0].degree())
                    throw std::runtime_error("hensel_lift_list: leaf inconsistency");
                result.push_back(lifted);
                return;
            }
            size_t half = fs.size() / 2;
            ModPoly g = ModPoly::one(p), h = ModPoly::one(p);
            for (size_t i = 0; i < half; ++i) g = g * fs[i];
            for (size_t i = half; i < fs.size(); ++i) h = h * fs[i];
            auto [one, s, t] = xgcd(g, h);
            if (!one.is_one()) throw std::runtime_error("hensel_lift_list: factors not coprime mod p");

            HenselPair pair{g, h, s, t};
            BigInt m = p;
            while (m < target) {
                pair = hensel_step(fpart, pair, m);
                m *= m;
            }
            PolyZ gz = pair.g.with_modulus(target).to_int_poly();
            PolyZ hz = pair.h.with_modulus(target).to_int_poly();
            lift(gz, std::vector<ModPoly>(fs.begin(), fs.begin() + static_cast<long>(half)));
            lift(hz, std::vector<ModPoly>(fs.begin() + static_cast<long>(half), fs.end()));
        }
    };

    Lifter lifter{p, target, {}};
    lifter.lift(f, factors);
    if (modulus_out) *modulus_out = target;
    return lifter.result;
}

}  // namespace modp

/// Factors a monic squarefree integer polynomial into monic irreducible
/// integer factors (Zassenhaus: factor mod p, Hensel lift, subset
/// recombination). Degrees here are <= 8, so subsets are cheap.
inline std::vector<PolyZ> factor_monic_squarefree(const PolyZ& f, uint64_t seed = Factorizer::kDefaultSeed) {
    if (!f.is_monic()) throw std::domain_error("factor_monic_squarefree: polynomial must be monic");
    if (f.degree() == 1) return {f};

    // choose a prime keeping f squarefree
    BigInt p = 0;
    std::vector<std::pair<ModPoly, int>> shape;
    for (uint32_t cand : detail::small_primes()) {
        ModPoly fp = ModPoly::from_int_poly(f, cand);
        if (fp.degree() != f.degree()) continue;
        if (modp::gcd(fp, fp.derivative()).degree() != 0) continue;
        p = cand;
        shape = modp::factor_mod_p(f, p, seed);
        break;
    }
    if (p == 0) throw std::runtime_error("factor_monic_squarefree: no suitable prime found");

    std::vector<ModPoly> modular;
    for (auto& [g, mult] : shape) {
        if (mult != 1) throw std::runtime_error("factor_monic_squarefree: squarefree image has multiplicity");
        modular.push_back(g);
    }
    if (modular.size() == 1) return {f};

    // Mignotte-style bound on factor coefficients: 2^n * H(f) * sqrt(n+1)
    BigInt height = 0;
    for (const auto& c : f.coeffs()) height = std::max(height, BigInt(abs(c)));
    BigInt bound = (BigInt(1) << static_cast<unsigned long>(f.degree() + 2)) * height *
                   (isqrt(BigInt(f.degree() + 1)) + 1);

    BigInt pk;
    std::vector<ModPoly> lifted = modp::hensel_lift_list(f, modular, p, 2 * bound + 1, &pk);

    std::vector<PolyZ> out;
    PolyZ rest = f;
    std::vector<ModPoly> pool = lifted;
    size_t subset_size = 1;
    while (2 * subset_size <= pool.size()) {
        bool found = false;
        std::vector<size_t> idx(subset_size);
        // iterate subsets of the given size
        for (size_t i = 0; i < subset_size; ++i) idx[i] = i;
        while (true) {
            ModPoly cand = ModPoly::one(pk);
            for (size_t i : idx) cand = cand * pool[i];
            PolyZ candidate = cand.to_int_poly_centered();
            auto [q, r] = divrem(to_rational_poly(rest), to_rational_poly(candidate));
            if (r.is_zero() && has_integer_coefficients(q)) {
                out.push_back(candidate);
                rest = to_integer_poly(q);
                std::vector<ModPoly> next_pool;
                for (size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) next_pool.push_back(pool[i]);
                pool = std::move(next_pool);
                found = true;
                break;
            }
            // next subset
            long pos = static_cast<long>(subset_size) - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == pool.size() - subset_size + static_cast<size_t>(pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (size_t j = static_cast<size_t>(pos) + 1; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (rest.degree() > 0) out.push_back(rest);
    std::sort(out.begin(), out.end(), [](const PolyZ& a, const PolyZ& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return out;
}

/// Irreducibility over Q for a monic rational polynomial, by rescaling the
/// generator to a monic integer polynomial and factoring that over Z. When a
/// factor is requested, it is reported in the original variable.
inline bool is_irreducible_monic(const PolyQ& f, PolyQ* factor_out = nullptr,
                                 uint64_t seed = Factorizer::kDefaultSeed) {
    if (!f.is_monic()) throw std::domain_error("is_irreducible_monic: polynomial must be monic");
    const int n = f.degree();
    if (n < 1) throw std::domain_error("is_irreducible_monic: degree must be >= 1");
    if (n == 1) return true;

    PolyQ g = gcd(f, f.derivative());
    if (g.degree() > 0) {
        if (factor_out) *factor_out = g;
        return false;
    }

    // scale: x -> y/D so that D^n f(y/D) is a monic integer polynomial
    BigInt scale = 1;
    {
        std::map<BigInt, unsigned long> pexp;
        for (int i = 0; i < n; ++i) {
            BigInt den = f[static_cast<size_t>(i)].get_den();
            if (den == 1) continue;
            FactoredInteger fd = factorize(den, seed);
            for (const auto& [p, e] : fd.factors()) {
                unsigned long need = (e + static_cast<unsigned long>(n - i) - 1) / static_cast<unsigned long>(n - i);
                auto it = pexp.find(p);
                if (it == pexp.end() || it->second < need) pexp[p] = need;
            }
        }
        for (const auto& [p, e] : pexp) scale *= pow(p, e);
    }
    std::vector<BigInt> scaled(static_cast<size_t>(n) + 1);
    BigInt dk = 1;
    for (int i = n; i >= 0; --i) {
        BigRat c = f[static_cast<size_t>(i)] * BigRat(dk);
        if (!is_integer(c)) throw std::runtime_error("is_irreducible_monic: rescaling failed");
        scaled[static_cast<size_t>(i)] = BigInt(c.get_num());
        dk *= scale;
    }
    PolyZ fz(scaled);

    std::vector<PolyZ> factors = factor_monic_squarefree(fz, seed);
    if (factors.size() == 1) return true;
    if (factor_out) {
        // map the first factor back: g(x) = factor(scale * x) / scale^deg
        const PolyZ& w = factors.front();
        std::vector<BigRat> c(w.coeffs().size());
        BigInt sk = 1;
        for (size_t i = 0; i < w.coeffs().size(); ++i) {
            c[i] = BigRat(w[i] * sk);
            sk *= scale;
        }
        PolyQ back(std::move(c));
        *factor_out = back * (BigRat(1) / back.leading());
    }
    return false;
}

}  // namespace moduli
