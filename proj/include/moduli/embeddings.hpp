#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "moduli/polynomial.hpp"
#include "moduli/rational.hpp"

namespace moduli {

/// Closed interval with exact rational endpoints.
struct RatInterval {
    BigRat lo, hi;
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    BigRat width() const { return hi - lo; }
    RatInterval abs() const {
        if (lo >= 0) return {lo, hi};
        if (hi <= 0) return {-hi, -lo};
        return {BigRat(0), std::max(BigRat(-lo), hi)};
    }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        BigRat c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        return {std::min(std::min(c[0], c[1]), std::min(c[2], c[3])),
                std::max(std::max(c[0], c[1]), std::max(c[2], c[3]))};
    }
    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
};

/// Rational lower/upper bounds on sqrt(q), q >= 0, within 2^-prec_bits.
inline RatInterval sqrt_bounds(const BigRat& q, unsigned prec_bits = 64) {
    if (q < 0) throw std::domain_error("sqrt_bounds: negative argument");
    if (q == 0) return {BigRat(0), BigRat(0)};
    // sqrt(a/b) = sqrt(a*b)/b; scale by 4^k for precision
    BigInt a = q.get_num(), b = q.get_den();
    BigInt scale = BigInt(1) << (2 * prec_bits);
    BigInt s = isqrt(a * b * scale);
    BigRat lo = rat(s, b * (BigInt(1) << prec_bits));
    BigRat hi = rat(s + 1, b * (BigInt(1) << prec_bits));
    return {lo, hi};
}

namespace detail {

/// Sturm chain of a squarefree rational polynomial.
inline std::vector<PolyQ> sturm_chain(const PolyQ& f) {
    std::vector<PolyQ> chain = {f, f.derivative()};
    while (!chain.back().is_zero()) {
        const PolyQ& a = chain[chain.size() - 2];
        const PolyQ& b = chain.back();
        PolyQ r = a % b;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

inline int sign_of(const BigRat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline int sign_changes_at(const std::vector<PolyQ>& chain, const BigRat& x) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_of(p(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace detail

/// Number of distinct real roots of a squarefree polynomial in (a, b].
inline int count_real_roots(const PolyQ& f, const BigRat& a, const BigRat& b) {
    auto chain = detail::sturm_chain(f);
    return detail::sign_changes_at(chain, a) - detail::sign_changes_at(chain, b);
}

/// Cauchy bound: all complex roots have |z| <= 1 + max|a_i|/|a_n|.
inline BigRat root_bound(const PolyQ& f) {
    BigRat m(0);
    for (int i = 0; i < f.degree(); ++i) {
        BigRat a = f[static_cast<size_t>(i)] / f.leading();
        if (a < 0) a = -a;
        if (a > m) m = a;
    }
    return m + 1;
}

/// Isolating intervals (lo, hi] for every real root of a squarefree f,
/// refined to width <= max_width. Intervals are sorted and dyadic.
inline std::vector<RatInterval> isolate_real_roots(const PolyQ& f, const BigRat& max_width) {
    if (f.degree() < 1) return {};
    auto chain = detail::sturm_chain(f);
    BigRat bound = root_bound(f);

    struct Seg {
        BigRat lo, hi;
        int nlo, nhi;
    };
    std::vector<RatInterval> out;
    std::vector<Seg> work;
    {
        int nlo = detail::sign_changes_at(chain, -bound);
        int nhi = detail::sign_changes_at(chain, bound);
        if (nlo == nhi) return {};
        work.push_back({-bound, bound, nlo, nhi});
    }
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        int count = s.nlo - s.nhi;
        if (count == 0) continue;
        if (count == 1 && s.hi - s.lo <= max_width) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        BigRat mid = (s.lo + s.hi) / 2;
        // nudge off a root: Sturm counts still work at roots of f, no care needed
        int nmid = detail::sign_changes_at(chain, mid);
        work.push_back({s.lo, mid, s.nlo, nmid});
        work.push_back({mid, s.hi, nmid, s.nhi});
    }
    std::sort(out.begin(), out.end(), [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
    return out;
}

/// Exact rational complex number.
struct RatComplex {
    BigRat re, im;
    friend RatComplex operator+(const RatComplex& a, const RatComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend RatComplex operator-(const RatComplex& a, const RatComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend RatComplex operator*(const RatComplex& a, const RatComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    RatComplex conj() const { return {re, -im}; }
    BigRat norm2() const { return re * re + im * im; }  // |z|^2
    friend RatComplex operator/(const RatComplex& a, const RatComplex& b) {
        BigRat n = b.norm2();
        if (n == 0) throw std::domain_error("RatComplex: division by zero");
        RatComplex c = a * b.conj();
        return {c.re / n, c.im / n};
    }
};

inline RatComplex eval_complex(const PolyQ& f, const RatComplex& z) {
    RatComplex acc{BigRat(0), BigRat(0)};
    for (size_t i = f.coeffs().size(); i-- > 0;) acc = acc * z + RatComplex{f[i], BigRat(0)};
    return acc;
}

/// One embedding of the field: a certified disk containing exactly one root.
/// Real embeddings have is_real = true, im = 0, and the root inside [center
/// +- radius]; complex ones represent a conjugate pair (the upper root).
struct RootDisk {
    RatComplex center;
    BigRat radius_sq;  // exact upper bound on radius^2
    bool is_real = false;
};

namespace detail {

// round a rational to denominator 2^bits (dyadic), keeping exactness cheap
inline BigRat dyadic_round(const BigRat& q, unsigned bits) {
    BigInt scaled;
    BigInt two_k = BigInt(1) << bits;
    BigInt num = q.get_num() * two_k;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    return rat(scaled, two_k);
}

inline RatComplex dyadic_round(const RatComplex& z, unsigned bits) {
    return {dyadic_round(z.re, bits), dyadic_round(z.im, bits)};
}

// double-precision Durand-Kerner to seed the certified refinement
inline std::vector<std::complex<double>> durand_kerner(const PolyQ& f) {
    const int n = f.degree();
    std::vector<std::complex<double>> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<size_t>(i)] = to_double(f[static_cast<size_t>(i)] / f.leading());
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
        return acc;
    };
    double radius = std::max(1.0, std::abs(to_double(root_bound(f))));
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        z[static_cast<size_t>(i)] = std::polar(radius * (0.5 + 0.3 * i / n),
                                               0.79 + 6.283185307179586 * i / n);
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            std::complex<double> delta = eval(z[static_cast<size_t>(i)]) / denom;
            z[static_cast<size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14 * std::max(1.0, radius)) break;
    }
    return z;
}

}  // namespace detail

/// Certified root disks for a squarefree polynomial: one disk per real root
/// (exact Sturm bracket) and one per conjugate pair (upper-half center). The
/// Weierstrass bound |z_i - root| <= n |f(z_i) / prod_{j != i} (z_i - z_j)|
/// makes the union of disks cover all roots; pairwise disjoint disks then
/// hold exactly one root each. Radii shrink below `target_radius` by dyadic
/// Newton refinement; throws after `max_rounds` failed certification rounds.
inline std::vector<RootDisk> certified_root_disks(const PolyQ& f, const BigRat& target_radius,
                                                  int max_rounds = 40) {
    const int n = f.degree();
    if (n < 1) return {};
    PolyQ fmonic = f * (BigRat(1) / f.leading());
    PolyQ fprime = fmonic.derivative();

    std::vector<RatInterval> real_brackets = isolate_real_roots(fmonic, BigRat(1, 1024));
    const int r1 = static_cast<int>(real_brackets.size());
    const int pairs = (n - r1) / 2;
    if (r1 + 2 * pairs != n)
        throw std::runtime_error("certified_root_disks: parity mismatch (polynomial not squarefree?)");

    // initial approximations
    std::vector<RatComplex> centers;
    for (const auto& iv : real_brackets)
        centers.push_back({(iv.lo + iv.hi) / 2, BigRat(0)});
    if (pairs > 0) {
        auto dk = detail::durand_kerner(fmonic);
        std::vector<std::complex<double>> upper;
        for (const auto& z : dk)
            if (z.imag() > 1e-9 * (1.0 + std::abs(z.real()))) upper.push_back(z);
        // keep the `pairs` best-separated upper-half approximations
        std::sort(upper.begin(), upper.end(),
                  [](const auto& a, const auto& b) { return a.imag() > b.imag(); });
        if (static_cast<int>(upper.size()) < pairs)
            throw std::runtime_error("certified_root_disks: double-precision seeding lost conjugate pairs");
        upper.resize(static_cast<size_t>(pairs));
        for (const auto& z : upper) {
            BigRat re(z.real()), im(z.imag());
            centers.push_back({detail::dyadic_round(re, 64), detail::dyadic_round(im, 64)});
        }
    }

    unsigned bits = 128;
    for (int round = 0; round < max_rounds; ++round, bits *= 2) {
        // Newton-refine every center (real ones stay on the axis)
        for (int it = 0; it < 3; ++it) {
            for (size_t i = 0; i < centers.size(); ++i) {
                RatComplex fz = eval_complex(fmonic, centers[i]);
                RatComplex dfz = eval_complex(fprime, centers[i]);
                if (dfz.norm2() == 0) continue;
                RatComplex step = fz / dfz;
                RatComplex next = centers[i] - step;
                if (i < static_cast<size_t>(r1)) next.im = 0;
                centers[i] = detail::dyadic_round(next, bits);
            }
        }

        // assemble the full center list (conjugates included) and certify
        std::vector<RatComplex> all;
        for (int i = 0; i < r1; ++i) all.push_back(centers[static_cast<size_t>(i)]);
        for (size_t i = static_cast<size_t>(r1); i < centers.size(); ++i) {
            all.push_back(centers[i]);
            all.push_back(centers[i].conj());
        }

        std::vector<BigRat> rad_sq(all.size());
        bool ok = true;
        for (size_t i = 0; i < all.size() && ok; ++i) {
            BigRat fz2 = eval_complex(fmonic, all[i]).norm2();
            BigRat denom(1);
            for (size_t j = 0; j < all.size(); ++j)
                if (j != i) denom *= (all[i] - all[j]).norm2();
            if (denom == 0) { ok = false; break; }
            rad_sq[i] = BigRat(static_cast<long>(n) * static_cast<long>(n)) * fz2 / denom;
            if (rad_sq[i] > target_radius * target_radius) ok = false;
        }
        // pairwise disjoint: |c_i - c_j|^2 > 2 (r_i^2 + r_j^2) implies (r_i + r_j)^2 < |c_i - c_j|^2
        for (size_t i = 0; i < all.size() && ok; ++i)
            for (size_t j = i + 1; j < all.size() && ok; ++j)
                if ((all[i] - all[j]).norm2() <= 2 * (rad_sq[i] + rad_sq[j])) ok = false;
        // complex representatives must sit strictly above the axis: im^2 > r^2
        for (size_t i = static_cast<size_t>(r1); i < all.size() && ok; i += 1)
            if (i >= static_cast<size_t>(r1) && ((i - static_cast<size_t>(r1)) % 2 == 0))
                if (all[i].im * all[i].im <= rad_sq[i]) ok = false;

        if (ok) {
            std::vector<RootDisk> disks;
            for (int i = 0; i < r1; ++i)
                disks.push_back({all[static_cast<size_t>(i)], rad_sq[static_cast<size_t>(i)], true});
            for (size_t i = static_cast<size_t>(r1); i < all.size(); i += 2)
                disks.push_back({all[i], rad_sq[i], false});
            return disks;
        }
    }
    throw std::runtime_error("certified_root_disks: certification did not converge");
}

/// Certified |g(root)| interval on a disk: |g(z) - g(c)| <= sum_k |g^(k)(c)|/k! r^k
/// via L1 complex modulus bounds (|re| + |im| >= |z|).
inline RatInterval eval_abs_on_disk(const PolyQ& g, const RootDisk& disk) {
    // radius upper bound
    BigRat r_up = sqrt_bounds(disk.radius_sq, 80).hi;

    // Taylor coefficients of g at the center: g(c + t) = sum_k b_k t^k
    PolyQ shifted = g;
    std::vector<BigRat> taylor_l1;
    {
        // synthetic shift via repeated division by (x - c) on complex parts:
        // evaluate derivatives instead, exactly
        PolyQ der = g;
        BigRat kfact(1);
        for (int k = 0; k <= g.degree(); ++k) {
            if (k > 0) {
                der = der.derivative();
                kfact *= k;
            }
            RatComplex v = eval_complex(der, disk.center);
            BigRat l1 = (v.re < 0 ? BigRat(-v.re) : v.re) + (v.im < 0 ? BigRat(-v.im) : v.im);
            taylor_l1.push_back(l1 / kfact);
        }
    }
    BigRat err(0), rk(1);
    for (size_t k = 1; k < taylor_l1.size(); ++k) {
        rk *= r_up;
        err += taylor_l1[k] * rk;
    }
    RatComplex g0 = eval_complex(g, disk.center);
    RatInterval abs0 = sqrt_bounds(g0.norm2(), 80);
    BigRat lo = abs0.lo - err;
    if (lo < 0) lo = 0;
    return {lo, abs0.hi + err};
}

}  // namespace moduli
