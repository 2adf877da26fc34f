#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace moduli {

// All exact arithmetic in this library runs on GMP. The two aliases are the
// only GMP-facing names the rest of the code uses.
using BigInt = mpz_class;
using BigRat = mpq_class;

// mpz_class lacks long long constructors on this toolchain; long is 64-bit here.
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }

inline BigInt pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigRat pow(const BigRat& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("pow: 0 to a negative power");
        BigRat r;
        mpq_inv(r.get_mpq_t(), base.get_mpq_t());
        return pow(r, -exp);
    }
    BigRat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
    return r;  // base was canonical, so num^e / den^e is too
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Floor of sqrt(n); n must be >= 0.
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const BigInt& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// v_p(n) for n != 0: exponent of prime p in n.
inline unsigned long p_valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw std::domain_error("p_valuation: zero argument");
    BigInt rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

inline BigRat rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

// Parses a decimal-free fraction string like "-2187/125" or an integer "8748".
inline BigRat parse_rational(std::string_view text) {
    std::string s(text);
    BigRat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline BigInt parse_integer(std::string_view text) {
    std::string s(text);
    BigInt n;
    if (mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_integer: malformed integer '" + s + "'");
    return n;
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }

inline std::string to_string(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Approximate natural log of a positive integer with ~1e-15 relative accuracy.
// The value is split as m * 2^e with m in [0.5, 1) so magnitudes far beyond
// double range stay representable.
inline double log_approx(const BigInt& n) {
    if (n <= 0) throw std::domain_error("log_approx: argument must be positive");
    signed long e = 0;
    double m = mpz_get_d_2exp(&e, n.get_mpz_t());
    return std::log(m) + static_cast<double>(e) * 0.6931471805599453;
}

inline double log_approx(const BigRat& q) {
    if (q <= 0) throw std::domain_error("log_approx: argument must be positive");
    return log_approx(BigInt(q.get_num())) - log_approx(BigInt(q.get_den()));
}

inline double to_double(const BigRat& q) { return q.get_d(); }

}  // namespace moduli
