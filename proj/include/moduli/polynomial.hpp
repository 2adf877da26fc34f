#pragma once

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli {

/// Dense univariate polynomial with exact coefficients, ascending order.
/// T is BigRat or BigInt in practice. The zero polynomial has degree -1.
template <typename T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
    static Poly identity() { return Poly(std::vector<T>{T(0), T(1)}); }  // x

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    const T& operator[](size_t i) const {
        static const T kZero{};
        return i < c_.size() ? c_[i] : kZero;
    }

    const T& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

    T operator()(const T& x) const {
        T acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly operator-() const {
        std::vector<T> r = c_;
        for (auto& v : r) v = -v;
        return Poly(std::move(r));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T{});
        for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T{});
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> r = a.c_;
        for (auto& v : r) v = v * s;
        return Poly(std::move(r));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }

    bool operator==(const Poly&) const = default;

    Poly derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<T> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(r));
    }

    Poly pow(unsigned long k) const {
        Poly r = constant(T(1)), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    /// Horner shift: p(x + s).
    Poly shifted(const T& s) const {
        Poly r = zero();
        Poly lin({s, T(1)});
        for (size_t i = c_.size(); i-- > 0;) r = r * lin + constant(c_[i]);
        return r;
    }

private:
    std::vector<T> c_;
    void trim() {
        while (!c_.empty() && c_.back() == T{}) c_.pop_back();
    }
};

using PolyQ = Poly<BigRat>;
using PolyZ = Poly<BigInt>;

/// Euclidean division over a field coefficient type; returns {quotient, remainder}.
inline std::pair<PolyQ, PolyQ> divrem(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<BigRat> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {PolyQ::zero(), a};
    std::vector<BigRat> quo(a.degree() - db + 1, BigRat(0));
    for (int i = a.degree(); i >= db; --i) {
        BigRat q = rem[i] / b.leading();
        if (q == 0) continue;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
    }
    return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

inline PolyQ operator/(const PolyQ& a, const PolyQ& b) { return divrem(a, b).first; }
inline PolyQ operator%(const PolyQ& a, const PolyQ& b) { return divrem(a, b).second; }

/// Monic gcd over the rationals.
inline PolyQ gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = a % b;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a * (BigRat(1) / a.leading());
}

/// lcm of coefficient denominators.
inline BigInt denominator_lcm(const PolyQ& p) {
    BigInt l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, BigInt(c.get_den()));
    return l;
}

/// Clears denominators: returns integer polynomial d*p where d = denominator_lcm(p).
inline PolyZ to_integer_poly(const PolyQ& p, BigInt* denominator = nullptr) {
    BigInt d = denominator_lcm(p);
    std::vector<BigInt> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.push_back(BigInt(q.get_num()) * (d / q.get_den()));
    if (denominator) *denominator = d;
    return PolyZ(std::move(c));
}

inline PolyQ to_rational_poly(const PolyZ& p) {
    std::vector<BigRat> c;
    c.reserve(p.coeffs().size());
    for (const auto& z : p.coeffs()) c.emplace_back(z);
    return PolyQ(std::move(c));
}

/// gcd of coefficients (positive), 0 for the zero polynomial.
inline BigInt content(const PolyZ& p) {
    BigInt g = 0;
    for (const auto& c : p.coeffs()) g = gcd(g, c);
    return g;
}

inline PolyZ primitive_part(const PolyZ& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<BigInt> c;
    for (const auto& v : p.coeffs()) c.push_back(v / g);
    return PolyZ(std::move(c));
}

namespace detail {

/// Fraction-free (Bareiss) determinant of a square integer matrix. Destroys m.
inline BigInt bareiss_det(std::vector<std::vector<BigInt>>& m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace detail

/// Resultant of two integer polynomials via the Sylvester determinant
/// (fraction-free elimination; exact).
inline BigInt resultant(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const int da = a.degree(), db = b.degree();
    if (da == 0) return pow(a.leading(), static_cast<unsigned long>(db));
    if (db == 0) return pow(b.leading(), static_cast<unsigned long>(da));
    const size_t n = static_cast<size_t>(da + db);
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
    for (int r = 0; r < db; ++r)
        for (int i = 0; i <= da; ++i) m[r][r + i] = a[da - i];
    for (int r = 0; r < da; ++r)
        for (int i = 0; i <= db; ++i) m[db + r][r + i] = b[db - i];
    return detail::bareiss_det(m);
}

/// Resultant over the rationals.
inline BigRat resultant(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return BigRat(0);
    BigInt da, db;
    PolyZ az = to_integer_poly(a, &da);
    PolyZ bz = to_integer_poly(b, &db);
    BigRat r(resultant(az, bz));
    r /= pow(BigRat(da), b.degree());
    r /= pow(BigRat(db), a.degree());
    return r;
}

/// disc(f) = (-1)^(n(n-1)/2) * resultant(f, f') / lc(f).
inline BigRat discriminant(const PolyQ& f) {
    if (f.degree() < 1) throw std::domain_error("discriminant: degree must be >= 1");
    BigRat r = resultant(f, f.derivative()) / f.leading();
    long n = f.degree();
    if ((n * (n - 1) / 2) % 2 != 0) r = -r;
    return r;
}

/// Renders sum c_k x^k with a caller-supplied coefficient formatter; terms
/// descending, zero coefficients skipped, unit coefficients folded into the
/// power. The formatter must parenthesize anything that contains '+'/'-'.
template <typename T>
std::string poly_to_string(const Poly<T>& p, const std::string& var,
                           const std::function<std::string(const T&)>& fmt,
                           const std::function<bool(const T&)>& is_neg,
                           const std::function<T(const T&)>& negate) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        T c = p[k];
        if (c == T{}) continue;
        bool neg = is_neg(c);
        if (neg) c = negate(c);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string cs = fmt(c);
        if (k == 0) {
            out += cs;
        } else {
            std::string xs = (k == 1) ? var : var + "^" + std::to_string(k);
            out += (cs == "1") ? xs : cs + "*" + xs;
        }
    }
    return out;
}

inline std::string to_string(const PolyQ& p, const std::string& var = "x") {
    return poly_to_string<BigRat>(
        p, var, [](const BigRat& c) { return to_string(c); },
        [](const BigRat& c) { return c < 0; }, [](const BigRat& c) { return BigRat(-c); });
}

inline std::string to_string(const PolyZ& p, const std::string& var = "x") {
    return poly_to_string<BigInt>(
        p, var, [](const BigInt& c) { return c.get_str(); },
        [](const BigInt& c) { return c < 0; }, [](const BigInt& c) { return BigInt(-c); });
}

}  // namespace moduli
