#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "moduli/rational.hpp"

namespace moduli {

/// A nonzero integer stored as sign * prod p^e with the primes as map keys.
/// An empty factor map is a unit (+1 or -1). Exponents are always >= 1;
/// primality of the keys is the factorizer's responsibility.
class FactoredInteger {
public:
    using Map = std::map<BigInt, unsigned long>;

    FactoredInteger() : sign_(1) {}
    FactoredInteger(int sign, Map factors) : sign_(sign), factors_(std::move(factors)) {
        if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("FactoredInteger: sign must be +1 or -1");
        for (const auto& [p, e] : factors_) {
            if (p < 2) throw std::invalid_argument("FactoredInteger: factor " + p.get_str() + " < 2");
            if (e == 0) throw std::invalid_argument("FactoredInteger: zero exponent stored");
        }
    }

    static FactoredInteger one() { return FactoredInteger(); }

    int sign() const { return sign_; }
    const Map& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }

    unsigned long exponent_of(const BigInt& p) const {
        auto it = factors_.find(p);
        return it == factors_.end() ? 0 : it->second;
    }

    BigInt value() const {
        BigInt v = sign_;
        for (const auto& [p, e] : factors_) v *= moduli::pow(p, e);
        return v;
    }

    /// Product of the distinct primes.
    BigInt radical_value() const {
        BigInt v = 1;
        for (const auto& [p, e] : factors_) v *= p;
        return v;
    }

    FactoredInteger& operator*=(const FactoredInteger& o) {
        sign_ *= o.sign_;
        for (const auto& [p, e] : o.factors_) factors_[p] += e;
        return *this;
    }
    friend FactoredInteger operator*(FactoredInteger a, const FactoredInteger& b) { return a *= b; }

    FactoredInteger pow(unsigned long k) const {
        if (k == 0) return one();
        Map m = factors_;
        for (auto& [p, e] : m) e *= k;
        return FactoredInteger(k % 2 == 0 ? 1 : sign_, std::move(m));
    }

    /// Multiplies every exponent by the rational s. Fails unless all scaled
    /// exponents are positive integers (the sign must be + unless s is an
    /// odd integer).
    FactoredInteger scale_exponents(const BigRat& s) const {
        Map m;
        for (const auto& [p, e] : factors_) {
            BigRat scaled = BigRat(static_cast<unsigned long>(e)) * s;
            if (!is_integer(scaled) || scaled <= 0)
                throw std::domain_error("scale_exponents: exponent of " + p.get_str() + " scales to non-positive-integer " + to_string(scaled));
            m[p] = scaled.get_num().get_ui();
        }
        int sg = sign_;
        if (sg == -1 && !(is_integer(s) && s.get_num() % 2 != 0))
            throw std::domain_error("scale_exponents: sign does not survive exponent " + to_string(s));
        return FactoredInteger(sg, std::move(m));
    }

    /// "3^12 * 7^8 * 19^4 * 23^2"; units render as "1"/"-1", sign as a "-" prefix.
    std::string str() const {
        std::string out = sign_ < 0 ? "-" : "";
        if (factors_.empty()) return out + "1";
        bool first = true;
        for (const auto& [p, e] : factors_) {
            if (!first) out += " * ";
            first = false;
            out += p.get_str();
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    bool operator==(const FactoredInteger& o) const = default;

private:
    int sign_;
    Map factors_;
};

/// A nonzero rational as a fully reduced quotient of factored integers; the
/// denominator is positive and shares no prime with the numerator.
class FactoredRational {
public:
    FactoredRational() = default;
    FactoredRational(FactoredInteger num, FactoredInteger den) {
        if (den.sign() < 0) {
            den = FactoredInteger(1, den.factors());
            num = FactoredInteger(-num.sign(), num.factors());
        }
        // cancel common primes eagerly
        FactoredInteger::Map nm = num.factors(), dm = den.factors();
        for (auto it = nm.begin(); it != nm.end();) {
            auto jt = dm.find(it->first);
            if (jt == dm.end()) { ++it; continue; }
            unsigned long c = std::min(it->second, jt->second);
            it->second -= c;
            jt->second -= c;
            if (jt->second == 0) dm.erase(jt);
            if (it->second == 0) it = nm.erase(it); else ++it;
        }
        num_ = FactoredInteger(num.sign(), std::move(nm));
        den_ = FactoredInteger(1, std::move(dm));
    }

    const FactoredInteger& num() const { return num_; }
    const FactoredInteger& den() const { return den_; }

    BigRat value() const { return rat(num_.value(), den_.value()); }

    std::string str() const {
        if (den_.is_unit()) return num_.str();
        return num_.str() + " / " + den_.str();
    }

    bool operator==(const FactoredRational& o) const = default;

private:
    FactoredInteger num_;
    FactoredInteger den_;
};

}  // namespace moduli
