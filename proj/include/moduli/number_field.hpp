#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moduli/embeddings.hpp"
#include "moduli/factorizer.hpp"
#include "moduli/linalg.hpp"
#include "moduli/modp.hpp"
#include "moduli/polynomial.hpp"

namespace moduli {

class CapabilityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Prime ideal P over p in the Dedekind presentation (p, g(theta)). The
/// lifted local factor (Hensel, mod p^prec) drives valuations.
struct PrimeIdealData {
    BigInt p;
    int e = 1;             // ramification index
    int f = 1;             // residue degree
    PolyZ generator;       // g with P = (p, g(theta)), taken mod p
    BigInt ideal_norm() const { return pow(p, static_cast<unsigned long>(f)); }
};

namespace nf_detail {

/// Order in K given by basis w_i = (1/den) * sum_j basis[i][j] theta^j,
/// with `basis` in row HNF.
struct OrderBasis {
    linalg::MatZ basis;
    BigInt den = 1;

    static OrderBasis equation_order(size_t n) {
        linalg::MatZ b(n, linalg::VecZ(n, BigInt(0)));
        for (size_t i = 0; i < n; ++i) b[i][i] = 1;
        return {std::move(b), BigInt(1)};
    }

    void normalize() {
        BigInt g = den;
        for (const auto& row : basis)
            for (const auto& v : row) g = gcd(g, v);
        if (g > 1) {
            den /= g;
            for (auto& row : basis)
                for (auto& v : row) v /= g;
        }
    }

    bool operator==(const OrderBasis& o) const { return den == o.den && basis == o.basis; }

    /// [O : Z[theta]]; the basis denominator over the HNF determinant.
    BigInt index(size_t n) const {
        BigInt det = linalg::hnf_det(basis);
        BigInt dn = pow(den, static_cast<unsigned long>(n));
        if (dn % det != 0)
            throw std::runtime_error("OrderBasis: index is not integral (order does not contain Z[theta]?)");
        return dn / det;
    }
};

/// w_i * w_j expressed in the order's own basis; entries must be integers.
class MultiplicationTable {
public:
    MultiplicationTable(const OrderBasis& order, const PolyQ& f) : n_(static_cast<size_t>(f.degree())) {
        // basis elements as polynomials in theta
        std::vector<PolyQ> w(n_);
        for (size_t i = 0; i < n_; ++i) {
            std::vector<BigRat> c(n_);
            for (size_t j = 0; j < n_; ++j) c[j] = rat(order.basis[i][j], order.den);
            w[i] = PolyQ(std::move(c));
        }
        table_.assign(n_, std::vector<linalg::VecZ>(n_));
        for (size_t i = 0; i < n_; ++i) {
            for (size_t j = i; j < n_; ++j) {
                PolyQ prod = (w[i] * w[j]) % f;
                linalg::VecQ coords(n_, BigRat(0));
                for (size_t k = 0; k < n_; ++k) coords[k] = prod[k] * BigRat(order.den);
                linalg::VecQ sol = linalg::solve_upper_triangular_left(order.basis, coords);
                linalg::VecZ row(n_);
                for (size_t k = 0; k < n_; ++k) {
                    if (!is_integer(sol[k]))
                        throw std::runtime_error("MultiplicationTable: basis does not close under multiplication");
                    row[k] = BigInt(sol[k].get_num());
                }
                table_[i][j] = row;
                table_[j][i] = std::move(row);
            }
        }
    }

    /// coords of (sum a_i w_i) * (sum b_j w_j).
    linalg::VecZ multiply(const linalg::VecZ& a, const linalg::VecZ& b) const {
        linalg::VecZ out(n_, BigInt(0));
        for (size_t i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < n_; ++j) {
                if (b[j] == 0) continue;
                BigInt c = a[i] * b[j];
                const linalg::VecZ& t = table_[i][j];
                for (size_t k = 0; k < n_; ++k) out[k] += c * t[k];
            }
        }
        return out;
    }

    size_t size() const { return n_; }

private:
    size_t n_;
    std::vector<std::vector<linalg::VecZ>> table_;
};

/// Basis rows (in order coordinates) of the p-radical ideal I_p, including pO.
inline linalg::MatZ p_radical(const MultiplicationTable& mult, size_t n, const BigInt& p) {
    unsigned long m = 1;
    BigInt q = p;
    while (q < static_cast<long>(n)) {
        q *= p;
        ++m;
    }
    // columns: coords of w_j^(p^m) mod p
    linalg::MatZ frob(n, linalg::VecZ(n, BigInt(0)));
    for (size_t j = 0; j < n; ++j) {
        linalg::VecZ e(n, BigInt(0));
        e[j] = 1;
        // square-and-multiply over exponent p^m with coefficients reduced mod p
        BigInt exp = pow(p, m);
        linalg::VecZ result(n, BigInt(0)), base = e;
        bool result_set = false;
        while (exp > 0) {
            if (mpz_odd_p(exp.get_mpz_t())) {
                result = result_set ? mult.multiply(result, base) : base;
                result_set = true;
                for (auto& v : result) v = linalg::mod_floor(v, p);
            }
            exp >>= 1;
            if (exp > 0) {
                base = mult.multiply(base, base);
                for (auto& v : base) v = linalg::mod_floor(v, p);
            }
        }
        for (size_t i = 0; i < n; ++i) frob[i][j] = result[i];
    }
    std::vector<linalg::VecZ> kernel = linalg::kernel_mod_p(frob, n, p);

    linalg::MatZ rows;
    for (auto& k : kernel) rows.push_back(std::move(k));
    for (size_t i = 0; i < n; ++i) {
        linalg::VecZ r(n, BigInt(0));
        r[i] = p;
        rows.push_back(std::move(r));
    }
    return linalg::hnf(std::move(rows), n);
}

/// O' = {x in K : x * I subset I} for the radical ideal I (basis rows R in
/// order coordinates). Returns the enlarged order in theta coordinates.
inline OrderBasis ring_of_multipliers(const OrderBasis& order, const MultiplicationTable& mult,
                                      const linalg::MatZ& radical_rows, size_t n, const BigInt& p) {
    // stacked constraint matrix: y (in order coords) such that for every
    // ideal basis element gamma_k, the I-coordinates of y*gamma_k vanish mod p
    linalg::MatZ constraints;
    constraints.reserve(n * n);
    for (size_t k = 0; k < n; ++k) {
        // map: y_j -> I-coords of w_j * gamma_k
        std::vector<linalg::VecZ> cols(n);
        for (size_t j = 0; j < n; ++j) {
            linalg::VecZ ej(n, BigInt(0));
            ej[j] = 1;
            linalg::VecZ prod = mult.multiply(ej, radical_rows[k]);
            linalg::VecQ coords(n);
            for (size_t i = 0; i < n; ++i) coords[i] = BigRat(prod[i]);
            linalg::VecQ sol = linalg::solve_upper_triangular_left(radical_rows, coords);
            linalg::VecZ icoords(n);
            for (size_t i = 0; i < n; ++i) {
                if (!is_integer(sol[i]))
                    throw std::runtime_error("ring_of_multipliers: product left the ideal");
                icoords[i] = BigInt(sol[i].get_num());
            }
            cols[j] = std::move(icoords);
        }
        for (size_t i = 0; i < n; ++i) {
            linalg::VecZ row(n);
            for (size_t j = 0; j < n; ++j) row[j] = cols[j][i];
            constraints.push_back(std::move(row));
        }
    }
    std::vector<linalg::VecZ> kernel = linalg::kernel_mod_p(constraints, n, p);

    // O' = O + (1/p) * span(kernel lifts); assemble in theta coordinates
    BigInt new_den = order.den * p;
    linalg::MatZ rows;
    for (const auto& row : order.basis) {
        linalg::VecZ r(n);
        for (size_t j = 0; j < n; ++j) r[j] = row[j] * p;
        rows.push_back(std::move(r));
    }
    for (const auto& c : kernel) {
        linalg::VecZ r(n, BigInt(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) r[j] += c[i] * order.basis[i][j];
        rows.push_back(std::move(r));
    }
    OrderBasis out{linalg::hnf(std::move(rows), n), new_den};
    out.normalize();
    return out;
}

}  // namespace nf_detail

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field in the power basis of the field's generator.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(NumberFieldPtr field, PolyQ coords);

    const PolyQ& coords() const { return coords_; }
    const NumberFieldPtr& field() const { return field_; }
    bool is_zero() const { return coords_.is_zero(); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(unsigned long k) const;

    BigRat norm() const;  // field norm N_{K/Q}
    bool operator==(const FieldElement& o) const { return coords_ == o.coords_; }

private:
    NumberFieldPtr field_;
    PolyQ coords_;
};

/// A number field K = Q(theta) for a monic integral theta: integral basis,
/// discriminant, signature, prime splitting (Dedekind + Round-2 data), exact
/// valuations and certified embeddings.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    /// `build` rescales a monic rational polynomial to a monic integral
    /// generator, checks irreducibility, and runs Round-2 at every prime
    /// whose square divides disc(f).
    static NumberFieldPtr build(const PolyQ& min_poly, uint64_t seed = Factorizer::kDefaultSeed);

    int degree() const { return static_cast<int>(n_); }
    const PolyQ& defining_poly() const { return f_; }
    /// How the original generator maps into this field: alpha = theta / scale.
    const BigInt& generator_scale() const { return scale_; }
    const BigInt& field_discriminant() const { return disc_k_; }
    const BigInt& index() const { return index_; }
    const BigInt& poly_discriminant() const { return disc_f_; }
    int real_embeddings() const { return r1_; }
    int complex_pairs() const { return r2_; }
    /// Integral basis rows in the power basis of theta (row i = coords of w_i).
    linalg::MatQ integral_basis() const;

    FieldElement element(PolyQ coords_in_alpha) const;
    FieldElement theta_element() const;
    FieldElement from_rational(const BigRat& r) const;

    const std::vector<PrimeIdealData>& split_prime(const BigInt& p) const;
    long valuation(const PrimeIdealData& P, const FieldElement& x) const;

    /// Certified root enclosures at (or below) the given radius.
    std::vector<RootDisk> embeddings(const BigRat& radius) const;

    const Factorizer& factorizer() const { return fac_; }

private:
    friend class FieldElement;

    NumberField(PolyQ f, BigInt scale, uint64_t seed) : f_(std::move(f)), scale_(std::move(scale)), fac_(seed), seed_(seed) {
        n_ = static_cast<size_t>(f_.degree());
    }

    PolyQ f_;            // monic integer-coefficient defining polynomial of theta
    BigInt scale_;       // original generator alpha = theta / scale_
    size_t n_ = 0;
    Factorizer fac_;
    uint64_t seed_;
    BigInt disc_f_, disc_k_, index_;
    nf_detail::OrderBasis order_;
    int r1_ = 0, r2_ = 0;

    mutable std::mutex cache_mutex_;
    mutable std::map<BigInt, std::vector<PrimeIdealData>> split_cache_;
    mutable std::map<BigInt, std::pair<BigInt, std::vector<ModPoly>>> lift_cache_;  // p -> (p^N, factors)
    mutable std::vector<RootDisk> disk_cache_;
    mutable BigRat disk_radius_;

    const std::pair<BigInt, std::vector<ModPoly>>& lifted_factors(const BigInt& p, unsigned long min_exp) const;
};

inline FieldElement::FieldElement(NumberFieldPtr field, PolyQ coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw std::invalid_argument("FieldElement: null field");
    if (coords_.degree() >= field_->degree()) coords_ = coords_ % field_->defining_poly();
}

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_) throw std::invalid_argument("FieldElement: mixed fields");
    return FieldElement(a.field_, a.coords_ + b.coords_);
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_) throw std::invalid_argument("FieldElement: mixed fields");
    return FieldElement(a.field_, a.coords_ - b.coords_);
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_) throw std::invalid_argument("FieldElement: mixed fields");
    return FieldElement(a.field_, (a.coords_ * b.coords_) % a.field_->defining_poly());
}
inline FieldElement FieldElement::operator-() const { return FieldElement(field_, -coords_); }

inline FieldElement FieldElement::pow(unsigned long k) const {
    FieldElement r(field_, PolyQ::constant(BigRat(1)));
    FieldElement b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

inline FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
    // extended Euclid in Q[x] against the defining polynomial
    const PolyQ& f = field_->defining_poly();
    PolyQ r0 = f, r1 = coords_;
    PolyQ t0 = PolyQ::zero(), t1 = PolyQ::constant(BigRat(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = r1; r1 = r;
        PolyQ t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0.degree() != 0)
        throw std::runtime_error("FieldElement: defining polynomial is not irreducible");
    return FieldElement(field_, t0 * (BigRat(1) / r0[0]));
}

inline BigRat FieldElement::norm() const {
    if (coords_.is_zero()) return BigRat(0);
    return resultant(field_->defining_poly(), coords_);
}

inline NumberFieldPtr NumberField::build(const PolyQ& min_poly, uint64_t seed) {
    if (!min_poly.is_monic()) throw std::domain_error("NumberField: defining polynomial must be monic");
    const int n = min_poly.degree();
    if (n < 1) throw std::domain_error("NumberField: degree must be >= 1");
    if (n > 8) throw CapabilityError("NumberField: degree " + std::to_string(n) + " exceeds the supported bound 8");

    PolyQ witness;
    if (n > 1 && !is_irreducible_monic(min_poly, &witness, seed))
        throw std::domain_error("NumberField: polynomial is reducible; factor " + to_string(witness, "x"));

    // rescale so theta = scale * alpha has a monic *integer* minimal polynomial
    BigInt scale = 1;
    {
        std::map<BigInt, unsigned long> pexp;
        for (int i = 0; i < n; ++i) {
            BigInt den = min_poly[static_cast<size_t>(i)].get_den();
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
    std::vector<BigRat> scaled(static_cast<size_t>(n) + 1);
    BigInt sk = 1;
    for (int i = n; i >= 0; --i) {
        BigRat c = min_poly[static_cast<size_t>(i)] * BigRat(sk);
        if (!is_integer(c)) throw std::runtime_error("NumberField: generator rescaling failed");
        scaled[static_cast<size_t>(i)] = c;
        sk *= scale;
    }

    auto K = NumberFieldPtr(new NumberField(PolyQ(std::move(scaled)), scale, seed));
    auto* self = const_cast<NumberField*>(K.get());

    // discriminant of the defining polynomial (monic: no lc division needed)
    BigRat disc_q = discriminant(self->f_);
    if (!is_integer(disc_q)) throw std::runtime_error("NumberField: non-integral discriminant");
    self->disc_f_ = BigInt(disc_q.get_num());
    if (self->disc_f_ == 0) throw std::domain_error("NumberField: defining polynomial is not squarefree");

    // Round-2 at each prime with p^2 | disc(f)
    nf_detail::OrderBasis order = nf_detail::OrderBasis::equation_order(self->n_);
    FactoredInteger disc_fact;
    try {
        disc_fact = self->fac_.factorize(self->disc_f_);
    } catch (const std::exception& e) {
        throw CapabilityError(std::string("NumberField: cannot factor disc(f): ") + e.what());
    }
    for (const auto& [p, e] : disc_fact.factors()) {
        if (e < 2) continue;
        while (true) {
            nf_detail::MultiplicationTable mult(order, self->f_);
            linalg::MatZ radical = nf_detail::p_radical(mult, self->n_, p);
            nf_detail::OrderBasis bigger = nf_detail::ring_of_multipliers(order, mult, radical, self->n_, p);
            if (bigger == order) break;
            order = std::move(bigger);
        }
    }
    self->order_ = order;
    self->index_ = order.index(self->n_);
    BigInt idx_sq = self->index_ * self->index_;
    if (self->disc_f_ % idx_sq != 0)
        throw std::runtime_error("NumberField: index^2 does not divide disc(f)");
    self->disc_k_ = self->disc_f_ / idx_sq;

    // signature by Sturm count over the whole line
    self->r1_ = static_cast<int>(isolate_real_roots(self->f_, root_bound(self->f_) * 2).size());
    if ((n - self->r1_) % 2 != 0) throw std::runtime_error("NumberField: signature parity error");
    self->r2_ = (n - self->r1_) / 2;
    if ((self->r2_ % 2 == 0) != (self->disc_k_ > 0))
        throw std::runtime_error("NumberField: discriminant sign does not match signature");
    return K;
}

inline linalg::MatQ NumberField::integral_basis() const {
    linalg::MatQ rows(n_, linalg::VecQ(n_));
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) rows[i][j] = rat(order_.basis[i][j], order_.den);
    return rows;
}

inline FieldElement NumberField::element(PolyQ coords_in_alpha) const {
    // alpha = theta / scale: substitute x -> theta/scale into the coordinates
    std::vector<BigRat> c(coords_in_alpha.coeffs());
    BigRat sk(1);
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = c[i] / sk;
        sk *= BigRat(scale_);
    }
    return FieldElement(shared_from_this(), PolyQ(std::move(c)));
}

inline FieldElement NumberField::theta_element() const {
    return FieldElement(shared_from_this(), PolyQ::identity());
}

inline FieldElement NumberField::from_rational(const BigRat& r) const {
    return FieldElement(shared_from_this(), PolyQ::constant(r));
}

inline const std::vector<PrimeIdealData>& NumberField::split_prime(const BigInt& p) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = split_cache_.find(p);
        if (it != split_cache_.end()) return it->second;
    }
    if (!is_prime(p)) throw std::domain_error("split_prime: " + p.get_str() + " is not prime");
    if (index_ % p == 0)
        throw CapabilityError("split_prime: unsupported index divisor p = " + p.get_str() +
                              " (p divides [O_K : Z[theta]] = " + index_.get_str() + ")");

    PolyZ fz = to_integer_poly(f_);
    std::vector<PrimeIdealData> out;
    int ef_total = 0;
    for (const auto& [g, mult] : modp::factor_mod_p(fz, p, seed_)) {
        PrimeIdealData P;
        P.p = p;
        P.e = mult;
        P.f = g.degree();
        P.generator = g.to_int_poly();
        ef_total += P.e * P.f;
        out.push_back(std::move(P));
    }
    if (ef_total != degree()) throw std::runtime_error("split_prime: sum e*f != degree");

    std::lock_guard<std::mutex> lock(cache_mutex_);
    return split_cache_.emplace(p, std::move(out)).first->second;
}

inline const std::pair<BigInt, std::vector<ModPoly>>& NumberField::lifted_factors(const BigInt& p, unsigned long min_exp) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = lift_cache_.find(p);
        if (it != lift_cache_.end() && it->second.first >= pow(p, min_exp)) return it->second;
        if (it != lift_cache_.end()) lift_cache_.erase(it);
    }
    PolyZ fz = to_integer_poly(f_);
    // pairwise-coprime parts g_i^{e_i} of f mod p
    std::vector<ModPoly> parts;
    for (const auto& [g, mult] : modp::factor_mod_p(fz, p, seed_)) {
        ModPoly h = g;
        for (int k = 1; k < mult; ++k) h = h * g;
        parts.push_back(h);
    }
    BigInt used;
    std::vector<ModPoly> lifted =
        parts.size() == 1 ? std::vector<ModPoly>{ModPoly::from_int_poly(fz, pow(p, min_exp))}
                          : modp::hensel_lift_list(fz, parts, p, pow(p, min_exp), &used);
    if (parts.size() == 1) used = pow(p, min_exp);

    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = lift_cache_.emplace(p, std::make_pair(used, std::move(lifted)));
    if (!inserted) it->second = std::make_pair(used, std::move(lifted));
    return it->second;
}

/// v_P(x) for x != 0: clears denominators, then reads the valuation off the
/// p-adic resultant with the Hensel-lifted local factor belonging to P.
inline long NumberField::valuation(const PrimeIdealData& P, const FieldElement& x) const {
    if (x.is_zero()) throw std::domain_error("valuation: zero element");
    if (index_ % P.p == 0)
        throw CapabilityError("valuation: unsupported index divisor p = " + P.p.get_str());

    BigInt den;
    PolyZ y = to_integer_poly(x.coords(), &den);
    long den_val = static_cast<long>(p_valuation(den, P.p));

    unsigned long prec = 32;
    for (int attempt = 0; attempt < 10; ++attempt, prec *= 2) {
        const auto& [pk, factors] = lifted_factors(P.p, prec);
        // find the lifted factor congruent to generator^e mod p
        ModPoly target = ModPoly::from_int_poly(P.generator, P.p);
        ModPoly target_pow = ModPoly::one(P.p);
        for (int i = 0; i < P.e; ++i) target_pow = target_pow * target;
        const ModPoly* local = nullptr;
        for (const auto& g : factors)
            if (g.with_modulus(P.p) == target_pow) { local = &g; break; }
        if (!local) throw std::runtime_error("valuation: lifted factor not found");

        BigInt res = resultant(local->to_int_poly(), y);
        if (res == 0) continue;  // precision too low: the true resultant is nonzero
        unsigned long v = p_valuation(res, P.p);
        // trustworthy only if strictly below the working precision
        if (v >= p_valuation(pk, P.p)) continue;
        if (v % static_cast<unsigned long>(P.f) != 0)
            throw std::runtime_error("valuation: resultant valuation not divisible by residue degree");
        return static_cast<long>(v / static_cast<unsigned long>(P.f)) - static_cast<long>(P.e) * den_val;
    }
    throw std::runtime_error("valuation: precision ladder exhausted");
}

inline std::vector<RootDisk> NumberField::embeddings(const BigRat& radius) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (!disk_cache_.empty() && disk_radius_ <= radius) return disk_cache_;
    disk_cache_ = certified_root_disks(f_, radius);
    disk_radius_ = radius;
    return disk_cache_;
}

}  // namespace moduli
