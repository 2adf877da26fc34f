#pragma once

#include <stdexcept>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli::linalg {

using VecZ = std::vector<BigInt>;
using MatZ = std::vector<VecZ>;
using VecQ = std::vector<BigRat>;
using MatQ = std::vector<VecQ>;

/// Row-style Hermite normal form of the lattice spanned by the input rows.
/// Result is square upper-triangular with positive diagonal and entries above
/// each pivot reduced into [0, pivot); throws if the rows do not span full
/// rank (all callers here work with full-rank lattices).
inline MatZ hnf(MatZ rows, size_t n) {
    for (auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("hnf: ragged rows");

    size_t row_count = rows.size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < n && pivot_row < row_count; ++col) {
        // clear the column below pivot_row with the Euclidean algorithm on rows
        for (size_t i = pivot_row + 1; i < row_count; ++i) {
            while (rows[i][col] != 0) {
                if (rows[pivot_row][col] == 0) {
                    std::swap(rows[pivot_row], rows[i]);
                    continue;
                }
                BigInt q = rows[i][col] / rows[pivot_row][col];  // truncating is fine, loop converges
                if (q != 0)
                    for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[pivot_row][j];
                if (rows[i][col] != 0) std::swap(rows[pivot_row], rows[i]);
            }
        }
        if (rows[pivot_row][col] == 0) continue;  // rank defect in this column
        if (rows[pivot_row][col] < 0)
            for (size_t j = 0; j < n; ++j) rows[pivot_row][j] = -rows[pivot_row][j];
        ++pivot_row;
    }

    rows.resize(pivot_row);
    if (pivot_row != n) throw std::domain_error("hnf: input rows do not have full rank");

    // reduce entries above each pivot
    for (size_t i = n; i-- > 0;) {
        for (size_t k = i + 1; k < n; ++k) {
            if (rows[k][k] == 0) continue;
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][k].get_mpz_t(), rows[k][k].get_mpz_t());
            if (q != 0)
                for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[k][j];
        }
    }
    return rows;
}

/// Determinant of an HNF matrix (product of the diagonal).
inline BigInt hnf_det(const MatZ& h) {
    BigInt d = 1;
    for (size_t i = 0; i < h.size(); ++i) d *= h[i][i];
    return d;
}

inline BigInt mod_floor(const BigInt& a, const BigInt& p) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

inline BigInt mod_inverse(const BigInt& a, const BigInt& p) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: " + a.get_str() + " not invertible mod " + p.get_str());
    return r;
}

/// Basis of the right kernel {x : A x = 0} over F_p. A is m x n; the result
/// vectors have length n with entries in [0, p).
inline std::vector<VecZ> kernel_mod_p(MatZ a, size_t n, const BigInt& p) {
    const size_t m = a.size();
    for (auto& row : a)
        for (auto& v : row) v = mod_floor(v, p);

    std::vector<long> pivot_of_col(n, -1);
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < m; ++col) {
        size_t sel = rank;
        while (sel < m && a[sel][col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(a[rank], a[sel]);
        BigInt inv = mod_inverse(a[rank][col], p);
        for (size_t j = col; j < n; ++j) a[rank][j] = mod_floor(a[rank][j] * inv, p);
        for (size_t i = 0; i < m; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            BigInt f = a[i][col];
            for (size_t j = col; j < n; ++j) a[i][j] = mod_floor(a[i][j] - f * a[rank][j], p);
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }

    std::vector<VecZ> basis;
    for (size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] != -1) continue;
        VecZ v(n, BigInt(0));
        v[col] = 1;
        for (size_t c = 0; c < n; ++c)
            if (pivot_of_col[c] != -1)
                v[c] = mod_floor(-a[static_cast<size_t>(pivot_of_col[c])][col], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves x * U = b for upper-triangular U with nonzero diagonal, over Q.
inline VecQ solve_upper_triangular_left(const MatZ& u, const VecQ& b) {
    const size_t n = u.size();
    VecQ x(n, BigRat(0));
    for (size_t j = 0; j < n; ++j) {
        BigRat acc = b[j];
        for (size_t i = 0; i < j; ++i) acc -= x[i] * BigRat(u[i][j]);
        x[j] = acc / BigRat(u[j][j]);
    }
    return x;
}

/// Gaussian-elimination solve A x = b over Q; A square nonsingular.
inline VecQ solve(MatQ a, VecQ b) {
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i)
        if (a[i].size() != n) throw std::invalid_argument("solve: matrix not square");
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) throw std::domain_error("solve: singular matrix");
        std::swap(a[col], a[sel]);
        std::swap(b[col], b[sel]);
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            BigRat f = a[i][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    VecQ x(n, BigRat(0));
    for (size_t i = n; i-- > 0;) {
        BigRat acc = b[i];
        for (size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace moduli::linalg
