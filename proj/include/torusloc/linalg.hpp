#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "torusloc/rational.hpp"
#include "torusloc/weight.hpp"

namespace torusloc {

using QMatrix = std::vector<std::vector<Rational>>;

inline std::size_t mat_rows(const QMatrix& m) { return m.size(); }
inline std::size_t mat_cols(const QMatrix& m) { return m.empty() ? 0 : m[0].size(); }

inline QMatrix mat_identity(std::size_t n) {
    QMatrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline std::vector<Rational> mat_apply(const QMatrix& m, const std::vector<Rational>& v) {
    if (mat_cols(m) != v.size()) throw std::invalid_argument("mat_apply: dimension mismatch");
    std::vector<Rational> r(mat_rows(m));
    for (std::size_t i = 0; i < mat_rows(m); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < v.size(); ++j) s += m[i][j] * v[j];
        r[i] = s;
    }
    return r;
}

inline Weight mat_apply(const QMatrix& m, const Weight& w) {
    return Weight(mat_apply(m, w.coords()));
}

inline QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    if (mat_cols(a) != mat_rows(b)) throw std::invalid_argument("mat_mul: dimension mismatch");
    QMatrix r(mat_rows(a), std::vector<Rational>(mat_cols(b)));
    for (std::size_t i = 0; i < mat_rows(a); ++i)
        for (std::size_t k = 0; k < mat_cols(a); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < mat_cols(b); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

// Row-reduce in place; returns rank. Records pivot columns if asked.
inline std::size_t row_reduce(QMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr) {
    std::size_t rows = mat_rows(m), cols = mat_cols(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

inline std::size_t mat_rank(QMatrix m) { return row_reduce(m); }

// Solve A x = b exactly; nullopt if inconsistent. Free variables are set to 0.
inline std::optional<std::vector<Rational>> solve_linear(QMatrix a, std::vector<Rational> b) {
    std::size_t rows = mat_rows(a), cols = mat_cols(a);
    if (b.size() != rows) throw std::invalid_argument("solve_linear: dimension mismatch");
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<std::size_t> piv;
    std::size_t rk = row_reduce(a, &piv);
    for (std::size_t i = rk; i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;
    // a pivot in the augmented column means inconsistency
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = a[i][cols];
    return x;
}

// Basis of the kernel of A (columns are the unknowns).
inline std::vector<std::vector<Rational>> kernel_basis(QMatrix a) {
    std::size_t cols = mat_cols(a);
    std::vector<std::size_t> piv;
    std::size_t rk = row_reduce(a, &piv);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < rk; ++i) v[piv[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rational mat_det(QMatrix m) {
    std::size_t n = mat_rows(m);
    if (n != mat_cols(m)) throw std::invalid_argument("mat_det: square matrix expected");
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) { std::swap(m[p], m[c]); det = -det; }
        det *= m[c][c];
        Rational inv = m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

inline QMatrix mat_inverse(const QMatrix& m) {
    std::size_t n = mat_rows(m);
    if (n != mat_cols(m)) throw std::invalid_argument("mat_inverse: square matrix expected");
    QMatrix aug(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    if (row_reduce(aug) != n) throw std::domain_error("mat_inverse: singular matrix");
    QMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

// ---------------------------------------------------------------------------
// Integer lattice kernels
// ---------------------------------------------------------------------------

using ZMatrix = std::vector<std::vector<Int>>;

// Row-style Hermite-like echelon form by integer row operations.
// Returns the nonzero rows: a Z-basis of the row lattice, in echelon shape
// with positive pivots.
inline ZMatrix z_row_echelon(ZMatrix m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // gcd-sweep column c below row r
        while (true) {
            std::size_t p = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (m[i][c] != 0 && (p == rows || abs(m[i][c]) < abs(m[p][c]))) p = i;
            if (p == rows) break;
            std::swap(m[p], m[r]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                Int q = m[i][c] / m[r][c];
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (m[r][c] != 0) {
            if (m[r][c] < 0)
                for (std::size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
            ++r;
        }
    }
    m.resize(r);
    return m;
}

// Is v an integer combination of the echelon basis rows?
inline bool z_in_row_lattice(const ZMatrix& basis, std::vector<Int> v) {
    for (const auto& row : basis) {
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        if (c == row.size()) continue;
        if (v[c] % row[c] != 0) continue; // cannot cancel with this pivot; keep going
        Int q = v[c] / row[c];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// Unimodular U (det +-1, integer) with U * primitive_part(v) = e_1.
inline QMatrix unimodular_to_axis(const Weight& v) {
    if (v.is_zero()) throw std::invalid_argument("unimodular_to_axis: zero vector");
    if (!v.is_integral()) throw std::invalid_argument("unimodular_to_axis: integral vector expected");
    std::size_t n = v.rank();
    std::vector<Int> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = rat_num(v[i]);
    QMatrix U = mat_identity(n);
    auto row_comb = [&](std::size_t i, std::size_t k, const Int& a, const Int& b,
                        const Int& c, const Int& d) {
        // (row_i, row_k) <- (a*row_i + b*row_k, c*row_i + d*row_k), ad - bc = +-1
        for (std::size_t j = 0; j < n; ++j) {
            Rational ri = U[i][j], rk = U[k][j];
            U[i][j] = Rational(a) * ri + Rational(b) * rk;
            U[k][j] = Rational(c) * ri + Rational(d) * rk;
        }
    };
    for (std::size_t k = 1; k < n; ++k) {
        if (u[k] == 0) continue;
        if (u[0] == 0) {
            row_comb(0, k, 0, 1, -1, 0);
            std::swap(u[0], u[k]);
            u[k] = -u[k];
            continue;
        }
        Int x, y;
        Int g = ext_gcd(u[0], u[k], x, y);
        row_comb(0, k, x, y, -u[k] / g, u[0] / g);
        u[0] = g;
        u[k] = 0;
    }
    if (u[0] < 0) {
        for (std::size_t j = 0; j < n; ++j) U[0][j] = -U[0][j];
        u[0] = -u[0];
    }
    // u[0] is now gcd of the original coordinates; U * primitive(v) = e_1
    return U;
}

} // namespace torusloc
