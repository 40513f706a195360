#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "torusloc/linalg.hpp"
#include "torusloc/rational.hpp"

// Exact rational simplex, dense tableau, Bland's rule. Sized for the small
// systems that show up in polytope work (a few hundred columns at most).

namespace torusloc {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    std::vector<Rational> x;
};

namespace detail {

// min c.z  s.t.  M z = d, z >= 0
class Simplex {
public:
    Simplex(QMatrix m, std::vector<Rational> d) : t_(std::move(m)), rhs_(std::move(d)) {
        rows_ = t_.size();
        cols_ = rows_ ? t_[0].size() : 0;
        for (std::size_t i = 0; i < rows_; ++i)
            if (rhs_[i] < 0) {
                for (auto& v : t_[i]) v = -v;
                rhs_[i] = -rhs_[i];
            }
    }

    LPResult solve(const std::vector<Rational>& cost) {
        // phase 1: artificial basis
        std::size_t n0 = cols_;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < rows_; ++k) t_[i].push_back(i == k ? 1 : 0);
        }
        cols_ += rows_;
        basis_.resize(rows_);
        for (std::size_t i = 0; i < rows_; ++i) basis_[i] = n0 + i;
        std::vector<Rational> phase1(cols_);
        for (std::size_t j = n0; j < cols_; ++j) phase1[j] = 1;
        build_cost_row(phase1);
        run();
        if (obj_ != 0) return {LPStatus::Infeasible, 0, {}};
        // pivot artificials out of the basis where possible
        for (std::size_t i = 0; i < rows_; ++i) {
            if (basis_[i] < n0) continue;
            std::size_t j = 0;
            for (; j < n0; ++j)
                if (t_[i][j] != 0) break;
            if (j < n0) pivot(i, j);
        }
        // drop the artificial columns; any row still basic in an artificial is
        // a redundant constraint with zero rhs, harmless to keep as-is only if
        // the artificial stays at zero -- remove the row instead
        for (std::size_t i = rows_; i-- > 0;) {
            if (basis_[i] >= n0) {
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --rows_;
            }
        }
        for (auto& row : t_) row.resize(n0);
        cols_ = n0;
        // phase 2
        build_cost_row(cost);
        if (!run()) return {LPStatus::Unbounded, 0, {}};
        LPResult r;
        r.status = LPStatus::Optimal;
        r.x.assign(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i) r.x[basis_[i]] = rhs_[i];
        r.value = 0;
        for (std::size_t j = 0; j < cols_ && j < cost.size(); ++j) r.value += cost[j] * r.x[j];
        return r;
    }

private:
    void build_cost_row(const std::vector<Rational>& cost) {
        cost_ = cost;
        cost_.resize(cols_, 0);
        obj_ = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Rational cb = cost_[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) cost_[j] -= cb * t_[i][j];
            obj_ -= cb * rhs_[i];
        }
    }

    // returns false on unbounded
    bool run() {
        while (true) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (cost_[j] < 0) { enter = j; break; } // Bland
            if (enter == cols_) return true;
            std::size_t leave = rows_;
            Rational best;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rational ratio = rhs_[i] / t_[i][enter];
                if (leave == rows_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Rational piv = t_[r][c];
        for (auto& v : t_[r]) v /= piv;
        rhs_[r] /= piv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || t_[i][c] == 0) continue;
            Rational f = t_[i][c];
            for (std::size_t j = 0; j < cols_; ++j) t_[i][j] -= f * t_[r][j];
            rhs_[i] -= f * rhs_[r];
        }
        if (cost_[c] != 0) {
            Rational f = cost_[c];
            for (std::size_t j = 0; j < cols_; ++j) cost_[j] -= f * t_[r][j];
            obj_ -= f * rhs_[r];
        }
        basis_[r] = c;
    }

    QMatrix t_;
    std::vector<Rational> rhs_;
    std::vector<Rational> cost_;
    std::vector<std::size_t> basis_;
    Rational obj_;
    std::size_t rows_ = 0, cols_ = 0;
};

} // namespace detail

/// Is there z >= 0 with M z = d?  (M given column-wise as weights)
inline bool lp_feasible_nonneg(const QMatrix& m, const std::vector<Rational>& d) {
    if (m.empty()) return true;
    detail::Simplex s(m, d);
    std::vector<Rational> zero(mat_cols(m));
    return s.solve(zero).status == LPStatus::Optimal;
}

/// target in the conic span of gens?
inline bool in_cone_span(const std::vector<Weight>& gens, const Weight& target) {
    if (target.is_zero()) return true;
    if (gens.empty()) return false;
    std::size_t n = target.rank();
    QMatrix m(n, std::vector<Rational>(gens.size()));
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].rank() != n) throw std::invalid_argument("in_cone_span: rank mismatch");
        for (std::size_t i = 0; i < n; ++i) m[i][j] = gens[j][i];
    }
    return lp_feasible_nonneg(m, target.coords());
}

/// min (or max) of obj.x over { x : A x <= b }, x unrestricted in sign.
/// Splits x = p - q and adds slacks.
inline LPResult lp_extremum(const QMatrix& a, const std::vector<Rational>& b,
                            const std::vector<Rational>& obj, bool maximize) {
    std::size_t mrows = mat_rows(a), n = mat_cols(a);
    QMatrix m(mrows, std::vector<Rational>(2 * n + mrows));
    for (std::size_t i = 0; i < mrows; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = a[i][j];
            m[i][n + j] = -a[i][j];
        }
        m[i][2 * n + i] = 1;
    }
    std::vector<Rational> c(2 * n + mrows);
    for (std::size_t j = 0; j < n; ++j) {
        c[j] = maximize ? -obj[j] : obj[j];
        c[n + j] = -c[j];
    }
    detail::Simplex s(std::move(m), b);
    LPResult r = s.solve(c);
    if (r.status != LPStatus::Optimal) return r;
    LPResult out;
    out.status = LPStatus::Optimal;
    out.value = maximize ? -r.value : r.value;
    out.x.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) out.x[j] = r.x[j] - r.x[n + j];
    return out;
}

} // namespace torusloc
