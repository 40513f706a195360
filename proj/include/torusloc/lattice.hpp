#pragma once

#include <stdexcept>
#include <vector>

#include "torusloc/linalg.hpp"
#include "torusloc/weight.hpp"

namespace torusloc {

/// A full- or partial-rank lattice in Q^n given by a generator list.
/// Generators are stored as presented (e.g. "Z^r + Z*(1/2,...,1/2)");
/// membership solves an integer linear system on demand.
class Lattice {
public:
    Lattice() = default;
    Lattice(std::size_t ambient_rank, std::vector<Weight> generators)
        : ambient_(ambient_rank), gens_(std::move(generators)) {
        for (const auto& g : gens_)
            if (g.rank() != ambient_)
                throw std::invalid_argument("Lattice: generator rank mismatch");
        rebuild();
    }

    static Lattice standard(std::size_t rank) {
        std::vector<Weight> g;
        for (std::size_t i = 0; i < rank; ++i) g.push_back(basis_weight(rank, i));
        return Lattice(rank, std::move(g));
    }

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<Weight>& generators() const { return gens_; }

    /// Z-basis extracted from the generators (echelon over the integers).
    const std::vector<Weight>& basis() const { return basis_; }

    bool contains(const Weight& w) const {
        if (w.rank() != ambient_) throw std::invalid_argument("Lattice::contains: rank mismatch");
        std::vector<Int> v(ambient_);
        for (std::size_t i = 0; i < ambient_; ++i) {
            Rational scaled = w[i] * Rational(denom_);
            if (!is_integer(scaled)) return false;
            v[i] = rat_num(scaled);
        }
        return z_in_row_lattice(zbasis_, v);
    }

private:
    void rebuild() {
        denom_ = 1;
        for (const auto& g : gens_)
            for (std::size_t i = 0; i < ambient_; ++i) denom_ = int_lcm(denom_, rat_den(g[i]));
        ZMatrix rows;
        for (const auto& g : gens_) {
            std::vector<Int> row(ambient_);
            for (std::size_t i = 0; i < ambient_; ++i) row[i] = rat_num(g[i] * Rational(denom_));
            rows.push_back(std::move(row));
        }
        zbasis_ = z_row_echelon(std::move(rows));
        basis_.clear();
        for (const auto& row : zbasis_) {
            Weight b(ambient_);
            for (std::size_t i = 0; i < ambient_; ++i) b[i] = Rational(row[i], denom_);
            basis_.push_back(std::move(b));
        }
    }

    std::size_t ambient_ = 0;
    std::vector<Weight> gens_;
    Int denom_ = 1;          // common denominator of the generators
    ZMatrix zbasis_;         // echelon basis of denom_ * lattice
    std::vector<Weight> basis_;
};

inline bool lattice_contains(const Lattice& l, const Weight& w) { return l.contains(w); }

/// Linear projection between weight spaces (torus downgrading).
class Projection {
public:
    Projection() = default;
    Projection(QMatrix matrix, std::vector<Weight> kernel_basis)
        : m_(std::move(matrix)), ker_(std::move(kernel_basis)), domain_(mat_cols(m_)) {
        for (const auto& k : ker_) {
            auto img = mat_apply(m_, k.coords());
            for (const auto& x : img)
                if (x != 0) throw std::invalid_argument("Projection: kernel_basis not in kernel");
        }
    }

    /// Builds the projection from its matrix; the kernel basis is computed.
    explicit Projection(QMatrix matrix) : m_(std::move(matrix)), domain_(mat_cols(m_)) {
        for (const auto& v : kernel_basis(m_)) ker_.emplace_back(v);
    }

    /// The projection of a rank-`domain` space onto rank 0.
    static Projection to_rank_zero(std::size_t domain) {
        Projection p;
        p.domain_ = domain;
        for (std::size_t i = 0; i < domain; ++i) p.ker_.push_back(basis_weight(domain, i));
        return p;
    }

    std::size_t domain_rank() const { return domain_; }
    std::size_t image_rank() const { return mat_rows(m_); }
    const QMatrix& matrix() const { return m_; }
    const std::vector<Weight>& kernel() const { return ker_; }

    Weight operator()(const Weight& w) const {
        if (w.rank() != domain_rank()) throw std::invalid_argument("project: rank mismatch");
        if (m_.empty()) return Weight(0);
        return mat_apply(m_, w);
    }

    /// Coordinates of w in the kernel basis; throws if w is not in the kernel span.
    Weight kernel_coordinates(const Weight& w) const {
        QMatrix a(domain_rank(), std::vector<Rational>(ker_.size()));
        for (std::size_t j = 0; j < ker_.size(); ++j)
            for (std::size_t i = 0; i < domain_rank(); ++i) a[i][j] = ker_[j][i];
        auto sol = solve_linear(a, w.coords());
        if (!sol) throw std::domain_error("kernel_coordinates: weight not in kernel span");
        return Weight(*sol);
    }

private:
    QMatrix m_;
    std::vector<Weight> ker_;
    std::size_t domain_ = 0;
};

inline Weight project(const Projection& p, const Weight& w) { return p(w); }

/// Image lattice of the pushforward of `l` under `p`.
inline Lattice pushforward(const Projection& p, const Lattice& l) {
    std::vector<Weight> gens;
    for (const auto& g : l.generators()) gens.push_back(p(g));
    return Lattice(p.image_rank(), std::move(gens));
}

} // namespace torusloc
