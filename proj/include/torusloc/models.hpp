#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusloc/lattice.hpp"
#include "torusloc/localize.hpp"
#include "torusloc/rootsys.hpp"

// Catalog of explicit fixed-point data: projective spaces with a C^* action,
// odd/even quadrics, adjoint varieties of B_r/D_r, and their downgradings to
// the rank-2 torus of G_2. Each entry carries the character lattice it lives
// in, so lattice-sensitive checks use the right sublattice.
//
// Fixed curves appear in the catalog only through the projective-space models
// (middle components of dimension 1); the rank-1 downgrading of the adjoint
// B_3 model also has two fixed components isomorphic to P^1 x P^1, which are
// outside the point/curve data model and are therefore not emitted.

namespace torusloc {

struct CatalogModel {
    std::string name;
    FixedPointData data;
    Lattice lattice;
};

namespace detail {

inline Lattice half_sum_lattice(std::size_t r) {
    std::vector<Weight> gens;
    for (std::size_t i = 0; i < r; ++i) gens.push_back(basis_weight(r, i));
    Weight h(r);
    for (std::size_t i = 0; i < r; ++i) h[i] = Rational(1, 2);
    gens.push_back(std::move(h));
    return Lattice(r, std::move(gens));
}

inline Lattice even_sum_sublattice(std::size_t r) {
    // index-2 sublattice of Z^r: vectors with even coordinate sum
    std::vector<Weight> gens;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        Weight w(r);
        w[i] = 1;
        w[i + 1] = -1;
        gens.push_back(std::move(w));
    }
    Weight d(r);
    d[0] = 2;
    gens.push_back(std::move(d));
    return Lattice(r, std::move(gens));
}

} // namespace detail

// ---------------------------------------------------------------------------
// Projective space with a one-parameter action
// ---------------------------------------------------------------------------

/// C^* acting on P(V) with weight a_i on the d_i-dimensional eigenspace V_i.
/// Components P(V_i) are points when d_i = 1 and curves when d_i = 2; higher
/// dimensional eigenspaces are outside the fixed-point data model.
inline CatalogModel projective_space_data(const std::vector<std::pair<int, int>>& weights) {
    if (weights.size() < 2)
        throw std::invalid_argument("projective_space_data: action is trivial");
    for (std::size_t i = 0; i + 1 < weights.size(); ++i)
        if (weights[i].first >= weights[i + 1].first)
            throw std::invalid_argument("projective_space_data: weights must be increasing");
    int dim_v = 0;
    for (const auto& [a, d] : weights) {
        if (d < 1) throw std::invalid_argument("projective_space_data: bad multiplicity");
        if (d > 2)
            throw std::invalid_argument("projective_space_data: component P(V_i) of dimension " +
                                        std::to_string(d - 1) + " >= 2 is not supported");
        dim_v += d;
    }
    CatalogModel m;
    m.name = "pspace";
    m.lattice = Lattice::standard(1);
    m.data.rank = 1;
    m.data.ambient_dim = dim_v - 1;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        auto [ai, di] = weights[i];
        if (di == 1) {
            FixedPoint p;
            p.label = "P(V" + std::to_string(i) + ")";
            p.mu = Weight{-ai};
            for (std::size_t l = 0; l < weights.size(); ++l) {
                if (l == i) continue;
                p.compass.add(Weight{ai - weights[l].first}, weights[l].second);
            }
            m.data.points.push_back(std::move(p));
        } else {
            FixedCurve c;
            c.label = "P(V" + std::to_string(i) + ")";
            c.mu = Weight{-ai};
            c.genus = 0;
            c.degree = 1; // O(1) restricted to a line
            for (std::size_t l = 0; l < weights.size(); ++l) {
                if (l == i) continue;
                // conormal summand Hom(V_l, O(-1)): weight a_i - a_l, c1 = -d_l
                c.conormal.push_back({Weight{ai - weights[l].first}, weights[l].second,
                                      -weights[l].second});
            }
            m.data.curves.push_back(std::move(c));
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Quadrics
// ---------------------------------------------------------------------------

enum class QuadricParity { Odd, Even };

/// The rank-r torus acting on Q^(2r-1) (odd) or Q^(2r-2) (even) with the 2r
/// isolated fixed points at the characters +-e_i.
inline CatalogModel quadric_data(QuadricParity parity, int r) {
    if (r < 2) throw std::invalid_argument("quadric_data: r >= 2 required");
    CatalogModel m;
    const std::size_t n = static_cast<std::size_t>(r);
    const bool odd = parity == QuadricParity::Odd;
    m.name = odd ? "quadric-odd-" + std::to_string(r) : "quadric-even-" + std::to_string(r);
    m.lattice = odd ? Lattice::standard(n) : detail::even_sum_sublattice(n);
    m.data.rank = r;
    m.data.ambient_dim = odd ? 2 * r - 1 : 2 * r - 2;
    for (int i = 0; i < r; ++i)
        for (int s : {1, -1}) {
            FixedPoint p;
            p.label = (s > 0 ? "+e" : "-e") + std::to_string(i + 1);
            p.mu = basis_weight(n, static_cast<std::size_t>(i), s);
            if (odd) p.compass.add(-p.mu, 1);
            for (int j = 0; j < r; ++j) {
                if (j == i) continue;
                for (int sj : {1, -1})
                    p.compass.add(basis_weight(n, static_cast<std::size_t>(j), sj) - p.mu, 1);
            }
            m.data.points.push_back(std::move(p));
        }
    return m;
}

// ---------------------------------------------------------------------------
// Adjoint varieties of B_r and D_r
// ---------------------------------------------------------------------------

namespace detail {

// compass at the vertex e1+e2, transported to an arbitrary long root
// s_i e_i + s_j e_j by the signed permutation taking e_1, e_2 to the vertex
// axes and the remaining axes to themselves in increasing order
inline Compass bd_compass_at(const Weight& vertex, int r, bool is_b) {
    const std::size_t n = static_cast<std::size_t>(r);
    std::size_t i = n, j = n;
    Rational si, sj;
    for (std::size_t k = 0; k < n; ++k) {
        if (vertex[k] == 0) continue;
        if (i == n) {
            i = k;
            si = vertex[k];
        } else {
            j = k;
            sj = vertex[k];
        }
    }
    if (j == n) throw std::invalid_argument("bd_compass_at: not a +-e_i+-e_j vertex");
    Weight f1 = basis_weight(n, i, si), f2 = basis_weight(n, j, sj);
    Compass c;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        for (int s : {1, -1}) {
            c.add(basis_weight(n, k, s) - f1, 1);
            c.add(basis_weight(n, k, s) - f2, 1);
        }
    }
    if (is_b) {
        c.add(-f1, 1);
        c.add(-f2, 1);
    }
    c.add(-(f1 + f2), 1);
    return c;
}

} // namespace detail

/// Fixed-point data of the adjoint variety of B_r (r >= 3) or D_r (r >= 4):
/// one isolated point per long root, dimension 4r-5 resp. 4r-7.
inline CatalogModel adjoint_bd_data(Family family, int r) {
    const bool is_b = family == Family::B;
    if (!is_b && family != Family::D)
        throw std::invalid_argument("adjoint_bd_data: family must be B or D");
    if (is_b && r < 3) throw std::invalid_argument("adjoint_bd_data: B_r needs r >= 3");
    if (!is_b && r < 4) throw std::invalid_argument("adjoint_bd_data: D_r needs r >= 4");
    CatalogModel m;
    m.name = std::string("adjoint-") + (is_b ? "B" : "D") + std::to_string(r);
    m.lattice = detail::half_sum_lattice(static_cast<std::size_t>(r));
    m.data.rank = r;
    m.data.ambient_dim = is_b ? 4 * r - 5 : 4 * r - 7;
    auto rs = RootSystem::build({family, r});
    for (const auto& root : rs.long_roots) {
        FixedPoint p;
        p.label = root.str();
        p.mu = root;
        p.compass = detail::bd_compass_at(root, r, is_b);
        m.data.points.push_back(std::move(p));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Downgrading to the G2 torus
// ---------------------------------------------------------------------------

/// Projection of the B3 character lattice onto the rank-2 G2 lattice, kernel
/// generated by (1/2,-1/2,-1/2).
inline Projection b3_to_g2_projection() {
    Weight k(std::vector<Rational>{Rational(1, 2), Rational(-1, 2), Rational(-1, 2)});
    return Projection(QMatrix{{1, 1, 0}, {1, 0, 1}}, {k});
}

/// Projection of the D4 character lattice onto the rank-2 G2 lattice, kernel
/// generated by (1/2,-1/2,-1/2,-1/2) and (0,0,0,1).
inline Projection d4_to_g2_projection() {
    Weight k1(std::vector<Rational>{Rational(1, 2), Rational(-1, 2), Rational(-1, 2),
                                    Rational(-1, 2)});
    Weight k2(std::vector<Rational>{0, 0, 0, 1});
    return Projection(QMatrix{{1, 1, 0, 0}, {1, 0, 1, 0}}, {k1, k2});
}

enum class G2Source { B3, D4 };

/// Pushes the adjoint model through the downgrading projection. Points whose
/// characters collide at an inner hexagon weight stay distinct, with their
/// individually projected compasses.
inline CatalogModel downgraded_g2_data(G2Source source) {
    CatalogModel src = source == G2Source::B3 ? adjoint_bd_data(Family::B, 3)
                                              : adjoint_bd_data(Family::D, 4);
    Projection pr = source == G2Source::B3 ? b3_to_g2_projection() : d4_to_g2_projection();
    CatalogModel m;
    m.name = source == G2Source::B3 ? "g2-from-B3" : "g2-from-D4";
    m.lattice = Lattice::standard(2);
    m.data.rank = 2;
    m.data.ambient_dim = src.data.ambient_dim;
    for (const auto& p : src.data.points) {
        FixedPoint q;
        q.label = p.label;
        q.mu = pr(p.mu);
        auto [projected, kernel_part] = project_compass(p.compass, pr);
        if (kernel_part.size() != 0)
            throw std::domain_error("downgraded_g2_data: a compass entry fell into the kernel");
        q.compass = projected;
        m.data.points.push_back(std::move(q));
    }
    return m;
}

// ---------------------------------------------------------------------------
// The hexagon tables (the paper-table source of truth for the downgrades)
// ---------------------------------------------------------------------------

/// Hexagon characters in the pinned intrinsic coordinates: alpha_i are the
/// vertices of the G2/A2 root polytope, beta_i the inner weights, indices
/// cyclic mod 6 with beta_i between alpha_(i-1) and alpha_i.
inline std::vector<Weight> hexagon_alphas() {
    return {Weight{1, 2}, Weight{2, 1}, Weight{1, -1},
            Weight{-1, -2}, Weight{-2, -1}, Weight{-1, 1}};
}
inline std::vector<Weight> hexagon_betas() {
    return {Weight{0, 1}, Weight{1, 1}, Weight{1, 0},
            Weight{0, -1}, Weight{-1, -1}, Weight{-1, 0}};
}

/// Fixed-point data of the G2-torus action reconstructed from the compass
/// tables: extremal points at the six alphas, inner points at the betas (one
/// per beta in dimension 7, three per beta in dimension 9).
inline CatalogModel g2_table_data(int dim) {
    if (dim != 7 && dim != 9) throw std::invalid_argument("g2_table_data: dim must be 7 or 9");
    const int m_ext = dim == 7 ? 2 : 3;
    const auto alpha = hexagon_alphas();
    const auto beta = hexagon_betas();
    auto at = [](const std::vector<Weight>& v, int i) { return v[((i % 6) + 6) % 6]; };
    CatalogModel m;
    m.name = "g2-table-" + std::to_string(dim);
    m.lattice = Lattice::standard(2);
    m.data.rank = 2;
    m.data.ambient_dim = dim;
    for (int i = 0; i < 6; ++i) {
        FixedPoint p;
        p.label = "alpha" + std::to_string(i);
        p.mu = at(alpha, i);
        p.compass.add(at(alpha, i - 1) - p.mu, 1);
        p.compass.add(at(alpha, i + 1) - p.mu, 1);
        p.compass.add(-p.mu, 1);
        p.compass.add(at(beta, i) - p.mu, m_ext);
        p.compass.add(at(beta, i + 1) - p.mu, m_ext);
        m.data.points.push_back(std::move(p));
    }
    const int copies = dim == 7 ? 1 : 3;
    const int side = dim == 7 ? 1 : 2; // multiplicity of beta_(i+-1) - beta_i
    for (int i = 0; i < 6; ++i) {
        for (int c = 0; c < copies; ++c) {
            FixedPoint p;
            p.label = "beta" + std::to_string(i) + (copies > 1 ? "." + std::to_string(c) : "");
            p.mu = at(beta, i);
            p.compass.add(at(alpha, i) - p.mu, 1);
            p.compass.add(at(alpha, i - 1) - p.mu, 1);
            p.compass.add(at(beta, i + 1) - p.mu, side);
            p.compass.add(at(beta, i - 1) - p.mu, side);
            p.compass.add(at(beta, i + 2) - p.mu, 1);
            p.compass.add(at(beta, i - 2) - p.mu, 1);
            p.compass.add(-p.mu, 1);
            m.data.points.push_back(std::move(p));
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Name registry for the CLI
// ---------------------------------------------------------------------------

/// Model names: pspace, quadric-odd-<r>, quadric-even-<r>, adjoint-B<r>,
/// adjoint-D<r>, g2-from-B3, g2-from-D4. "pspace" is the (0,1,...,1,2) action
/// on P^3 used by the interval classification.
inline CatalogModel model_by_name(const std::string& name) {
    auto starts = [&](const std::string& p) { return name.rfind(p, 0) == 0; };
    auto tail_int = [&](const std::string& p) { return std::stoi(name.substr(p.size())); };
    if (name == "pspace")
        return projective_space_data({{0, 1}, {1, 2}, {2, 1}});
    if (starts("quadric-odd-")) return quadric_data(QuadricParity::Odd, tail_int("quadric-odd-"));
    if (starts("quadric-even-"))
        return quadric_data(QuadricParity::Even, tail_int("quadric-even-"));
    if (starts("adjoint-B")) return adjoint_bd_data(Family::B, tail_int("adjoint-B"));
    if (starts("adjoint-D")) return adjoint_bd_data(Family::D, tail_int("adjoint-D"));
    if (name == "g2-from-B3") return downgraded_g2_data(G2Source::B3);
    if (name == "g2-from-D4") return downgraded_g2_data(G2Source::D4);
    throw std::invalid_argument("unknown model '" + name + "'");
}

inline std::vector<std::string> model_names() {
    return {"pspace",     "quadric-odd-3", "quadric-even-4", "adjoint-B3",
            "adjoint-B4", "adjoint-D4",    "adjoint-D5",     "g2-from-B3",
            "g2-from-D4"};
}

} // namespace torusloc
