#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusloc/lattice.hpp"
#include "torusloc/polytope.hpp"
#include "torusloc/weight.hpp"

namespace torusloc {

enum class Family { A, B, C, D, E, F, G };

struct RootSystemType {
    Family family;
    int rank;

    std::string name() const {
        static const char* f = "ABCDEFG";
        return std::string(1, f[static_cast<int>(family)]) + std::to_string(rank);
    }
    bool operator==(const RootSystemType& o) const {
        return family == o.family && rank == o.rank;
    }
};

inline RootSystemType parse_type(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("parse_type: bad type '" + s + "'");
    Family fam;
    switch (s[0]) {
        case 'A': fam = Family::A; break;
        case 'B': fam = Family::B; break;
        case 'C': fam = Family::C; break;
        case 'D': fam = Family::D; break;
        case 'E': fam = Family::E; break;
        case 'F': fam = Family::F; break;
        case 'G': fam = Family::G; break;
        default: throw std::invalid_argument("parse_type: bad family '" + s + "'");
    }
    int rank = std::stoi(s.substr(1));
    return {fam, rank};
}

/// A simple root system in its Bourbaki coordinates: A_r lives in rank r+1
/// with the sum-zero constraint, E_6/E_7 inside R^8, G_2 in rank 3; the other
/// types are full-rank.
class RootSystem {
public:
    RootSystemType type;
    std::size_t ambient_rank = 0;
    std::vector<Weight> roots;       // lex sorted
    std::vector<Weight> long_roots;  // == roots for simply-laced types
    std::vector<Weight> short_roots; // empty for simply-laced types
    std::vector<Weight> simple_roots;
    Lattice weight_lattice;

    static RootSystem build(RootSystemType t);
    static RootSystem build(const std::string& name) { return build(parse_type(name)); }

    Polytope root_polytope() const { return Polytope::hull(roots); }

    /// Reflection matrices for the simple roots (ambient coordinates).
    std::vector<QMatrix> simple_reflections() const {
        std::vector<QMatrix> out;
        for (const auto& a : simple_roots) {
            QMatrix m = mat_identity(ambient_rank);
            Rational n2 = a.norm2();
            for (std::size_t j = 0; j < ambient_rank; ++j) {
                Weight ej = basis_weight(ambient_rank, j);
                Rational f = 2 * a.dot(ej) / n2;
                for (std::size_t i = 0; i < ambient_rank; ++i) m[i][j] -= f * a[i];
            }
            out.push_back(std::move(m));
        }
        return out;
    }

    /// A Z-basis of the weight lattice. For A_r and G_2 the basis is pinned so
    /// that the flattened root polytopes of A_2 and G_2 coincide exactly; for
    /// the other types it is the echelon basis extracted from the generators.
    std::vector<Weight> intrinsic_basis() const {
        if (type.family == Family::A) {
            std::size_t n = ambient_rank;
            std::vector<Weight> b;
            for (int i = 0; i < type.rank; ++i) {
                Weight w(n);
                for (std::size_t j = 0; j < n; ++j)
                    w[j] = Rational(-1, static_cast<int>(n)) + (j == static_cast<std::size_t>(i) ? 1 : 0);
                b.push_back(std::move(w));
            }
            return b;
        }
        if (type.family == Family::G) {
            return {Weight{1, -1, 0}, Weight{0, 1, -1}};
        }
        return weight_lattice.basis();
    }

    /// Coordinates of w in the intrinsic basis (rank-sized vector).
    Weight to_intrinsic(const Weight& w) const {
        auto basis = intrinsic_basis();
        QMatrix a(ambient_rank, std::vector<Rational>(basis.size()));
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t i = 0; i < ambient_rank; ++i) a[i][j] = basis[j][i];
        auto sol = solve_linear(a, w.coords());
        if (!sol) throw std::domain_error("to_intrinsic: weight outside the root-system span");
        return Weight(*sol);
    }
};

namespace detail {

inline void signed_pairs(std::size_t n, std::size_t upto, std::vector<Weight>& out) {
    for (std::size_t i = 0; i < upto; ++i)
        for (std::size_t j = i + 1; j < upto; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    Weight w(n);
                    w[i] = si;
                    w[j] = sj;
                    out.push_back(std::move(w));
                }
}

// fundamental weights: solve (w_i, alpha_j^v) = delta_ij inside span(simple roots)
inline std::vector<Weight> fundamental_weights(const std::vector<Weight>& simple,
                                               std::size_t ambient) {
    const std::size_t r = simple.size();
    std::vector<Weight> fw;
    for (std::size_t i = 0; i < r; ++i) {
        QMatrix a(r, std::vector<Rational>(r));
        std::vector<Rational> rhs(r);
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t k = 0; k < r; ++k)
                a[j][k] = 2 * simple[j].dot(simple[k]) / simple[j].norm2();
            rhs[j] = (i == j) ? 1 : 0;
        }
        auto c = solve_linear(a, rhs);
        if (!c) throw std::domain_error("fundamental_weights: degenerate Cartan matrix");
        Weight w(ambient);
        for (std::size_t k = 0; k < r; ++k) w = w + simple[k] * (*c)[k];
        fw.push_back(std::move(w));
    }
    return fw;
}

} // namespace detail

inline RootSystem RootSystem::build(RootSystemType t) {
    RootSystem rs;
    rs.type = t;
    const int r = t.rank;
    std::vector<Weight>& roots = rs.roots;
    auto half = Rational(1, 2);

    switch (t.family) {
        case Family::A: {
            if (r < 1) throw std::invalid_argument("A_r requires r >= 1");
            std::size_t n = static_cast<std::size_t>(r + 1);
            rs.ambient_rank = n;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j) {
                        Weight w(n);
                        w[i] = 1;
                        w[j] = -1;
                        roots.push_back(std::move(w));
                    }
            for (int i = 0; i < r; ++i) {
                Weight a(n);
                a[i] = 1;
                a[i + 1] = -1;
                rs.simple_roots.push_back(std::move(a));
            }
            // weight lattice: roots plus e_0 - (e_0+...+e_r)/(r+1)
            std::vector<Weight> gens = roots;
            Weight w0(n);
            for (std::size_t j = 0; j < n; ++j)
                w0[j] = Rational(-1, r + 1) + (j == 0 ? 1 : 0);
            gens.push_back(std::move(w0));
            rs.weight_lattice = Lattice(n, std::move(gens));
            break;
        }
        case Family::B: {
            if (r < 2) throw std::invalid_argument("B_r requires r >= 2");
            std::size_t n = static_cast<std::size_t>(r);
            rs.ambient_rank = n;
            detail::signed_pairs(n, n, roots); // long
            for (std::size_t i = 0; i < n; ++i)
                for (int s : {1, -1}) roots.push_back(basis_weight(n, i, s)); // short
            for (int i = 0; i + 1 < r; ++i) {
                Weight a(n);
                a[i] = 1;
                a[i + 1] = -1;
                rs.simple_roots.push_back(std::move(a));
            }
            rs.simple_roots.push_back(basis_weight(n, n - 1));
            std::vector<Weight> gens;
            for (std::size_t i = 0; i < n; ++i) gens.push_back(basis_weight(n, i));
            Weight h(n);
            for (std::size_t i = 0; i < n; ++i) h[i] = half;
            gens.push_back(std::move(h));
            rs.weight_lattice = Lattice(n, std::move(gens));
            break;
        }
        case Family::C: {
            if (r < 2) throw std::invalid_argument("C_r requires r >= 2");
            std::size_t n = static_cast<std::size_t>(r);
            rs.ambient_rank = n;
            detail::signed_pairs(n, n, roots); // short
            for (std::size_t i = 0; i < n; ++i)
                for (int s : {2, -2}) roots.push_back(basis_weight(n, i, s)); // long
            for (int i = 0; i + 1 < r; ++i) {
                Weight a(n);
                a[i] = 1;
                a[i + 1] = -1;
                rs.simple_roots.push_back(std::move(a));
            }
            rs.simple_roots.push_back(basis_weight(n, n - 1, 2));
            rs.weight_lattice = Lattice::standard(n);
            break;
        }
        case Family::D: {
            if (r < 3) throw std::invalid_argument("D_r requires r >= 3");
            std::size_t n = static_cast<std::size_t>(r);
            rs.ambient_rank = n;
            detail::signed_pairs(n, n, roots);
            for (int i = 0; i + 1 < r; ++i) {
                Weight a(n);
                a[i] = 1;
                a[i + 1] = -1;
                rs.simple_roots.push_back(std::move(a));
            }
            Weight a(n);
            a[n - 2] = 1;
            a[n - 1] = 1;
            rs.simple_roots.push_back(std::move(a));
            std::vector<Weight> gens;
            for (std::size_t i = 0; i < n; ++i) gens.push_back(basis_weight(n, i));
            Weight h(n);
            for (std::size_t i = 0; i < n; ++i) h[i] = half;
            gens.push_back(std::move(h));
            rs.weight_lattice = Lattice(n, std::move(gens));
            break;
        }
        case Family::E: {
            if (r < 6 || r > 8) throw std::invalid_argument("E_r requires r in {6,7,8}");
            rs.ambient_rank = 8;
            if (r == 8) {
                detail::signed_pairs(8, 8, roots);
                for (int mask = 0; mask < 256; ++mask) {
                    if (__builtin_popcount(mask) % 2 != 0) continue;
                    Weight w(8);
                    for (int i = 0; i < 8; ++i) w[i] = (mask >> i) & 1 ? -half : half;
                    roots.push_back(std::move(w));
                }
            } else if (r == 7) {
                detail::signed_pairs(8, 6, roots);
                for (int s : {1, -1}) {
                    Weight w(8);
                    w[6] = s;
                    w[7] = -s;
                    roots.push_back(std::move(w));
                }
                for (int mask = 0; mask < 64; ++mask) {
                    if (__builtin_popcount(mask) % 2 == 0) continue; // odd sign count
                    for (int s : {1, -1}) {
                        Weight w(8);
                        for (int i = 0; i < 6; ++i) w[i] = ((mask >> i) & 1 ? -half : half) * s;
                        w[6] = -half * s;
                        w[7] = half * s;
                        roots.push_back(std::move(w));
                    }
                }
            } else { // E6
                detail::signed_pairs(8, 5, roots);
                for (int mask = 0; mask < 32; ++mask) {
                    if (__builtin_popcount(mask) % 2 != 0) continue; // even sign count
                    for (int s : {1, -1}) {
                        Weight w(8);
                        for (int i = 0; i < 5; ++i) w[i] = ((mask >> i) & 1 ? -half : half) * s;
                        w[5] = -half * s;
                        w[6] = -half * s;
                        w[7] = half * s;
                        roots.push_back(std::move(w));
                    }
                }
            }
            // Bourbaki simple roots of E8; the first r of them generate E_r
            std::vector<Weight> e8_simple;
            {
                Weight a1(8);
                a1[0] = half;
                a1[7] = half;
                for (int i = 1; i < 7; ++i) a1[i] = -half;
                e8_simple.push_back(std::move(a1));
                Weight a2(8);
                a2[0] = 1;
                a2[1] = 1;
                e8_simple.push_back(std::move(a2));
                for (int k = 0; k < 6; ++k) {
                    Weight a(8);
                    a[k] = -1;
                    a[k + 1] = 1;
                    e8_simple.push_back(std::move(a));
                }
            }
            rs.simple_roots.assign(e8_simple.begin(), e8_simple.begin() + r);
            rs.weight_lattice =
                Lattice(8, detail::fundamental_weights(rs.simple_roots, 8));
            break;
        }
        case Family::F: {
            if (r != 4) throw std::invalid_argument("F requires rank 4");
            rs.ambient_rank = 4;
            detail::signed_pairs(4, 4, roots); // long
            for (std::size_t i = 0; i < 4; ++i)
                for (int s : {1, -1}) roots.push_back(basis_weight(4, i, s));
            for (int mask = 0; mask < 16; ++mask) {
                Weight w(4);
                for (int i = 0; i < 4; ++i) w[i] = (mask >> i) & 1 ? -half : half;
                roots.push_back(std::move(w));
            }
            rs.simple_roots.push_back(Weight{0, 1, -1, 0});
            rs.simple_roots.push_back(Weight{0, 0, 1, -1});
            rs.simple_roots.push_back(Weight{0, 0, 0, 1});
            Weight a4(4);
            a4[0] = half;
            a4[1] = -half;
            a4[2] = -half;
            a4[3] = -half;
            rs.simple_roots.push_back(std::move(a4));
            std::vector<Weight> gens;
            for (std::size_t i = 0; i < 4; ++i) gens.push_back(basis_weight(4, i));
            Weight h(4);
            for (std::size_t i = 0; i < 4; ++i) h[i] = half;
            gens.push_back(std::move(h));
            rs.weight_lattice = Lattice(4, std::move(gens));
            break;
        }
        case Family::G: {
            if (r != 2) throw std::invalid_argument("G requires rank 2");
            rs.ambient_rank = 3;
            const int idx[3][2] = {{0, 1}, {1, 2}, {0, 2}};
            for (auto [i, j] : idx)
                for (int s : {1, -1}) {
                    Weight w(3);
                    w[i] = s;
                    w[j] = -s;
                    roots.push_back(std::move(w)); // short
                }
            for (int i = 0; i < 3; ++i)
                for (int s : {1, -1}) {
                    Weight w(3);
                    for (int j = 0; j < 3; ++j) w[j] = (j == i) ? 2 * s : -s;
                    roots.push_back(std::move(w)); // long
                }
            rs.simple_roots.push_back(Weight{1, -1, 0});
            rs.simple_roots.push_back(Weight{-2, 1, 1});
            rs.weight_lattice = Lattice(3, rs.simple_roots);
            break;
        }
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    // classify by squared norm; ties mark everything long
    Rational maxn = 0;
    for (const auto& w : roots) maxn = std::max(maxn, w.norm2());
    for (const auto& w : roots)
        (w.norm2() == maxn ? rs.long_roots : rs.short_roots).push_back(w);
    return rs;
}

} // namespace torusloc
