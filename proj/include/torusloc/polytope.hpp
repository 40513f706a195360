#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "torusloc/lattice.hpp"
#include "torusloc/linalg.hpp"
#include "torusloc/lp.hpp"
#include "torusloc/weight.hpp"

namespace torusloc {

struct HalfSpace {
    Weight normal;   // primitive integer vector
    Rational offset; // normal . x <= offset
    bool operator==(const HalfSpace& o) const { return normal == o.normal && offset == o.offset; }
    bool operator<(const HalfSpace& o) const {
        if (!(normal == o.normal)) return normal < o.normal;
        return offset < o.offset;
    }
};

struct Hyperplane {
    Weight normal;
    Rational offset; // normal . x == offset
};

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline void bit_set(Bits& b, std::size_t i) { b[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
inline Bits bit_and(const Bits& a, const Bits& b) {
    Bits r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}
inline std::size_t bit_count(const Bits& b) {
    std::size_t n = 0;
    for (auto w : b) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
}

struct DDRay {
    Weight r;   // primitive integer
    Bits tight; // over constraint indices processed so far
};

// Extreme rays of the pointed cone { x : row.x <= 0 } given by constraint rows.
// Requires rank(rows) == rank (pointedness); deterministic output (lex sorted).
inline std::vector<Weight> dd_extreme_rays(std::vector<Weight> rows) {
    if (rows.empty()) throw std::invalid_argument("dd_extreme_rays: no constraints");
    const std::size_t n = rows[0].rank();
    for (auto& r : rows) r = primitive_direction(r);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    const std::size_t m = rows.size();
    const std::size_t words = (m + 63) / 64;

    // initial full-rank subset
    std::vector<std::size_t> base;
    {
        QMatrix acc;
        for (std::size_t i = 0; i < m && base.size() < n; ++i) {
            acc.push_back(rows[i].coords());
            if (mat_rank(acc) == acc.size())
                base.push_back(i);
            else
                acc.pop_back();
        }
        if (base.size() != n)
            throw std::domain_error("dd_extreme_rays: cone is not pointed");
    }
    std::vector<bool> processed(m, false);
    QMatrix ab(n, std::vector<Rational>(n));
    for (std::size_t k = 0; k < n; ++k) {
        ab[k] = rows[base[k]].coords();
        processed[base[k]] = true;
    }
    QMatrix inv = mat_inverse(ab);

    auto recompute_tight = [&](DDRay& ray) {
        ray.tight.assign(words, 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (!processed[i]) continue;
            if (rows[i].dot(ray.r) == 0) bit_set(ray.tight, i);
        }
    };

    std::vector<DDRay> rays;
    for (std::size_t j = 0; j < n; ++j) {
        Weight rj(n);
        for (std::size_t i = 0; i < n; ++i) rj[i] = -inv[i][j];
        DDRay ray{primitive_direction(rj), {}};
        recompute_tight(ray);
        rays.push_back(std::move(ray));
    }

    // adjacency: common tight set must have rank n-2
    auto adjacent = [&](const DDRay& a, const DDRay& b) {
        Bits common = bit_and(a.tight, b.tight);
        if (bit_count(common) + 2 < n) return false;
        QMatrix sub;
        for (std::size_t i = 0; i < m; ++i)
            if (common[i >> 6] & (std::uint64_t{1} << (i & 63))) sub.push_back(rows[i].coords());
        return mat_rank(std::move(sub)) == n - 2;
    };

    for (std::size_t ci = 0; ci < m; ++ci) {
        if (processed[ci]) continue;
        processed[ci] = true;
        const Weight& a = rows[ci];
        std::vector<Rational> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = a.dot(rays[i].r);
            if (val[i] > 0)
                pos.push_back(i);
            else if (val[i] < 0)
                neg.push_back(i);
        }
        if (pos.empty()) { // constraint inactive except possibly tight rays
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (val[i] == 0) bit_set(rays[i].tight, ci);
            continue;
        }
        std::vector<DDRay> created;
        for (auto p : pos)
            for (auto q : neg) {
                if (!adjacent(rays[p], rays[q])) continue;
                Weight w = rays[q].r * val[p] - rays[p].r * val[q];
                DDRay nr{primitive_direction(w), {}};
                recompute_tight(nr);
                created.push_back(std::move(nr));
            }
        std::vector<DDRay> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] > 0) continue;
            if (val[i] == 0) bit_set(rays[i].tight, ci);
            next.push_back(std::move(rays[i]));
        }
        for (auto& nr : created) next.push_back(std::move(nr));
        rays = std::move(next);
    }

    std::vector<Weight> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.r));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Affine frame of a point set: origin, independent direction basis, local
// coordinates map and the affine-hull equalities.
struct AffineFrame {
    Weight origin;
    std::vector<Weight> basis;      // k independent directions
    QMatrix to_local;               // y = to_local * (x - origin), k x n
    std::vector<Hyperplane> equalities;

    std::size_t dim() const { return basis.size(); }

    Weight local(const Weight& x) const {
        if (basis.empty()) return Weight(0);
        return mat_apply(to_local, x - origin);
    }
    Weight global(const Weight& y) const {
        Weight x = origin;
        for (std::size_t i = 0; i < basis.size(); ++i) x = x + basis[i] * y[i];
        return x;
    }
};

inline AffineFrame affine_frame(const std::vector<Weight>& pts) {
    if (pts.empty()) throw std::invalid_argument("affine_frame: empty point set");
    const std::size_t n = pts[0].rank();
    AffineFrame f;
    f.origin = pts[0];
    QMatrix acc;
    for (const auto& p : pts) {
        Weight d = p - f.origin;
        if (d.is_zero()) continue;
        acc.push_back(d.coords());
        if (mat_rank(acc) == acc.size())
            f.basis.push_back(d);
        else
            acc.pop_back();
        if (f.basis.size() == n) break;
    }
    const std::size_t k = f.basis.size();
    if (k > 0) {
        // pivot columns of the basis rows give an invertible k x k minor
        QMatrix b(k, std::vector<Rational>(n));
        for (std::size_t i = 0; i < k; ++i) b[i] = f.basis[i].coords();
        QMatrix red = b;
        std::vector<std::size_t> piv;
        row_reduce(red, &piv);
        QMatrix s(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) s[i][j] = f.basis[j][piv[i]];
        QMatrix sinv = mat_inverse(s);
        f.to_local.assign(k, std::vector<Rational>(n));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) f.to_local[i][piv[j]] = sinv[i][j];
        // normals spanning the orthogonal complement of the basis rows
        for (const auto& v : kernel_basis(b)) {
            Weight nrm = primitive_direction(Weight(v));
            f.equalities.push_back({nrm, nrm.dot(f.origin)});
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            Weight nrm = basis_weight(n, i);
            f.equalities.push_back({nrm, nrm.dot(f.origin)});
        }
    }
    return f;
}

// Facets of a full-dimensional polytope given in local coordinates.
// Rays of the polar cone { (a,b) : p.a + b <= 0 } are the facets a.y <= -b.
inline std::vector<std::pair<Weight, Rational>> facets_fulldim(const std::vector<Weight>& pts) {
    const std::size_t k = pts[0].rank();
    std::vector<Weight> rows;
    rows.reserve(pts.size());
    for (const auto& p : pts) {
        std::vector<Rational> r = p.coords();
        r.push_back(1);
        rows.emplace_back(std::move(r));
    }
    std::vector<std::pair<Weight, Rational>> facets;
    for (const auto& ray : dd_extreme_rays(std::move(rows))) {
        Weight normal(std::vector<Rational>(ray.coords().begin(), ray.coords().end() - 1));
        if (normal.is_zero()) continue; // the trivial (0,-1) direction
        facets.push_back({normal, -ray[k]});
    }
    return facets;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Polytope
// ---------------------------------------------------------------------------

/// Exact rational polytope with lexicographically ordered minimal V-rep and a
/// lazily computed irredundant H-rep. Degenerate (low-dimensional) polytopes
/// carry their affine hull as equality constraints.
class Polytope {
public:
    static Polytope hull(std::vector<Weight> points) {
        if (points.empty()) throw std::invalid_argument("hull: empty point set");
        const std::size_t n = points[0].rank();
        for (const auto& p : points)
            if (p.rank() != n) throw std::invalid_argument("hull: mixed ranks");
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());

        Polytope p;
        p.ambient_ = n;
        p.frame_ = detail::affine_frame(points);
        // minimal V-rep: drop points inside the hull of the others
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::vector<Weight> others;
            others.reserve(points.size() - 1);
            for (std::size_t j = 0; j < points.size(); ++j)
                if (j != i) others.push_back(points[j]);
            if (others.empty() || !in_convex_hull(others, points[i]))
                p.vertices_.push_back(points[i]);
        }
        return p;
    }

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t dim() const { return frame_.dim(); }
    const std::vector<Weight>& vertices() const { return vertices_; }
    const std::vector<Hyperplane>& equalities() const { return frame_.equalities; }

    /// Irredundant facet inequalities (computed on first use).
    const std::vector<HalfSpace>& facets() const {
        if (!facets_done_) {
            compute_facets();
            facets_done_ = true;
        }
        return facets_;
    }

    bool is_vertex(const Weight& v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    bool contains(const Weight& x) const {
        for (const auto& e : frame_.equalities)
            if (e.normal.dot(x) != e.offset) return false;
        for (const auto& f : facets())
            if (f.normal.dot(x) > f.offset) return false;
        return true;
    }

    bool on_boundary(const Weight& x) const {
        if (!contains(x)) return false;
        if (dim() < ambient_) return true;
        for (const auto& f : facets())
            if (f.normal.dot(x) == f.offset) return true;
        return false;
    }

    Polytope scaled(const Rational& s) const {
        std::vector<Weight> pts;
        for (const auto& v : vertices_) pts.push_back(v * s);
        return hull(std::move(pts));
    }

    /// Primitive directions of the edges incident to the vertex v.
    /// Uses the tight-facet rank test when the H-rep is available, and the
    /// exact LP extremality test on the tangent cone generators otherwise.
    std::vector<Weight> edges_at_vertex(const Weight& v) const {
        if (!is_vertex(v)) throw std::invalid_argument("edges_at_vertex: not a vertex");
        return facets_done_ ? edges_by_facets(v) : edges_by_lp(v);
    }

    std::vector<Weight> edges_by_facets(const Weight& v) const {
        const auto& fs = facets();
        std::vector<const HalfSpace*> tight_v;
        for (const auto& f : fs)
            if (f.normal.dot(v) == f.offset) tight_v.push_back(&f);
        std::vector<Weight> dirs;
        for (const auto& w : vertices_) {
            if (w == v) continue;
            QMatrix rows;
            for (const auto& e : frame_.equalities) rows.push_back(e.normal.coords());
            for (const auto* f : tight_v)
                if (f->normal.dot(w) == f->offset) rows.push_back(f->normal.coords());
            if (mat_rank(std::move(rows)) == ambient_ - 1) dirs.push_back(primitive_direction(w - v));
        }
        std::sort(dirs.begin(), dirs.end());
        return dirs;
    }

    std::vector<Weight> edges_by_lp(const Weight& v) const {
        std::vector<Weight> gens;
        for (const auto& w : vertices_)
            if (!(w == v)) gens.push_back(w - v);
        std::vector<Weight> dirs;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<Weight> others;
            others.reserve(gens.size() - 1);
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (!in_cone_span(others, gens[i])) dirs.push_back(primitive_direction(gens[i]));
        }
        std::sort(dirs.begin(), dirs.end());
        return dirs;
    }

    static bool in_convex_hull(const std::vector<Weight>& pts, const Weight& x) {
        const std::size_t n = x.rank();
        QMatrix m(n + 1, std::vector<Rational>(pts.size()));
        for (std::size_t j = 0; j < pts.size(); ++j) {
            for (std::size_t i = 0; i < n; ++i) m[i][j] = pts[j][i];
            m[n][j] = 1;
        }
        std::vector<Rational> d = x.coords();
        d.push_back(1);
        return lp_feasible_nonneg(m, d);
    }

private:
    void compute_facets() const {
        facets_.clear();
        if (dim() == 0) return;
        std::vector<Weight> local;
        local.reserve(vertices_.size());
        for (const auto& v : vertices_) local.push_back(frame_.local(v));
        for (const auto& [a, b] : detail::facets_fulldim(local)) {
            // pull a.y <= b back to ambient coordinates
            Weight nrm(ambient_);
            for (std::size_t i = 0; i < dim(); ++i) {
                for (std::size_t j = 0; j < ambient_; ++j)
                    nrm[j] += a[i] * frame_.to_local[i][j];
            }
            Rational off = b + nrm.dot(frame_.origin);
            Weight prim = primitive_direction(nrm);
            // rescale the offset consistently with the normalization
            Rational scale;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (prim[j] != 0) { scale = nrm[j] / prim[j]; break; }
            facets_.push_back({prim, off / scale});
        }
        std::sort(facets_.begin(), facets_.end());
    }

    std::size_t ambient_ = 0;
    std::vector<Weight> vertices_;
    detail::AffineFrame frame_;
    mutable std::vector<HalfSpace> facets_;
    mutable bool facets_done_ = false;
};

// ---------------------------------------------------------------------------
// Cones
// ---------------------------------------------------------------------------

/// Polyhedral cone with apex at the origin, given by generators; the
/// H-representation (facet normals and span equalities) is computed lazily.
class Cone {
public:
    static Cone from_generators(std::vector<Weight> gens) {
        Cone c;
        if (gens.empty()) throw std::invalid_argument("Cone: no generators");
        c.ambient_ = gens[0].rank();
        std::vector<Weight> prim;
        for (const auto& g : gens) {
            if (g.rank() != c.ambient_) throw std::invalid_argument("Cone: mixed ranks");
            if (!g.is_zero()) prim.push_back(primitive_direction(g));
        }
        std::sort(prim.begin(), prim.end());
        prim.erase(std::unique(prim.begin(), prim.end()), prim.end());
        if (prim.empty()) throw std::invalid_argument("Cone: all generators zero");
        c.gens_ = std::move(prim);
        return c;
    }

    std::size_t ambient_rank() const { return ambient_; }
    const std::vector<Weight>& generators() const { return gens_; }

    Cone negated() const {
        std::vector<Weight> g;
        for (const auto& v : gens_) g.push_back(-v);
        return from_generators(std::move(g));
    }

    /// Facet inequalities normal.x <= 0 valid on the cone.
    const std::vector<Weight>& facet_normals() const {
        ensure_hrep();
        return normals_;
    }
    /// Equalities normal.x == 0 cutting out the linear span.
    const std::vector<Weight>& span_equalities() const {
        ensure_hrep();
        return span_eq_;
    }

    bool contains(const Weight& x) const {
        ensure_hrep();
        for (const auto& e : span_eq_)
            if (e.dot(x) != 0) return false;
        for (const auto& nrm : normals_)
            if (nrm.dot(x) > 0) return false;
        return true;
    }

private:
    void ensure_hrep() const {
        if (hrep_done_) return;
        // work inside the linear span
        QMatrix b;
        std::vector<Weight> span_basis;
        for (const auto& g : gens_) {
            b.push_back(g.coords());
            if (mat_rank(b) == b.size())
                span_basis.push_back(g);
            else
                b.pop_back();
        }
        QMatrix rows(span_basis.size(), std::vector<Rational>(ambient_));
        for (std::size_t i = 0; i < span_basis.size(); ++i) rows[i] = span_basis[i].coords();
        for (const auto& v : kernel_basis(rows)) span_eq_.push_back(primitive_direction(Weight(v)));
        std::sort(span_eq_.begin(), span_eq_.end());

        const std::size_t k = span_basis.size();
        if (k == 0) { hrep_done_ = true; return; }
        // local coordinates via pivot minor, as in affine_frame
        std::vector<Weight> zero_plus = span_basis;
        zero_plus.insert(zero_plus.begin(), Weight(ambient_));
        auto frame = detail::affine_frame(zero_plus); // origin 0, basis = span
        std::vector<Weight> local;
        for (const auto& g : gens_) local.push_back(frame.local(g));
        // polar: rays of { a : a.g <= 0 } are outer facet normals of the cone
        std::vector<Weight> polar = detail::dd_extreme_rays(local);
        for (const auto& a : polar) {
            Weight nrm(ambient_);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < ambient_; ++j) nrm[j] += a[i] * frame.to_local[i][j];
            normals_.push_back(primitive_direction(nrm));
        }
        std::sort(normals_.begin(), normals_.end());
        hrep_done_ = true;
    }

    std::size_t ambient_ = 0;
    std::vector<Weight> gens_;
    mutable std::vector<Weight> normals_;
    mutable std::vector<Weight> span_eq_;
    mutable bool hrep_done_ = false;
};

/// Cone generated by P - v at a vertex v.
inline Cone tangent_cone(const Polytope& p, const Weight& v) {
    if (!p.is_vertex(v)) throw std::invalid_argument("tangent_cone: not a vertex");
    std::vector<Weight> gens;
    for (const auto& w : p.vertices())
        if (!(w == v)) gens.push_back(w - v);
    if (gens.empty()) throw std::domain_error("tangent_cone: polytope is a single point");
    return Cone::from_generators(std::move(gens));
}

// ---------------------------------------------------------------------------
// Faces
// ---------------------------------------------------------------------------

struct Face {
    HalfSpace support;                 // maximizing hyperplane normal.x == offset
    std::vector<std::size_t> vertex_subset; // indices into parent's vertices
    std::vector<Weight> vertices;

    Polytope to_polytope() const { return Polytope::hull(vertices); }
};

/// The face of P maximizing the (nonzero) functional `normal`.
inline Face face_by_support(const Polytope& p, const Weight& normal) {
    if (normal.is_zero()) throw std::invalid_argument("face_by_support: zero functional");
    Face f;
    Rational best;
    bool first = true;
    for (const auto& v : p.vertices()) {
        Rational val = normal.dot(v);
        if (first || val > best) { best = val; first = false; }
    }
    f.support = {normal, best};
    for (std::size_t i = 0; i < p.vertices().size(); ++i)
        if (normal.dot(p.vertices()[i]) == best) {
            f.vertex_subset.push_back(i);
            f.vertices.push_back(p.vertices()[i]);
        }
    return f;
}

// ---------------------------------------------------------------------------
// Lattice point enumeration
// ---------------------------------------------------------------------------

namespace detail {

// All integer points u with A u <= b, enumerated by fiberwise recursion with
// exact LP bounds on each coordinate. The system must be bounded.
inline void enumerate_integer(const QMatrix& a, const std::vector<Rational>& b,
                              std::size_t level, std::vector<Rational>& u,
                              std::vector<std::vector<Rational>>& out) {
    const std::size_t s = u.size();
    if (level == s) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < s; ++j) lhs += a[i][j] * u[j];
            if (lhs > b[i]) return;
        }
        out.push_back(u);
        return;
    }
    // restrict to the free coordinates level..s-1
    const std::size_t free = s - level;
    QMatrix ar(a.size(), std::vector<Rational>(free));
    std::vector<Rational> br = b;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < level; ++j) br[i] -= a[i][j] * u[j];
        for (std::size_t j = level; j < s; ++j) ar[i][j - level] = a[i][j];
    }
    std::vector<Rational> obj(free);
    obj[0] = 1;
    LPResult lo = lp_extremum(ar, br, obj, false);
    if (lo.status == LPStatus::Infeasible) return;
    LPResult hi = lp_extremum(ar, br, obj, true);
    if (lo.status != LPStatus::Optimal || hi.status != LPStatus::Optimal)
        throw std::domain_error("lattice enumeration: unbounded input");
    Int start = rat_ceil(lo.value), stop = rat_floor(hi.value);
    for (Int t = start; t <= stop; ++t) {
        u[level] = Rational(t);
        enumerate_integer(a, b, level + 1, u, out);
    }
    u[level] = 0;
}

} // namespace detail

/// All points of L inside the H-system {ineqs, eqs}; the system must be bounded.
inline std::vector<Weight> lattice_points_in_system(const std::vector<HalfSpace>& ineqs,
                                                    const std::vector<Hyperplane>& eqs,
                                                    const Lattice& l) {
    const std::size_t n = l.ambient_rank();
    const auto& basis = l.basis();
    const std::size_t s = basis.size();
    if (s == 0) return {};
    QMatrix a;
    std::vector<Rational> b;
    auto add_row = [&](const Weight& nrm, const Rational& off) {
        std::vector<Rational> row(s);
        for (std::size_t j = 0; j < s; ++j) row[j] = nrm.dot(basis[j]);
        a.push_back(std::move(row));
        b.push_back(off);
    };
    for (const auto& f : ineqs) add_row(f.normal, f.offset);
    for (const auto& e : eqs) {
        add_row(e.normal, e.offset);
        add_row(-e.normal, -e.offset);
    }
    std::vector<Rational> u(s);
    std::vector<std::vector<Rational>> sols;
    detail::enumerate_integer(a, b, 0, u, sols);
    std::vector<Weight> pts;
    pts.reserve(sols.size());
    for (const auto& c : sols) {
        Weight x(n);
        for (std::size_t j = 0; j < s; ++j) x = x + basis[j] * c[j];
        pts.push_back(std::move(x));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

/// All points of L inside the (bounded) polytope P.
inline std::vector<Weight> lattice_points(const Polytope& p, const Lattice& l) {
    if (p.ambient_rank() != l.ambient_rank())
        throw std::invalid_argument("lattice_points: rank mismatch");
    return lattice_points_in_system(p.facets(), p.equalities(), l);
}

/// Lattice points of c1 intersected with (offset2 + c2), inside the box
/// lo <= x <= hi which makes the enumeration finite.
inline std::vector<Weight> cone_intersect_lattice(const Cone& c1, const Cone& c2,
                                                  const Weight& offset2, const Lattice& l,
                                                  const Weight& lo, const Weight& hi) {
    const std::size_t n = c1.ambient_rank();
    if (c2.ambient_rank() != n || l.ambient_rank() != n)
        throw std::invalid_argument("cone_intersect_lattice: rank mismatch");
    std::vector<HalfSpace> ineqs;
    std::vector<Hyperplane> eqs;
    for (const auto& nrm : c1.facet_normals()) ineqs.push_back({nrm, 0});
    for (const auto& nrm : c1.span_equalities()) eqs.push_back({nrm, 0});
    // x in offset2 + c2  <=>  n.(x - offset2) <= 0 for the facets of c2
    for (const auto& nrm : c2.facet_normals()) ineqs.push_back({nrm, nrm.dot(offset2)});
    for (const auto& nrm : c2.span_equalities()) eqs.push_back({nrm, nrm.dot(offset2)});
    for (std::size_t i = 0; i < n; ++i) {
        Weight e = basis_weight(n, i);
        ineqs.push_back({e, hi[i]});
        ineqs.push_back({-e, -lo[i]});
    }
    return lattice_points_in_system(ineqs, eqs, l);
}

} // namespace torusloc
