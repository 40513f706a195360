#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "torusloc/polytope.hpp"
#include "torusloc/rootsys.hpp"

using namespace torusloc;

namespace {

// brute-force H-rep oracle for small point sets in rank <= 3: try every
// affinely independent (dim)-subset of points as a candidate facet hyperplane
std::vector<HalfSpace> brute_facets(const std::vector<Weight>& pts) {
    const std::size_t n = pts[0].rank();
    auto frame = detail::affine_frame(pts);
    const std::size_t k = frame.dim();
    std::set<HalfSpace> out;
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::vector<std::size_t> comb(k);
    auto try_comb = [&](const std::vector<std::size_t>& c) {
        // hyperplane through pts[c...] inside the affine hull
        QMatrix rows;
        for (std::size_t i = 1; i < c.size(); ++i)
            rows.push_back((pts[c[i]] - pts[c[0]]).coords());
        for (const auto& e : frame.equalities) rows.push_back(e.normal.coords());
        auto kb = kernel_basis(rows);
        if (kb.size() != 1) return; // not a hyperplane inside the hull
        Weight nrm = primitive_direction(Weight(kb[0]));
        Rational off = nrm.dot(pts[c[0]]);
        bool below = true, above = true;
        for (const auto& p : pts) {
            Rational v = nrm.dot(p);
            below = below && v <= off;
            above = above && v >= off;
        }
        if (below) out.insert({nrm, off});
        if (above) out.insert({primitive_direction(-nrm), -off});
    };
    // enumerate k-subsets
    std::vector<std::size_t> c(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) { try_comb(c); return; }
        for (std::size_t i = start; i < pts.size(); ++i) {
            c[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (k >= 1) rec(0, 0);
    return {out.begin(), out.end()};
}

Lattice half_sum_lattice(std::size_t r) {
    std::vector<Weight> gens;
    for (std::size_t i = 0; i < r; ++i) gens.push_back(basis_weight(r, i));
    Weight h(r);
    for (std::size_t i = 0; i < r; ++i) h[i] = Rational(1, 2);
    gens.push_back(h);
    return Lattice(r, std::move(gens));
}

} // namespace

TEST_CASE("2d cross-polytope hull") {
    auto p = Polytope::hull({Weight{1, 0}, Weight{-1, 0}, Weight{0, 1}, Weight{0, -1},
                             Weight{0, 0}});
    CHECK(p.vertices().size() == 4);
    CHECK(p.facets().size() == 4);
    for (const auto& f : p.facets()) {
        CHECK(f.offset == 1);
        CHECK(f.normal.norm2() == 2); // (+-1,+-1)
    }
    CHECK(p.contains(Weight{0, 0}));
    CHECK_FALSE(p.contains(Weight{1, 1}));
}

TEST_CASE("rank-4 conv(+-ei+-ej) has the 24 stated facets") {
    auto d4 = RootSystem::build("D4");
    auto p = d4.root_polytope();
    CHECK(p.vertices().size() == 24);
    const auto& fs = p.facets();
    REQUIRE(fs.size() == 24);
    std::size_t axis = 0, diag = 0;
    for (const auto& f : fs) {
        if (f.normal.norm2() == 1) {
            CHECK(f.offset == 1);
            ++axis;
        } else {
            CHECK(f.normal.norm2() == 4); // (+-1,+-1,+-1,+-1)
            CHECK(f.offset == 2);
            ++diag;
        }
    }
    CHECK(axis == 8);
    CHECK(diag == 16);
}

TEST_CASE("single point hull is zero-dimensional") {
    auto p = Polytope::hull({Weight{1, 2, 3}});
    CHECK(p.dim() == 0);
    CHECK(p.vertices().size() == 1);
    CHECK(p.facets().empty());
    CHECK(p.equalities().size() == 3);
    CHECK(p.contains(Weight{1, 2, 3}));
    CHECK_FALSE(p.contains(Weight{1, 2, 4}));
}

TEST_CASE("hull round-trips and V/H cross-validation") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dim(2, 4), npts(4, 10), coord(-4, 4);
    for (int it = 0; it < 30; ++it) {
        int n = dim(rng);
        std::vector<Weight> pts;
        for (int i = 0, m = npts(rng); i < m; ++i) {
            Weight w(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) w[j] = coord(rng);
            pts.push_back(std::move(w));
        }
        auto p = Polytope::hull(pts);
        auto q = Polytope::hull(p.vertices());
        CHECK(p.vertices() == q.vertices());
        CHECK(p.facets() == q.facets());
        // every input point is inside
        for (const auto& x : pts) CHECK(p.contains(x));
        // every vertex is tight on >= dim independent facets
        for (const auto& v : p.vertices()) {
            QMatrix rows;
            for (const auto& e : p.equalities()) rows.push_back(e.normal.coords());
            for (const auto& f : p.facets())
                if (f.normal.dot(v) == f.offset) rows.push_back(f.normal.coords());
            CHECK(mat_rank(rows) == static_cast<std::size_t>(n));
        }
        // every facet supported by >= dim affinely independent vertices
        for (const auto& f : p.facets()) {
            std::vector<Weight> tight;
            for (const auto& v : p.vertices())
                if (f.normal.dot(v) == f.offset) tight.push_back(v);
            REQUIRE(!tight.empty());
            CHECK(detail::affine_frame(tight).dim() + 1 >= p.dim());
        }
    }
}

TEST_CASE("facet enumeration agrees with the brute-force oracle in rank <= 3") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> dim(2, 3), npts(4, 8), coord(-3, 3);
    for (int it = 0; it < 40; ++it) {
        int n = dim(rng);
        std::vector<Weight> pts;
        for (int i = 0, m = npts(rng); i < m; ++i) {
            Weight w(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) w[j] = coord(rng);
            pts.push_back(std::move(w));
        }
        auto p = Polytope::hull(pts);
        if (p.dim() < 2) continue;
        auto expected = brute_facets(p.vertices());
        auto got = p.facets();
        std::vector<HalfSpace> exp_sorted(expected.begin(), expected.end());
        std::sort(exp_sorted.begin(), exp_sorted.end());
        CHECK(got == exp_sorted);
    }
}

TEST_CASE("degenerate hull keeps equalities") {
    // triangle inside the plane x+y+z=1 of rank 3
    auto p = Polytope::hull({Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{0, 0, 1}});
    CHECK(p.dim() == 2);
    REQUIRE(p.equalities().size() == 1);
    const auto& e = p.equalities()[0];
    CHECK(e.normal.dot(Weight{1, 0, 0}) == e.offset);
    CHECK(p.contains(Weight{std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)}}));
    CHECK_FALSE(p.contains(Weight{1, 1, -1}));
}

TEST_CASE("edges at a vertex: square and segment") {
    auto sq = Polytope::hull({Weight{0, 0}, Weight{1, 0}, Weight{0, 1}, Weight{1, 1}});
    auto dirs = sq.edges_at_vertex(Weight{0, 0});
    REQUIRE(dirs.size() == 2);
    CHECK(dirs[0] == Weight{0, 1});
    CHECK(dirs[1] == Weight{1, 0});
    CHECK_THROWS_AS(sq.edges_at_vertex(Weight{2, 2}), std::invalid_argument);

    auto seg = Polytope::hull({Weight{0}, Weight{2}});
    auto d2 = seg.edges_at_vertex(Weight{2});
    REQUIRE(d2.size() == 1);
    CHECK(d2[0] == Weight{-1});
}

TEST_CASE("both edge strategies agree on root polytopes") {
    for (const char* name : {"A3", "B3", "C3", "D4", "F4"}) {
        auto rs = RootSystem::build(name);
        auto p = rs.root_polytope();
        const Weight v = p.vertices()[0];
        auto lp_dirs = p.edges_by_lp(v);
        p.facets(); // force H-rep
        auto facet_dirs = p.edges_by_facets(v);
        CHECK(lp_dirs == facet_dirs);
    }
}

TEST_CASE("F4 polytope has 8 edges at a long root") {
    auto f4 = RootSystem::build("F4");
    auto p = f4.root_polytope();
    Weight v{1, 1, 0, 0}; // e1+e2, a long root
    REQUIRE(p.is_vertex(v));
    auto dirs = p.edges_at_vertex(v);
    REQUIRE(dirs.size() == 8);
    // spanned by +-e_j - e_i with i in {1,2}, j in {3,4}
    std::set<Weight> expect;
    for (int i : {0, 1})
        for (int j : {2, 3})
            for (int s : {1, -1}) {
                Weight w(4);
                w[j] = s;
                w[i] = -1;
                expect.insert(w);
            }
    CHECK(std::set<Weight>(dirs.begin(), dirs.end()) == expect);
}

TEST_CASE("tangent cone of a square corner is a quadrant") {
    auto sq = Polytope::hull({Weight{0, 0}, Weight{1, 0}, Weight{0, 1}, Weight{1, 1}});
    auto c = tangent_cone(sq, Weight{1, 1});
    CHECK(c.contains(Weight{-1, -1}));
    CHECK(c.contains(Weight{-1, 0}));
    CHECK_FALSE(c.contains(Weight{1, 0}));
    REQUIRE(c.facet_normals().size() == 2);
}

TEST_CASE("segment tangent cone at 2 is the nonpositive ray") {
    auto seg = Polytope::hull({Weight{0}, Weight{2}});
    auto c = tangent_cone(seg, Weight{2});
    CHECK(c.contains(Weight{-5}));
    CHECK_FALSE(c.contains(Weight{1}));
}

TEST_CASE("lattice points: unit segment and B3 polytope") {
    auto seg = Polytope::hull({Weight{0}, Weight{1}});
    auto pts = lattice_points(seg, Lattice::standard(1));
    REQUIRE(pts.size() == 2);

    auto b3 = RootSystem::build("B3");
    auto db3 = b3.root_polytope();
    auto m = half_sum_lattice(3);
    auto inside = lattice_points(db3, m);
    CHECK(inside.size() == 27);
}

TEST_CASE("A3 facet delta({0,1}) contains one extra lattice point") {
    auto a3 = RootSystem::build("A3");
    auto p = a3.root_polytope();
    Weight functional{1, 1, 0, 0}; // e0* + e1*
    auto face = face_by_support(p, functional);
    REQUIRE(face.vertices.size() == 4);
    auto fp = face.to_polytope();
    auto pts = lattice_points(fp, a3.weight_lattice);
    REQUIRE(pts.size() == 5);
    Weight mid(std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)});
    CHECK(std::count(pts.begin(), pts.end(), mid) == 1);
}

TEST_CASE("square corner via face_by_support") {
    auto sq = Polytope::hull({Weight{0, 0}, Weight{1, 0}, Weight{0, 1}, Weight{1, 1}});
    auto f = face_by_support(sq, Weight{1, 1});
    REQUIRE(f.vertices.size() == 1);
    CHECK(f.vertices[0] == Weight{1, 1});
    CHECK_THROWS_AS(face_by_support(sq, Weight{0, 0}), std::invalid_argument);
}

TEST_CASE("cone_intersect_lattice: disjoint cones give nothing") {
    auto c1 = Cone::from_generators({Weight{1, 0}, Weight{1, 1}});
    auto c2 = Cone::from_generators({Weight{-1, 0}, Weight{-1, -1}});
    auto pts = cone_intersect_lattice(c1, c2, Weight{-3, -3}, Lattice::standard(2),
                                      Weight{-5, -5}, Weight{5, 5});
    CHECK(pts.empty());
}

TEST_CASE("Ehrhart counts grow under scaling for small root polytopes") {
    for (const char* name : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
        auto rs = RootSystem::build(name);
        auto p = rs.root_polytope();
        std::vector<std::size_t> counts;
        for (int m = 1; m <= 3; ++m)
            counts.push_back(lattice_points(p.scaled(m), rs.weight_lattice).size());
        CHECK(counts[0] <= counts[1]);
        CHECK(counts[1] <= counts[2]);
    }
}

TEST_CASE("edge directions are pairwise non-parallel multiples of vertex differences") {
    auto b3 = RootSystem::build("B3");
    auto p = b3.root_polytope();
    Weight v{1, 1, 0};
    auto dirs = p.edges_at_vertex(v);
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j) {
            QMatrix m{dirs[i].coords(), dirs[j].coords()};
            CHECK(mat_rank(m) == 2);
        }
    for (const auto& d : dirs) {
        bool found = false;
        for (const auto& w : p.vertices()) {
            if (w == v) continue;
            if (primitive_direction(w - v) == d) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("G2 and A2 root polytopes coincide in intrinsic coordinates") {
    auto a2 = RootSystem::build("A2");
    auto g2 = RootSystem::build("G2");
    auto flat = [](const RootSystem& rs) {
        std::vector<Weight> v;
        for (const auto& w : rs.roots) v.push_back(rs.to_intrinsic(w));
        return Polytope::hull(v);
    };
    auto pa = flat(a2), pg = flat(g2);
    CHECK(pa.vertices() == pg.vertices());
    CHECK(pa.facets() == pg.facets());
    // same weight lattice downstairs: both are Z^2 by construction
    std::set<Weight> inner_a, inner_g;
    for (const auto& w : lattice_points(pa, Lattice::standard(2))) inner_a.insert(w);
    for (const auto& w : lattice_points(pg, Lattice::standard(2))) inner_g.insert(w);
    CHECK(inner_a == inner_g);
    CHECK(inner_a.size() == 13); // 6 vertices + 6 inner weights + 0
}

TEST_CASE("C3 root polytope vertices are the long roots") {
    auto c3 = RootSystem::build("C3");
    auto p = c3.root_polytope();
    std::set<Weight> verts(p.vertices().begin(), p.vertices().end());
    std::set<Weight> longs(c3.long_roots.begin(), c3.long_roots.end());
    CHECK(verts == longs);
    // short roots sit on the boundary
    for (const auto& s : c3.short_roots) CHECK(p.on_boundary(s));
}

TEST_CASE("B3 short roots lie on facets, not vertices") {
    auto b3 = RootSystem::build("B3");
    auto p = b3.root_polytope();
    std::set<Weight> verts(p.vertices().begin(), p.vertices().end());
    std::set<Weight> longs(b3.long_roots.begin(), b3.long_roots.end());
    CHECK(verts == longs);
    for (const auto& s : b3.short_roots) {
        CHECK_FALSE(p.is_vertex(s));
        CHECK(p.on_boundary(s));
    }
}

TEST_CASE("F4 short roots lie on the boundary of the root polytope") {
    auto f4 = RootSystem::build("F4");
    auto p = f4.root_polytope();
    std::set<Weight> verts(p.vertices().begin(), p.vertices().end());
    std::set<Weight> longs(f4.long_roots.begin(), f4.long_roots.end());
    CHECK(verts == longs);
    for (const auto& s : f4.short_roots) CHECK(p.on_boundary(s));
}

TEST_CASE("A and D root polytopes have every root as a vertex") {
    for (const char* name : {"A2", "A3", "A4", "D4"}) {
        auto rs = RootSystem::build(name);
        auto p = rs.root_polytope();
        CHECK(p.vertices().size() == rs.roots.size());
    }
}
