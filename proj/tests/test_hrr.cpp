#include <catch2/catch_amalgamated.hpp>

#include "torusloc/hrr.hpp"

using namespace torusloc;
using namespace torusloc::hrr;

namespace {

// helper: build an Expr from (c1L exponent, c2F exponent, ...) -> coefficient
Expr expr_of(const ContactRing& cr,
             std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
    Expr e;
    for (const auto& [mono, c] : terms) {
        Mono m(cr.ring.gens(), 0);
        for (std::size_t i = 0; i < mono.size(); ++i) m[i] = mono[i];
        if (c != 0) e[m] = c;
    }
    return e;
}

AffineVal av(Rational c0, Rational d, Rational p1 = 0, Rational p2 = 0) {
    return {c0, d, p1, p2};
}

} // namespace

TEST_CASE("odd Chern relations match the stated lists") {
    // n=1: rank-2 F with F = F* (x) L forces c1F = c1L
    {
        ContactRing cr(1);
        auto rel = odd_chern_relations(1);
        REQUIRE(rel.size() == 1);
        CHECK(rel[0].second == expr_of(cr, {{{1}, 1}}));
    }
    // n=3 (dim 7)
    {
        ContactRing cr(3);
        auto rel = odd_chern_relations(3);
        REQUIRE(rel.size() == 3);
        CHECK(rel[0].second == expr_of(cr, {{{1}, 3}}));                       // c1F = 3 c1L
        CHECK(rel[1].second == expr_of(cr, {{{1, 1}, 2}, {{3}, -5}}));         // c3F
        CHECK(rel[2].second == expr_of(cr, {{{1, 0, 1}, 1}, {{3, 1}, -1}, {{5}, 3}})); // c5F
    }
    // n=4 (dim 9)
    {
        ContactRing cr(4);
        auto rel = odd_chern_relations(4);
        REQUIRE(rel.size() == 4);
        CHECK(rel[0].second == expr_of(cr, {{{1}, 4}}));
        CHECK(rel[1].second == expr_of(cr, {{{1, 1}, 3}, {{3}, -14}}));
        CHECK(rel[2].second == expr_of(cr, {{{1, 0, 1}, 2}, {{3, 1}, -5}, {{5}, 28}}));
        CHECK(rel[3].second ==
              expr_of(cr, {{{1, 0, 0, 1}, 1}, {{3, 0, 1}, -1}, {{5, 1}, 3}, {{7}, -17}}));
    }
}

TEST_CASE("twist symmetry is consistent on the even classes") {
    for (int n = 1; n <= 5; ++n) CHECK(twist_symmetry_consistent(n));
}

TEST_CASE("dim 7 Hilbert polynomial matches the displayed formula") {
    auto hp = hilbert_polynomial(3);
    REQUIRE(hp.dim == 7);
    CHECK(hp.uses_p1);
    CHECK_FALSE(hp.uses_p2);
    const auto& g = hp.binomial_coeffs;
    CHECK(g[0] == av(0, 1));        // d * C(m+7,7)
    CHECK(g[1] == av(0, -2));       // -2d * C(m+6,6)
    CHECK(g[2] == av(-4, 1, 1));    // (d + p(1) - 4) * C(m+5,5)
    CHECK(g[3] == av(4, 0, -1));    // -(p(1) - 4) * C(m+4,4)
    CHECK(g[4] == av(1, 0));        // C(m+3,3)
    for (int k = 5; k <= 7; ++k) CHECK(g[static_cast<std::size_t>(k)].is_zero());
}

TEST_CASE("dim 9 Hilbert polynomial matches the displayed formula") {
    auto hp = hilbert_polynomial(4);
    REQUIRE(hp.dim == 9);
    const auto& g = hp.binomial_coeffs;
    CHECK(g[0] == av(0, 1));
    CHECK(g[1] == av(0, Rational(-5, 2)));
    CHECK(g[2] == av(-14, 2, 2));
    CHECK(g[3] == av(21, Rational(-1, 2), -3));
    CHECK(g[4] == av(-5, 0, 1));
    CHECK(g[5] == av(-1, 0));
    for (int k = 6; k <= 9; ++k) CHECK(g[static_cast<std::size_t>(k)].is_zero());
}

TEST_CASE("dim 11 Hilbert polynomial matches the displayed formula") {
    auto hp = hilbert_polynomial(5);
    REQUIRE(hp.dim == 11);
    CHECK(hp.uses_p1);
    CHECK(hp.uses_p2);
    const auto& g = hp.binomial_coeffs;
    CHECK(g[0] == av(0, 1));
    CHECK(g[1] == av(0, -3));
    CHECK(g[2] == av(27, 3, -8, 1));
    CHECK(g[3] == av(-54, -1, 16, -2));
    CHECK(g[4] == av(21, 0, -7, 1));
    CHECK(g[5] == av(6, 0, -1));
    CHECK(g[6] == av(1, 0));
    for (int k = 7; k <= 11; ++k) CHECK(g[static_cast<std::size_t>(k)].is_zero());
}

TEST_CASE("dim 3 Hilbert polynomial reduces to the classical threefold formula") {
    // chi(L^m) = d m(m+1)(m+2)/6 + m + 1 for a contact Fano threefold
    auto hp = hilbert_polynomial(1);
    REQUIRE(hp.dim == 3);
    CHECK_FALSE(hp.uses_p1);
    CHECK(hp.monomial_coeffs[0] == av(1, 0));
    CHECK(hp.monomial_coeffs[1] == av(1, Rational(1, 3)));
    CHECK(hp.monomial_coeffs[2] == av(0, Rational(1, 2)));
    CHECK(hp.monomial_coeffs[3] == av(0, Rational(1, 6)));
}

TEST_CASE("Kodaira constraints hold numerically") {
    for (int n : {1, 2, 3, 4, 5}) {
        auto hp = hilbert_polynomial(n);
        Rational d = 17, p1 = 23, p2 = 31;
        CHECK(hp.eval(0, d, p1, p2) == 1);
        CHECK(hp.eval(-1, d, p1, p2) == 0);
        if (n >= 2) CHECK(hp.eval(-2, d, p1, p2) == 0);
        if (hp.uses_p1) CHECK(hp.eval(1, d, p1, p2) == p1);
        if (hp.uses_p2) CHECK(hp.eval(2, d, p1, p2) == p2);
    }
}

TEST_CASE("Serre duality symmetry p(m) = -p(-(n+1)-m)") {
    for (int n : {1, 2, 3, 4, 5}) {
        auto hp = hilbert_polynomial(n);
        for (int m = -6; m <= 6; ++m) {
            AffineVal lhs = hp.eval_affine(m);
            AffineVal rhs = hp.eval_affine(Rational(-(n + 1) - m));
            CHECK((lhs + rhs).is_zero());
        }
    }
}

TEST_CASE("intersection identities for dim 7 and dim 9") {
    auto i3 = intersection_identities(3);
    REQUIRE(i3.size() == 2);
    CHECK(i3[0].rhs == av(0, 16));           // c1(TX)^2 c1(L)^5 = 16 d
    CHECK(i3[1].rhs == av(-48, 4, 12));      // c2(TX) c1(L)^5 = 4d + 12 p(1) - 48

    auto i4 = intersection_identities(4);
    REQUIRE(i4.size() == 2);
    CHECK(i4[0].rhs == av(0, 25));           // c1(TX)^2 c1(L)^7 = 25 d
    CHECK(i4[1].rhs == av(-168, 9, 24));     // c2(TX) c1(L)^7 = 9d + 24 p(1) - 168

    // independent check: c1(TX) = (n+1) c1L so the first identity is (n+1)^2 d
    for (int n : {1, 2, 3, 4, 5}) {
        auto ids = intersection_identities(n);
        CHECK(ids[0].rhs == av(0, (n + 1) * (n + 1)));
    }
}

TEST_CASE("Bogomolov-Gieseker bounds") {
    auto b3 = bg_bound(3);
    REQUIRE(b3.solved_for_p1);
    CHECK(b3.p1_const == 4);
    CHECK(b3.p1_slope == Rational(5, 21));

    auto b4 = bg_bound(4);
    REQUIRE(b4.solved_for_p1);
    CHECK(b4.p1_const == 7);
    CHECK(b4.p1_slope == Rational(19, 216));

    auto b5 = bg_bound(5);
    CHECK_FALSE(b5.solved_for_p1);
    // 11 p(2) + 297 >= 88 p(1) + 4d
    CHECK(b5.form == av(297, -4, -88, 11));
}

TEST_CASE("integer corollaries: dim Aut >= 5 and >= 8") {
    auto b3 = bg_bound(3);
    for (int deg = 1; deg <= 100; ++deg) {
        Rational bound = b3.p1_const + b3.p1_slope * deg;
        Int min_p1 = rat_ceil(bound);
        CHECK(min_p1 >= 5);
    }
    auto b4 = bg_bound(4);
    auto pc = parity_check(4);
    CHECK(pc.modulus == 2);
    for (int deg = 2; deg <= 100; deg += 2) {
        Rational bound = b4.p1_const + b4.p1_slope * deg;
        CHECK(rat_ceil(bound) >= 8);
    }
}

TEST_CASE("bg threshold at degree 21k is exactly 4+5k") {
    auto b3 = bg_bound(3);
    for (int k = 1; k <= 5; ++k) {
        Rational bound = b3.p1_const + b3.p1_slope * (21 * k);
        CHECK(bound == 4 + 5 * k);
        CHECK(is_integer(bound));
    }
}

TEST_CASE("parity check verdicts") {
    auto even = parity_check(4, Int(6));
    REQUIRE(even.verdict.has_value());
    CHECK(*even.verdict);
    auto odd = parity_check(4, Int(7));
    REQUIRE(odd.verdict.has_value());
    CHECK_FALSE(*odd.verdict);
    // no condition in dim 7
    CHECK(parity_check(3).modulus == 1);
}

TEST_CASE("leading coefficient is d/dim!") {
    for (int n : {1, 2, 3, 4, 5}) {
        auto hp = hilbert_polynomial(n);
        Rational fact = 1;
        for (int j = 2; j <= hp.dim; ++j) fact *= j;
        CHECK(hp.monomial_coeffs[static_cast<std::size_t>(hp.dim)] ==
              av(0, 1 / fact));
        CHECK(hp.binomial_coeffs[0] == av(0, 1));
    }
}

TEST_CASE("fractional evaluation is supported") {
    auto hp = hilbert_polynomial(3);
    // no crash, exact rational result
    Rational v = hp.eval(Rational(1, 2), 21, 21);
    CHECK(rat_den(v) > 0);
}
