#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusloc/linalg.hpp"
#include "torusloc/rational.hpp"

// Hirzebruch-Riemann-Roch for contact manifolds of dimension 2n+1: symbolic
// Chern ring on c1(L), c2(F), c4(F), ..., the odd-class relations coming from
// F = F* (x) L, Hilbert polynomials with the Kodaira constraints imposed, and
// the Bogomolov-Gieseker bound on p(1).

namespace torusloc::hrr {

using torusloc::Int;
using torusloc::QMatrix;
using torusloc::Rational;

inline Rational binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    Rational r = 1;
    for (int i = 0; i < b; ++i) r = r * Rational(a - i) / Rational(i + 1);
    return r;
}

// ---------------------------------------------------------------------------
// Truncated graded polynomial ring
// ---------------------------------------------------------------------------

using Mono = std::vector<int>;
using Expr = std::map<Mono, Rational>;

/// Commutative ring Q[g_0..g_k] with assigned degrees, truncated above `top`.
class Ring {
public:
    Ring(std::vector<int> degrees, int top) : deg_(std::move(degrees)), top_(top) {}

    std::size_t gens() const { return deg_.size(); }
    int top() const { return top_; }
    int gen_degree(std::size_t i) const { return deg_[i]; }

    int degree(const Mono& m) const {
        int d = 0;
        for (std::size_t i = 0; i < deg_.size(); ++i) d += m[i] * deg_[i];
        return d;
    }

    Expr zero() const { return {}; }
    Expr one() const { return {{Mono(gens(), 0), 1}}; }
    Expr gen(std::size_t i) const {
        Mono m(gens(), 0);
        m[i] = 1;
        if (deg_[i] > top_) return {};
        return {{m, 1}};
    }

    Expr scale(const Expr& a, const Rational& s) const {
        if (s == 0) return {};
        Expr r;
        for (const auto& [m, c] : a) r[m] = c * s;
        return r;
    }

    Expr add(const Expr& a, const Expr& b) const {
        Expr r = a;
        for (const auto& [m, c] : b) {
            auto& slot = r[m];
            slot += c;
            if (slot == 0) r.erase(m);
        }
        return r;
    }

    Expr mul(const Expr& a, const Expr& b) const {
        Expr r;
        for (const auto& [m1, c1] : a)
            for (const auto& [m2, c2] : b) {
                Mono m(gens());
                for (std::size_t i = 0; i < gens(); ++i) m[i] = m1[i] + m2[i];
                if (degree(m) > top_) continue;
                auto& slot = r[m];
                slot += c1 * c2;
                if (slot == 0) r.erase(m);
            }
        return r;
    }

    Expr pow(const Expr& a, int e) const {
        Expr r = one();
        for (int i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }

    /// graded part of fixed degree
    Expr part(const Expr& a, int d) const {
        Expr r;
        for (const auto& [m, c] : a)
            if (degree(m) == d) r[m] = c;
        return r;
    }

    /// exp of an expression with zero constant term
    Expr exp(const Expr& a) const {
        if (a.count(Mono(gens(), 0)))
            throw std::domain_error("Ring::exp: nonzero constant term");
        Expr r = one(), p = one();
        Rational fact = 1;
        for (int j = 1; j <= top_; ++j) {
            p = mul(p, a);
            if (p.empty()) break;
            fact *= j;
            r = add(r, scale(p, 1 / fact));
        }
        return r;
    }

    /// all monomials of exact degree d, lexicographically ordered
    std::vector<Mono> monomials_of_degree(int d) const {
        std::vector<Mono> out;
        Mono m(gens(), 0);
        rec_monomials(d, 0, m, out);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void rec_monomials(int d, std::size_t i, Mono& m, std::vector<Mono>& out) const {
        if (i == gens()) {
            if (d == 0) out.push_back(m);
            return;
        }
        for (int e = 0; e * deg_[i] <= d; ++e) {
            m[i] = e;
            rec_monomials(d - e * deg_[i], i + 1, m, out);
        }
        m[i] = 0;
    }

    std::vector<int> deg_;
    int top_;
};

// ---------------------------------------------------------------------------
// Contact Chern data: generators and the odd-class relations
// ---------------------------------------------------------------------------

/// The reduced ring for dim X = 2n+1: generators c1(L) (degree 1) and the even
/// Chern classes c2(F), c4(F), ..., c_{2n}(F).
struct ContactRing {
    int n;
    Ring ring;                    // generators: c1L, c2F, c4F, ..., c2nF
    std::vector<Expr> chern_f;    // chern_f[k] = c_k(F), odd classes substituted
    std::vector<std::string> gen_names;

    explicit ContactRing(int n_) : n(n_), ring(make_degrees(n_), 2 * n_ + 1) {
        gen_names.push_back("c1L");
        for (int j = 1; j <= n; ++j) gen_names.push_back("c" + std::to_string(2 * j) + "F");
        derive_odd_classes();
    }

    Expr c1l() const { return ring.gen(0); }

    static std::vector<int> make_degrees(int n) {
        std::vector<int> d{1};
        for (int j = 1; j <= n; ++j) d.push_back(2 * j);
        return d;
    }

private:
    // F = F* (x) L forces, for every k,
    //   c_k(F) = sum_i C(2n-i, k-i) (-1)^i c_i(F) c1L^(k-i);
    // the odd-k equations solve triangularly for the odd classes.
    void derive_odd_classes() {
        chern_f.assign(static_cast<std::size_t>(2 * n + 1), ring.zero());
        chern_f[0] = ring.one();
        for (int j = 1; j <= n; ++j)
            chern_f[static_cast<std::size_t>(2 * j)] = ring.gen(static_cast<std::size_t>(j));
        Expr l = c1l();
        for (int k = 1; k <= 2 * n; k += 2) {
            // 2 c_k = sum_{i<k} C(2n-i,k-i) (-1)^i c_i c1L^(k-i)
            Expr rhs = ring.zero();
            for (int i = 0; i < k; ++i) {
                Rational coef = binom(2 * n - i, k - i) * (i % 2 ? -1 : 1);
                if (coef == 0) continue;
                rhs = ring.add(rhs, ring.scale(ring.mul(chern_f[static_cast<std::size_t>(i)],
                                                        ring.pow(l, k - i)),
                                               coef));
            }
            chern_f[static_cast<std::size_t>(k)] = ring.scale(rhs, Rational(1, 2));
        }
    }
};

/// The odd Chern relations c1(F), c3(F), ... in the reduced ring.
inline std::vector<std::pair<std::string, Expr>> odd_chern_relations(int n) {
    if (n < 1) throw std::invalid_argument("odd_chern_relations: n >= 1 required");
    ContactRing cr(n);
    std::vector<std::pair<std::string, Expr>> out;
    for (int k = 1; k <= 2 * n; k += 2)
        out.push_back({"c" + std::to_string(k) + "F",
                       cr.chern_f[static_cast<std::size_t>(k)]});
    return out;
}

/// Consistency of the twist symmetry: after substituting the odd classes the
/// even-k equations must vanish identically.
inline bool twist_symmetry_consistent(int n) {
    ContactRing cr(n);
    Expr l = cr.c1l();
    for (int k = 2; k <= 2 * n; k += 2) {
        Expr rhs = cr.ring.zero();
        for (int i = 0; i <= k; ++i) {
            Rational coef = binom(2 * n - i, k - i) * (i % 2 ? -1 : 1);
            if (coef == 0) continue;
            rhs = cr.ring.add(
                rhs, cr.ring.scale(cr.ring.mul(cr.chern_f[static_cast<std::size_t>(i)],
                                               cr.ring.pow(l, k - i)),
                                   coef));
        }
        Expr diff = cr.ring.add(rhs, cr.ring.scale(cr.chern_f[static_cast<std::size_t>(k)], -1));
        if (!diff.empty()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Todd class expansion
// ---------------------------------------------------------------------------

namespace detail {

// power series of x/(1-e^-x) up to degree top
inline std::vector<Rational> todd_series(int top) {
    std::vector<Rational> a(static_cast<std::size_t>(top) + 1); // (1 - e^-x)/x
    Rational fact = 1;
    for (int j = 0; j <= top; ++j) {
        fact *= (j + 1);
        a[static_cast<std::size_t>(j)] = Rational((j % 2) ? -1 : 1) / fact;
    }
    std::vector<Rational> q(static_cast<std::size_t>(top) + 1);
    q[0] = 1;
    for (int j = 1; j <= top; ++j) {
        Rational s = 0;
        for (int i = 1; i <= j; ++i)
            s += a[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j - i)];
        q[static_cast<std::size_t>(j)] = -s;
    }
    return q;
}

// log of the Todd series
inline std::vector<Rational> todd_log_series(int top) {
    auto q = todd_series(top);
    std::vector<Rational> u = q;
    u[0] = 0; // u = Q - 1
    std::vector<Rational> logq(static_cast<std::size_t>(top) + 1);
    std::vector<Rational> upow(static_cast<std::size_t>(top) + 1);
    upow[0] = 1;
    for (int k = 1; k <= top; ++k) {
        std::vector<Rational> next(static_cast<std::size_t>(top) + 1);
        for (int i = 0; i <= top; ++i) {
            if (upow[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 1; i + j <= top; ++j)
                next[static_cast<std::size_t>(i + j)] +=
                    upow[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)];
        }
        upow = std::move(next);
        Rational sign = (k % 2) ? 1 : -1;
        for (int i = 0; i <= top; ++i)
            logq[static_cast<std::size_t>(i)] += sign * upow[static_cast<std::size_t>(i)] / k;
    }
    return logq;
}

// power sums of the Chern roots of F via Newton's identities
inline std::vector<Expr> power_sums(const ContactRing& cr) {
    const Ring& rg = cr.ring;
    int top = rg.top();
    std::vector<Expr> p(static_cast<std::size_t>(top) + 1, rg.zero());
    for (int k = 1; k <= top; ++k) {
        Expr s = rg.zero();
        for (int i = 1; i < k && i <= 2 * cr.n; ++i) {
            Rational sign = (i % 2) ? 1 : -1;
            s = rg.add(s, rg.scale(rg.mul(cr.chern_f[static_cast<std::size_t>(i)],
                                          p[static_cast<std::size_t>(k - i)]),
                                   sign));
        }
        if (k <= 2 * cr.n) {
            Rational sign = (k % 2) ? 1 : -1;
            s = rg.add(s, rg.scale(cr.chern_f[static_cast<std::size_t>(k)], sign * k));
        }
        p[static_cast<std::size_t>(k)] = s;
    }
    return p;
}

} // namespace detail

/// td(TX) = td(F) td(L) in the reduced ring.
inline Expr todd_tx(const ContactRing& cr) {
    const Ring& rg = cr.ring;
    int top = rg.top();
    auto logq = detail::todd_log_series(top);
    auto psums = detail::power_sums(cr);
    Expr logtd = rg.zero();
    for (int k = 1; k <= top; ++k)
        if (logq[static_cast<std::size_t>(k)] != 0)
            logtd = rg.add(logtd, rg.scale(psums[static_cast<std::size_t>(k)],
                                           logq[static_cast<std::size_t>(k)]));
    Expr td_f = rg.exp(logtd);
    auto q = detail::todd_series(top);
    Expr td_l = rg.zero();
    for (int k = 0; k <= top; ++k)
        td_l = rg.add(td_l, rg.scale(rg.pow(cr.c1l(), k), q[static_cast<std::size_t>(k)]));
    return rg.mul(td_f, td_l);
}

// ---------------------------------------------------------------------------
// Intersection profiles, the constraint span, Hilbert polynomials
// ---------------------------------------------------------------------------

/// Affine value  c0 + d * degree + p1 * p(1) + p2 * p(2).
struct AffineVal {
    Rational c0, d, p1, p2;

    bool operator==(const AffineVal& o) const {
        return c0 == o.c0 && d == o.d && p1 == o.p1 && p2 == o.p2;
    }
    bool is_zero() const { return c0 == 0 && d == 0 && p1 == 0 && p2 == 0; }
    AffineVal operator+(const AffineVal& o) const {
        return {c0 + o.c0, d + o.d, p1 + o.p1, p2 + o.p2};
    }
    AffineVal operator-(const AffineVal& o) const {
        return {c0 - o.c0, d - o.d, p1 - o.p1, p2 - o.p2};
    }
    AffineVal scaled(const Rational& s) const { return {c0 * s, d * s, p1 * s, p2 * s}; }
    Rational eval(const Rational& deg, const Rational& P1, const Rational& P2) const {
        return c0 + d * deg + p1 * P1 + p2 * P2;
    }
    std::string str() const {
        std::ostringstream os;
        bool first = true;
        auto piece = [&](const Rational& v, const std::string& name) {
            if (v == 0) return;
            if (!first) os << (v > 0 ? " + " : " - ");
            Rational a = (!first && v < 0) ? -v : v;
            if (name.empty())
                os << torusloc::rational_str(a);
            else if (a == 1)
                os << name;
            else if (a == -1 && first)
                os << "-" << name;
            else
                os << torusloc::rational_str(a) << "*" << name;
            first = false;
        };
        piece(d, "d");
        piece(p1, "p(1)");
        piece(p2, "p(2)");
        piece(c0, "");
        if (first) os << "0";
        return os.str();
    }
};

/// The intersection profile: every top-degree monomial of the ring is a
/// symbol, c1L^top being the distinguished degree.
struct IntersectionProfile {
    std::vector<Mono> monomials;
    std::size_t degree_index;

    explicit IntersectionProfile(const ContactRing& cr) {
        monomials = cr.ring.monomials_of_degree(cr.ring.top());
        Mono dmono(cr.ring.gens(), 0);
        dmono[0] = cr.ring.top();
        degree_index = static_cast<std::size_t>(
            std::find(monomials.begin(), monomials.end(), dmono) - monomials.begin());
    }

    std::vector<Rational> functional(const Expr& top_part) const {
        std::vector<Rational> v(monomials.size());
        for (const auto& [m, c] : top_part) {
            auto it = std::find(monomials.begin(), monomials.end(), m);
            if (it == monomials.end())
                throw std::domain_error("IntersectionProfile: non-top-degree monomial");
            v[static_cast<std::size_t>(it - monomials.begin())] = c;
        }
        return v;
    }
};

namespace detail {

inline std::optional<std::vector<Rational>> represent(
    const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& target) {
    const std::size_t rows = target.size(), cols = columns.size();
    QMatrix a(rows, std::vector<Rational>(cols));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) a[i][j] = columns[j][i];
    return torusloc::solve_linear(a, target);
}

} // namespace detail

/// The HRR expansion of a contact (2n+1)-fold together with the constraint
/// functionals p(0)=1, p(-1)=0, p(-2)=0 (n >= 2) and the opaque values p(1),
/// p(2). Top-degree functionals are expressed through this span with as few
/// opaque values as possible.
class HRRContext {
public:
    explicit HRRContext(int n)
        : cr_(n), profile_(cr_) {
        const Ring& rg = cr_.ring;
        const int top = rg.top();
        Expr td = todd_tx(cr_);
        ell_.resize(static_cast<std::size_t>(top) + 1);
        Rational fact = 1;
        for (int j = 0; j <= top; ++j) {
            if (j > 0) fact *= j;
            Expr piece = rg.mul(rg.part(td, top - j), rg.pow(cr_.c1l(), j));
            auto v = profile_.functional(rg.part(piece, top));
            for (auto& x : v) x /= fact;
            ell_[static_cast<std::size_t>(j)] = std::move(v);
        }
    }

    const ContactRing& contact_ring() const { return cr_; }
    const IntersectionProfile& profile() const { return profile_; }
    int dim() const { return cr_.ring.top(); }

    /// functional of the coefficient of m^j in p(m)
    const std::vector<Rational>& ell(std::size_t j) const { return ell_[j]; }

    /// functional of p(t)
    std::vector<Rational> phi(const Rational& t) const {
        std::vector<Rational> v(profile_.monomials.size());
        Rational tp = 1;
        for (std::size_t j = 0; j < ell_.size(); ++j) {
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += tp * ell_[j][i];
            tp *= t;
        }
        return v;
    }

    /// Represents each target functional as alpha*degree + beta*p(1) +
    /// gamma*p(2) + constant, using the Kodaira constraints; p(1), p(2) enter
    /// only when the span without them is insufficient (tried in that order).
    std::optional<std::vector<AffineVal>> represent_all(
        const std::vector<std::vector<Rational>>& targets, bool& used_p1, bool& used_p2) const {
        std::vector<Rational> dfunc(profile_.monomials.size());
        dfunc[profile_.degree_index] = 1;
        for (auto [with_p1, with_p2] : std::vector<std::pair<bool, bool>>{
                 {false, false}, {true, false}, {true, true}}) {
            std::vector<std::vector<Rational>> cols{dfunc};
            std::vector<int> kind{0}; // 0 deg, 1 p1, 2 p2, 3 constants-on-locus
            std::vector<Rational> locus{0};
            if (with_p1) { cols.push_back(phi(1)); kind.push_back(1); locus.push_back(0); }
            if (with_p2) { cols.push_back(phi(2)); kind.push_back(2); locus.push_back(0); }
            cols.push_back(phi(0)); kind.push_back(3); locus.push_back(1);
            cols.push_back(phi(-1)); kind.push_back(3); locus.push_back(0);
            if (cr_.n >= 2) { cols.push_back(phi(-2)); kind.push_back(3); locus.push_back(0); }
            std::vector<AffineVal> out;
            bool ok = true;
            for (const auto& t : targets) {
                auto sol = detail::represent(cols, t);
                if (!sol) { ok = false; break; }
                AffineVal av{};
                for (std::size_t ci = 0; ci < cols.size(); ++ci) {
                    const Rational& coef = (*sol)[ci];
                    if (coef == 0) continue;
                    switch (kind[ci]) {
                        case 0: av.d += coef; break;
                        case 1: av.p1 += coef; break;
                        case 2: av.p2 += coef; break;
                        default: av.c0 += coef * locus[ci]; break;
                    }
                }
                out.push_back(av);
            }
            if (ok) {
                used_p1 = with_p1;
                used_p2 = with_p2;
                return out;
            }
        }
        return std::nullopt;
    }

private:
    ContactRing cr_;
    IntersectionProfile profile_;
    std::vector<std::vector<Rational>> ell_;
};

struct HilbertPoly {
    int dim = 0;
    std::vector<AffineVal> monomial_coeffs; // coefficient of m^j, j = 0..dim
    std::vector<AffineVal> binomial_coeffs; // coefficient of C(m+dim-k, dim-k), k = 0..dim
    bool uses_p1 = false, uses_p2 = false;

    Rational eval(const Rational& m, const Rational& deg, const Rational& P1 = 0,
                  const Rational& P2 = 0) const {
        Rational mp = 1, s = 0;
        for (int j = 0; j <= dim; ++j) {
            s += monomial_coeffs[static_cast<std::size_t>(j)].eval(deg, P1, P2) * mp;
            mp *= m;
        }
        return s;
    }

    AffineVal eval_affine(const Rational& m) const {
        AffineVal s{};
        Rational mp = 1;
        for (int j = 0; j <= dim; ++j) {
            s = s + monomial_coeffs[static_cast<std::size_t>(j)].scaled(mp);
            mp *= m;
        }
        return s;
    }
};

/// The Hilbert polynomial p(m) = chi(X, L^m) of a contact Fano (2n+1)-fold,
/// with profile symbols eliminated through the Kodaira constraints and the
/// opaque values p(1), p(2).
inline HilbertPoly hilbert_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("hilbert_polynomial: n >= 1 required");
    HRRContext ctx(n);
    const int top = ctx.dim();
    std::vector<std::vector<Rational>> targets;
    for (int j = 0; j <= top; ++j) targets.push_back(ctx.ell(static_cast<std::size_t>(j)));
    HilbertPoly hp;
    hp.dim = top;
    auto rep = ctx.represent_all(targets, hp.uses_p1, hp.uses_p2);
    if (!rep) throw std::domain_error("hilbert_polynomial: profile elimination failed");
    hp.monomial_coeffs = *rep;

    // binomial basis: p(m) = sum_k gamma_k C(m + dim - k, dim - k)
    const std::size_t sz = static_cast<std::size_t>(top) + 1;
    QMatrix trans(sz, std::vector<Rational>(sz));
    for (std::size_t q = 0; q < sz; ++q) {
        std::vector<Rational> poly{1}; // C(m+q, q) in powers of m
        for (std::size_t i = 1; i <= q; ++i) {
            std::vector<Rational> next(poly.size() + 1);
            for (std::size_t j = 0; j < poly.size(); ++j) {
                next[j] += poly[j] * Rational(static_cast<int>(i));
                next[j + 1] += poly[j];
            }
            for (auto& x : next) x /= Rational(static_cast<int>(i));
            poly = std::move(next);
        }
        for (std::size_t j = 0; j < poly.size(); ++j) trans[j][q] = poly[j];
    }
    auto solve_channel = [&](auto pick) {
        std::vector<Rational> rhs(sz);
        for (std::size_t j = 0; j < sz; ++j) rhs[j] = pick(hp.monomial_coeffs[j]);
        auto sol = torusloc::solve_linear(trans, rhs);
        if (!sol) throw std::domain_error("hilbert_polynomial: basis conversion failed");
        return *sol;
    };
    auto bc0 = solve_channel([](const AffineVal& a) { return a.c0; });
    auto bd = solve_channel([](const AffineVal& a) { return a.d; });
    auto bp1 = solve_channel([](const AffineVal& a) { return a.p1; });
    auto bp2 = solve_channel([](const AffineVal& a) { return a.p2; });
    hp.binomial_coeffs.assign(sz, AffineVal{});
    for (std::size_t q = 0; q < sz; ++q)
        hp.binomial_coeffs[sz - 1 - q] = {bc0[q], bd[q], bp1[q], bp2[q]};
    return hp;
}

// ---------------------------------------------------------------------------
// Intersection identities and the Bogomolov-Gieseker bound
// ---------------------------------------------------------------------------

struct Identity {
    std::string lhs;
    AffineVal rhs;
    std::string str() const { return lhs + " = " + rhs.str(); }
};

/// c1(TX)^2 c1(L)^(dim-2) and c2(TX) c1(L)^(dim-2) through the degree and
/// p(1), via c(TX) = c(F)(1 + c1L).
inline std::vector<Identity> intersection_identities(int n) {
    if (n < 1) throw std::invalid_argument("intersection_identities: n >= 1 required");
    HRRContext ctx(n);
    const ContactRing& cr = ctx.contact_ring();
    const Ring& rg = cr.ring;
    const int top = rg.top();
    Expr c1tx = rg.add(cr.chern_f[1], cr.c1l());
    Expr c2tx = rg.add(cr.chern_f[2], rg.mul(cr.chern_f[1], cr.c1l()));
    Expr lpow = rg.pow(cr.c1l(), top - 2);
    std::vector<std::vector<Rational>> targets{
        ctx.profile().functional(rg.mul(rg.pow(c1tx, 2), lpow)),
        ctx.profile().functional(rg.mul(c2tx, lpow))};
    bool u1 = false, u2 = false;
    auto rep = ctx.represent_all(targets, u1, u2);
    if (!rep) throw std::domain_error("intersection_identities: elimination failed");
    std::string lp = "c1(L)^" + std::to_string(top - 2);
    return {{"c1(TX)^2 " + lp, (*rep)[0]}, {"c2(TX) " + lp, (*rep)[1]}};
}

/// The stability inequality (2 dim c2(TX) - (dim-1) c1(TX)^2) c1(L)^(dim-2)
/// >= 0 rearranged as a bound: for n = 3, 4 a lower bound on p(1), for n = 5
/// the three-term inequality in p(1), p(2) and the degree.
struct BGBound {
    int dim = 0;
    AffineVal form; // the inequality is form >= 0, integer coefficients
    bool solved_for_p1 = false;
    Rational p1_const; // p(1) >= p1_const + p1_slope * degree
    Rational p1_slope;

    std::string str() const {
        if (solved_for_p1) {
            std::ostringstream os;
            os << "p(1) >= " << torusloc::rational_str(p1_const);
            if (p1_slope != 0) os << " + " << torusloc::rational_str(p1_slope) << "*d";
            return os.str();
        }
        return form.str() + " >= 0";
    }
};

inline BGBound bg_bound(int n) {
    if (n < 1) throw std::invalid_argument("bg_bound: n >= 1 required");
    HRRContext ctx(n);
    const ContactRing& cr = ctx.contact_ring();
    const Ring& rg = cr.ring;
    const int top = rg.top();
    Expr c1tx = rg.add(cr.chern_f[1], cr.c1l());
    Expr c2tx = rg.add(cr.chern_f[2], rg.mul(cr.chern_f[1], cr.c1l()));
    Expr lpow = rg.pow(cr.c1l(), top - 2);
    Expr bg = rg.add(rg.scale(rg.mul(c2tx, lpow), 2 * top),
                     rg.scale(rg.mul(rg.pow(c1tx, 2), lpow), -(top - 1)));
    bool u1 = false, u2 = false;
    auto rep = ctx.represent_all({ctx.profile().functional(bg)}, u1, u2);
    if (!rep) throw std::domain_error("bg_bound: elimination failed");
    BGBound b;
    b.dim = top;
    b.form = (*rep)[0];
    Int lcm = 1;
    for (const Rational& x : {b.form.c0, b.form.d, b.form.p1, b.form.p2})
        lcm = torusloc::int_lcm(lcm, torusloc::rat_den(x));
    b.form = b.form.scaled(Rational(lcm));
    Int g = 0;
    for (const Rational& x : {b.form.c0, b.form.d, b.form.p1, b.form.p2})
        g = torusloc::int_gcd(g, torusloc::rat_num(x));
    if (g > 1) b.form = b.form.scaled(Rational(1) / Rational(g));
    if (b.form.p2 == 0 && b.form.p1 > 0) {
        b.solved_for_p1 = true;
        b.p1_const = -b.form.c0 / b.form.p1;
        b.p1_slope = -b.form.d / b.form.p1;
    }
    return b;
}

/// Integrality of p(m) in the binomial basis: the degree must clear the
/// denominators of its coefficients (for dim 9 this forces an even degree).
struct ParityCheck {
    Int modulus = 1;
    std::optional<bool> verdict;
};

inline ParityCheck parity_check(int n, std::optional<Int> degree = std::nullopt) {
    HilbertPoly hp = hilbert_polynomial(n);
    ParityCheck pc;
    for (const auto& av : hp.binomial_coeffs) {
        pc.modulus = torusloc::int_lcm(pc.modulus, torusloc::rat_den(av.d));
        if (!torusloc::is_integer(av.p1) || !torusloc::is_integer(av.p2) ||
            !torusloc::is_integer(av.c0))
            throw std::domain_error("parity_check: unexpected non-integral coefficient");
    }
    if (degree) pc.verdict = (*degree % pc.modulus) == 0;
    return pc;
}

/// Pretty-printer for ring expressions, e.g. "2*c2F*c1L - 5*c1L^3".
inline std::string expr_str(const ContactRing& cr, const Expr& e) {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e) {
        Rational a = c;
        if (!first) os << (a > 0 ? " + " : " - ");
        if (!first && a < 0) a = -a;
        bool printed = false;
        if (a != 1 || std::all_of(m.begin(), m.end(), [](int x) { return x == 0; })) {
            os << torusloc::rational_str(a);
            printed = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (printed) os << "*";
            os << cr.gen_names[i];
            if (m[i] > 1) os << "^" << m[i];
            printed = true;
        }
        first = false;
    }
    return os.str();
}

} // namespace torusloc::hrr
