#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "torusloc/lattice.hpp"
#include "torusloc/laurent.hpp"
#include "torusloc/polytope.hpp"
#include "torusloc/weight.hpp"

namespace torusloc {

// ---------------------------------------------------------------------------
// Fixed-point data model
// ---------------------------------------------------------------------------

/// Multiset of nonzero weights of the torus action on the conormal space of a
/// fixed component; its size (with multiplicity) is the codimension.
class Compass {
public:
    Compass() = default;
    Compass(std::initializer_list<Weight> ws) {
        for (const auto& w : ws) add(w, 1);
    }

    void add(const Weight& nu, int mult) {
        if (nu.is_zero()) throw std::invalid_argument("Compass: zero weight");
        if (mult <= 0) throw std::invalid_argument("Compass: nonpositive multiplicity");
        entries_[nu] += mult;
    }

    const std::map<Weight, int>& entries() const { return entries_; }

    int size() const {
        int s = 0;
        for (const auto& [w, m] : entries_) s += m;
        return s;
    }
    int multiplicity(const Weight& nu) const {
        auto it = entries_.find(nu);
        return it == entries_.end() ? 0 : it->second;
    }
    bool operator==(const Compass& o) const { return entries_ == o.entries_; }
    bool operator<(const Compass& o) const { return entries_ < o.entries_; }

    Weight weighted_sum() const {
        if (entries_.empty()) throw std::domain_error("Compass: empty");
        Weight s(entries_.begin()->first.rank());
        for (const auto& [nu, m] : entries_) s = s + nu * Rational(m);
        return s;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        bool first = true;
        for (const auto& [nu, m] : entries_) {
            if (!first) os << ", ";
            os << nu;
            if (m > 1) os << "^" << m;
            first = false;
        }
        os << ")";
        return os.str();
    }

private:
    std::map<Weight, int> entries_;
};

struct FixedPoint {
    std::string label;
    Weight mu;
    Compass compass;
};

struct ConormalSummand {
    Weight nu;
    int rank = 1;      // rank of the conormal summand
    int c1 = 0;        // integral of c1 over the curve
};

struct FixedCurve {
    std::string label;
    Weight mu;
    int genus = 0;
    int degree = 0;    // degree of L on the curve
    std::vector<ConormalSummand> conormal;
};

/// A family of `symbol` identical isolated fixed points with unknown count.
struct UnknownPointFamily {
    std::string symbol;
    Weight mu;
    Compass compass;
};

struct FixedPointData {
    int ambient_dim = 0;
    int rank = 0;
    std::vector<FixedPoint> points;
    std::vector<FixedCurve> curves;
    std::vector<UnknownPointFamily> unknowns;

    bool has_unknowns() const { return !unknowns.empty(); }
    std::size_t component_count() const { return points.size() + curves.size(); }
};

/// Structural validation: ranks, compass sizes, the two-fixed-components rule.
/// Returns a list of problems; empty means valid.
inline std::vector<std::string> validate(const FixedPointData& d) {
    std::vector<std::string> errs;
    auto chk_rank = [&](const Weight& w, const std::string& where) {
        if (static_cast<int>(w.rank()) != d.rank)
            errs.push_back(where + ": weight rank != data rank");
    };
    for (const auto& p : d.points) {
        chk_rank(p.mu, "point " + p.label);
        for (const auto& [nu, m] : p.compass.entries()) chk_rank(nu, "point " + p.label);
        if (p.compass.size() != d.ambient_dim)
            errs.push_back("point " + p.label + ": compass size " +
                           std::to_string(p.compass.size()) + " != dim " +
                           std::to_string(d.ambient_dim));
    }
    for (const auto& u : d.unknowns) {
        chk_rank(u.mu, "unknown " + u.symbol);
        if (u.compass.size() != d.ambient_dim)
            errs.push_back("unknown " + u.symbol + ": compass size != dim");
    }
    for (const auto& c : d.curves) {
        chk_rank(c.mu, "curve " + c.label);
        int total = 0;
        for (const auto& s : c.conormal) {
            chk_rank(s.nu, "curve " + c.label);
            if (s.nu.is_zero()) errs.push_back("curve " + c.label + ": zero conormal weight");
            if (s.rank <= 0) errs.push_back("curve " + c.label + ": nonpositive summand rank");
            total += s.rank;
        }
        if (total != d.ambient_dim - 1)
            errs.push_back("curve " + c.label + ": conormal ranks sum to " +
                           std::to_string(total) + " != dim-1");
        if (c.genus < 0) errs.push_back("curve " + c.label + ": negative genus");
    }
    // a rank-1 action with exactly two fixed components, one of them an
    // isolated point, forces the other component to have dimension dim-1
    if (d.rank == 1 && !d.has_unknowns() && d.component_count() == 2) {
        bool has_point = !d.points.empty();
        if (has_point) {
            int other_dim = d.points.size() == 2 ? 0 : 1;
            if (other_dim != d.ambient_dim - 1)
                errs.push_back("two fixed components with an isolated point require the "
                               "other component to have dimension dim-1");
        }
    }
    return errs;
}

// ---------------------------------------------------------------------------
// Equivariant Euler characteristic (localization formula)
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::pair<Exponent, int>> compass_exponents(const Compass& c) {
    std::vector<std::pair<Exponent, int>> v;
    for (const auto& [nu, m] : c.entries()) v.push_back({exponent_of(nu), m});
    return v;
}

} // namespace detail

/// The equivariant Euler characteristic as an exact rational function: point
/// terms t^mu / prod(1 - t^nu), curve terms
/// t^mu / prod(1-t^nu)^r * (1 - g + deg + sum_j n_j t^(nu_j)/(1 - t^(nu_j))),
/// unknown point families entering with affine-linear coefficients.
inline RationalFn euler_characteristic(const FixedPointData& d) {
    RationalFn total(static_cast<std::size_t>(d.rank));
    for (const auto& p : d.points)
        total = total + RationalFn::term(exponent_of(p.mu), 1,
                                         detail::compass_exponents(p.compass));
    for (const auto& u : d.unknowns)
        total = total + RationalFn::term(exponent_of(u.mu), Coefficient::symbol(u.symbol),
                                         detail::compass_exponents(u.compass));
    for (const auto& c : d.curves) {
        std::vector<std::pair<Exponent, int>> base;
        for (const auto& s : c.conormal) base.push_back({exponent_of(s.nu), s.rank});
        Exponent mu = exponent_of(c.mu);
        total = total + RationalFn::term(mu, Coefficient(Rational(1 - c.genus + c.degree)), base);
        for (const auto& s : c.conormal) {
            if (s.c1 == 0) continue;
            // n / (t^-nu - 1) = n t^nu / (1 - t^nu)
            Exponent nu = exponent_of(s.nu);
            Exponent shifted = mu;
            for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += nu[i];
            auto den = base;
            den.push_back({nu, 1});
            total = total + RationalFn::term(shifted, Coefficient(Rational(s.c1)), den);
        }
    }
    return total;
}

/// The character certificate: the localization sum must be a Laurent
/// polynomial; a NotDivisible result signals inconsistent fixed-point data.
inline std::variant<LaurentPoly, NotDivisible> certify_laurent(const FixedPointData& d) {
    if (d.has_unknowns())
        throw std::domain_error("certify_laurent: data has unknown multiplicities");
    return to_laurent(euler_characteristic(d));
}

/// chi(L^m): linearization weights and curve degrees scale by m.
inline FixedPointData scale_bundle(const FixedPointData& d, int m) {
    FixedPointData out = d;
    for (auto& p : out.points) p.mu = p.mu * Rational(m);
    for (auto& u : out.unknowns) u.mu = u.mu * Rational(m);
    for (auto& c : out.curves) {
        c.mu = c.mu * Rational(m);
        c.degree *= m;
    }
    return out;
}

/// Shift the linearization by a character: mu -> mu + w everywhere.
inline FixedPointData shift_linearization(const FixedPointData& d, const Weight& w) {
    FixedPointData out = d;
    for (auto& p : out.points) p.mu = p.mu + w;
    for (auto& u : out.unknowns) u.mu = u.mu + w;
    for (auto& c : out.curves) c.mu = c.mu + w;
    return out;
}

// ---------------------------------------------------------------------------
// Multiplicity solving
// ---------------------------------------------------------------------------

enum class MultiplicityStatus { Solved, NonUnique, Inconsistent, NotLaurent, NotIntegral };

struct MultiplicityResult {
    MultiplicityStatus status = MultiplicityStatus::Inconsistent;
    std::map<std::string, Int> values;
    std::vector<std::string> residual; // leftover system when not solved
    std::string message;
};

/// Solves the Laurent-polynomiality conditions for the unknown point counts
/// after specializing along the covector lambda; the unique solution must be
/// a nonnegative integer assignment, and is verified by re-certification.
inline MultiplicityResult solve_multiplicities(const FixedPointData& d,
                                               const std::vector<std::int64_t>& lambda) {
    MultiplicityResult res;
    RationalFn f = euler_characteristic(d).specialized(lambda);
    auto eqs = laurent_conditions(f);
    auto sol = solve_affine(eqs);
    if (sol.status == SolveStatus::Underdetermined) {
        res.status = MultiplicityStatus::NonUnique;
        res.residual = sol.residual;
        res.message = "conditions do not determine the multiplicities";
        return res;
    }
    if (sol.status == SolveStatus::Inconsistent) {
        res.status = MultiplicityStatus::Inconsistent;
        res.residual = sol.residual;
        res.message = "conditions are inconsistent";
        return res;
    }
    for (const auto& [k, v] : sol.values) {
        if (!is_integer(v) || v < 0) {
            res.status = MultiplicityStatus::NotIntegral;
            res.message = "solution " + k + " = " + rational_str(v) +
                          " is not a nonnegative integer; data inconsistent";
            return res;
        }
        res.values[k] = rat_num(v);
    }
    // verify: substituting the solution must produce a Laurent polynomial
    RationalFn check = f.substituted(sol.values);
    if (std::holds_alternative<NotDivisible>(to_laurent(check))) {
        res.status = MultiplicityStatus::NotLaurent;
        res.message = "solution passes the t=1 conditions but the character is "
                      "still not a Laurent polynomial";
        return res;
    }
    res.status = MultiplicityStatus::Solved;
    return res;
}

// ---------------------------------------------------------------------------
// Contact duality
// ---------------------------------------------------------------------------

struct ContactDuality {
    bool ok = false;
    std::vector<std::pair<Weight, Weight>> pairs; // nu_i + nu_{i+n} = -mu
    Weight singleton;                              // the leftover -mu entry
    std::string reason;
};

/// At a fixed point of a contact manifold of dimension 2n+1 the compass
/// splits into n pairs summing to -mu plus a single -mu entry.
inline ContactDuality contact_dual_check(const FixedPoint& p) {
    ContactDuality r;
    const int dim = p.compass.size();
    if (dim % 2 == 0) {
        r.reason = "compass size is even";
        return r;
    }
    Weight target = -p.mu;
    if (target.is_zero()) {
        r.reason = "mu = 0 cannot be a contact weight at an isolated point";
        return r;
    }
    if (p.compass.multiplicity(target) != 1) {
        r.reason = "-mu must appear in the compass with multiplicity exactly 1";
        return r;
    }
    // pairing nu <-> -mu - nu is an involution on weights, so greedy matching
    // of the counts is exact
    std::map<Weight, int> left = p.compass.entries();
    left[target] -= 1;
    if (left[target] == 0) left.erase(target);
    r.singleton = target;
    while (!left.empty()) {
        Weight nu = left.begin()->first;
        Weight partner = target - nu;
        if (partner == nu) {
            int m = left[nu];
            if (m % 2 != 0) {
                r.reason = "self-paired weight " + nu.str() + " has odd multiplicity";
                return r;
            }
            for (int i = 0; i < m / 2; ++i) r.pairs.push_back({nu, nu});
            left.erase(nu);
            continue;
        }
        auto it = left.find(partner);
        int need = left[nu];
        if (it == left.end() || it->second != need) {
            std::ostringstream os;
            os << "entry " << nu << " (x" << need << ") has no matching " << partner;
            r.reason = os.str();
            return r;
        }
        for (int i = 0; i < need; ++i) r.pairs.push_back({nu, partner});
        left.erase(partner);
        left.erase(nu);
    }
    r.ok = true;
    return r;
}

// ---------------------------------------------------------------------------
// Compass projection and cone certificates
// ---------------------------------------------------------------------------

/// Downgrading a compass: entries mapping to zero form the compass of the
/// component inside the bigger fixed locus (in kernel coordinates), the rest
/// project.
inline std::pair<Compass, Compass> project_compass(const Compass& c, const Projection& p) {
    Compass projected, kernel_part;
    for (const auto& [nu, m] : c.entries()) {
        Weight img = p(nu);
        if (img.is_zero())
            kernel_part.add(p.kernel_coordinates(nu), m);
        else
            projected.add(img, m);
    }
    return {projected, kernel_part};
}

struct ConeCertificate {
    bool ok = false;
    std::vector<std::string> violations;
};

/// Checks the compass constraints at an extremal fixed point: every entry must
/// lie in the tangent cone sigma of Delta at mu and in -mu - sigma, and -mu
/// must appear with multiplicity exactly one.
inline ConeCertificate compass_cone_certificate(const FixedPoint& p, const Polytope& delta) {
    if (!delta.is_vertex(p.mu))
        throw std::invalid_argument("compass_cone_certificate: mu is not a vertex");
    ConeCertificate cert;
    if (p.compass.entries().empty()) { // zero-dimensional ambient: vacuous
        cert.ok = true;
        return cert;
    }
    Cone sigma = tangent_cone(delta, p.mu);
    Weight minus_mu = -p.mu;
    for (const auto& [nu, m] : p.compass.entries()) {
        std::ostringstream os;
        if (!sigma.contains(nu)) {
            os << "entry " << nu << " is outside the tangent cone";
            cert.violations.push_back(os.str());
            continue;
        }
        if (!sigma.contains(minus_mu - nu)) {
            os << "entry " << nu << " violates duality: " << (minus_mu - nu)
               << " is outside the tangent cone";
            cert.violations.push_back(os.str());
        }
    }
    if (p.compass.multiplicity(minus_mu) != 1)
        cert.violations.push_back("-mu does not have multiplicity exactly 1");
    cert.ok = cert.violations.empty();
    return cert;
}

/// Weight of the natural linearization of det TX = L^iota at the component:
/// the negative of the multiplicity-weighted compass sum.
inline Weight anticanonical_weight(const FixedPoint& p) {
    return -p.compass.weighted_sum();
}

// ---------------------------------------------------------------------------
// Model comparison
// ---------------------------------------------------------------------------

struct ModelComparison {
    bool match = false;
    bool characters_agree = false; // only meaningful when match is true
    std::string detail;
};

/// Exact multiset comparison of (mu, compass) data for points and of
/// (mu, genus, degree, conormal) for curves; identification is on-the-nose,
/// not up to lattice automorphism.
inline ModelComparison compare_models(const FixedPointData& a, const FixedPointData& b) {
    ModelComparison r;
    if (a.rank != b.rank) {
        r.detail = "rank mismatch";
        return r;
    }
    if (a.has_unknowns() || b.has_unknowns()) {
        r.detail = "cannot compare data with unknown multiplicities";
        return r;
    }
    auto point_key = [](const FixedPoint& p) { return std::make_pair(p.mu, p.compass); };
    std::multiset<std::pair<Weight, Compass>> pa, pb;
    for (const auto& p : a.points) pa.insert(point_key(p));
    for (const auto& p : b.points) pb.insert(point_key(p));
    if (pa != pb) {
        r.detail = "point data differ";
        return r;
    }
    auto curve_key = [](const FixedCurve& c) {
        std::multiset<std::tuple<Weight, int, int>> con;
        for (const auto& s : c.conormal) con.insert({s.nu, s.rank, s.c1});
        return std::make_tuple(c.mu, c.genus, c.degree, con);
    };
    std::multiset<std::tuple<Weight, int, int,
                             std::multiset<std::tuple<Weight, int, int>>>> ca, cb;
    for (const auto& c : a.curves) ca.insert(curve_key(c));
    for (const auto& c : b.curves) cb.insert(curve_key(c));
    if (ca != cb) {
        r.detail = "curve data differ";
        return r;
    }
    r.match = true;
    r.characters_agree = euler_characteristic(a) == euler_characteristic(b);
    r.detail = r.characters_agree ? "data and equivariant characters agree"
                                  : "data agree but characters differ";
    return r;
}

// ---------------------------------------------------------------------------
// Delta = [0,2] classification and quadric recognition
// ---------------------------------------------------------------------------

enum class IntervalCase { P1_O1, P1_O2, Pd, Qd, Inconsistent };

struct IntervalVerdict {
    IntervalCase kind = IntervalCase::Inconsistent;
    int dim = 0;
    std::string detail;
};

/// Classification of rank-1 data with fixed-point polytope [0,2] and isolated
/// extremal components, via the compass of the sink: (1^(d-1),2) is projective
/// space, (1^d) is the quadric; d=1 splits by the single compass entry.
inline IntervalVerdict classify_interval_case(const FixedPointData& d) {
    IntervalVerdict v;
    if (d.rank != 1) {
        v.detail = "rank-1 data required";
        return v;
    }
    const Weight zero(1), two{2};
    const FixedPoint* sink = nullptr;
    const FixedPoint* source = nullptr;
    for (const auto& p : d.points) {
        if (p.mu == zero) sink = &p;
        if (p.mu == two) source = &p;
    }
    if (!sink || !source) {
        v.detail = "extremal points at 0 and 2 not found";
        return v;
    }
    // all linearization weights must lie in [0,2]
    for (const auto& p : d.points)
        if (p.mu[0] < 0 || p.mu[0] > 2) {
            v.detail = "a fixed point lies outside [0,2]";
            return v;
        }
    for (const auto& c : d.curves)
        if (c.mu[0] < 0 || c.mu[0] > 2) {
            v.detail = "a fixed curve lies outside [0,2]";
            return v;
        }
    int ones = sink->compass.multiplicity(Weight{1});
    int twos = sink->compass.multiplicity(Weight{2});
    int total = sink->compass.size();
    // the source compass must mirror the sink pattern
    int m_ones = source->compass.multiplicity(Weight{-1});
    int m_twos = source->compass.multiplicity(Weight{-2});
    if (source->compass.size() != total || m_ones != ones || m_twos != twos) {
        v.detail = "source compass does not mirror the sink compass";
        return v;
    }
    v.dim = total;
    if (total == 1 && twos == 1) {
        v.kind = IntervalCase::P1_O1;
        v.detail = "P^1 with O(1) under the doubled action";
    } else if (total == 1 && ones == 1) {
        v.kind = IntervalCase::P1_O2;
        v.detail = "P^1 with O(2)";
    } else if (ones == total - 1 && twos == 1) {
        v.kind = IntervalCase::Pd;
        v.detail = "projective space P^" + std::to_string(total);
    } else if (ones == total && total >= 3) {
        v.kind = IntervalCase::Qd;
        v.detail = "quadric Q^" + std::to_string(total);
    } else {
        v.detail = "sink compass " + sink->compass.str() + " matches no template";
    }
    return v;
}

struct QuadricVerdict {
    bool ok = false;
    int dim = 0;
    std::string detail;
};

/// Quadric recognition: Delta = conv(+-x_1..+-x_r), isolated extremal points,
/// and no extremal compass at +-x_i contains -+2x_i. When the weight-zero
/// multiplicity of H^0 is known (supplied or computed from the character),
/// reports the dimension d = 2r + dim H^0(X,L)_0 - 2.
inline QuadricVerdict quadric_recognition(const FixedPointData& d, const Polytope& delta,
                                          std::optional<int> h0_weight_zero = std::nullopt) {
    QuadricVerdict v;
    const auto& verts = delta.vertices();
    // shape check: vertices come in +- pairs spanning the rank
    if (verts.size() % 2 != 0 || verts.size() < 2) {
        v.detail = "Delta does not have +-x_i shape";
        return v;
    }
    std::set<Weight> vs(verts.begin(), verts.end());
    for (const auto& w : verts)
        if (!vs.count(-w)) {
            v.detail = "Delta vertices are not symmetric";
            return v;
        }
    const std::size_t r = verts.size() / 2;
    if (delta.dim() != r) {
        v.detail = "Delta is not a cross-polytope of the expected dimension";
        return v;
    }
    for (const auto& w : verts) {
        const FixedPoint* pt = nullptr;
        for (const auto& p : d.points)
            if (p.mu == w) {
                if (pt) {
                    v.detail = "several extremal points share a vertex";
                    return v;
                }
                pt = &p;
            }
        for (const auto& c : d.curves)
            if (c.mu == w) {
                v.detail = "an extremal component is a curve";
                return v;
            }
        if (!pt) {
            v.detail = "vertex " + w.str() + " has no fixed point";
            return v;
        }
        Weight bad = -(w * Rational(2));
        if (pt->compass.multiplicity(bad) > 0) {
            v.detail = "compass at " + w.str() + " contains " + bad.str();
            return v;
        }
    }
    int zero_mult = 0;
    if (h0_weight_zero) {
        zero_mult = *h0_weight_zero;
    } else if (!d.has_unknowns()) {
        auto cert = certify_laurent(d);
        if (std::holds_alternative<NotDivisible>(cert)) {
            v.detail = "character is not a Laurent polynomial";
            return v;
        }
        Coefficient c0 = std::get<LaurentPoly>(cert).coeff(Exponent(d.rank, 0));
        zero_mult = static_cast<int>(to_int(c0.constant));
    }
    v.ok = true;
    v.dim = static_cast<int>(2 * r) + zero_mult - 2;
    v.detail = "quadric Q^" + std::to_string(v.dim);
    return v;
}

} // namespace torusloc
