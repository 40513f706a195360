#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "torusloc/linalg.hpp"
#include "torusloc/rational.hpp"
#include "torusloc/weight.hpp"

namespace torusloc {

// ---------------------------------------------------------------------------
// Coefficients: rationals, optionally affine-linear in unknown symbols.
// Products of two coefficients with unknowns are an error (degree-1 cap).
// ---------------------------------------------------------------------------

struct Coefficient {
    Rational constant;
    std::map<std::string, Rational> linear;

    Coefficient() = default;
    Coefficient(Rational c) : constant(std::move(c)) {} // NOLINT(google-explicit-constructor)
    Coefficient(int c) : constant(c) {}                 // NOLINT(google-explicit-constructor)
    static Coefficient symbol(const std::string& name, Rational scale = 1) {
        Coefficient c;
        c.linear[name] = std::move(scale);
        return c;
    }

    bool is_zero() const { return constant == 0 && linear.empty(); }
    bool is_numeric() const { return linear.empty(); }

    Coefficient& operator+=(const Coefficient& o) {
        constant += o.constant;
        for (const auto& [k, v] : o.linear) {
            auto& slot = linear[k];
            slot += v;
            if (slot == 0) linear.erase(k);
        }
        return *this;
    }
    Coefficient operator+(const Coefficient& o) const {
        Coefficient r = *this;
        r += o;
        return r;
    }
    Coefficient operator-() const {
        Coefficient r;
        r.constant = -constant;
        for (const auto& [k, v] : linear) r.linear[k] = -v;
        return r;
    }
    Coefficient operator-(const Coefficient& o) const { return *this + (-o); }
    Coefficient operator*(const Coefficient& o) const {
        if (!linear.empty() && !o.linear.empty())
            throw std::domain_error("Coefficient: product of two symbolic coefficients");
        const Coefficient& sym = linear.empty() ? o : *this;
        const Rational& scale = linear.empty() ? constant : o.constant;
        Coefficient r;
        r.constant = sym.constant * scale;
        for (const auto& [k, v] : sym.linear) {
            if (v * scale != 0) r.linear[k] = v * scale;
        }
        return r;
    }
    bool operator==(const Coefficient& o) const {
        return constant == o.constant && linear == o.linear;
    }

    Coefficient substituted(const std::map<std::string, Rational>& vals) const {
        Coefficient r;
        r.constant = constant;
        for (const auto& [k, v] : linear) {
            auto it = vals.find(k);
            if (it != vals.end())
                r.constant += v * it->second;
            else if (v != 0)
                r.linear[k] = v;
        }
        return r;
    }

    std::string str() const {
        if (is_numeric()) return rational_str(constant);
        std::ostringstream os;
        bool first = true;
        if (constant != 0) {
            os << rational_str(constant);
            first = false;
        }
        for (const auto& [k, v] : linear) {
            if (!first) os << (v > 0 ? "+" : "");
            if (v == 1)
                os << k;
            else if (v == -1)
                os << "-" << k;
            else
                os << rational_str(v) << "*" << k;
            first = false;
        }
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// Sparse multivariate Laurent polynomials
// ---------------------------------------------------------------------------

using Exponent = std::vector<std::int64_t>;

inline Exponent exponent_of(const Weight& w) {
    Exponent e(w.rank());
    for (std::size_t i = 0; i < w.rank(); ++i) {
        if (!is_integer(w[i]))
            throw std::domain_error("exponent_of: weight is not a lattice vector in this basis");
        e[i] = static_cast<std::int64_t>(rat_num(w[i]));
    }
    return e;
}

inline Weight weight_of(const Exponent& e) {
    Weight w(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) w[i] = Rational(e[i]);
    return w;
}

class LaurentPoly {
public:
    explicit LaurentPoly(std::size_t rank = 0) : rank_(rank) {}

    static LaurentPoly monomial(const Exponent& e, Coefficient c = 1) {
        LaurentPoly p(e.size());
        if (!c.is_zero()) p.terms_[e] = std::move(c);
        return p;
    }
    static LaurentPoly constant(std::size_t rank, Coefficient c) {
        return monomial(Exponent(rank, 0), std::move(c));
    }

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, Coefficient>& terms() const { return terms_; }

    Coefficient coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coefficient(0) : it->second;
    }

    void add_term(const Exponent& e, const Coefficient& c) {
        if (e.size() != rank_) throw std::invalid_argument("LaurentPoly: exponent rank mismatch");
        auto& slot = terms_[e];
        slot += c;
        if (slot.is_zero()) terms_.erase(e);
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        check(o);
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r(rank_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
    LaurentPoly operator*(const LaurentPoly& o) const {
        check(o);
        LaurentPoly r(rank_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponent e(rank_);
                for (std::size_t i = 0; i < rank_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    LaurentPoly operator*(const Coefficient& c) const {
        LaurentPoly r(rank_);
        if (c.is_zero()) return r;
        for (const auto& [e, cc] : terms_) {
            Coefficient prod = cc * c;
            if (!prod.is_zero()) r.terms_[e] = prod;
        }
        return r;
    }
    bool operator==(const LaurentPoly& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

    /// shift exponents by delta
    LaurentPoly shifted(const Exponent& delta) const {
        LaurentPoly r(rank_);
        for (const auto& [e, c] : terms_) {
            Exponent f(rank_);
            for (std::size_t i = 0; i < rank_; ++i) f[i] = e[i] + delta[i];
            r.terms_[f] = c;
        }
        return r;
    }

    LaurentPoly substituted(const std::map<std::string, Rational>& vals) const {
        LaurentPoly r(rank_);
        for (const auto& [e, c] : terms_) r.add_term(e, c.substituted(vals));
        return r;
    }

    /// exact value at a point with nonzero coordinates; numeric coefficients only
    Rational eval(const std::vector<Rational>& point) const {
        if (point.size() != rank_) throw std::invalid_argument("eval: rank mismatch");
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            if (!c.is_numeric()) throw std::domain_error("eval: symbolic coefficient");
            Rational term = c.constant;
            for (std::size_t i = 0; i < rank_; ++i) {
                if (point[i] == 0) throw std::domain_error("eval: zero coordinate");
                Int k = e[i] < 0 ? -e[i] : e[i];
                Rational p = 1;
                for (Int j = 0; j < k; ++j) p *= point[i];
                term *= e[i] < 0 ? 1 / p : p;
            }
            total += term;
        }
        return total;
    }

    /// sum of coefficients = evaluation at the identity of the torus
    Coefficient eval_at_one() const {
        Coefficient s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    /// apply an integer linear map to all exponents (e.g. a unimodular change
    /// of variables, or a one-parameter-subgroup specialization)
    LaurentPoly mapped_exponents(const std::vector<std::vector<std::int64_t>>& m) const {
        std::size_t out_rank = m.size();
        LaurentPoly r(out_rank);
        for (const auto& [e, c] : terms_) {
            Exponent f(out_rank, 0);
            for (std::size_t i = 0; i < out_rank; ++i)
                for (std::size_t j = 0; j < rank_; ++j) f[i] += m[i][j] * e[j];
            r.add_term(f, c);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string cs = c.str();
            if (!first) os << (cs[0] == '-' ? " " : " + ");
            if (cs[0] == '-' && !first) os << "- " << cs.substr(1);
            else os << cs;
            bool has_exp = std::any_of(e.begin(), e.end(), [](auto x) { return x != 0; });
            if (has_exp) os << "*" << monomial_str(e);
            first = false;
        }
        return os.str();
    }

    static std::string monomial_str(const Exponent& e) {
        std::ostringstream os;
        os << "t^";
        if (e.size() == 1) {
            os << e[0];
        } else {
            os << "(";
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i) os << ",";
                os << e[i];
            }
            os << ")";
        }
        return os.str();
    }

private:
    void check(const LaurentPoly& o) const {
        if (rank_ != o.rank_) throw std::invalid_argument("LaurentPoly: rank mismatch");
    }
    std::size_t rank_ = 0;
    std::map<Exponent, Coefficient> terms_;
};

namespace detail {

inline bool exponent_canonical(const Exponent& e) {
    for (auto x : e) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false; // zero vector: caller rejects
}

} // namespace detail

// ---------------------------------------------------------------------------
// Factored rational functions  N / prod (1 - t^nu)^m
// ---------------------------------------------------------------------------

/// Rational function with numerator Laurent polynomial over a factored
/// denominator. Every stored factor direction is sign-normalized: a factor
/// (1 - t^(-nu)) is rewritten as -t^(-nu) (1 - t^nu), the monomial and sign
/// being absorbed into the numerator.
class RationalFn {
public:
    explicit RationalFn(std::size_t rank = 0) : num_(rank) {}

    static RationalFn zero(std::size_t rank) { return RationalFn(rank); }

    /// coeff * t^mu / prod (1 - t^nu)^mult
    static RationalFn term(const Exponent& mu, const Coefficient& coeff,
                           const std::vector<std::pair<Exponent, int>>& compass) {
        RationalFn f(mu.size());
        f.num_ = LaurentPoly::monomial(mu, coeff);
        for (const auto& [nu, mult] : compass) f.push_factor(nu, mult);
        return f;
    }

    std::size_t rank() const { return num_.rank(); }
    const LaurentPoly& numerator() const { return num_; }
    const std::map<Exponent, int>& denominator_factors() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }

    RationalFn operator+(const RationalFn& o) const {
        if (rank() != o.rank()) throw std::invalid_argument("RationalFn: rank mismatch");
        RationalFn r(rank());
        for (const auto& [nu, m] : den_) r.den_[nu] = m;
        for (const auto& [nu, m] : o.den_) {
            auto it = r.den_.find(nu);
            if (it == r.den_.end())
                r.den_[nu] = m;
            else
                it->second = std::max(it->second, m);
        }
        r.num_ = scale_to(r.den_) + o.scale_to(r.den_);
        if (r.num_.is_zero()) r.den_.clear();
        return r;
    }

    RationalFn operator*(const Coefficient& c) const {
        RationalFn r = *this;
        r.num_ = r.num_ * c;
        if (r.num_.is_zero()) r.den_.clear();
        return r;
    }

    RationalFn substituted(const std::map<std::string, Rational>& vals) const {
        RationalFn r = *this;
        r.num_ = r.num_.substituted(vals);
        if (r.num_.is_zero()) r.den_.clear();
        return r;
    }

    /// exact numeric evaluation away from denominator zeros
    Rational eval(const std::vector<Rational>& point) const {
        Rational n = num_.eval(point);
        for (const auto& [nu, m] : den_) {
            Rational fac = 1 - LaurentPoly::monomial(nu).eval(point);
            if (fac == 0) throw std::domain_error("eval: pole at the given point");
            for (int i = 0; i < m; ++i) n /= fac;
        }
        return n;
    }

    /// substitution t^e -> s^(lambda.e); every denominator factor must stay nonzero
    RationalFn specialized(const std::vector<std::int64_t>& lambda) const {
        if (lambda.size() != rank()) throw std::invalid_argument("specialize: rank mismatch");
        RationalFn r(1);
        std::vector<std::vector<std::int64_t>> m{lambda};
        r.num_ = num_.mapped_exponents(m);
        for (const auto& [nu, mult] : den_) {
            std::int64_t v = 0;
            for (std::size_t i = 0; i < rank(); ++i) v += lambda[i] * nu[i];
            if (v == 0)
                throw std::domain_error("specialize: covector annihilates the factor " +
                                        LaurentPoly::monomial_str(nu));
            r.push_factor(Exponent{v}, mult);
        }
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(" << num_.str() << ")";
        if (!den_.empty()) {
            os << "/(";
            bool first = true;
            for (const auto& [nu, m] : den_) {
                if (!first) os << " ";
                os << "(1-" << LaurentPoly::monomial_str(nu) << ")";
                if (m > 1) os << "^" << m;
                first = false;
            }
            os << ")";
        }
        return os.str();
    }

    /// total multiplicity of all denominator factors
    int denominator_order() const {
        int s = 0;
        for (const auto& [nu, m] : den_) s += m;
        return s;
    }

    void set_numerator(LaurentPoly p) {
        num_ = std::move(p);
        if (num_.is_zero()) den_.clear();
    }

private:
    // 1/(1 - t^nu)^m = (-1)^m t^(-m nu) / (1 - t^(-nu))^m  when nu is not canonical
    void push_factor(const Exponent& nu, int mult) {
        if (mult <= 0) throw std::invalid_argument("RationalFn: nonpositive multiplicity");
        bool zero = std::all_of(nu.begin(), nu.end(), [](auto x) { return x == 0; });
        if (zero) throw std::invalid_argument("RationalFn: zero denominator weight");
        Exponent canon = nu;
        if (!detail::exponent_canonical(nu)) {
            for (auto& x : canon) x = -x;
            Exponent shift(nu.size());
            for (std::size_t i = 0; i < nu.size(); ++i) shift[i] = -mult * nu[i];
            num_ = num_.shifted(shift);
            if (mult % 2 == 1) num_ = -num_;
        }
        den_[canon] += mult;
    }

    // numerator rescaled to the common denominator `target`
    LaurentPoly scale_to(const std::map<Exponent, int>& target) const {
        LaurentPoly n = num_;
        for (const auto& [nu, m] : target) {
            auto it = den_.find(nu);
            int have = it == den_.end() ? 0 : it->second;
            for (int i = have; i < m; ++i) {
                LaurentPoly f = LaurentPoly::constant(rank(), 1) - LaurentPoly::monomial(nu);
                n = n * f;
            }
        }
        return n;
    }

    LaurentPoly num_;
    std::map<Exponent, int> den_; // canonical direction -> multiplicity
};

// ---------------------------------------------------------------------------
// Division by (1 - t^nu) and Laurent certification
// ---------------------------------------------------------------------------

/// Exact division of p by (1 - t^nu). Reduces to a univariate division via a
/// unimodular change of variables sending nu to the first axis.
inline std::pair<LaurentPoly, bool> divide_by_factor(const LaurentPoly& p, const Weight& nu) {
    if (nu.is_zero() || !nu.is_integral())
        throw std::invalid_argument("divide_by_factor: nonzero integral weight required");
    const std::size_t n = p.rank();
    if (nu.rank() != n) throw std::invalid_argument("divide_by_factor: rank mismatch");
    if (p.is_zero()) return {LaurentPoly(n), true};

    QMatrix u = unimodular_to_axis(nu);
    std::vector<std::vector<std::int64_t>> um(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) um[i][j] = static_cast<std::int64_t>(to_int(u[i][j]));
    Weight axis = mat_apply(u, nu);
    std::int64_t g = static_cast<std::int64_t>(to_int(axis[0])); // gcd of nu's coordinates

    LaurentPoly q = p.mapped_exponents(um);

    // long division by (1 - t_1^g) from the top exponent down
    std::int64_t min_e = 0;
    bool first = true;
    for (const auto& [e, c] : q.terms()) {
        if (first || e[0] < min_e) min_e = e[0];
        first = false;
    }
    LaurentPoly quot(n);
    LaurentPoly rem = q;
    while (!rem.is_zero()) {
        std::int64_t top = rem.terms().begin()->first[0];
        for (const auto& [e, c] : rem.terms()) top = std::max(top, e[0]);
        if (top - g < min_e) return {LaurentPoly(n), false};
        // quotient terms at level top - g
        std::vector<std::pair<Exponent, Coefficient>> batch;
        for (const auto& [e, c] : rem.terms())
            if (e[0] == top) batch.push_back({e, c});
        for (auto& [e, c] : batch) {
            Exponent f = e;
            f[0] -= g;
            Coefficient qc = -c;
            quot.add_term(f, qc);
            // rem -= (1 - t1^g) * qc t^f  =  qc t^f - qc t^e
            rem.add_term(f, -qc);
            rem.add_term(e, qc);
        }
    }

    // undo the change of variables
    QMatrix uinv = mat_inverse(u);
    std::vector<std::vector<std::int64_t>> vm(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) vm[i][j] = static_cast<std::int64_t>(to_int(uinv[i][j]));
    return {quot.mapped_exponents(vm), true};
}

struct NotDivisible {
    Weight factor;
};

/// Cancels every denominator factor; the result is the Laurent polynomial the
/// rational function represents, or the first factor that fails to divide.
inline std::variant<LaurentPoly, NotDivisible> to_laurent(const RationalFn& f) {
    LaurentPoly n = f.numerator();
    for (const auto& [nu, mult] : f.denominator_factors()) {
        Weight w = weight_of(nu);
        for (int i = 0; i < mult; ++i) {
            auto [q, ok] = divide_by_factor(n, w);
            if (!ok) return NotDivisible{w};
            n = std::move(q);
        }
    }
    return n;
}

// ---------------------------------------------------------------------------
// Laurent conditions for univariate numerators with unknowns
// ---------------------------------------------------------------------------

/// Vanishing-to-required-order conditions at t=1 for a univariate rational
/// function: the numerator must vanish at t=1 to the total order of the
/// denominator. Returned as affine-linear expressions that must equal zero;
/// identically-zero conditions are dropped. For denominator factors of the
/// form (1-t)^m these conditions characterize Laurent-ness exactly; for
/// factors 1-t^g with g > 1 they are the t=1 part of the requirement.
inline std::vector<Coefficient> laurent_conditions(const RationalFn& f) {
    if (f.rank() != 1)
        throw std::domain_error(
            "laurent_conditions: univariate input required (specialize first)");
    const int order = f.denominator_order();
    std::vector<Coefficient> out;
    for (int k = 0; k < order; ++k) {
        Coefficient cond = 0;
        for (const auto& [e, c] : f.numerator().terms()) {
            // k-th derivative of t^e at t=1: falling factorial e(e-1)...(e-k+1)
            Rational ff = 1;
            for (int j = 0; j < k; ++j) ff *= Rational(e[0] - j);
            cond += c * Coefficient(ff);
        }
        if (!cond.is_zero()) out.push_back(std::move(cond));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Affine-linear system solving (for multiplicity unknowns)
// ---------------------------------------------------------------------------

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct AffineSolution {
    SolveStatus status;
    std::map<std::string, Rational> values;   // valid when Unique
    std::vector<std::string> residual;        // human-readable leftover system otherwise
};

/// Solves { eq = 0 } for the unknown symbols appearing in the equations.
inline AffineSolution solve_affine(const std::vector<Coefficient>& eqs) {
    std::vector<std::string> symbols;
    for (const auto& e : eqs)
        for (const auto& [k, v] : e.linear)
            if (std::find(symbols.begin(), symbols.end(), k) == symbols.end())
                symbols.push_back(k);
    std::sort(symbols.begin(), symbols.end());
    const std::size_t n = symbols.size();
    QMatrix a;
    std::vector<Rational> b;
    for (const auto& e : eqs) {
        std::vector<Rational> row(n);
        for (std::size_t j = 0; j < n; ++j) {
            auto it = e.linear.find(symbols[j]);
            row[j] = it == e.linear.end() ? Rational(0) : it->second;
        }
        a.push_back(std::move(row));
        b.push_back(-e.constant);
    }
    AffineSolution sol;
    QMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    std::vector<std::size_t> piv;
    std::size_t rk = row_reduce(aug, &piv);
    bool inconsistent = !piv.empty() && piv.back() == n;
    if (inconsistent) {
        sol.status = SolveStatus::Inconsistent;
        for (const auto& e : eqs) sol.residual.push_back(e.str() + " = 0");
        return sol;
    }
    if (rk < n) {
        sol.status = SolveStatus::Underdetermined;
        for (const auto& e : eqs) sol.residual.push_back(e.str() + " = 0");
        return sol;
    }
    sol.status = SolveStatus::Unique;
    for (std::size_t i = 0; i < rk; ++i) sol.values[symbols[piv[i]]] = aug[i][n];
    return sol;
}

} // namespace torusloc
