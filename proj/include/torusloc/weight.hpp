#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "torusloc/rational.hpp"

namespace torusloc {

/// A rational coordinate vector in a weight lattice of some rank.
/// Weights carry rational coordinates because the B_r/D_r/G_2 weight
/// lattices contain half-integer vectors; integrality is a lattice
/// membership question, not a representation constraint.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t rank) : c_(rank) {}
    explicit Weight(std::vector<Rational> coords) : c_(std::move(coords)) {}
    Weight(std::initializer_list<int> v) {
        c_.reserve(v.size());
        for (int x : v) c_.emplace_back(x);
    }

    std::size_t rank() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
    }

    bool is_integral() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return is_integer(x); });
    }

    Weight operator+(const Weight& o) const {
        check_rank(o);
        Weight r(rank());
        for (std::size_t i = 0; i < rank(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    Weight operator-(const Weight& o) const {
        check_rank(o);
        Weight r(rank());
        for (std::size_t i = 0; i < rank(); ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    Weight operator-() const {
        Weight r(rank());
        for (std::size_t i = 0; i < rank(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    Weight operator*(const Rational& s) const {
        Weight r(rank());
        for (std::size_t i = 0; i < rank(); ++i) r.c_[i] = c_[i] * s;
        return r;
    }

    Rational dot(const Weight& o) const {
        check_rank(o);
        Rational s = 0;
        for (std::size_t i = 0; i < rank(); ++i) s += c_[i] * o.c_[i];
        return s;
    }

    Rational norm2() const { return dot(*this); }

    bool operator==(const Weight& o) const { return c_ == o.c_; }
    bool operator!=(const Weight& o) const { return c_ != o.c_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += rational_str(c_[i]);
        }
        return s + ")";
    }
    // lexicographic; used everywhere a deterministic order is needed
    bool operator<(const Weight& o) const {
        if (rank() != o.rank()) return rank() < o.rank();
        for (std::size_t i = 0; i < rank(); ++i)
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        return false;
    }

private:
    void check_rank(const Weight& o) const {
        if (rank() != o.rank()) throw std::invalid_argument("Weight: rank mismatch");
    }
    std::vector<Rational> c_;
};

inline Weight operator*(const Rational& s, const Weight& w) { return w * s; }

inline std::ostream& operator<<(std::ostream& os, const Weight& w) {
    os << "(";
    for (std::size_t i = 0; i < w.rank(); ++i) {
        if (i) os << ",";
        os << rational_str(w[i]);
    }
    return os << ")";
}

inline Weight weight_of(std::vector<Rational> v) { return Weight(std::move(v)); }

inline Weight basis_weight(std::size_t rank, std::size_t i, const Rational& v = 1) {
    Weight w(rank);
    w[i] = v;
    return w;
}

/// v with integer coordinates, divided by the gcd of its coordinates.
inline Weight primitive_part(const Weight& v) {
    if (v.is_zero()) throw std::invalid_argument("primitive_part: zero vector");
    if (!v.is_integral()) throw std::invalid_argument("primitive_part: integral vector expected");
    Int g = 0;
    for (std::size_t i = 0; i < v.rank(); ++i) g = int_gcd(g, rat_num(v[i]));
    Weight r(v.rank());
    for (std::size_t i = 0; i < v.rank(); ++i) r[i] = v[i] / Rational(g);
    return r;
}

/// Clears denominators and divides by the content, keeping orientation.
inline Weight primitive_direction(const Weight& v) {
    if (v.is_zero()) throw std::invalid_argument("primitive_direction: zero vector");
    Int l = 1;
    for (std::size_t i = 0; i < v.rank(); ++i) l = int_lcm(l, rat_den(v[i]));
    Weight w = v * Rational(l);
    return primitive_part(w);
}

} // namespace torusloc
