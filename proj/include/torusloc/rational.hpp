#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace torusloc {

// Exact arithmetic substrate. cpp_rational keeps values in lowest terms
// with positive denominator, which is exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

inline Int to_int(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("to_int: not an integer: " + q.str());
    return rat_num(q);
}

// floor/ceil of an exact rational
inline Int rat_floor(const Rational& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;
    if (n < 0 && n % d != 0) --t;
    return t;
}

inline Int rat_ceil(const Rational& q) { return -rat_floor(-q); }

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { Int t = a % b; a = b; b = t; }
    return a;
}

inline Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = int_gcd(a, b);
    Int r = (a / g) * b;
    return r < 0 ? -r : r;
}

// extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g, g >= 0
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        if (a < 0) { x = -1; y = 0; return -a; }
        x = 1; y = 0; return a;
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// "p/q" or "p"
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: bad input '" + s + "'");
    }
}

inline std::string rational_str(const Rational& q) {
    if (is_integer(q)) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

} // namespace torusloc
