#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "ratdist/errors.hpp"

namespace ratdist {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const BigInt& n) { return n.sign(); }
inline int sign_of(const Rational& q) { return q.sign(); }

inline BigInt abs_int(const BigInt& n) { return boost::multiprecision::abs(n); }

// floor of the square root; n must be >= 0
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = isqrt(n);
    return r * r == n;
}

// Exact square root of a rational, when it exists.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    BigInt n = num(q), d = den(q);
    BigInt rn = isqrt(n), rd = isqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rational(rn, rd);
}

inline std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// Parses "p", "-p" or "p/q"; q > 0 after reduction.
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt n(s.substr(0, slash));
        BigInt d(s.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rational(n, d);
    } catch (const std::exception& e) {
        throw ParseError("bad rational '" + s + "'");
    }
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

} // namespace ratdist
