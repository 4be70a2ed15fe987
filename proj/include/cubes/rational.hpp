/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and exact rationals (boost.multiprecision
 *        backed) plus the decimal-string conversions used by every interface.
 *
 * Rational is always stored reduced with a positive denominator; zero is 0/1.
 * Numbers cross process boundaries as decimal strings, never as machine words.
 */
#ifndef CUBES_RATIONAL_HPP
#define CUBES_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }
inline Rational rat_abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt big_lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "7" when integral, "7/2" otherwise.
inline std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline BigInt parse_bigint(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    try {
        return BigInt(std::string(s));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer literal: " + std::string(s));
    }
}

/// Accepts "n" and "n/d"; the result is reduced with positive denominator.
inline Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(s));
    BigInt n = parse_bigint(s.substr(0, slash));
    BigInt d = parse_bigint(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    return Rational(n, d);
}

inline bool is_integer(const Rational& r) { return den(r) == 1; }

/// Floor of |x| for integral-valued work (metric n uses |d| and floor).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("floor_div by zero");
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Rational pow_rational(const Rational& base, unsigned exp) {
    Rational acc(1), b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

inline BigInt pow_bigint(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

}  // namespace cubes

#endif
