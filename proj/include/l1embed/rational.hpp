#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "l1embed/errors.hpp"

namespace l1embed {

// Every distance, weight and coordinate in this library is an exact rational.
// boost::multiprecision::cpp_rational keeps the canonical form we rely on:
// gcd(|num|, den) = 1 and den > 0, with arbitrary-precision components so
// simplex pivoting cannot overflow.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt rational_num(const Rational& q) { return numerator(q); }
inline BigInt rational_den(const Rational& q) { return denominator(q); }

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rational(BigInt(num)) / Rational(BigInt(den));
}

// Accepts "p", "p/q" and "-p/q"; whitespace is not tolerated.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { return ParseError("cannot parse rational '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text)));
        }
        const std::string num(text.substr(0, slash));
        const std::string den(text.substr(slash + 1));
        if (num.empty() || den.empty() || den.find('/') != std::string::npos) throw bad();
        BigInt d(den);
        if (d == 0) throw bad();
        return Rational(BigInt(num)) / Rational(d);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

// Always "p/q", lowest terms, positive q. "0/1", "5/1", "-3/2".
inline std::string format_rational(const Rational& q) {
    return rational_num(q).str() + "/" + rational_den(q).str();
}

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace l1embed
