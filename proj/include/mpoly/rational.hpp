#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mpoly {

using Integer = boost::multiprecision::cpp_int;

// Exact rational coefficient type. Always stored in lowest terms with a
// positive denominator; no floating point anywhere in the core library.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) {
    return boost::multiprecision::numerator(r);
}

inline Integer denominator(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational& r) {
    return denominator(r) == 1;
}

/// Exact integer power with negative exponents allowed (base != 0).
inline Rational rational_pow(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    if (base == 0 && exponent < 0)
        throw std::domain_error("rational_pow: zero base, negative exponent");
    Rational b = base;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                   : static_cast<unsigned long>(exponent);
    Rational acc(1);
    while (e > 0) {
        if (e & 1UL) acc *= b;
        b *= b;
        e >>= 1UL;
    }
    if (exponent < 0) acc = Rational(1) / acc;
    return acc;
}

/// `p/q` when q != 1, plain integer otherwise.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "123", "-7/8". Throws std::invalid_argument on malformed input
/// or a zero denominator.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

/// Fixed-point decimal rendering with `digits` fractional digits,
/// round-half-to-even. Display only; the exact form is the contract.
inline std::string to_decimal_string(const Rational& r, unsigned digits) {
    Integer num = numerator(r);
    Integer den = denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;
    Integer scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Integer scaled = num * scale;
    Integer q = scaled / den;
    Integer rem = scaled % den;
    Integer twice = rem * 2;
    if (twice > den || (twice == den && (q % 2) != 0)) ++q;
    std::string body = q.str();
    if (digits > 0) {
        if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
        body.insert(body.size() - digits, ".");
    }
    if (negative && q != 0) body.insert(0, "-");
    return body;
}

}  // namespace mpoly
