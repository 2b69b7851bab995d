#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace contclose {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Builds num/den through exact division, which canonicalizes signs and
/// common factors (the raw two-argument mpq constructor does neither).
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num) / Rational(den);
}

inline Rational make_rational(long long num, long long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Largest integer <= q.
inline Integer rational_floor(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    Integer quot = n / d;
    if (n % d != 0 && n < 0) --quot;
    return quot;
}

inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Smallest positive t such that t*v is integral for every entry.
inline Integer common_denominator(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& q : v) l = lcm(l, denominator(q));
    return l;
}

}  // namespace contclose
