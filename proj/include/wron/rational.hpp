#pragma once

#include <gmpxx.h>

#include <string>

namespace wron {

// Arbitrary-precision integers and rationals. GMP keeps rationals canonical
// (gcd(|num|, den) = 1, den >= 1) through arithmetic; only raw constructions
// need an explicit canonicalize, which the helpers below take care of.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p". Throws std::invalid_argument on garbage.
Rational rational_from_string(const std::string& s);

// Canonical "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

Integer factorial(unsigned n);

// Product formula, valid for any rational a: binom(a + k - 1, k)-style rising
// products are built from this.
Rational pochhammer(const Rational& a, unsigned k);

Integer pow2(unsigned e);

inline double to_double(const Rational& q) {
    return q.get_d();
}

}  // namespace wron
