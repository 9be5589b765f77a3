#pragma once

#include <map>
#include <string>

#include "wron/rational.hpp"

namespace wron {

/// Exact scalar of the form sum_e q_e * pi^e with rational q_e and integer e
/// (possibly negative). pi is treated as a formal transcendental: distinct
/// powers never merge, so equality is map equality and every pi-power
/// bookkeeping step stays exact. Zero coefficients are never stored.
class PiScalar {
public:
    PiScalar() = default;  // zero
    PiScalar(const Rational& r);
    PiScalar(long n);
    PiScalar(const Integer& n);

    static PiScalar pi_power(int e, const Rational& coeff = 1);

    bool is_zero() const { return terms_.empty(); }

    // True when the value lies in Q (no pi^e term with e != 0).
    bool is_rational() const;
    Rational rational_part() const;  // coefficient of pi^0

    // True when exactly one term is stored.
    bool is_monomial() const { return terms_.size() == 1; }

    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coeff(int e) const;

    PiScalar& operator+=(const PiScalar& o);
    PiScalar& operator-=(const PiScalar& o);
    PiScalar& operator*=(const PiScalar& o);
    PiScalar operator-() const;

    friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
    friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
    friend PiScalar operator*(const PiScalar& a, const PiScalar& b);

    // Multiplies by pi^e (pure exponent shift).
    PiScalar times_pi_power(int e) const;

    PiScalar scaled(const Rational& r) const;
    PiScalar divided_by(const Rational& r) const;  // r must be nonzero

    // Exact division by a single-term scalar c*pi^e. Throws
    // NotProportionalError when the divisor has zero or several terms.
    PiScalar divided_by_monomial(const PiScalar& d) const;

    double eval(double pi_value) const;

    bool operator==(const PiScalar& o) const { return terms_ == o.terms_; }

    // "3/2*pi^2 + 1 - 2/3*pi^-1" style, highest power first; "0" for zero.
    std::string str() const;

private:
    void add_term(int e, const Rational& q);

    std::map<int, Rational> terms_;
};

}  // namespace wron
