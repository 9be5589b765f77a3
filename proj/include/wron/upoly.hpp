#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wron/pi_scalar.hpp"

namespace wron {

/// Dense univariate polynomial in u with PiScalar coefficients (index =
/// power of u). Normalized: no stored leading zero, the zero polynomial is
/// the empty list. Carrier for Chebyshev/Gegenbauer polynomials and the
/// cos-theta profiles of SinCosForm.
class UPoly {
public:
    UPoly() = default;  // zero
    explicit UPoly(std::vector<PiScalar> coeffs);

    static UPoly constant(const PiScalar& c);
    static UPoly monomial(int deg, const PiScalar& c = PiScalar(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    PiScalar coeff(int i) const;
    const PiScalar& leading() const;  // undefined on zero
    const std::vector<PiScalar>& coeffs() const { return c_; }

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly operator-() const;
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);

    UPoly scaled(const PiScalar& s) const;
    UPoly derivative() const;  // d/du

    PiScalar eval(const Rational& u) const;
    PiScalar eval_one() const;        // sum of coefficients
    PiScalar eval_minus_one() const;  // alternating sum

    UPoly times_one_minus_u2() const;

    // Exact quotient by (1 - u^2); nullopt when the remainder is nonzero.
    std::optional<UPoly> div_exact_one_minus_u2() const;

    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    std::string str() const;

private:
    void normalize();

    std::vector<PiScalar> c_;
};

}  // namespace wron
