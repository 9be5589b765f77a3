#pragma once

#include <map>
#include <string>

#include "wron/pi_scalar.hpp"

namespace wron {

/// Trigonometric polynomial sum_m a_m sin(m*theta) + b_m cos(m*theta) with
/// PiScalar coefficients, stored sparsely by harmonic (cos m=0 is the
/// constant term). The representation is canonical — zero coefficients are
/// pruned on every write — so equality is structural. Closed under +, *,
/// d/dtheta; quotients live in SinCosForm, not here.
class FourierPoly {
public:
    FourierPoly() = default;  // zero

    static FourierPoly constant(const PiScalar& c);
    static FourierPoly one() { return constant(PiScalar(1)); }
    static FourierPoly harmonic_sin(int m, const PiScalar& c = PiScalar(1));
    static FourierPoly harmonic_cos(int m, const PiScalar& c = PiScalar(1));

    bool is_zero() const { return sin_.empty() && cos_.empty(); }

    // Max harmonic present; 0 for the zero polynomial.
    int degree() const;

    PiScalar sin_coeff(int m) const;
    PiScalar cos_coeff(int m) const;
    const std::map<int, PiScalar>& sin_terms() const { return sin_; }
    const std::map<int, PiScalar>& cos_terms() const { return cos_; }

    FourierPoly& operator+=(const FourierPoly& o);
    FourierPoly& operator-=(const FourierPoly& o);
    FourierPoly operator-() const;
    friend FourierPoly operator+(FourierPoly a, const FourierPoly& b) { return a += b; }
    friend FourierPoly operator-(FourierPoly a, const FourierPoly& b) { return a -= b; }

    // Exact product via the sin*sin / sin*cos / cos*cos product-to-sum rules.
    friend FourierPoly operator*(const FourierPoly& a, const FourierPoly& b);
    FourierPoly& operator*=(const FourierPoly& o) { return *this = *this * o; }

    FourierPoly scaled(const PiScalar& c) const;

    // d/dtheta, termwise: sin(m.) -> m cos(m.), cos(m.) -> -m sin(m.).
    FourierPoly diff() const;

    // Exact integral over x in (0,1) of f(pi*x), i.e. (1/pi) * int_0^pi f.
    // Only odd sine harmonics (weight 2/m, shifted to pi^-1) and the
    // constant term survive.
    PiScalar integrate01() const;

    // Floating evaluation at theta; pi_value substitutes for the formal pi
    // in the coefficients (normally M_PI, but tests may inject rationals).
    double eval(double theta, double pi_value) const;

    // Exact endpoint values: sum of cos coefficients at theta=0, alternating
    // sum at theta=pi (sines vanish at both).
    PiScalar value_at_zero() const;
    PiScalar value_at_pi() const;

    bool operator==(const FourierPoly& o) const {
        return sin_ == o.sin_ && cos_ == o.cos_;
    }

    std::string str() const;

    // Accumulates c*sin(m*theta) / c*cos(m*theta), folding negative and zero
    // harmonics into the canonical range.
    void add_sin(int m, const PiScalar& c);
    void add_cos(int m, const PiScalar& c);

private:
    std::map<int, PiScalar> sin_;  // m >= 1
    std::map<int, PiScalar> cos_;  // m >= 0
};

FourierPoly fp_pow(const FourierPoly& f, unsigned e);

// sin^a(theta) as a canonical FourierPoly.
FourierPoly sin_power_poly(unsigned a);

}  // namespace wron
