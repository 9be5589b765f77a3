#pragma once

#include "wron/fourier_poly.hpp"
#include "wron/upoly.hpp"

namespace wron {

/// f(theta) = p0(cos theta) + sin(theta) * p1(cos theta). Every FourierPoly
/// has exactly one such representation (sin m = sin * U_{m-1}(cos),
/// cos m = T_m(cos)), and it is the only place division happens: dividing by
/// sin(theta) swaps the roles of p0 and p1 and peels a factor (1-u^2).
struct SinCosForm {
    UPoly p0;
    UPoly p1;

    bool is_zero() const { return p0.is_zero() && p1.is_zero(); }
    bool operator==(const SinCosForm& o) const { return p0 == o.p0 && p1 == o.p1; }
};

SinCosForm to_sincos_form(const FourierPoly& f);
FourierPoly from_sincos_form(const SinCosForm& sc);

SinCosForm sc_add(const SinCosForm& a, const SinCosForm& b);
SinCosForm sc_mul(const SinCosForm& a, const SinCosForm& b);
SinCosForm sc_scaled(const SinCosForm& sc, const PiScalar& c);

// d/dtheta: (p0 + s p1)' = [u p1 - (1-u^2)p1'] + s*(-p0'), with u = cos,
// s = sin, u' = -s, s' = u.
SinCosForm sc_diff(const SinCosForm& sc);

// sin^a(theta) * q(cos theta) as a SinCosForm (parity split on a).
SinCosForm sc_from_sin_power_profile(unsigned a, const UPoly& q);

// sc / sin^a. Each single step maps (p0, p1) to (p1, p0/(1-u^2)); throws
// NotDivisibleError when (1-u^2) does not divide p0 (for p0 != 0).
SinCosForm sc_div_sin_power(const SinCosForm& sc, unsigned a);

// Largest a with sc = sin^a * g for some SinCosForm g; returns {a, g}.
// For nonzero sc this terminates because each even step strictly lowers
// deg(p0) + deg(p1).
struct SinPowerFactorization {
    unsigned power = 0;
    SinCosForm rest;
};
SinPowerFactorization sc_factor_sin_power(const SinCosForm& sc);

// Exact values at theta = 0 and theta = pi (where sin vanishes).
PiScalar sc_value_at_zero(const SinCosForm& sc);
PiScalar sc_value_at_pi(const SinCosForm& sc);

double sc_eval(const SinCosForm& sc, double theta, double pi_value);

}  // namespace wron
