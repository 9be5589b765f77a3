#pragma once

#include "wron/pi_scalar.hpp"
#include "wron/upoly.hpp"

namespace wron {

/// Degree/order pair for a Gegenbauer polynomial C_k^(nu). The order is kept
/// rational so integer and non-integer orders share the exact construction.
struct GegenbauerIndex {
    unsigned k = 0;
    Rational nu = 1;
};

// Chebyshev polynomials, exact: sin((n+1)t) = sin(t) U_n(cos t) and
// cos(n t) = T_n(cos t). U_n has leading coefficient 2^n.
UPoly cheb_u(unsigned n);
UPoly cheb_t(unsigned n);

// C_k^(nu) by the standard three-term recurrence
//   C_0 = 1, C_1 = 2 nu u, k C_k = 2(k+nu-1) u C_{k-1} - (k+2nu-2) C_{k-2},
// exact for rational nu > 0. Certified independently by the ODE and the
// contiguous-order identity below, never against itself.
UPoly gegenbauer(unsigned k, const Rational& nu);

// Substitutes C_k^(nu) into (1-u^2)y'' - (2nu+1)u y' + k(k+2nu) y and checks
// the residual is identically zero.
bool verify_gegenbauer_ode(unsigned k, const Rational& nu);

// Checks C_{k+2}^(n) = C_k^(n) + ((n+k+1)/(n-1)) C_{k+2}^(n-1) exactly, n >= 2.
bool verify_cnk_recurrence(unsigned n, unsigned k);

// Exact int_{-1}^{1} C_k^(nu) C_l^(nu) (1-t^2)^(nu-1/2) dt for integer
// nu >= 1, via t = cos(theta); 0 off the diagonal, and on the diagonal
//   pi 2^(1-2nu) Gamma(k+2nu) / (k! (k+nu) Gamma(nu)^2).
PiScalar gegenbauer_orthogonality_integral(unsigned k, unsigned l, unsigned nu);

// Closed-form diagonal value above, expanded in exact factorials.
PiScalar gegenbauer_norm_closed_form(unsigned k, unsigned nu);

// C_k^(nu)(1) = prod_{j=0}^{k-1} (2nu+j)/(1+j); bounds |C_k^(nu)| on [-1,1].
Rational gegenbauer_at_one(unsigned k, const Rational& nu);

// Forward three-term recurrence in doubles.
double gegenbauer_eval(unsigned k, double nu, double u);

}  // namespace wron
