#pragma once

#include "wron/sincos_form.hpp"

namespace wron {

/// L_mu = (1/2) d^2/dx^2 - mu csc^2(pi x) on (0,1); the chain visits
/// mu_n = n(n-1) pi^2 / 2.
struct SchrodingerOp {
    PiScalar mu;
};

SchrodingerOp chain_operator(int n);  // mu = n(n-1)/2 * pi^2

/// A member of the Darboux-Crum chain, g(x) = pi^p * sin^a(theta) *
/// Q(cos theta) with theta = pi x. The pi-power p is kept out of the form so
/// that d/dx = pi * d/dtheta is bookkeeping, never numerics. sin_power and
/// profile are the exact factorization of form (a >= 1 for chain members).
struct ChainFunction {
    SinCosForm form;
    unsigned sin_power = 0;
    UPoly profile;
    int pi_prefactor = 0;
    PiScalar eigenvalue;  // -pi^2 (n+k)^2 / 2
    int n = 1;
    int k = 0;
};

// g_k^(n-1)(x) = Wr_x{sin(pi x), ..., sin((n-1)pi x), sin((n+k)pi x)}
//             / Wr_x{sin(pi x), ..., sin((n-1)pi x)},
// with both Wronskians brute-forced in theta; the denominator is a constant
// times sin^((n-1)n/2), so the quotient is a sine-power division plus an
// exact scalar division. Carries pi-prefactor n-1. Guard n <= 9.
ChainFunction crum_ratio(int n, int k);

// sin^2-cleared residual of the eigen equation at level n-1:
//   R = (1/2) sin^2 g''_x - mu_n g - lambda sin^2 g,   lambda = -pi^2(n+k)^2/2;
// identically zero when the chain is correct. Requires n >= 2.
FourierPoly eigen_residual(int n, int k);

// D_h g = g'_x - (h'_x/h) g with the ground seed h = const * sin^n(theta),
// which closes on this class: sin^n Q |-> -pi sin^(n+1) Q'. Throws
// WrongClassError when g's sine power is not n.
ChainFunction darboux_apply_groundseed(int n, const ChainFunction& g);

// Exact integral of g(x)^2 over (0,1), pi-prefactors included.
PiScalar norm_sq(const ChainFunction& g);

// ||g_{k-1}^(n)||^2 = pi^2 ((n+k)^2 - n^2) ||g_k^(n-1)||^2, both sides exact.
bool verify_norm_recurrence(int n, int k);

// Integral identity behind the norm recurrence: with f = g = the (n,k) chain
// member, gt = D_h g, lambda = -pi^2 n^2/2, kappa = -pi^2 (n+k)^2/2,
//   int gt^2 = [f gt]_0^1 + 2(lambda - kappa) int f g,
// the boundary term evaluated exactly (it vanishes: sine powers >= 1).
bool verify_prop3(int n, int k);

// (1/2) pi^(2n-2) Gamma(2n+k) / ((n+k) k!), the closed form the norm
// recurrence telescopes to from ||sin(pi k x)||^2 = 1/2.
PiScalar chain_norm_closed_form(int n, int k);

// The scalar C with g_k^(n-1) = C * 2^(n-1) Gamma(n) sin^n(theta)
// C_k^(n)(cos theta). |C| = pi^(n-1); the sign is whatever the exact
// division yields. Throws NotProportionalError if the forms are not
// proportional.
PiScalar constant_C(int n, int k);

// (1 + sqrt(1 + 8 mu_n / pi^2)) / 2 == n, checked in integer arithmetic
// (the discriminant is (2n-1)^2).
bool verify_nu_consistency(int n);

}  // namespace wron
