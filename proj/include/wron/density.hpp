#pragma once

namespace wron {

/// Brownian motion on (0,1) killed at rate mu * csc^2(pi x). The spectral
/// order nu = (1 + sqrt(1 + 8 mu / pi^2)) / 2; mu = 0 is the plain absorbed
/// motion (nu = 1, Dirichlet sine basis).
struct KilledBMModel {
    double mu = 0;
    double nu = 1;
};

double nu_from_mu(double mu);  // throws std::domain_error for mu < 0
KilledBMModel make_model(double mu);

struct DensityQuery {
    double t = 1;
    double x = 0.5;
    double y = 0.5;
    double tol = 1e-12;  // absolute truncation tolerance
};

struct DensityResult {
    double value = 0;      // clamped at 0
    double raw_value = 0;  // before the nonnegativity clamp
    long terms_used = 0;
    double tail_bound = 0;  // rigorous bound on the omitted tail, <= tol
};

// f_k(x) = 2^(nu-1) Gamma(nu) sin^nu(pi x) C_k^(nu)(cos(pi x)).
double eigenfunction_value(const KilledBMModel& model, unsigned k, double x);

// p_t(x,y) = sum_k exp(-pi^2 t (nu+k)^2 / 2) f_k(x) f_k(y)
//            * 2(nu+k) k! / Gamma(2nu+k),
// truncated when a geometric comparison bounds the tail below q.tol
// (|C_k^(nu)| <= C_k^(nu)(1) and sin <= 1 make every omitted term
// dominated; the bound ratio is decreasing in k). Throws TolUnreachableError
// past 1e5 terms.
DensityResult density(const KilledBMModel& model, const DensityQuery& q);

// Independent mu = 0 oracle: sum over images of Gaussian kernels,
// phi_t(y-x+2m) - phi_t(y+x+2m), truncated below 1e-18.
double mu0_oracle(double t, double x, double y);

// int_0^1 p_t(x,y) dy by adaptive Simpson; <= 1 up to quad_tol (killing
// only removes mass).
double density_mass(const KilledBMModel& model, double t, double x, double quad_tol);

// |int_0^1 p_s(x,z) p_t(z,y) dz - p_{s+t}(x,y)|: the semigroup defect,
// bounded by quadrature + truncation error.
double ck_check(const KilledBMModel& model, double s, double t, double x, double y,
                double quad_tol);

// For integer nu = n: checks exactly that f_k solves the eigen equation
// (after sin^2 clearing) and that int_0^1 f_k^2 = Gamma(2n+k)/(2(n+k)k!).
bool exact_eigen_check_integer_nu(int n, int k);

// Diagnostic only: ratio of C_k^(nu)(cos(pi x)) to its large-k cosine
// asymptotic; approaches 1 for interior x.
double remark1_ratio(double nu, unsigned k, double x);

}  // namespace wron
