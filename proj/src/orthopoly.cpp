#include "wron/orthopoly.hpp"

#include "wron/fourier_poly.hpp"
#include "wron/sincos_form.hpp"

namespace wron {

namespace {

// Both Chebyshev kinds share the recurrence P_{n+1} = 2u P_n - P_{n-1};
// only P_1 differs (U_1 = 2u, T_1 = u).
UPoly cheb_by_recurrence(unsigned n, const UPoly& p1) {
    UPoly prev = UPoly::constant(PiScalar(1));
    if (n == 0) return prev;
    UPoly cur = p1;
    const UPoly two_u = UPoly::monomial(1, PiScalar(2));
    for (unsigned i = 1; i < n; ++i) {
        UPoly next = two_u * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

UPoly cheb_u(unsigned n) {
    return cheb_by_recurrence(n, UPoly::monomial(1, PiScalar(2)));
}

UPoly cheb_t(unsigned n) {
    return cheb_by_recurrence(n, UPoly::monomial(1, PiScalar(1)));
}

UPoly gegenbauer(unsigned k, const Rational& nu) {
    UPoly prev = UPoly::constant(PiScalar(1));
    if (k == 0) return prev;
    UPoly cur = UPoly::monomial(1, PiScalar(Rational(2 * nu)));
    for (unsigned i = 2; i <= k; ++i) {
        Rational a = (2 * (Rational(i) + nu - 1)) / Rational(i);
        Rational b = (Rational(i) + 2 * nu - 2) / Rational(i);
        UPoly next = (UPoly::monomial(1, PiScalar(a)) * cur) - prev.scaled(PiScalar(b));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool verify_gegenbauer_ode(unsigned k, const Rational& nu) {
    const UPoly y = gegenbauer(k, nu);
    const UPoly y1 = y.derivative();
    const UPoly y2 = y1.derivative();
    UPoly residual = y2.times_one_minus_u2();
    residual -= UPoly::monomial(1, PiScalar(2 * nu + 1)) * y1;
    residual += y.scaled(PiScalar(Rational(k) * (Rational(k) + 2 * nu)));
    return residual.is_zero();
}

bool verify_cnk_recurrence(unsigned n, unsigned k) {
    const Rational nu(n);
    const UPoly lhs = gegenbauer(k + 2, nu);
    UPoly rhs = gegenbauer(k, nu);
    const Rational factor = Rational(n + k + 1) / Rational(n - 1);
    rhs += gegenbauer(k + 2, Rational(n - 1)).scaled(PiScalar(factor));
    return lhs == rhs;
}

PiScalar gegenbauer_orthogonality_integral(unsigned k, unsigned l, unsigned nu) {
    // t = cos(theta) turns the weight into sin^(2nu-1) and dt into
    // -sin dtheta, so the integrand is sin^(2nu) C_k(cos) C_l(cos):
    // a trig polynomial, integrated exactly over (0, pi).
    UPoly profile = gegenbauer(k, Rational(nu)) * gegenbauer(l, Rational(nu));
    SinCosForm sc = sc_from_sin_power_profile(2 * nu, profile);
    return from_sincos_form(sc).integrate01().times_pi_power(1);
}

PiScalar gegenbauer_norm_closed_form(unsigned k, unsigned nu) {
    // pi 2^(1-2nu) Gamma(k+2nu) / (k! (k+nu) Gamma(nu)^2), all arguments
    // integers here, expanded as exact factorials.
    Integer num = factorial(k + 2 * nu - 1);
    Integer gnu = factorial(nu - 1);
    Integer den = factorial(k) * Integer(k + nu) * gnu * gnu * pow2(2 * nu - 1);
    return PiScalar::pi_power(1, make_rational(num, den));
}

Rational gegenbauer_at_one(unsigned k, const Rational& nu) {
    Rational r = 1;
    for (unsigned j = 0; j < k; ++j) {
        r *= (2 * nu + Rational(j)) / Rational(j + 1);
    }
    return r;
}

double gegenbauer_eval(unsigned k, double nu, double u) {
    if (k == 0) return 1.0;
    double y0 = 1.0;
    double y1 = 2.0 * nu * u;
    for (unsigned i = 2; i <= k; ++i) {
        double y2 = (2.0 * (i + nu - 1.0) * u * y1 - (i + 2.0 * nu - 2.0) * y0) / i;
        y0 = y1;
        y1 = y2;
    }
    return y1;
}

}  // namespace wron
