#include "wron/darboux.hpp"

#include <stdexcept>
#include <string>

#include "wron/errors.hpp"
#include "wron/orthopoly.hpp"
#include "wron/wronskian.hpp"

namespace wron {

SchrodingerOp chain_operator(int n) {
    return {PiScalar::pi_power(2, make_rational(long(n) * (n - 1), 2))};
}

namespace {

PiScalar chain_eigenvalue(int n, int k) {
    return PiScalar::pi_power(2, make_rational(-long(n + k) * (n + k), 2));
}

ChainFunction make_chain(SinCosForm form, int pi_prefactor, int n, int k) {
    ChainFunction g;
    auto fac = sc_factor_sin_power(form);
    if (!fac.rest.p1.is_zero()) {
        throw NotDivisibleError("chain function is not sin^a * Q(cos)");
    }
    g.form = std::move(form);
    g.sin_power = fac.power;
    g.profile = std::move(fac.rest.p0);
    g.pi_prefactor = pi_prefactor;
    g.eigenvalue = chain_eigenvalue(n, k);
    g.n = n;
    g.k = k;
    return g;
}

}  // namespace

ChainFunction crum_ratio(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("crum_ratio: need n >= 1, k >= 0");
    if (n > 9) {
        throw SizeExceededError("crum_ratio: n = " + std::to_string(n) +
                                " exceeds the brute-force guard of 9");
    }
    if (n == 1) {
        return make_chain(to_sincos_form(FourierPoly::harmonic_sin(k + 1)), 0, 1, k);
    }

    const FourierPoly num = w_bruteforce(n, k);
    const FourierPoly den = wronskian_bruteforce([&] {
        std::vector<FourierPoly> fs;
        for (int m = 1; m < n; ++m) fs.push_back(FourierPoly::harmonic_sin(m));
        return fs;
    }());

    // The denominator is c * sin^((n-1)n/2) exactly; anything else is a bug
    // upstream, caught here by the factorization.
    auto dfac = sc_factor_sin_power(to_sincos_form(den));
    if (dfac.power != unsigned(n - 1) * unsigned(n) / 2 || !dfac.rest.p1.is_zero() ||
        dfac.rest.p0.degree() != 0) {
        throw NotDivisibleError("crum_ratio: denominator Wronskian is not const * sin^a");
    }
    const PiScalar c = dfac.rest.p0.coeff(0);
    if (!c.is_rational()) throw NotDivisibleError("crum_ratio: non-rational denominator constant");

    SinCosForm quot = sc_div_sin_power(to_sincos_form(num), dfac.power);
    quot = sc_scaled(quot, PiScalar(Rational(1) / c.rational_part()));
    return make_chain(std::move(quot), n - 1, n, k);
}

FourierPoly eigen_residual(int n, int k) {
    if (n < 2) throw std::invalid_argument("eigen_residual: need n >= 2");
    const ChainFunction g = crum_ratio(n, k);
    const FourierPoly f = from_sincos_form(g.form);
    const FourierPoly sin2 = sin_power_poly(2);
    FourierPoly r = (sin2 * f.diff().diff()).scaled(PiScalar(make_rational(1, 2)));
    r -= f.scaled(PiScalar(make_rational(long(n) * (n - 1), 2)));
    r += (sin2 * f).scaled(PiScalar(make_rational(long(n + k) * (n + k), 2)));
    return r.scaled(PiScalar::pi_power(g.pi_prefactor + 2));
}

ChainFunction darboux_apply_groundseed(int n, const ChainFunction& g) {
    if (g.sin_power != unsigned(n)) {
        throw WrongClassError("darboux_apply_groundseed: sine power " +
                              std::to_string(g.sin_power) + " does not match seed level " +
                              std::to_string(n));
    }
    SinCosForm out =
        sc_from_sin_power_profile(unsigned(n) + 1, -g.profile.derivative());
    return make_chain(std::move(out), g.pi_prefactor + 1, n + 1, g.k - 1);
}

PiScalar norm_sq(const ChainFunction& g) {
    return from_sincos_form(sc_mul(g.form, g.form))
        .integrate01()
        .times_pi_power(2 * g.pi_prefactor);
}

bool verify_norm_recurrence(int n, int k) {
    if (n < 2 || k < 1) throw std::invalid_argument("verify_norm_recurrence: need n >= 2, k >= 1");
    const PiScalar lhs = norm_sq(crum_ratio(n + 1, k - 1));
    const PiScalar factor = PiScalar::pi_power(2, Rational(long(n + k) * (n + k) - long(n) * n));
    return lhs == factor * norm_sq(crum_ratio(n, k));
}

bool verify_prop3(int n, int k) {
    if (n < 2 || k < 1) throw std::invalid_argument("verify_prop3: need n >= 2, k >= 1");
    const ChainFunction g = crum_ratio(n, k);
    const ChainFunction gt = darboux_apply_groundseed(n, g);

    // [f * gt]_0^1 with f = g, evaluated exactly at theta = pi and 0.
    const SinCosForm prod = sc_mul(g.form, gt.form);
    PiScalar boundary = (sc_value_at_pi(prod) - sc_value_at_zero(prod))
                            .times_pi_power(g.pi_prefactor + gt.pi_prefactor);

    const PiScalar two_lambda_minus_kappa =
        PiScalar::pi_power(2, Rational(long(n + k) * (n + k) - long(n) * n));
    return norm_sq(gt) == boundary + two_lambda_minus_kappa * norm_sq(g);
}

PiScalar chain_norm_closed_form(int n, int k) {
    Integer num = factorial(unsigned(2 * n + k) - 1);
    Integer den = 2 * Integer(n + k) * factorial(unsigned(k));
    return PiScalar::pi_power(2 * n - 2, make_rational(num, den));
}

PiScalar constant_C(int n, int k) {
    const ChainFunction g = crum_ratio(n, k);
    const UPoly ck = gegenbauer(unsigned(k), Rational(n));
    if (g.sin_power != unsigned(n) || g.profile.degree() != ck.degree()) {
        throw NotProportionalError("constant_C: chain member is not sin^n * (deg-k profile)");
    }
    // Q = s * C_k^(n) for a scalar s, then C = pi^(n-1) s / (2^(n-1)(n-1)!).
    const PiScalar s = g.profile.leading().divided_by_monomial(ck.leading());
    if (!(g.profile == ck.scaled(s)) || !s.is_rational()) {
        throw NotProportionalError("constant_C: profile is not proportional to C_k^(n)");
    }
    const Rational scale = make_rational(pow2(unsigned(n) - 1) * factorial(unsigned(n) - 1));
    return PiScalar::pi_power(g.pi_prefactor, s.rational_part() / scale);
}

bool verify_nu_consistency(int n) {
    const Integer disc = 4 * Integer(n) * (n - 1) + 1;
    const Integer root = sqrt(disc);
    return root * root == disc && (1 + root) % 2 == 0 && (1 + root) / 2 == n;
}

}  // namespace wron
