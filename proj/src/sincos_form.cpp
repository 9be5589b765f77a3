#include "wron/sincos_form.hpp"

#include <cmath>
#include <string>

#include "wron/errors.hpp"
#include "wron/orthopoly.hpp"

namespace wron {

SinCosForm to_sincos_form(const FourierPoly& f) {
    SinCosForm sc;
    for (const auto& [m, c] : f.cos_terms()) {
        sc.p0 += cheb_t(static_cast<unsigned>(m)).scaled(c);
    }
    for (const auto& [m, c] : f.sin_terms()) {
        sc.p1 += cheb_u(static_cast<unsigned>(m - 1)).scaled(c);
    }
    return sc;
}

namespace {

// Horner evaluation of p at u = cos(theta), in the FourierPoly ring.
FourierPoly expand_in_cos(const UPoly& p) {
    FourierPoly acc;
    const FourierPoly cosine = FourierPoly::harmonic_cos(1);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * cosine + FourierPoly::constant(p.coeff(i));
    }
    return acc;
}

}  // namespace

FourierPoly from_sincos_form(const SinCosForm& sc) {
    return expand_in_cos(sc.p0) + FourierPoly::harmonic_sin(1) * expand_in_cos(sc.p1);
}

SinCosForm sc_add(const SinCosForm& a, const SinCosForm& b) {
    return {a.p0 + b.p0, a.p1 + b.p1};
}

SinCosForm sc_mul(const SinCosForm& a, const SinCosForm& b) {
    // (p0 + s p1)(q0 + s q1) with s^2 = 1 - u^2.
    return {a.p0 * b.p0 + (a.p1 * b.p1).times_one_minus_u2(),
            a.p0 * b.p1 + a.p1 * b.p0};
}

SinCosForm sc_scaled(const SinCosForm& sc, const PiScalar& c) {
    return {sc.p0.scaled(c), sc.p1.scaled(c)};
}

SinCosForm sc_diff(const SinCosForm& sc) {
    UPoly d0 = UPoly::monomial(1) * sc.p1 - sc.p1.derivative().times_one_minus_u2();
    return {std::move(d0), -sc.p0.derivative()};
}

SinCosForm sc_from_sin_power_profile(unsigned a, const UPoly& q) {
    UPoly p = q;
    for (unsigned i = 0; i + 1 < a; i += 2) p = p.times_one_minus_u2();
    if (a % 2 == 0) return {std::move(p), UPoly()};
    return {UPoly(), std::move(p)};
}

SinCosForm sc_div_sin_power(const SinCosForm& sc, unsigned a) {
    SinCosForm cur = sc;
    for (unsigned i = 0; i < a; ++i) {
        auto q = cur.p0.div_exact_one_minus_u2();
        if (!q) {
            throw NotDivisibleError("sc_div_sin_power: not divisible by sin^" +
                                    std::to_string(a) + " (failed at step " +
                                    std::to_string(i + 1) + ")");
        }
        cur = {std::move(cur.p1), std::move(*q)};
    }
    return cur;
}

SinPowerFactorization sc_factor_sin_power(const SinCosForm& sc) {
    SinPowerFactorization out;
    out.rest = sc;
    if (sc.is_zero()) return out;
    for (;;) {
        auto q = out.rest.p0.div_exact_one_minus_u2();
        if (!q) return out;
        out.rest = {std::move(out.rest.p1), std::move(*q)};
        ++out.power;
    }
}

PiScalar sc_value_at_zero(const SinCosForm& sc) { return sc.p0.eval_one(); }

PiScalar sc_value_at_pi(const SinCosForm& sc) { return sc.p0.eval_minus_one(); }

double sc_eval(const SinCosForm& sc, double theta, double pi_value) {
    const double u = std::cos(theta);
    double acc0 = 0.0, acc1 = 0.0;
    for (int i = sc.p0.degree(); i >= 0; --i) acc0 = acc0 * u + sc.p0.coeff(i).eval(pi_value);
    for (int i = sc.p1.degree(); i >= 0; --i) acc1 = acc1 * u + sc.p1.coeff(i).eval(pi_value);
    return acc0 + std::sin(theta) * acc1;
}

}  // namespace wron
