#include <doctest.h>

#include "wron/darboux.hpp"
#include "wron/errors.hpp"
#include "wron/orthopoly.hpp"

using namespace wron;

TEST_CASE("chain ratio at the bottom of the ladder") {
    const ChainFunction g10 = crum_ratio(1, 0);
    CHECK(g10.form == to_sincos_form(FourierPoly::harmonic_sin(1)));
    CHECK(g10.sin_power == 1);
    CHECK(g10.pi_prefactor == 0);
    CHECK(g10.eigenvalue == PiScalar::pi_power(2, make_rational(-1, 2)));

    const ChainFunction g13 = crum_ratio(1, 3);
    CHECK(g13.form == to_sincos_form(FourierPoly::harmonic_sin(4)));
    CHECK(g13.eigenvalue == PiScalar::pi_power(2, -8));
}

TEST_CASE("first excited family") {
    // n=2, k=0: pi * (-2 sin^2 theta)
    const ChainFunction g20 = crum_ratio(2, 0);
    CHECK(g20.pi_prefactor == 1);
    CHECK(g20.sin_power == 2);
    CHECK(g20.profile == UPoly::constant(PiScalar(-2)));
    CHECK(from_sincos_form(g20.form) == sin_power_poly(2).scaled(PiScalar(-2)));

    // n=2, k=1: pi * (-8 sin^2 theta cos theta)
    const ChainFunction g21 = crum_ratio(2, 1);
    CHECK(g21.sin_power == 2);
    CHECK(g21.profile == UPoly::monomial(1, PiScalar(-8)));

    // n=3, k=0 profile is a constant again
    const ChainFunction g30 = crum_ratio(3, 0);
    CHECK(g30.pi_prefactor == 2);
    CHECK(g30.sin_power == 3);
    CHECK(g30.profile.degree() == 0);
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(crum_ratio(10, 0), SizeExceededError);
    ChainFunction wrong = crum_ratio(2, 1);
    wrong.sin_power = 5;
    CHECK_THROWS_AS(darboux_apply_groundseed(2, wrong), WrongClassError);
}

TEST_CASE("eigen equation residual vanishes") {
    CHECK(eigen_residual(2, 0).is_zero());
    CHECK(eigen_residual(2, 4).is_zero());
    CHECK(eigen_residual(3, 0).is_zero());
    CHECK(eigen_residual(4, 2).is_zero());
}

TEST_CASE("one Darboux step climbs the chain") {
    // sin theta * U_1-profile member maps onto the n=2 ground profile:
    // D_h sin(2 pi x) with h = sin(pi x) gives -2 pi sin^2(pi x).
    const ChainFunction up = darboux_apply_groundseed(1, crum_ratio(1, 1));
    const ChainFunction g20 = crum_ratio(2, 0);
    CHECK(up.form == g20.form);
    CHECK(up.pi_prefactor == g20.pi_prefactor);
    CHECK(up.eigenvalue == g20.eigenvalue);
    CHECK(up.n == 2);
    CHECK(up.k == 0);

    const ChainFunction up2 = darboux_apply_groundseed(2, crum_ratio(2, 1));
    const ChainFunction g30 = crum_ratio(3, 0);
    CHECK(up2.form == g30.form);
    CHECK(up2.pi_prefactor == g30.pi_prefactor);
}

TEST_CASE("exact L2 norms") {
    // ||sin((k+1) pi x)||^2 = 1/2
    for (int k = 0; k <= 3; ++k) {
        CHECK(norm_sq(crum_ratio(1, k)) == PiScalar(make_rational(1, 2)));
    }
    // ||pi (-2 sin^2)||^2 = pi^2 * 4 * 3/8 = 3/2 pi^2
    CHECK(norm_sq(crum_ratio(2, 0)) ==
          PiScalar::pi_power(2, make_rational(3, 2)));
    // ||pi (-8 sin^2 cos)||^2 = pi^2 * 64 * 1/16 = 4 pi^2
    CHECK(norm_sq(crum_ratio(2, 1)) == PiScalar::pi_power(2, 4));
}

TEST_CASE("norm recurrence and closed form") {
    CHECK(verify_norm_recurrence(2, 1));
    CHECK(verify_norm_recurrence(2, 2));
    CHECK(verify_norm_recurrence(3, 1));
    CHECK(chain_norm_closed_form(1, 2) == PiScalar(make_rational(1, 2)));
    CHECK(chain_norm_closed_form(2, 0) ==
          PiScalar::pi_power(2, make_rational(3, 2)));
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= 3; ++k) {
            CHECK(norm_sq(crum_ratio(n, k)) == chain_norm_closed_form(n, k));
        }
    }
}

TEST_CASE("integration by parts identity") {
    CHECK(verify_prop3(2, 1));
    CHECK(verify_prop3(2, 2));
    CHECK(verify_prop3(3, 2));
    CHECK(verify_prop3(4, 1));
}

TEST_CASE("proportionality constants") {
    CHECK(constant_C(1, 0) == PiScalar(1));
    CHECK(constant_C(1, 5) == PiScalar(1));
    CHECK(constant_C(2, 0) == PiScalar::pi_power(1, -1));
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= 3; ++k) {
            const PiScalar c = constant_C(n, k);
            CHECK(c.is_monomial());
            Rational mag = c.coeff(n - 1);
            if (mag < 0) mag = -mag;
            CHECK(mag == Rational(1));
        }
    }
    // the profile really is the advertised Gegenbauer multiple
    const ChainFunction g21 = crum_ratio(2, 1);
    const UPoly expected = gegenbauer(1, 2).scaled(
        PiScalar(Rational(constant_C(2, 1).coeff(1) * Rational(2))));
    CHECK((g21.profile == expected || g21.profile == expected.scaled(PiScalar(-1))));
}

TEST_CASE("operator bookkeeping") {
    CHECK(chain_operator(1).mu.is_zero());
    CHECK(chain_operator(2).mu == PiScalar::pi_power(2, 1));
    CHECK(chain_operator(3).mu == PiScalar::pi_power(2, 3));
    for (int n = 1; n <= 12; ++n) CHECK(verify_nu_consistency(n));
}
