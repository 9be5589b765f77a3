#include <doctest.h>

#include <cmath>
#include <random>

#include "random_trig.hpp"
#include "wron/errors.hpp"
#include "wron/fourier_poly.hpp"
#include "wron/pi_scalar.hpp"
#include "wron/upoly.hpp"

using namespace wron;
using wron::testing::random_fourier;
using wron::testing::random_upoly;

namespace {

FourierPoly sin1() { return FourierPoly::harmonic_sin(1); }

}  // namespace

TEST_CASE("pi-scalar arithmetic keeps powers separate") {
    const PiScalar two_plus_pi = PiScalar(2) + PiScalar::pi_power(1);
    const PiScalar three_minus_pi = PiScalar(3) - PiScalar::pi_power(1);
    const PiScalar prod = two_plus_pi * three_minus_pi;

    // (2 + pi)(3 - pi) = 6 + pi - pi^2
    CHECK(prod.coeff(0) == Rational(6));
    CHECK(prod.coeff(1) == Rational(1));
    CHECK(prod.coeff(2) == Rational(-1));
    CHECK(!prod.is_rational());

    const PiScalar diff = prod - prod;
    CHECK(diff.is_zero());
    CHECK(diff.terms().empty());

    CHECK(PiScalar::pi_power(-1, 2).times_pi_power(3) ==
          PiScalar::pi_power(2, 2));
    CHECK(PiScalar(make_rational(3, 2)).divided_by(make_rational(1, 2)) ==
          PiScalar(3));

    const PiScalar q = PiScalar::pi_power(3, make_rational(6)).divided_by_monomial(
        PiScalar::pi_power(1, make_rational(4)));
    CHECK(q == PiScalar::pi_power(2, make_rational(3, 2)));
    CHECK_THROWS_AS(prod.divided_by_monomial(two_plus_pi),
                    NotProportionalError);

    const double v = prod.eval(3.0);  // 6 + 3 - 9 = 0
    CHECK(v == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("product-to-sum identities") {
    // sin^2 = 1/2 - 1/2 cos 2t
    const FourierPoly sin2 = sin1() * sin1();
    FourierPoly expect;
    expect.add_cos(0, PiScalar(make_rational(1, 2)));
    expect.add_cos(2, PiScalar(make_rational(-1, 2)));
    CHECK(sin2 == expect);

    // sin^3 = 3/4 sin t - 1/4 sin 3t
    const FourierPoly sin3 = sin2 * sin1();
    FourierPoly expect3;
    expect3.add_sin(1, PiScalar(make_rational(3, 4)));
    expect3.add_sin(3, PiScalar(make_rational(-1, 4)));
    CHECK(sin3 == expect3);
    CHECK(sin3 == sin_power_poly(3));
    CHECK(sin3 == fp_pow(sin1(), 3));

    // sin t * sin 2t = 1/2 cos t - 1/2 cos 3t
    const FourierPoly mixed = sin1() * FourierPoly::harmonic_sin(2);
    CHECK(mixed.cos_coeff(1) == PiScalar(make_rational(1, 2)));
    CHECK(mixed.cos_coeff(3) == PiScalar(make_rational(-1, 2)));
    CHECK(mixed.sin_terms().empty());

    CHECK(sin_power_poly(0) == FourierPoly::one());
    CHECK(sin_power_poly(6).degree() == 6);
}

TEST_CASE("differentiation is termwise and iterable") {
    const FourierPoly f = FourierPoly::harmonic_sin(3, PiScalar(2));
    const FourierPoly df = f.diff();
    CHECK(df == FourierPoly::harmonic_cos(3, PiScalar(6)));
    // second derivative of sin(m t) is -m^2 sin(m t)
    CHECK(f.diff().diff() == f.scaled(PiScalar(-9)));
    CHECK(FourierPoly::constant(PiScalar::pi_power(2)).diff().is_zero());
}

TEST_CASE("exact integrals over the unit interval") {
    // int_0^1 sin^2(pi x) dx = 1/2
    CHECK((sin1() * sin1()).integrate01() == PiScalar(make_rational(1, 2)));
    // int_0^1 sin(pi x) sin(2 pi x) dx = 0
    CHECK((sin1() * FourierPoly::harmonic_sin(2)).integrate01().is_zero());
    // int_0^1 sin(pi x) dx = 2/pi
    CHECK(sin1().integrate01() == PiScalar::pi_power(-1, 2));
    // int_0^1 4 pi^2 sin^4(pi x) dx = 3/2 pi^2
    const FourierPoly g = sin_power_poly(4).scaled(PiScalar::pi_power(2, 4));
    CHECK(g.integrate01() == PiScalar::pi_power(2, make_rational(3, 2)));
}

TEST_CASE("endpoint values") {
    FourierPoly f;
    f.add_cos(0, PiScalar(make_rational(1, 2)));
    f.add_cos(1, PiScalar(3));
    f.add_cos(2, PiScalar(make_rational(-1, 4)));
    f.add_sin(5, PiScalar(7));
    CHECK(f.value_at_zero() == PiScalar(make_rational(13, 4)));   // 1/2+3-1/4
    CHECK(f.value_at_pi() == PiScalar(make_rational(-11, 4)));    // 1/2-3-1/4
    CHECK(std::abs(f.eval(0.0, M_PI) - f.value_at_zero().eval(M_PI)) < 1e-14);
}

TEST_CASE("negative and zero harmonics fold canonically") {
    FourierPoly f;
    f.add_sin(-2, PiScalar(1));   // sin(-2t) = -sin(2t)
    f.add_sin(0, PiScalar(5));    // vanishes
    f.add_cos(-3, PiScalar(2));   // cos(-3t) = cos(3t)
    CHECK(f.sin_coeff(2) == PiScalar(-1));
    CHECK(f.cos_coeff(3) == PiScalar(2));
    CHECK(f.sin_terms().size() == 1);
}

TEST_CASE("ring laws on random trig polynomials") {
    std::mt19937_64 rng(0x5eed0001);
    for (int rep = 0; rep < 40; ++rep) {
        const FourierPoly a = random_fourier(rng, 6);
        const FourierPoly b = random_fourier(rng, 6);
        const FourierPoly c = random_fourier(rng, 6);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("Leibniz rule and fundamental theorem") {
    std::mt19937_64 rng(0x5eed0002);
    for (int rep = 0; rep < 25; ++rep) {
        const FourierPoly a = random_fourier(rng, 5);
        const FourierPoly b = random_fourier(rng, 5);
        CHECK((a * b).diff() == a.diff() * b + a * b.diff());
        // int_0^1 d/dtheta[a](pi x) dx = (a(pi) - a(0)) / pi
        CHECK(a.diff().integrate01() ==
              (a.value_at_pi() - a.value_at_zero()).times_pi_power(-1));
    }
}

TEST_CASE("floating evaluation tracks exact arithmetic") {
    std::mt19937_64 rng(0x5eed0003);
    std::uniform_real_distribution<double> th(0.0, M_PI);
    for (int rep = 0; rep < 20; ++rep) {
        const FourierPoly a = random_fourier(rng, 6);
        const FourierPoly b = random_fourier(rng, 6);
        const double t = th(rng);
        const double lhs = (a * b).eval(t, M_PI);
        const double rhs = a.eval(t, M_PI) * b.eval(t, M_PI);
        CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("u-polynomial basics") {
    const UPoly p = UPoly::monomial(2, PiScalar(3)) - UPoly::constant(PiScalar(1));
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == PiScalar(-1));
    CHECK(p.eval(make_rational(1, 2)) == PiScalar(make_rational(-1, 4)));
    CHECK(p.eval_one() == PiScalar(2));
    CHECK(p.eval_minus_one() == PiScalar(2));
    CHECK(p.derivative() == UPoly::monomial(1, PiScalar(6)));
    CHECK(UPoly().degree() == -1);
    CHECK((p - p).is_zero());

    std::mt19937_64 rng(0x5eed0004);
    for (int rep = 0; rep < 20; ++rep) {
        const UPoly a = random_upoly(rng, 5);
        const UPoly b = random_upoly(rng, 5);
        CHECK(a * b == b * a);
        CHECK((a * b).derivative() ==
              a.derivative() * b + a * b.derivative());
        const UPoly lifted = a.times_one_minus_u2();
        const auto back = lifted.div_exact_one_minus_u2();
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
    // u itself is not divisible by (1 - u^2)
    CHECK(!UPoly::monomial(1).div_exact_one_minus_u2().has_value());
}
