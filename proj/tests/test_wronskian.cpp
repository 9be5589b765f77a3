#include <doctest.h>

#include <random>
#include <vector>

#include "random_trig.hpp"
#include "wron/errors.hpp"
#include "wron/wronskian.hpp"

using namespace wron;

namespace {

FourierPoly sin_h(int m) { return FourierPoly::harmonic_sin(m); }

}  // namespace

TEST_CASE("brute force determinant on known families") {
    CHECK(wronskian_bruteforce({}) == FourierPoly::one());
    CHECK(wronskian_bruteforce({sin_h(1)}) == sin_h(1));

    // Wr{sin x, sin 2x} = -2 sin^3 x
    CHECK(wronskian_bruteforce({sin_h(1), sin_h(2)}) ==
          sin_power_poly(3).scaled(PiScalar(-2)));

    // Wr{sin x, sin 2x, sin 3x} = -16 sin^6 x
    CHECK(wronskian_bruteforce({sin_h(1), sin_h(2), sin_h(3)}) ==
          sin_power_poly(6).scaled(PiScalar(-16)));

    // Wr{sin x, sin 4x} = sin 4x ... expanded: (3/2) sin 5x - (5/2) sin 3x
    FourierPoly w22;
    w22.add_sin(5, PiScalar(make_rational(3, 2)));
    w22.add_sin(3, PiScalar(make_rational(-5, 2)));
    CHECK(wronskian_bruteforce({sin_h(1), sin_h(4)}) == w22);
}

TEST_CASE("determinant structure") {
    // swapping two columns flips the sign
    const FourierPoly a = sin_h(1), b = sin_h(2), c = sin_h(3);
    CHECK(wronskian_bruteforce({a, c, b}) ==
          -wronskian_bruteforce({a, b, c}));
    // a repeated column kills the determinant
    CHECK(wronskian_bruteforce({a, a, b}).is_zero());
    CHECK(wronskian_bruteforce({a, b, a, c}).is_zero());
    // size guard
    std::vector<FourierPoly> big;
    for (int m = 1; m <= 11; ++m) big.push_back(sin_h(m));
    CHECK_THROWS_AS(wronskian_bruteforce(big), SizeExceededError);
}

TEST_CASE("Barnes G at small integers") {
    CHECK(barnes_g(1) == 1);
    CHECK(barnes_g(2) == 1);
    CHECK(barnes_g(3) == 1);
    CHECK(barnes_g(4) == 2);
    CHECK(barnes_g(5) == 12);
    CHECK(barnes_g(6) == 288);
}

TEST_CASE("closed form expands correctly") {
    CHECK(w_closed(1, 0) == sin_h(1));
    CHECK(w_closed(1, 4) == sin_h(5));
    // n=2, k=1: -8 sin^3 x cos x = sin 4x - 2 sin 2x
    FourierPoly expect;
    expect.add_sin(4, PiScalar(1));
    expect.add_sin(2, PiScalar(-2));
    CHECK(w_closed(2, 1) == expect);
    CHECK(w_closed(3, 0) == sin_power_poly(6).scaled(PiScalar(-16)));
}

TEST_CASE("recurrence route") {
    CHECK(w_recurrence(1, 5) == sin_h(6));
    CHECK(w_recurrence(2, 0) == sin_power_poly(3).scaled(PiScalar(-2)));
    // the k=2 column built by the recurrence equals the frozen determinant
    FourierPoly w22;
    w22.add_sin(5, PiScalar(make_rational(3, 2)));
    w22.add_sin(3, PiScalar(make_rational(-5, 2)));
    CHECK(w_recurrence(2, 2) == w22);
}

TEST_CASE("three routes agree on a small grid") {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 0; k <= 4; ++k) {
            const FourierPoly det = w_bruteforce(n, k);
            CHECK(det == w_recurrence(n, k));
            CHECK(det == w_closed(n, k));
            const VerificationRecord rec = verify_theorem1(n, k);
            CHECK(rec.pass);
            CHECK(rec.degree == det.degree());
        }
    }
}

TEST_CASE("factorization under a common factor") {
    // f = sin x, g = 2u: both sides reduce to -2 sin^3 x
    CHECK(check_prop1_factorization(sin_h(1), {UPoly::monomial(1, PiScalar(2))}));
    // empty list: Wr{f} = f = f^1 * (empty Wronskian)
    CHECK(check_prop1_factorization(sin_h(2), {}));
    // two multipliers, mixed degrees
    CHECK(check_prop1_factorization(
        sin_h(1) + FourierPoly::harmonic_cos(2),
        {UPoly::monomial(1), UPoly::monomial(2, PiScalar(3))}));

    std::mt19937_64 rng(0x5eed0020);
    for (int rep = 0; rep < 30; ++rep) {
        FourierPoly f = wron::testing::random_fourier(rng, 3);
        while (f.is_zero()) f = wron::testing::random_fourier(rng, 3);
        std::uniform_int_distribution<int> n_gs(1, 3);
        std::vector<UPoly> gs;
        const int m = n_gs(rng);
        for (int i = 0; i < m; ++i)
            gs.push_back(wron::testing::random_upoly(rng, 2));
        CHECK(check_prop1_factorization(f, gs));
    }
}
