#include "wron/wronskian.hpp"

#include <chrono>
#include <stdexcept>

#include "wron/errors.hpp"
#include "wron/orthopoly.hpp"
#include "wron/sincos_form.hpp"

namespace wron {

FourierPoly wronskian_bruteforce(const std::vector<FourierPoly>& fs) {
    const size_t n = fs.size();
    if (n > 10) {
        throw SizeExceededError("wronskian_bruteforce: " + std::to_string(n) +
                                " columns exceeds the guard of 10");
    }
    if (n == 0) return FourierPoly::one();

    // Derivative table: deriv[j][r] = r-th derivative of column j.
    std::vector<std::vector<FourierPoly>> deriv(n);
    for (size_t j = 0; j < n; ++j) {
        deriv[j].reserve(n);
        deriv[j].push_back(fs[j]);
        for (size_t r = 1; r < n; ++r) deriv[j].push_back(deriv[j].back().diff());
    }

    // minor[S] = det of the submatrix on rows 0..|S|-1 and columns S,
    // filled in increasing mask order (S \ {j} < S numerically). Expansion
    // is along the bottom row of each submatrix.
    std::vector<FourierPoly> minor(size_t(1) << n);
    minor[0] = FourierPoly::one();
    for (size_t mask = 1; mask < minor.size(); ++mask) {
        const int rows = __builtin_popcountll(mask);
        FourierPoly det;
        int pos = 0;
        for (size_t j = 0; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            FourierPoly term = deriv[j][rows - 1] * minor[mask & ~(size_t(1) << j)];
            if ((rows - 1 + pos) % 2 == 0) {
                det += term;
            } else {
                det -= term;
            }
            ++pos;
        }
        minor[mask] = std::move(det);
    }
    return minor.back();
}

Integer barnes_g(unsigned m) {
    Integer g = 1;
    for (unsigned j = 2; j + 1 < m; ++j) g *= factorial(j);
    return g;
}

namespace {

std::vector<FourierPoly> family(int n, int k) {
    std::vector<FourierPoly> fs;
    fs.reserve(n);
    for (int m = 1; m < n; ++m) fs.push_back(FourierPoly::harmonic_sin(m));
    fs.push_back(FourierPoly::harmonic_sin(n + k));
    return fs;
}

// (-2)^(n(n-1)/2) * G(n+1), the scalar in front of every closed form here.
Rational closed_prefactor(int n) {
    const unsigned tri = unsigned(n) * unsigned(n - 1) / 2;
    Integer c = pow2(tri) * barnes_g(unsigned(n) + 1);
    if (tri % 2 == 1) c = -c;
    return Rational(c);
}

FourierPoly sin_power_times(int n, const UPoly& profile) {
    const unsigned a = unsigned(n) * unsigned(n + 1) / 2;
    return from_sincos_form(sc_from_sin_power_profile(a, profile));
}

}  // namespace

FourierPoly w_bruteforce(int n, int k) {
    return wronskian_bruteforce(family(n, k));
}

FourierPoly w_closed(int n, int k) {
    UPoly profile = gegenbauer(unsigned(k), Rational(n)).scaled(PiScalar(closed_prefactor(n)));
    return sin_power_times(n, profile);
}

FourierPoly w_recurrence(int n, int k) {
    // Induction fill: the k=0 row is the known product formula, the k=1 row
    // adds the factor 2n*cos, the n=1 column is sin((k+1)x) by definition;
    // every other entry comes from
    //   W_n^(K) = W_n^(K-2) + (-2)^(n-1) (n+K-1) (n-2)! sin^n x W_{n-1}^(K),
    // filled in increasing K, then increasing n.
    std::vector<std::vector<FourierPoly>> w(size_t(n) + 1,
                                            std::vector<FourierPoly>(size_t(k) + 1));
    for (int kk = 0; kk <= k; ++kk) w[1][kk] = FourierPoly::harmonic_sin(kk + 1);
    for (int nn = 2; nn <= n; ++nn) {
        w[nn][0] = sin_power_times(nn, UPoly::constant(PiScalar(closed_prefactor(nn))));
        if (k >= 1) {
            w[nn][1] = sin_power_times(
                nn, UPoly::monomial(1, PiScalar(closed_prefactor(nn) * 2 * nn)));
        }
    }
    for (int kk = 2; kk <= k; ++kk) {
        for (int nn = 2; nn <= n; ++nn) {
            Integer c = pow2(unsigned(nn) - 1) * (nn + kk - 1) * factorial(unsigned(nn) - 2);
            if ((nn - 1) % 2 == 1) c = -c;
            w[nn][kk] = w[nn][kk - 2] +
                        (sin_power_poly(unsigned(nn)) * w[nn - 1][kk]).scaled(PiScalar(c));
        }
    }
    return w[n][k];
}

VerificationRecord verify_theorem1(int n, int k) {
    using clock = std::chrono::steady_clock;
    const auto ms = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };

    VerificationRecord rec;
    rec.spec = {n, k};

    const auto t0 = clock::now();
    const FourierPoly brute = w_bruteforce(n, k);
    const auto t1 = clock::now();
    const FourierPoly rec_value = w_recurrence(n, k);
    const auto t2 = clock::now();
    const FourierPoly closed = w_closed(n, k);
    const auto t3 = clock::now();

    rec.bruteforce_ms = ms(t0, t1);
    rec.recurrence_ms = ms(t1, t2);
    rec.closed_ms = ms(t2, t3);
    rec.pass = brute == rec_value && rec_value == closed;
    rec.degree = brute.degree();
    return rec;
}

bool check_prop1_factorization(const FourierPoly& f, const std::vector<UPoly>& gs) {
    if (gs.size() > 5) {
        throw SizeExceededError("check_prop1_factorization: more than 5 cofactors");
    }
    std::vector<FourierPoly> lhs_family{f};
    std::vector<FourierPoly> rhs_family;
    for (const auto& g : gs) {
        FourierPoly g_of_cos = from_sincos_form({g, UPoly()});
        lhs_family.push_back(f * g_of_cos);
        rhs_family.push_back(g_of_cos.diff());
    }
    const FourierPoly lhs = wronskian_bruteforce(lhs_family);
    const FourierPoly rhs = fp_pow(f, unsigned(gs.size()) + 1) * wronskian_bruteforce(rhs_family);
    return lhs == rhs;
}

}  // namespace wron
