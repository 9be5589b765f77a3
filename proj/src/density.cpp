#include "wron/density.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "wron/errors.hpp"
#include "wron/fourier_poly.hpp"
#include "wron/orthopoly.hpp"
#include "wron/sincos_form.hpp"

namespace wron {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr long kTermCap = 100000;

void require_interior(double x, const char* name) {
    if (!(x > 0 && x < 1)) {
        throw std::domain_error(std::string(name) + " must lie in the open interval (0,1)");
    }
}

}  // namespace

double nu_from_mu(double mu) {
    if (!(mu >= 0)) throw std::domain_error("mu must be nonnegative");
    return 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * mu / (kPi * kPi)));
}

KilledBMModel make_model(double mu) { return {mu, nu_from_mu(mu)}; }

double eigenfunction_value(const KilledBMModel& model, unsigned k, double x) {
    require_interior(x, "x");
    const double nu = model.nu;
    const double amp = std::exp((nu - 1.0) * std::log(2.0) + std::lgamma(nu) +
                                nu * std::log(std::sin(kPi * x)));
    return amp * gegenbauer_eval(k, nu, std::cos(kPi * x));
}

DensityResult density(const KilledBMModel& model, const DensityQuery& q) {
    require_interior(q.x, "x");
    require_interior(q.y, "y");
    if (!(q.t > 0)) throw std::domain_error("t must be positive");
    if (!(q.tol > 0)) throw std::domain_error("tol must be positive");

    const double nu = model.nu;
    const double log_amp = (nu - 1.0) * std::log(2.0) + std::lgamma(nu);
    const double ux = std::cos(kPi * q.x), uy = std::cos(kPi * q.y);
    const double fx_base = std::exp(log_amp + nu * std::log(std::sin(kPi * q.x)));
    const double fy_base = std::exp(log_amp + nu * std::log(std::sin(kPi * q.y)));
    const double lg2nu = std::lgamma(2.0 * nu);

    // Gegenbauer recurrence state at u_x and u_y; cur = C_k at the loop head.
    double cx_prev = 0, cx_cur = 1, cy_prev = 0, cy_cur = 1;

    DensityResult out;
    double sum = 0;
    for (long k = 0;; ++k) {
        const double nk = nu + double(k);

        // B_k bounds |term_k| via |C_k| <= C_k(1) and sin <= 1; the
        // B_{k+1}/B_k ratio is a product of factors each decreasing in k,
        // so once it drops below 1 the tail is geometrically dominated.
        const double logB = -0.5 * kPi * kPi * q.t * nk * nk + 2.0 * log_amp +
                            std::log(2.0 * nk) + std::lgamma(2.0 * nu + double(k)) -
                            2.0 * lg2nu - std::lgamma(double(k) + 1.0);
        const double ratio = std::exp(-0.5 * kPi * kPi * q.t * (2.0 * nk + 1.0)) *
                             ((nk + 1.0) / nk) *
                             ((double(k) + 2.0 * nu) / (double(k) + 1.0));
        if (ratio < 1.0) {
            const double tail = std::exp(logB) / (1.0 - ratio);
            if (tail <= q.tol) {
                out.terms_used = k;
                out.tail_bound = tail;
                break;
            }
        }
        if (k >= kTermCap) {
            throw TolUnreachableError("density: tolerance unreachable within " +
                                      std::to_string(kTermCap) + " terms");
        }

        const double scale = std::exp(-0.5 * kPi * kPi * q.t * nk * nk +
                                      std::log(2.0 * nk) + std::lgamma(double(k) + 1.0) -
                                      std::lgamma(2.0 * nu + double(k)));
        sum += scale * (fx_base * cx_cur) * (fy_base * cy_cur);

        const double cx_next =
            (2.0 * (double(k) + nu) * ux * cx_cur - (double(k) + 2.0 * nu - 1.0) * cx_prev) /
            (double(k) + 1.0);
        const double cy_next =
            (2.0 * (double(k) + nu) * uy * cy_cur - (double(k) + 2.0 * nu - 1.0) * cy_prev) /
            (double(k) + 1.0);
        cx_prev = cx_cur;
        cx_cur = cx_next;
        cy_prev = cy_cur;
        cy_cur = cy_next;
    }

    out.raw_value = sum;
    out.value = std::max(sum, 0.0);
    return out;
}

double mu0_oracle(double t, double x, double y) {
    require_interior(x, "x");
    require_interior(y, "y");
    if (!(t > 0)) throw std::domain_error("t must be positive");

    const auto phi = [t](double z) {
        return std::exp(-z * z / (2.0 * t)) / std::sqrt(2.0 * kPi * t);
    };
    double sum = phi(y - x) - phi(y + x);
    for (int m = 1; m < 100000; ++m) {
        const double a1 = phi(y - x + 2.0 * m), a2 = phi(y - x - 2.0 * m);
        const double b1 = phi(y + x + 2.0 * m), b2 = phi(y + x - 2.0 * m);
        sum += (a1 + a2) - (b1 + b2);
        if (std::max(std::max(a1, a2), std::max(b1, b2)) < 1e-18) break;
    }
    return sum;
}

namespace {

// Adaptive Simpson on [a,b]; classic bisection with the 1/15 Richardson
// correction.
double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                    double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// Integral over (0,1) of an integrand vanishing at both endpoints.
double integrate01_adaptive(const std::function<double(double)>& f, double tol) {
    const double fa = 0.0, fb = 0.0, fm = f(0.5);
    const double whole = 1.0 / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, 0.0, 1.0, fa, fm, fb, whole, tol, 30);
}

constexpr double kSeriesTol = 1e-12;

}  // namespace

double density_mass(const KilledBMModel& model, double t, double x, double quad_tol) {
    const auto f = [&](double y) {
        return density(model, {t, x, y, kSeriesTol}).value;
    };
    return integrate01_adaptive(f, quad_tol);
}

double ck_check(const KilledBMModel& model, double s, double t, double x, double y,
                double quad_tol) {
    const auto f = [&](double z) {
        return density(model, {s, x, z, kSeriesTol}).value *
               density(model, {t, z, y, kSeriesTol}).value;
    };
    const double composed = integrate01_adaptive(f, quad_tol);
    const double direct = density(model, {s + t, x, y, kSeriesTol}).value;
    return std::abs(composed - direct);
}

bool exact_eigen_check_integer_nu(int n, int k) {
    if (n < 1 || k < 0) throw std::domain_error("need n >= 1, k >= 0");
    const Rational amp = make_rational(pow2(unsigned(n) - 1) * factorial(unsigned(n) - 1));
    const UPoly profile = gegenbauer(unsigned(k), Rational(n)).scaled(PiScalar(amp));
    const FourierPoly f = from_sincos_form(sc_from_sin_power_profile(unsigned(n), profile));

    const FourierPoly sin2 = sin_power_poly(2);
    FourierPoly r = (sin2 * f.diff().diff()).scaled(PiScalar(make_rational(1, 2)));
    r -= f.scaled(PiScalar(make_rational(long(n) * (n - 1), 2)));
    r += (sin2 * f).scaled(PiScalar(make_rational(long(n + k) * (n + k), 2)));
    if (!r.is_zero()) return false;

    const PiScalar norm = (f * f).integrate01();
    const Integer den = 2 * Integer(n + k) * factorial(unsigned(k));
    return norm == PiScalar(make_rational(factorial(unsigned(2 * n + k) - 1), den));
}

double remark1_ratio(double nu, unsigned k, double x) {
    require_interior(x, "x");
    const double exact = gegenbauer_eval(k, nu, std::cos(kPi * x));
    const double log_poch_ratio = std::lgamma(2.0 * nu + k) - std::lgamma(2.0 * nu) -
                                  std::lgamma(nu + 0.5 + k) + std::lgamma(nu + 0.5);
    const double amp = std::pow(std::sin(kPi * x), -nu) * std::pow(2.0, nu) *
                       std::exp(log_poch_ratio) / std::sqrt(kPi * double(k));
    const double asymptotic = amp * std::cos((double(k) + nu) * kPi * x - kPi * nu / 2.0);
    return exact / asymptotic;
}

}  // namespace wron
