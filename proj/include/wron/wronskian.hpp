#pragma once

#include <vector>

#include "wron/fourier_poly.hpp"
#include "wron/upoly.hpp"

namespace wron {

/// The family behind W_n^(k): {sin(mx)}_{1<=m<=n-1} together with
/// sin((n+k)x), so W_1^(k) = sin((k+1)x). Derivatives are in the bare
/// variable x; no pi factors enter at this layer.
struct WronskianSpec {
    int n = 1;  // family size, >= 1
    int k = 0;  // top-frequency offset, >= 0
};

enum class WronskianMethod { BruteForce, Recurrence, ClosedForm };

struct WronskianResult {
    FourierPoly value;
    WronskianMethod method;
    WronskianSpec spec;
};

struct VerificationRecord {
    WronskianSpec spec;
    bool pass = false;
    int degree = 0;  // max harmonic of the (agreeing) value
    double bruteforce_ms = 0, recurrence_ms = 0, closed_ms = 0;
};

// Exact determinant of the matrix whose column j is (f_j, f_j', ...,
// f_j^(n-1)), by minor expansion memoized over column subsets — divisionless,
// O(2^n * n) ring multiplications. Empty list gives 1. Throws
// SizeExceededError above 10 columns.
FourierPoly wronskian_bruteforce(const std::vector<FourierPoly>& fs);

// Barnes G at positive integers: G(1) = G(2) = 1, G(m) = prod_{j<=m-2} j!.
Integer barnes_g(unsigned m);

// The three routes to W_n^(k). All take n >= 1, k >= 0 and return canonical
// FourierPoly in x; agreement of the three is the central certification.
FourierPoly w_bruteforce(int n, int k);
FourierPoly w_recurrence(int n, int k);

// (-2)^(n(n-1)/2) * sin^(n(n+1)/2)(x) * G(n+1) * C_k^(n)(cos x), expanded.
FourierPoly w_closed(int n, int k);

VerificationRecord verify_theorem1(int n, int k);

// Wr{f, f*g_1(cos), ..., f*g_m(cos)} = f^(m+1) * Wr{(g_1 o cos)', ...},
// both sides brute force; gs has at most 5 entries.
bool check_prop1_factorization(const FourierPoly& f, const std::vector<UPoly>& gs);

}  // namespace wron
