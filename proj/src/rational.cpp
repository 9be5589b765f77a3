#include "wron/rational.hpp"

#include <stdexcept>

namespace wron {

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational pochhammer(const Rational& a, unsigned k) {
    Rational r = 1;
    Rational term = a;
    for (unsigned j = 0; j < k; ++j) {
        r *= term;
        term += 1;
    }
    return r;
}

Integer pow2(unsigned e) {
    Integer r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

}  // namespace wron
