#include "wron/pi_scalar.hpp"

#include <cmath>
#include <sstream>

#include "wron/errors.hpp"

namespace wron {

PiScalar::PiScalar(const Rational& r) {
    add_term(0, r);
}

PiScalar::PiScalar(long n) {
    add_term(0, Rational(n));
}

PiScalar::PiScalar(const Integer& n) {
    add_term(0, Rational(n));
}

PiScalar PiScalar::pi_power(int e, const Rational& coeff) {
    PiScalar s;
    s.add_term(e, coeff);
    return s;
}

void PiScalar::add_term(int e, const Rational& q) {
    if (q == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, q);
        return;
    }
    it->second += q;
    if (it->second == 0) terms_.erase(it);
}

bool PiScalar::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational PiScalar::rational_part() const {
    return coeff(0);
}

Rational PiScalar::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

PiScalar& PiScalar::operator+=(const PiScalar& o) {
    for (const auto& [e, q] : o.terms_) add_term(e, q);
    return *this;
}

PiScalar& PiScalar::operator-=(const PiScalar& o) {
    for (const auto& [e, q] : o.terms_) {
        Rational neg = -q;
        add_term(e, neg);
    }
    return *this;
}

PiScalar operator*(const PiScalar& a, const PiScalar& b) {
    PiScalar r;
    for (const auto& [ea, qa] : a.terms_) {
        for (const auto& [eb, qb] : b.terms_) {
            Rational prod = qa * qb;
            r.add_term(ea + eb, prod);
        }
    }
    return r;
}

PiScalar& PiScalar::operator*=(const PiScalar& o) {
    *this = *this * o;
    return *this;
}

PiScalar PiScalar::operator-() const {
    PiScalar r;
    for (const auto& [e, q] : terms_) r.terms_.emplace(e, -q);
    return r;
}

PiScalar PiScalar::times_pi_power(int e) const {
    PiScalar r;
    for (const auto& [e0, q] : terms_) r.terms_.emplace(e0 + e, q);
    return r;
}

PiScalar PiScalar::scaled(const Rational& r) const {
    PiScalar out;
    if (r == 0) return out;
    for (const auto& [e, q] : terms_) out.terms_.emplace(e, q * r);
    return out;
}

PiScalar PiScalar::divided_by(const Rational& r) const {
    PiScalar out;
    for (const auto& [e, q] : terms_) out.terms_.emplace(e, q / r);
    return out;
}

PiScalar PiScalar::divided_by_monomial(const PiScalar& d) const {
    if (d.terms_.size() != 1) {
        throw NotProportionalError("divisor is not a single pi-power term");
    }
    const auto& [ed, qd] = *d.terms_.begin();
    return divided_by(qd).times_pi_power(-ed);
}

double PiScalar::eval(double pi_value) const {
    double acc = 0.0;
    for (const auto& [e, q] : terms_) {
        acc += q.get_d() * std::pow(pi_value, e);
    }
    return acc;
}

std::string PiScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational q = it->second;
        if (!first) {
            os << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        first = false;
        int e = it->first;
        if (e == 0) {
            os << q.get_str();
        } else {
            if (q != 1) os << q.get_str() << "*";
            os << "pi";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace wron
