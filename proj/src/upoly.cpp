#include "wron/upoly.hpp"

#include <sstream>

namespace wron {

UPoly::UPoly(std::vector<PiScalar> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

UPoly UPoly::constant(const PiScalar& c) {
    UPoly p;
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

UPoly UPoly::monomial(int deg, const PiScalar& c) {
    UPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, PiScalar());
    p.c_.back() = c;
    return p;
}

void UPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PiScalar UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return PiScalar();
    return c_[static_cast<size_t>(i)];
}

const PiScalar& UPoly::leading() const {
    return c_.back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

UPoly UPoly::operator-() const {
    UPoly r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    UPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, PiScalar());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.normalize();
    return r;
}

UPoly UPoly::scaled(const PiScalar& s) const {
    if (s.is_zero()) return UPoly();
    UPoly r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    r.normalize();
    return r;
}

UPoly UPoly::derivative() const {
    UPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        r.c_[i - 1] = c_[i].scaled(Rational(static_cast<long>(i)));
    }
    r.normalize();
    return r;
}

PiScalar UPoly::eval(const Rational& u) const {
    PiScalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc.scaled(u) + *it;
    }
    return acc;
}

PiScalar UPoly::eval_one() const {
    PiScalar acc;
    for (const auto& c : c_) acc += c;
    return acc;
}

PiScalar UPoly::eval_minus_one() const {
    PiScalar acc;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i % 2 == 0) {
            acc += c_[i];
        } else {
            acc -= c_[i];
        }
    }
    return acc;
}

UPoly UPoly::times_one_minus_u2() const {
    if (is_zero()) return UPoly();
    UPoly r;
    r.c_.assign(c_.size() + 2, PiScalar());
    for (size_t i = 0; i < c_.size(); ++i) {
        r.c_[i] += c_[i];
        r.c_[i + 2] -= c_[i];
    }
    r.normalize();
    return r;
}

std::optional<UPoly> UPoly::div_exact_one_minus_u2() const {
    if (is_zero()) return UPoly();
    if (degree() < 2) {
        return std::nullopt;
    }
    std::vector<PiScalar> work = c_;
    std::vector<PiScalar> q(work.size() - 2, PiScalar());
    for (size_t i = work.size() - 1; i >= 2; --i) {
        if (work[i].is_zero()) continue;
        // Eliminate work[i]*u^i against (1-u^2)*(-work[i])*u^(i-2).
        q[i - 2] = -work[i];
        work[i - 2] += work[i];
        work[i] = PiScalar();
    }
    if (!work[0].is_zero() || !work[1].is_zero()) return std::nullopt;
    return UPoly(std::move(q));
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const PiScalar c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (i >= 1) os << "*u";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace wron
