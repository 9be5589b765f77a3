#include "wron/fourier_poly.hpp"

#include <cmath>
#include <sstream>

namespace wron {

namespace {

void map_add(std::map<int, PiScalar>& m, int key, const PiScalar& v) {
    if (v.is_zero()) return;
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
}

const Rational kHalf = make_rational(1, 2);

}  // namespace

FourierPoly FourierPoly::constant(const PiScalar& c) {
    FourierPoly f;
    f.add_cos(0, c);
    return f;
}

FourierPoly FourierPoly::harmonic_sin(int m, const PiScalar& c) {
    FourierPoly f;
    f.add_sin(m, c);
    return f;
}

FourierPoly FourierPoly::harmonic_cos(int m, const PiScalar& c) {
    FourierPoly f;
    f.add_cos(m, c);
    return f;
}

void FourierPoly::add_sin(int m, const PiScalar& c) {
    if (m == 0 || c.is_zero()) return;
    if (m < 0) {
        map_add(sin_, -m, -c);
    } else {
        map_add(sin_, m, c);
    }
}

void FourierPoly::add_cos(int m, const PiScalar& c) {
    map_add(cos_, m < 0 ? -m : m, c);
}

int FourierPoly::degree() const {
    int d = 0;
    if (!sin_.empty()) d = sin_.rbegin()->first;
    if (!cos_.empty() && cos_.rbegin()->first > d) d = cos_.rbegin()->first;
    return d;
}

PiScalar FourierPoly::sin_coeff(int m) const {
    auto it = sin_.find(m);
    return it == sin_.end() ? PiScalar() : it->second;
}

PiScalar FourierPoly::cos_coeff(int m) const {
    auto it = cos_.find(m);
    return it == cos_.end() ? PiScalar() : it->second;
}

FourierPoly& FourierPoly::operator+=(const FourierPoly& o) {
    for (const auto& [m, c] : o.sin_) map_add(sin_, m, c);
    for (const auto& [m, c] : o.cos_) map_add(cos_, m, c);
    return *this;
}

FourierPoly& FourierPoly::operator-=(const FourierPoly& o) {
    for (const auto& [m, c] : o.sin_) map_add(sin_, m, -c);
    for (const auto& [m, c] : o.cos_) map_add(cos_, m, -c);
    return *this;
}

FourierPoly FourierPoly::operator-() const {
    FourierPoly r;
    for (const auto& [m, c] : sin_) r.sin_.emplace(m, -c);
    for (const auto& [m, c] : cos_) r.cos_.emplace(m, -c);
    return r;
}

FourierPoly operator*(const FourierPoly& a, const FourierPoly& b) {
    FourierPoly r;
    // sin(p)sin(q) = (cos(p-q) - cos(p+q))/2
    for (const auto& [p, cp] : a.sin_) {
        for (const auto& [q, cq] : b.sin_) {
            PiScalar h = (cp * cq).scaled(kHalf);
            r.add_cos(p - q, h);
            r.add_cos(p + q, -h);
        }
    }
    // sin(p)cos(q) = (sin(p+q) + sin(p-q))/2
    for (const auto& [p, cp] : a.sin_) {
        for (const auto& [q, cq] : b.cos_) {
            PiScalar h = (cp * cq).scaled(kHalf);
            r.add_sin(p + q, h);
            r.add_sin(p - q, h);
        }
    }
    // cos(p)sin(q) = (sin(p+q) - sin(p-q))/2
    for (const auto& [p, cp] : a.cos_) {
        for (const auto& [q, cq] : b.sin_) {
            PiScalar h = (cp * cq).scaled(kHalf);
            r.add_sin(p + q, h);
            r.add_sin(q - p, h);
        }
    }
    // cos(p)cos(q) = (cos(p-q) + cos(p+q))/2
    for (const auto& [p, cp] : a.cos_) {
        for (const auto& [q, cq] : b.cos_) {
            PiScalar h = (cp * cq).scaled(kHalf);
            r.add_cos(p - q, h);
            r.add_cos(p + q, h);
        }
    }
    return r;
}

FourierPoly FourierPoly::scaled(const PiScalar& c) const {
    FourierPoly r;
    for (const auto& [m, v] : sin_) r.add_sin(m, v * c);
    for (const auto& [m, v] : cos_) r.add_cos(m, v * c);
    return r;
}

FourierPoly FourierPoly::diff() const {
    FourierPoly r;
    for (const auto& [m, c] : sin_) r.add_cos(m, c.scaled(m));
    for (const auto& [m, c] : cos_) {
        if (m > 0) r.add_sin(m, c.scaled(-m));
    }
    return r;
}

PiScalar FourierPoly::integrate01() const {
    // int_0^pi sin(m.) = (1 - (-1)^m)/m, int_0^pi cos(m.) = 0 for m >= 1,
    // constant integrates to pi; the overall 1/pi shifts pi-powers by -1.
    PiScalar acc;
    for (const auto& [m, c] : sin_) {
        if (m % 2 != 0) {
            acc += c.scaled(make_rational(2, m)).times_pi_power(-1);
        }
    }
    auto it = cos_.find(0);
    if (it != cos_.end()) acc += it->second;
    return acc;
}

double FourierPoly::eval(double theta, double pi_value) const {
    double acc = 0.0;
    for (const auto& [m, c] : sin_) acc += c.eval(pi_value) * std::sin(m * theta);
    for (const auto& [m, c] : cos_) acc += c.eval(pi_value) * std::cos(m * theta);
    return acc;
}

PiScalar FourierPoly::value_at_zero() const {
    PiScalar acc;
    for (const auto& [m, c] : cos_) acc += c;
    return acc;
}

PiScalar FourierPoly::value_at_pi() const {
    PiScalar acc;
    for (const auto& [m, c] : cos_) {
        if (m % 2 == 0) {
            acc += c;
        } else {
            acc -= c;
        }
    }
    return acc;
}

std::string FourierPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : cos_) {
        if (!first) os << " + ";
        first = false;
        if (m == 0) {
            os << "(" << c.str() << ")";
        } else {
            os << "(" << c.str() << ")*cos(" << m << "t)";
        }
    }
    for (const auto& [m, c] : sin_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*sin(" << m << "t)";
    }
    return os.str();
}

FourierPoly fp_pow(const FourierPoly& f, unsigned e) {
    FourierPoly r = FourierPoly::one();
    FourierPoly base = f;
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return r;
}

FourierPoly sin_power_poly(unsigned a) {
    return fp_pow(FourierPoly::harmonic_sin(1), a);
}

}  // namespace wron
