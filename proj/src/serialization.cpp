#include "wron/serialization.hpp"

#include <stdexcept>

namespace wron {

using nlohmann::json;

json pi_scalar_to_json(const PiScalar& s) {
    json out = json::array();
    for (const auto& [e, q] : s.terms()) {
        out.push_back(json::array({e, to_string(q)}));
    }
    return out;
}

PiScalar pi_scalar_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("PiScalar JSON: expected array");
    PiScalar out;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) {
            throw std::invalid_argument("PiScalar JSON: expected [e, \"p/q\"] pairs");
        }
        out += PiScalar::pi_power(term[0].get<int>(),
                                  rational_from_string(term[1].get<std::string>()));
    }
    return out;
}

json upoly_to_json(const UPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(pi_scalar_to_json(c));
    return out;
}

UPoly upoly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("UPoly JSON: expected array");
    std::vector<PiScalar> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(pi_scalar_from_json(c));
    return UPoly(std::move(coeffs));
}

json fourier_to_json(const FourierPoly& f) {
    json sin_obj = json::object();
    for (const auto& [m, c] : f.sin_terms()) sin_obj[std::to_string(m)] = pi_scalar_to_json(c);
    json cos_obj = json::object();
    for (const auto& [m, c] : f.cos_terms()) cos_obj[std::to_string(m)] = pi_scalar_to_json(c);
    return json{{"sin", sin_obj}, {"cos", cos_obj}};
}

FourierPoly fourier_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("FourierPoly JSON: expected object");
    FourierPoly out;
    if (j.contains("sin")) {
        for (const auto& [m, c] : j.at("sin").items()) {
            out.add_sin(std::stoi(m), pi_scalar_from_json(c));
        }
    }
    if (j.contains("cos")) {
        for (const auto& [m, c] : j.at("cos").items()) {
            out.add_cos(std::stoi(m), pi_scalar_from_json(c));
        }
    }
    return out;
}

std::string fourier_to_json_string(const FourierPoly& f) {
    return fourier_to_json(f).dump();
}

FourierPoly fourier_from_json_string(const std::string& s) {
    try {
        return fourier_from_json(json::parse(s));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("FourierPoly JSON: ") + e.what());
    }
}

}  // namespace wron
