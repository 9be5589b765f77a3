#pragma once

#include <json.hpp>

#include "wron/fourier_poly.hpp"
#include "wron/upoly.hpp"

namespace wron {

// Canonical JSON forms, chosen so that serialization is byte-stable for a
// given value (keys sorted, rationals in lowest terms) and round-trips are
// bit-exact.
//
//   PiScalar    -> [[e, "p/q"], ...]            (ascending pi-power e)
//   UPoly       -> [coeff0, coeff1, ...]        (each a PiScalar array)
//   FourierPoly -> {"sin": {"m": PiScalar, ...}, "cos": {...}}

nlohmann::json pi_scalar_to_json(const PiScalar& s);
PiScalar pi_scalar_from_json(const nlohmann::json& j);

nlohmann::json upoly_to_json(const UPoly& p);
UPoly upoly_from_json(const nlohmann::json& j);

nlohmann::json fourier_to_json(const FourierPoly& f);
FourierPoly fourier_from_json(const nlohmann::json& j);

std::string fourier_to_json_string(const FourierPoly& f);
FourierPoly fourier_from_json_string(const std::string& s);

}  // namespace wron
