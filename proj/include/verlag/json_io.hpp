#pragma once

#include <string>

#include <json.hpp>

#include "verlag/presentations.hpp"
#include "verlag/transfer.hpp"
#include "verlag/typeclass.hpp"

namespace verlag {

// Presentation wire format:
//   {"kind":"max","p":..,"m":..,"k":..,"a":[..],"w":..,"z":..}
//   {"kind":"low","m":..,"n":..,"alpha":..,"beta":..,"gamma":..,"delta":..,"rho":..}
// Absent exponent fields default to zero / empty.
Validated<Presentation> parse_presentation(const nlohmann::json& j);
Validated<Presentation> parse_presentation_text(const std::string& text);

nlohmann::json to_json(const MaxClassPresentation& pres);
nlohmann::json to_json(const LowClassPresentation& pres);
nlohmann::json to_json(const Presentation& pres);

// {"kappa":[..],"nu":..,"taussky":["A"|"B",..]}
nlohmann::json to_json(const Multiplet& kappa);
nlohmann::json to_json(const OrbitRecord& rec);

}  // namespace verlag
