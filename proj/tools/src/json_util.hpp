#pragma once

#include <json.hpp>
#include <string>

#include "parcurve/crofton.hpp"
#include "parcurve/theorems.hpp"

namespace parcurve::cli {

inline constexpr const char* kSchema = "parcurve/1";

/// Round through "%.15g" so emitted numbers carry 15 significant digits and
/// print as the shortest round trip of that value. Repeated runs then emit
/// byte-identical JSON.
double round15(double v);

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const CroftonEstimate& est);
nlohmann::json to_json(const RotationIndexEstimate& est);

/// dump() with a trailing newline.
void print_json(const nlohmann::json& doc);

}  // namespace parcurve::cli
