#include "json_util.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>

namespace parcurve::cli {

double round15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return std::strtod(buf, nullptr);
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json quantities = nlohmann::json::object();
  for (const auto& [key, value] : report.quantities) quantities[key] = round15(value);
  return {
      {"schema", kSchema},
      {"name", report.name},
      {"quantities", quantities},
      {"tolerance", round15(report.tolerance)},
      {"passed", report.passed},
  };
}

nlohmann::json to_json(const CroftonEstimate& est) {
  return {
      {"schema", kSchema},
      {"kind", "crofton_length"},
      {"mean", round15(est.mean)},
      {"std_error", round15(est.std_error)},
      {"n_lines", est.n_lines},
      {"seed", est.seed},
      {"bounding_radius", round15(est.bounding_radius)},
      {"resolution_caveat", est.resolution_caveat},
  };
}

nlohmann::json to_json(const RotationIndexEstimate& est) {
  nlohmann::json alpha = to_json(est.alpha_length);
  nlohmann::json beta = to_json(est.beta_length);
  alpha.erase("schema");
  beta.erase("schema");
  return {
      {"schema", kSchema},
      {"kind", "rotation_index"},
      {"raw", round15(est.raw)},
      {"rounded", est.rounded},
      {"margin", round15(est.margin)},
      {"epsilon", round15(est.epsilon)},
      {"alpha", alpha},
      {"beta", beta},
  };
}

void print_json(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

}  // namespace parcurve::cli
