#pragma once

#include <stdexcept>
#include <string>

namespace parcurve {

/// Failure categories surfaced by the library. The CLI maps these onto
/// process exit codes; tests dispatch on them.
enum class errc {
  domain,             // argument outside the documented domain
  boundary,           // finite-difference step underflow at an open endpoint
  accuracy,           // quadrature did not converge; payload = best estimate / bound
  regularity,         // speed below the regularity floor; payload = offending t
  sampling,           // angle-lift refinement exhausted
  precision,          // winding did not land near an integer
  degenerate_offset,  // eps*kappa == 1 on most of the curve
  branch,             // neither closed-form length branch applies
  singularity,        // evaluation at an offset singularity
  inflection,         // evolute requested through kappa == 0; payload = offending t
  hypothesis,         // theorem hypothesis violated (eps out of safe range)
  simplicity,         // curve is not simple (self-intersection found)
  degeneracy,         // degenerate polyline (zero circumradius)
  io,                 // file I/O failure
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what, double value = 0.0, double aux = 0.0)
      : std::runtime_error(what), code_(code), value_(value), aux_(aux) {}

  errc code() const noexcept { return code_; }
  /// Payload; meaning depends on code (offending parameter, best estimate, ...).
  double value() const noexcept { return value_; }
  double aux() const noexcept { return aux_; }

 private:
  errc code_;
  double value_;
  double aux_;
};

}  // namespace parcurve
