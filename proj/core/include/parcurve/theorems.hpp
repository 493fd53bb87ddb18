#pragma once

#include <map>
#include <string>

#include "parcurve/curve.hpp"

namespace parcurve {

/// Named quantities plus a residual checked against a tolerance.
/// passed <=> |quantities["residual"]| <= tolerance.
struct VerificationReport {
  std::string name;
  std::map<std::string, double> quantities;
  double tolerance = 0.0;
  bool passed = false;

  double residual() const { return quantities.at("residual"); }
};

/// 1 / max(kappa+) over a dense grid, or +infinity when kappa <= 0
/// everywhere. Offsets must stay strictly below this for the length identity
/// to hold with a smooth integrand.
double max_safe_epsilon(const ClosedCurve& c);

/// Checks L(alpha) - L(beta) == 2*pi*eps*omega. Requires
/// 0 <= eps <= 0.99 * max_safe_epsilon, else Error(errc::hypothesis).
VerificationReport verify_theorem1(const ClosedCurve& c, double epsilon);

/// Checks total curvature K == 2*pi*omega.
VerificationReport verify_proposition4(const ClosedCurve& c);

/// For a simple closed curve, checks |L(beta) - L(alpha)| == 2*pi*eps and
/// reports the realized sign (+ for omega == -1, - for omega == +1).
/// Throws Error(errc::simplicity) when a self-intersection is found and
/// Error(errc::hypothesis) when eps is out of the safe range.
VerificationReport verify_corollary5(const ClosedCurve& c, double epsilon);

}  // namespace parcurve
