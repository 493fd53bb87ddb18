#include "parcurve/theorems.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "parcurve/angle.hpp"
#include "parcurve/differential.hpp"
#include "parcurve/error.hpp"
#include "parcurve/offset.hpp"
#include "parcurve/polyline.hpp"

namespace parcurve {

namespace {

constexpr int kCurvatureGrid = 2048;
constexpr double kSafetyFactor = 0.99;       // "small enough" excludes equality
constexpr std::size_t kSimplicityPoints = 4096;

double report_tolerance(const Curve& c) { return 1e-7 * c.scale(); }

void require_safe_epsilon(const ClosedCurve& c, double epsilon) {
  const double safe = max_safe_epsilon(c);
  if (!(epsilon >= 0.0) || epsilon > kSafetyFactor * safe)
    throw Error(errc::hypothesis,
                "eps exceeds the safe offset range (radius of curvature)", epsilon,
                safe);
}

}  // namespace

double max_safe_epsilon(const ClosedCurve& c) {
  const Curve& curve = c.curve();
  double max_positive = 0.0;
  for (int i = 0; i <= kCurvatureGrid; ++i) {
    const double t = curve.a() + curve.span() * i / kCurvatureGrid;
    max_positive = std::max(max_positive, signed_curvature(curve, t));
  }
  if (max_positive <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / max_positive;
}

VerificationReport verify_theorem1(const ClosedCurve& c, double epsilon) {
  require_safe_epsilon(c, epsilon);

  const double l_alpha = length(c.curve());
  const double l_beta = parallel_length(OffsetSpec(c, epsilon));
  const int omega = rotation_index(c);
  const double expected = 2.0 * std::numbers::pi * epsilon * omega;
  const double residual = (l_alpha - l_beta) - expected;

  VerificationReport report;
  report.name = "theorem1";
  report.quantities = {
      {"L_alpha", l_alpha},         {"L_beta", l_beta},
      {"epsilon", epsilon},         {"omega", static_cast<double>(omega)},
      {"two_pi_eps_omega", expected}, {"residual", residual},
  };
  report.tolerance = report_tolerance(c.curve());
  report.passed = std::abs(residual) <= report.tolerance;
  return report;
}

VerificationReport verify_proposition4(const ClosedCurve& c) {
  const double total_k = total_curvature(c);
  const int omega = rotation_index(c);
  const double expected = 2.0 * std::numbers::pi * omega;
  const double residual = total_k - expected;

  VerificationReport report;
  report.name = "proposition4";
  report.quantities = {
      {"K", total_k},
      {"omega", static_cast<double>(omega)},
      {"two_pi_omega", expected},
      {"residual", residual},
  };
  report.tolerance = report_tolerance(c.curve());
  report.passed = std::abs(residual) <= report.tolerance;
  return report;
}

VerificationReport verify_corollary5(const ClosedCurve& c, double epsilon) {
  require_safe_epsilon(c, epsilon);

  // Midpoint-phase sampling keeps self-crossings that fall exactly on a
  // sample vertex (figure-eight at t = 0) strictly inside segments.
  Polyline poly;
  poly.closed = true;
  poly.points.reserve(kSimplicityPoints);
  const Curve& curve = c.curve();
  for (std::size_t i = 0; i < kSimplicityPoints; ++i) {
    const double t =
        curve.a() + curve.span() * (static_cast<double>(i) + 0.5) / kSimplicityPoints;
    poly.points.push_back(curve.eval(t));
  }
  if (has_self_intersection(poly))
    throw Error(errc::simplicity, "curve is not simple: self-intersection found");

  const double l_alpha = length(curve);
  const double l_beta = parallel_length(OffsetSpec(c, epsilon));
  const double diff = l_beta - l_alpha;
  const double expected = 2.0 * std::numbers::pi * epsilon;
  const double residual = std::abs(diff) - expected;
  const double sign = diff > 0 ? 1.0 : (diff < 0 ? -1.0 : 0.0);

  VerificationReport report;
  report.name = "corollary5";
  report.quantities = {
      {"L_alpha", l_alpha},    {"L_beta", l_beta}, {"epsilon", epsilon},
      {"difference", diff},    {"two_pi_eps", expected},
      {"sign", sign},          {"residual", residual},
  };
  report.tolerance = report_tolerance(curve);
  report.passed = std::abs(residual) <= report.tolerance;
  return report;
}

}  // namespace parcurve
