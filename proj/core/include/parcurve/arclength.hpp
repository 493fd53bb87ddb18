#pragma once

#include <memory>

#include "parcurve/curve.hpp"
#include "parcurve/quadrature.hpp"

namespace parcurve {

/// The arc-length parameter s(t) with s(a) = 0, its inverse, and the total
/// length. forward is strictly increasing; inverse(forward(t)) == t within
/// parameter tolerance. Construction scans for regularity and throws
/// Error(errc::regularity) with the offending parameter in value().
class ArcLengthMap {
 public:
  explicit ArcLengthMap(const Curve& c, const QuadratureOptions& opts = {});

  double forward(double t) const;
  /// t(s) by monotone root-finding. Throws Error(errc::domain) outside [0, total].
  double inverse(double s) const;
  double total() const;
  const Curve& curve() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// The unit-speed reparametrization s -> alpha(t(s)) with analytic frame
/// derivatives (d1 = unit tangent, d2 = kappa * left normal).
Curve unit_speed_curve(const ArcLengthMap& map);

}  // namespace parcurve
