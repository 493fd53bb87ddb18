#pragma once

#include <memory>

#include "parcurve/arclength.hpp"
#include "parcurve/curve.hpp"

namespace parcurve {

/// The continuous tangent-angle lift theta(s) of a closed curve: the unique
/// continuous function with (cos theta, sin theta) equal to the unit tangent
/// and theta(0) = atan2 of the initial tangent.
class AngleLift {
 public:
  double theta0() const;
  /// theta(s) for s in [0, total_length()].
  double theta(double s) const;
  /// theta(L) - theta(0); equals 2*pi*omega for a closed curve.
  double total_turning() const;
  double total_length() const;
  const ArcLengthMap& arc_length() const;

 private:
  friend AngleLift angle_lift(const ClosedCurve& c);
  struct Impl;
  explicit AngleLift(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Builds the lift by accumulating atan2 increments mapped into (-pi, pi],
/// doubling the sample count until every increment is below pi/2.
/// Throws Error(errc::sampling) when refinement is exhausted.
AngleLift angle_lift(const ClosedCurve& c);

/// Rotation index omega = round((theta(L) - theta(0)) / 2pi). The pre-rounding
/// value must lie within 0.1 of an integer; otherwise Error(errc::precision).
int rotation_index(const ClosedCurve& c);

}  // namespace parcurve
