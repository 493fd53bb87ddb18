#pragma once

#include <functional>
#include <memory>

#include "parcurve/error.hpp"
#include "parcurve/vec2.hpp"

namespace parcurve {

using CurveMap = std::function<Vec2(double)>;

struct BoundingBox {
  Vec2 lo;
  Vec2 hi;
  double diagonal() const { return (hi - lo).norm(); }
};

/// A regular parametric plane curve t -> R^2 on a closed interval [a, b].
///
/// Derivatives come either from user-supplied analytic maps (orders 1 and 2)
/// or from central finite differences with a step clamped inside the domain
/// (wrapped periodically once the curve is adopted by a ClosedCurve).
/// Immutable and cheap to copy; safe to share across threads.
class Curve {
 public:
  static Curve analytic(double a, double b, CurveMap position, CurveMap d1, CurveMap d2);
  static Curve numeric(double a, double b, CurveMap position);
  static Curve numeric(double a, double b, CurveMap position, double step);

  double a() const;
  double b() const;
  double span() const { return b() - a(); }

  bool has_analytic_derivatives() const;
  bool periodic_differencing() const;
  /// Copy that wraps finite-difference stencils around the endpoints.
  Curve with_periodic_differencing(bool on) const;

  /// alpha(t). Throws Error(errc::domain) outside [a, b].
  Vec2 eval(double t) const;
  /// alpha'(t) or alpha''(t). Numeric mode uses a 2-point symmetric rule for
  /// order 1 and a 3-point symmetric rule for order 2; throws
  /// Error(errc::boundary) when the clamped step underflows at an open end.
  Vec2 derivative(double t, int order) const;

  const BoundingBox& bounding_box() const;
  /// Bounding-box diagonal; the length-unit reference for scale-aware
  /// tolerances (speed floor, closure tolerance, report tolerances).
  double scale() const;
  /// Regularity threshold: 1e-9 * scale().
  double speed_floor() const;

 private:
  struct Impl;
  explicit Curve(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// A closed periodic curve: alpha(a) == alpha(b) and matching end tangents,
/// both within closure_tolerance (default 1e-8 * scale).
/// Construction throws Error(errc::domain) when the curve is not closed.
class ClosedCurve {
 public:
  explicit ClosedCurve(const Curve& c);
  ClosedCurve(const Curve& c, double closure_tolerance);

  const Curve& curve() const { return curve_; }
  operator const Curve&() const { return curve_; }
  double period() const { return curve_.span(); }
  double closure_tolerance() const { return closure_tolerance_; }

 private:
  Curve curve_;
  double closure_tolerance_;
};

// Affine and parametric transforms. They preserve analytic derivative
// availability and the periodic-differencing flag.
Curve translated(const Curve& c, Vec2 offset);
Curve rotated(const Curve& c, double angle);
/// Mirror across the x-axis (orientation-reversing isometry).
Curve reflected_x(const Curve& c);
Curve scaled(const Curve& c, double factor);
/// Orientation reversal t -> a + b - t on the same domain.
Curve reversed(const Curve& c);
/// Chain through a strictly monotone phi: [u_lo, u_hi] -> [a, b] with
/// analytic derivatives dphi, d2phi.
Curve reparametrized(const Curve& c, double u_lo, double u_hi,
                     const std::function<double(double)>& phi,
                     const std::function<double(double)>& dphi,
                     const std::function<double(double)>& d2phi);

ClosedCurve translated(const ClosedCurve& c, Vec2 offset);
ClosedCurve rotated(const ClosedCurve& c, double angle);
ClosedCurve reflected_x(const ClosedCurve& c);
ClosedCurve scaled(const ClosedCurve& c, double factor);
ClosedCurve reversed(const ClosedCurve& c);

}  // namespace parcurve
