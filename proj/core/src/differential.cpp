#include "parcurve/differential.hpp"

#include <cmath>

#include "parcurve/error.hpp"

namespace parcurve {

double speed(const Curve& c, double t) { return c.derivative(t, 1).norm(); }

Vec2 unit_tangent(const Curve& c, double t) {
  const Vec2 d1 = c.derivative(t, 1);
  const double v = d1.norm();
  if (v <= c.speed_floor())
    throw Error(errc::regularity, "speed below the regularity floor", t, v);
  return d1 / v;
}

Vec2 left_normal(const Curve& c, double t) { return unit_tangent(c, t).perp(); }

double signed_curvature(const Curve& c, double t) {
  const Vec2 d1 = c.derivative(t, 1);
  const double v = d1.norm();
  if (v <= c.speed_floor())
    throw Error(errc::regularity, "speed below the regularity floor", t, v);
  return d1.cross(c.derivative(t, 2)) / (v * v * v);
}

double length(const Curve& c, const QuadratureOptions& opts) {
  return integrate([&c](double t) { return speed(c, t); }, c.a(), c.b(), opts);
}

double total_curvature(const Curve& c, const QuadratureOptions& opts) {
  return integrate(
      [&c](double t) { return signed_curvature(c, t) * speed(c, t); }, c.a(),
      c.b(), opts);
}

double total_curvature(const ClosedCurve& c, const QuadratureOptions& opts) {
  return total_curvature(c.curve(), opts);
}

}  // namespace parcurve
