// Independent brute-force oracles used to freeze expected values. These stay
// deliberately dumber than the library paths they check: chord sums instead
// of quadrature, ray-crossing counts instead of angle unwrapping, per-segment
// parameter solves instead of the sign-scan crossing kernel.
#pragma once

#include <cstddef>
#include <functional>

#include "parcurve/curve.hpp"
#include "parcurve/polyline.hpp"

namespace oracle {

/// Length by chord summation at n samples.
inline double chord_length(const parcurve::Curve& c, std::size_t n) {
  double total = 0.0;
  parcurve::Vec2 prev = c.eval(c.a());
  for (std::size_t i = 1; i <= n; ++i) {
    const double t = c.a() + c.span() * static_cast<double>(i) / static_cast<double>(n);
    const parcurve::Vec2 p = c.eval(t);
    total += parcurve::distance(prev, p);
    prev = p;
  }
  return total;
}

/// Arc length up to t by chord summation.
inline double chord_arc_at(const parcurve::Curve& c, double t_end, std::size_t n) {
  double total = 0.0;
  parcurve::Vec2 prev = c.eval(c.a());
  for (std::size_t i = 1; i <= n; ++i) {
    const double t = c.a() + (t_end - c.a()) * static_cast<double>(i) / static_cast<double>(n);
    const parcurve::Vec2 p = c.eval(t);
    total += parcurve::distance(prev, p);
    prev = p;
  }
  return total;
}

/// Winding number of the tangent direction around the origin, counted as
/// signed crossings of the positive x-ray. Independent of any angle
/// unwrapping: only sign tests on sampled tangents.
inline int tangent_winding(const parcurve::Curve& c, std::size_t n = 100000) {
  int w = 0;
  parcurve::Vec2 prev = c.derivative(c.a(), 1);
  for (std::size_t i = 1; i <= n; ++i) {
    const double t = c.a() + c.span() * static_cast<double>(i) / static_cast<double>(n);
    const parcurve::Vec2 d = c.derivative(t, 1);
    if (prev.y < 0.0 && d.y >= 0.0 && prev.x + d.x > 0.0) ++w;
    if (d.y < 0.0 && prev.y >= 0.0 && prev.x + d.x > 0.0) --w;
    prev = d;
  }
  return w;
}

/// Crossing count by solving each segment for its intersection parameter
/// u* = d0 / (d0 - d1) and testing u* in [0, 1).
inline int count_line_hits(const parcurve::Polyline& poly, double phi, double p) {
  const parcurve::Vec2 u{std::cos(phi), std::sin(phi)};
  const std::size_t nseg = poly.segment_count();
  int count = 0;
  for (std::size_t i = 0; i < nseg; ++i) {
    const parcurve::Vec2 a = poly.points[i];
    const parcurve::Vec2 b = poly.points[(i + 1) % poly.points.size()];
    const double d0 = a.dot(u) - p;
    const double d1 = b.dot(u) - p;
    if (d0 == d1) continue;  // parallel within rounding: no transversal crossing
    const double ustar = d0 / (d0 - d1);
    if (ustar >= 0.0 && ustar < 1.0) ++count;
  }
  return count;
}

}  // namespace oracle
