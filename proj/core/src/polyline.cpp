#include "parcurve/polyline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parcurve/error.hpp"

namespace parcurve {

Vec2 Polyline::centroid() const {
  Vec2 sum{0.0, 0.0};
  for (const Vec2& p : points) sum += p;
  return sum / static_cast<double>(points.size());
}

double Polyline::circumradius_about_centroid() const {
  const Vec2 c = centroid();
  double r2 = 0.0;
  for (const Vec2& p : points) r2 = std::max(r2, (p - c).norm2());
  return std::sqrt(r2);
}

double Polyline::max_segment_length() const {
  double m = 0.0;
  const std::size_t n = segment_count();
  for (std::size_t i = 0; i < n; ++i)
    m = std::max(m, distance(points[i], points[(i + 1) % points.size()]));
  return m;
}

double Polyline::chord_length() const {
  double total = 0.0;
  const std::size_t n = segment_count();
  for (std::size_t i = 0; i < n; ++i)
    total += distance(points[i], points[(i + 1) % points.size()]);
  return total;
}

BoundingBox Polyline::bounding_box() const {
  Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2 hi = -lo;
  for (const Vec2& p : points) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  return {lo, hi};
}

Polyline sample_polyline(const Curve& c, std::size_t n, bool closed) {
  if (n < 2) throw Error(errc::domain, "polyline needs at least 2 samples");
  Polyline poly;
  poly.closed = closed;
  const std::size_t count = closed ? n : n + 1;
  poly.points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = c.a() + c.span() * static_cast<double>(i) / static_cast<double>(n);
    poly.points.push_back(c.eval(t));
  }
  return poly;
}

Polyline sample_polyline(const ClosedCurve& c, std::size_t n) {
  return sample_polyline(c.curve(), n, true);
}

namespace {

int orient(Vec2 a, Vec2 b, Vec2 c) {
  const double d = (b - a).cross(c - a);
  if (d > 0) return 1;
  if (d < 0) return -1;
  return 0;
}

bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace

bool has_self_intersection(const Polyline& poly) {
  const std::size_t n = poly.segment_count();
  if (n < 3) return false;
  const auto& pts = poly.points;
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (poly.closed && i == 0 && j == n - 1) continue;  // closing joint
      if (segments_cross(pts[i], pts[(i + 1) % m], pts[j], pts[(j + 1) % m]))
        return true;
    }
  }
  return false;
}

}  // namespace parcurve
