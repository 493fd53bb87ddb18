#pragma once

#include <cstddef>
#include <vector>

#include "parcurve/curve.hpp"
#include "parcurve/vec2.hpp"

namespace parcurve {

/// Ordered point samples of a curve. For a closed polyline the closing
/// segment (last point back to the first) is implicit; the first point is
/// not repeated.
struct Polyline {
  std::vector<Vec2> points;
  bool closed = false;

  std::size_t segment_count() const {
    if (points.size() < 2) return 0;
    return closed ? points.size() : points.size() - 1;
  }
  /// Vertex mean.
  Vec2 centroid() const;
  /// Max vertex distance from the centroid.
  double circumradius_about_centroid() const;
  double max_segment_length() const;
  double chord_length() const;
  BoundingBox bounding_box() const;
};

/// n samples at uniform parameter steps. Closed polylines omit the duplicate
/// endpoint; open polylines get n+1 points including both ends.
Polyline sample_polyline(const Curve& c, std::size_t n, bool closed);
Polyline sample_polyline(const ClosedCurve& c, std::size_t n);

/// O(n^2) proper-crossing sweep over non-adjacent segment pairs (the closing
/// joint counts as adjacent).
bool has_self_intersection(const Polyline& poly);

}  // namespace parcurve
