#pragma once

#include <cmath>

namespace parcurve {

/// Plane vector / point.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double k) const { return {x * k, y * k}; }
  constexpr Vec2 operator/(double k) const { return {x / k, y / k}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }

  Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }

  constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
  /// det(this, o); positive when o is counter-clockwise from this.
  constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }
  constexpr double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
  Vec2 normalized() const {
    const double n = norm();
    return {x / n, y / n};
  }
  /// Rotation by +pi/2 (counter-clockwise): (x, y) -> (-y, x).
  constexpr Vec2 perp() const { return {-y, x}; }
};

constexpr Vec2 operator*(double k, Vec2 v) { return {k * v.x, k * v.y}; }

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

}  // namespace parcurve
