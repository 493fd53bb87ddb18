#include "parcurve/catalog.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "parcurve/error.hpp"

namespace parcurve {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw Error(errc::domain, std::string(name) + " must be positive", v);
}
}  // namespace

ClosedCurve make_circle(double radius) {
  require_positive(radius, "R");
  return ClosedCurve(Curve::analytic(
      0.0, kTwoPi,
      [radius](double t) { return Vec2{radius * std::cos(t), radius * std::sin(t)}; },
      [radius](double t) { return Vec2{-radius * std::sin(t), radius * std::cos(t)}; },
      [radius](double t) { return Vec2{-radius * std::cos(t), -radius * std::sin(t)}; }));
}

ClosedCurve make_ellipse(double a, double b) {
  require_positive(a, "a");
  require_positive(b, "b");
  return ClosedCurve(Curve::analytic(
      0.0, kTwoPi,
      [a, b](double t) { return Vec2{a * std::cos(t), b * std::sin(t)}; },
      [a, b](double t) { return Vec2{-a * std::sin(t), b * std::cos(t)}; },
      [a, b](double t) { return Vec2{-a * std::cos(t), -b * std::sin(t)}; }));
}

ClosedCurve make_limacon(double a, double b) {
  require_positive(a, "a");
  require_positive(b, "b");
  if (a == b)
    throw Error(errc::domain, "limacon with a == b is a cardioid with a cusp (not regular)");
  // r(t) = b + a cos t in polar form; derivatives by the product rule.
  auto pos = [a, b](double t) {
    const double r = b + a * std::cos(t);
    return Vec2{r * std::cos(t), r * std::sin(t)};
  };
  auto d1 = [a, b](double t) {
    const double c = std::cos(t), s = std::sin(t);
    const double r = b + a * c, rp = -a * s;
    return Vec2{rp * c - r * s, rp * s + r * c};
  };
  auto d2 = [a, b](double t) {
    const double c = std::cos(t), s = std::sin(t);
    const double r = b + a * c, rp = -a * s, rpp = -a * c;
    return Vec2{rpp * c - 2.0 * rp * s - r * c, rpp * s + 2.0 * rp * c - r * s};
  };
  return ClosedCurve(Curve::analytic(0.0, kTwoPi, pos, d1, d2));
}

ClosedCurve make_figure_eight() {
  return ClosedCurve(Curve::analytic(
      0.0, kTwoPi,
      [](double t) { return Vec2{std::sin(t), std::sin(t) * std::cos(t)}; },
      [](double t) { return Vec2{std::cos(t), std::cos(2.0 * t)}; },
      [](double t) { return Vec2{-std::sin(t), -2.0 * std::sin(2.0 * t)}; }));
}

Curve make_half_circle(double radius) {
  require_positive(radius, "R");
  return Curve::analytic(
      0.0, std::numbers::pi,
      [radius](double t) { return Vec2{radius * std::cos(t), radius * std::sin(t)}; },
      [radius](double t) { return Vec2{-radius * std::sin(t), radius * std::cos(t)}; },
      [radius](double t) { return Vec2{-radius * std::cos(t), -radius * std::sin(t)}; });
}

}  // namespace parcurve
