#include <cmath>
#include <doctest.h>
#include <numbers>

#include "oracles.hpp"
#include "parcurve/parcurve.hpp"

using namespace parcurve;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("curve_core.angle") {

TEST_CASE("angle_lift: ccw circle is theta = pi/2 + s/2") {
  auto circle = make_circle(2.0);
  AngleLift lift = angle_lift(circle);
  CHECK(lift.theta0() == doctest::Approx(kPi / 2).epsilon(1e-12));
  for (double s : {0.0, 1.0, 4.0, 10.0})
    CHECK(lift.theta(s) == doctest::Approx(kPi / 2 + s / 2).epsilon(1e-10));
  CHECK(lift.total_turning() == doctest::Approx(2 * kPi).epsilon(1e-12));
}

TEST_CASE("angle_lift: limacon turns twice") {
  auto limacon = make_limacon(2.0, 1.0);
  AngleLift lift = angle_lift(limacon);
  CHECK(lift.total_turning() == doctest::Approx(4 * kPi).epsilon(1e-10));
  CHECK(oracle::tangent_winding(limacon.curve()) == 2);
}

TEST_CASE("rotation_index: catalog values") {
  CHECK(rotation_index(make_circle(2.0)) == 1);
  CHECK(rotation_index(reversed(make_circle(2.0))) == -1);
  CHECK(rotation_index(make_limacon(2.0, 1.0)) == 2);
  CHECK(rotation_index(reversed(make_limacon(2.0, 1.0))) == -2);
  CHECK(rotation_index(make_figure_eight()) == 0);
  CHECK(oracle::tangent_winding(make_figure_eight().curve()) == 0);
}

TEST_CASE("total_curvature: circle, half-circle, figure-eight") {
  CHECK(total_curvature(make_circle(2.0)) == doctest::Approx(2 * kPi).epsilon(1e-12));
  // open half-circle through the same integral
  CHECK(total_curvature(make_half_circle(3.0)) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(std::abs(total_curvature(make_figure_eight())) < 1e-8);
}

TEST_CASE("angle-lift consistency: tangent match and d theta/ds = kappa") {
  for (const ClosedCurve& c : {make_ellipse(2.0, 1.0), make_limacon(2.0, 1.0)}) {
    AngleLift lift = angle_lift(c);
    const ArcLengthMap& map = lift.arc_length();
    const double L = lift.total_length();
    for (int i = 1; i < 40; ++i) {
      const double s = L * i / 40.0;
      const double th = lift.theta(s);
      const Vec2 tangent = unit_tangent(c.curve(), map.inverse(s));
      CHECK(std::abs(std::cos(th) - tangent.x) < 1e-8);
      CHECK(std::abs(std::sin(th) - tangent.y) < 1e-8);

      const double h = 1e-5 * L;
      const double dtheta = (lift.theta(s + h) - lift.theta(s - h)) / (2 * h);
      const double kappa = signed_curvature(c.curve(), map.inverse(s));
      CHECK(std::abs(dtheta - kappa) < 1e-6);
    }
  }
}

}  // TEST_SUITE
