#include "parcurve/angle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "parcurve/differential.hpp"
#include "parcurve/error.hpp"

namespace parcurve {

namespace {

constexpr std::size_t kInitialSamples = 1024;
constexpr std::size_t kMaxSamples = std::size_t{1} << 22;

double wrap_to_pi(double a) {
  // Map into (-pi, pi].
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a <= -std::numbers::pi) a += two_pi;
  if (a > std::numbers::pi) a -= two_pi;
  return a;
}

struct Unwrapped {
  std::vector<double> t;      // n + 1 uniform samples over [a, b]
  std::vector<double> theta;  // continuous lift at the samples
};

// Accumulates atan2 increments mapped into (-pi, pi], doubling the sample
// count until every increment is below pi/2.
Unwrapped unwrap_tangent_angle(const Curve& c) {
  for (std::size_t n = kInitialSamples; n <= kMaxSamples; n *= 2) {
    Unwrapped out;
    out.t.resize(n + 1);
    out.theta.resize(n + 1);
    bool ok = true;
    double prev_raw = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      const double t = c.a() + c.span() * static_cast<double>(i) / static_cast<double>(n);
      const Vec2 d1 = c.derivative(t, 1);
      if (d1.norm() <= c.speed_floor())
        throw Error(errc::regularity, "speed below the regularity floor", t);
      const double raw = std::atan2(d1.y, d1.x);
      out.t[i] = t;
      if (i == 0) {
        out.theta[0] = raw;
      } else {
        const double inc = wrap_to_pi(raw - prev_raw);
        if (std::abs(inc) >= std::numbers::pi / 2.0) {
          ok = false;
          break;
        }
        out.theta[i] = out.theta[i - 1] + inc;
      }
      prev_raw = raw;
    }
    if (ok) return out;
  }
  throw Error(errc::sampling,
              "angle-lift refinement exhausted: tangent-angle jumps stay >= pi/2");
}

}  // namespace

struct AngleLift::Impl {
  ArcLengthMap map;
  std::vector<double> s;      // arc length at the samples
  std::vector<double> theta;  // lift at the samples
};

AngleLift angle_lift(const ClosedCurve& c) {
  Unwrapped u = unwrap_tangent_angle(c.curve());
  ArcLengthMap map(c.curve());
  std::vector<double> s(u.t.size());
  for (std::size_t i = 0; i < u.t.size(); ++i) s[i] = map.forward(u.t[i]);
  return AngleLift(std::make_shared<const AngleLift::Impl>(
      AngleLift::Impl{std::move(map), std::move(s), std::move(u.theta)}));
}

double AngleLift::theta0() const { return impl_->theta.front(); }
double AngleLift::total_turning() const { return impl_->theta.back() - impl_->theta.front(); }
double AngleLift::total_length() const { return impl_->map.total(); }
const ArcLengthMap& AngleLift::arc_length() const { return impl_->map; }

double AngleLift::theta(double s) const {
  const Impl& im = *impl_;
  const double slack = 1e-9 * std::max(im.map.total(), 1e-300);
  if (s < -slack || s > im.map.total() + slack)
    throw Error(errc::domain, "arc length outside [0, total]", s);
  s = std::clamp(s, 0.0, im.map.total());

  // Piecewise-linear reference between samples selects the branch; the exact
  // tangent angle at s is then snapped onto the continuous lift.
  auto it = std::upper_bound(im.s.begin(), im.s.end(), s);
  const std::size_t k = std::min<std::size_t>(
      im.s.size() - 2, it == im.s.begin() ? 0 : (it - im.s.begin() - 1));
  const double span = std::max(im.s[k + 1] - im.s[k], 1e-300);
  const double w = std::clamp((s - im.s[k]) / span, 0.0, 1.0);
  const double ref = im.theta[k] * (1.0 - w) + im.theta[k + 1] * w;

  const double t = im.map.inverse(s);
  const Vec2 tangent = unit_tangent(im.map.curve(), t);
  const double raw = std::atan2(tangent.y, tangent.x);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return raw + two_pi * std::round((ref - raw) / two_pi);
}

int rotation_index(const ClosedCurve& c) {
  const Unwrapped u = unwrap_tangent_angle(c.curve());
  const double winding = (u.theta.back() - u.theta.front()) / (2.0 * std::numbers::pi);
  const double nearest = std::round(winding);
  if (std::abs(winding - nearest) >= 0.1)
    throw Error(errc::precision, "winding is not integral within margin 0.1", winding);
  return static_cast<int>(nearest);
}

}  // namespace parcurve
