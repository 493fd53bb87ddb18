#include "parcurve/arclength.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "parcurve/differential.hpp"
#include "parcurve/error.hpp"
#include "parcurve/quadrature.hpp"

namespace parcurve {

namespace {
constexpr int kCells = 128;          // cumulative-quadrature grid
constexpr int kRegularityScan = 2048;
}  // namespace

struct ArcLengthMap::Impl {
  Curve curve;
  QuadratureOptions opts;
  std::vector<double> grid_t;   // kCells + 1 nodes
  std::vector<double> grid_s;   // cumulative length at the nodes
  double total = 0.0;
};

ArcLengthMap::ArcLengthMap(const Curve& c, const QuadratureOptions& opts) {
  for (int i = 0; i <= kRegularityScan; ++i) {
    const double t = c.a() + c.span() * i / kRegularityScan;
    const double v = speed(c, t);
    if (v <= c.speed_floor())
      throw Error(errc::regularity, "curve is not regular: speed below floor", t, v);
  }

  auto impl = std::make_shared<Impl>(Impl{c, opts, {}, {}, 0.0});
  impl->grid_t.resize(kCells + 1);
  impl->grid_s.resize(kCells + 1);
  impl->grid_s[0] = 0.0;
  for (int i = 0; i <= kCells; ++i)
    impl->grid_t[i] = c.a() + c.span() * i / kCells;
  auto integrand = [&c](double t) { return speed(c, t); };
  for (int i = 1; i <= kCells; ++i) {
    impl->grid_s[i] = impl->grid_s[i - 1] +
                      integrate(integrand, impl->grid_t[i - 1], impl->grid_t[i], opts);
  }
  impl->total = impl->grid_s[kCells];
  impl_ = std::move(impl);
}

double ArcLengthMap::forward(double t) const {
  const Impl& im = *impl_;
  const Curve& c = im.curve;
  const double slack = 1e-9 * c.span();
  if (t < c.a() - slack || t > c.b() + slack)
    throw Error(errc::domain, "parameter outside the curve domain", t);
  t = std::clamp(t, c.a(), c.b());

  const auto it = std::upper_bound(im.grid_t.begin(), im.grid_t.end(), t);
  const std::size_t k = std::min<std::size_t>(
      im.grid_t.size() - 2, it == im.grid_t.begin() ? 0 : (it - im.grid_t.begin() - 1));
  auto integrand = [&c](double x) { return speed(c, x); };
  return im.grid_s[k] + integrate(integrand, im.grid_t[k], t, im.opts);
}

double ArcLengthMap::inverse(double s) const {
  const Impl& im = *impl_;
  const Curve& c = im.curve;
  const double slack = 1e-9 * std::max(im.total, 1e-300);
  if (s < -slack || s > im.total + slack)
    throw Error(errc::domain, "arc length outside [0, total]", s);
  s = std::clamp(s, 0.0, im.total);

  // Bracket in the cumulative table, then Newton with bisection fallback.
  auto it = std::upper_bound(im.grid_s.begin(), im.grid_s.end(), s);
  std::size_t k = std::min<std::size_t>(
      im.grid_s.size() - 2, it == im.grid_s.begin() ? 0 : (it - im.grid_s.begin() - 1));
  double lo = im.grid_t[k], hi = im.grid_t[k + 1];
  const double s_lo = im.grid_s[k];

  double t = lo + (hi - lo) * std::clamp((s - s_lo) / std::max(im.grid_s[k + 1] - s_lo, 1e-300), 0.0, 1.0);
  auto integrand = [&c](double x) { return speed(c, x); };
  const double t_tol = 1e-14 * c.span();
  for (int iter = 0; iter < 100; ++iter) {
    const double f = im.grid_s[k] + integrate(integrand, im.grid_t[k], t, im.opts) - s;
    if (std::abs(f) <= 1e-13 * std::max(1.0, im.total)) return t;
    if (f > 0)
      hi = t;
    else
      lo = t;
    const double v = speed(c, t);
    double next = t - f / v;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= t_tol) return next;
    t = next;
  }
  return t;
}

double ArcLengthMap::total() const { return impl_->total; }
const Curve& ArcLengthMap::curve() const { return impl_->curve; }

Curve unit_speed_curve(const ArcLengthMap& map) {
  return Curve::analytic(
             0.0, map.total(),
             [map](double s) { return map.curve().eval(map.inverse(s)); },
             [map](double s) { return unit_tangent(map.curve(), map.inverse(s)); },
             [map](double s) {
               const double t = map.inverse(s);
               return unit_tangent(map.curve(), t).perp() *
                      signed_curvature(map.curve(), t);
             })
      .with_periodic_differencing(map.curve().periodic_differencing());
}

}  // namespace parcurve
