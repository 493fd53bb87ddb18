#include "parcurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace parcurve {

namespace {

constexpr int kBoundingBoxSamples = 1024;

double default_step(double span) {
  const double cbrt_eps = std::cbrt(std::numeric_limits<double>::epsilon());
  return std::max(1e-6, cbrt_eps * span);
}

double positive_mod(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  return r;
}

}  // namespace

struct Curve::Impl {
  double a;
  double b;
  CurveMap position;
  CurveMap d1;  // empty for numeric curves
  CurveMap d2;
  double step = 0.0;
  bool periodic = false;
  BoundingBox bbox;
};

Curve Curve::analytic(double a, double b, CurveMap position, CurveMap d1, CurveMap d2) {
  if (!(a < b)) throw Error(errc::domain, "curve domain must satisfy a < b");
  auto impl = std::make_shared<Impl>();
  impl->a = a;
  impl->b = b;
  impl->position = std::move(position);
  impl->d1 = std::move(d1);
  impl->d2 = std::move(d2);
  impl->step = default_step(b - a);

  Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2 hi = -lo;
  for (int i = 0; i <= kBoundingBoxSamples; ++i) {
    const double t = a + (b - a) * i / kBoundingBoxSamples;
    const Vec2 pt = impl->position(t);
    lo.x = std::min(lo.x, pt.x);
    lo.y = std::min(lo.y, pt.y);
    hi.x = std::max(hi.x, pt.x);
    hi.y = std::max(hi.y, pt.y);
  }
  impl->bbox = {lo, hi};
  return Curve(std::move(impl));
}

Curve Curve::numeric(double a, double b, CurveMap position) {
  return numeric(a, b, std::move(position), default_step(b - a));
}

Curve Curve::numeric(double a, double b, CurveMap position, double step) {
  Curve c = analytic(a, b, std::move(position), {}, {});
  auto impl = std::make_shared<Impl>(*c.impl_);
  impl->d1 = {};
  impl->d2 = {};
  impl->step = step;
  return Curve(std::move(impl));
}

double Curve::a() const { return impl_->a; }
double Curve::b() const { return impl_->b; }

bool Curve::has_analytic_derivatives() const { return static_cast<bool>(impl_->d1); }
bool Curve::periodic_differencing() const { return impl_->periodic; }

Curve Curve::with_periodic_differencing(bool on) const {
  if (impl_->periodic == on) return *this;
  auto impl = std::make_shared<Impl>(*impl_);
  impl->periodic = on;
  return Curve(std::move(impl));
}

Vec2 Curve::eval(double t) const {
  const double slack = 1e-9 * span();
  if (t < impl_->a - slack || t > impl_->b + slack)
    throw Error(errc::domain, "parameter outside the curve domain", t);
  t = std::clamp(t, impl_->a, impl_->b);
  return impl_->position(t);
}

Vec2 Curve::derivative(double t, int order) const {
  if (order != 1 && order != 2)
    throw Error(errc::domain, "derivative order must be 1 or 2");
  const double slack = 1e-9 * span();
  if (t < impl_->a - slack || t > impl_->b + slack)
    throw Error(errc::domain, "parameter outside the curve domain", t);
  t = std::clamp(t, impl_->a, impl_->b);

  if (impl_->d1) return order == 1 ? impl_->d1(t) : impl_->d2(t);

  const Impl& im = *impl_;
  double h = im.step;
  if (im.periodic) {
    const double period = im.b - im.a;
    auto wrapped = [&](double x) { return im.position(im.a + positive_mod(x - im.a, period)); };
    if (order == 1) return (wrapped(t + h) - wrapped(t - h)) / (2.0 * h);
    return (wrapped(t + h) - 2.0 * im.position(t) + wrapped(t - h)) / (h * h);
  }

  h = std::min({h, t - im.a, im.b - t});
  if (h < 256.0 * std::numeric_limits<double>::epsilon() * span())
    throw Error(errc::boundary,
                "finite-difference step underflows at the domain boundary", t);
  if (order == 1) return (im.position(t + h) - im.position(t - h)) / (2.0 * h);
  return (im.position(t + h) - 2.0 * im.position(t) + im.position(t - h)) / (h * h);
}

const BoundingBox& Curve::bounding_box() const { return impl_->bbox; }
double Curve::scale() const { return impl_->bbox.diagonal(); }
double Curve::speed_floor() const { return 1e-9 * scale(); }

ClosedCurve::ClosedCurve(const Curve& c) : ClosedCurve(c, 1e-8 * c.scale()) {}

ClosedCurve::ClosedCurve(const Curve& c, double closure_tolerance)
    : curve_(c.with_periodic_differencing(true)), closure_tolerance_(closure_tolerance) {
  const Vec2 start = c.eval(c.a());
  const Vec2 end = c.eval(c.b());
  if (distance(start, end) > closure_tolerance_)
    throw Error(errc::domain, "curve is not closed: endpoints differ",
                distance(start, end));

  Vec2 ta, tb;
  if (c.has_analytic_derivatives()) {
    ta = c.derivative(c.a(), 1).normalized();
    tb = c.derivative(c.b(), 1).normalized();
  } else {
    // Second-order one-sided stencils: the two end directions stay
    // independent (no periodic wrap) but carry only O(h^2) error.
    const double h = std::min(default_step(c.span()), 0.25 * c.span());
    const double a = c.a(), b = c.b();
    ta = (c.eval(a + h) * 4.0 - c.eval(a + 2 * h) - start * 3.0).normalized();
    tb = (end * 3.0 + c.eval(b - 2 * h) - c.eval(b - h) * 4.0).normalized();
  }
  if (distance(ta, tb) > closure_tolerance_)
    throw Error(errc::domain, "curve is not periodic: end tangents differ",
                distance(ta, tb));
}

namespace {

Curve transformed(const Curve& c, const std::function<Vec2(Vec2)>& point_map,
                  const std::function<Vec2(Vec2)>& vector_map) {
  Curve out = c.has_analytic_derivatives()
                  ? Curve::analytic(
                        c.a(), c.b(),
                        [c, point_map](double t) { return point_map(c.eval(t)); },
                        [c, vector_map](double t) { return vector_map(c.derivative(t, 1)); },
                        [c, vector_map](double t) { return vector_map(c.derivative(t, 2)); })
                  : Curve::numeric(c.a(), c.b(), [c, point_map](double t) {
                      return point_map(c.eval(t));
                    });
  return out.with_periodic_differencing(c.periodic_differencing());
}

}  // namespace

Curve translated(const Curve& c, Vec2 offset) {
  return transformed(
      c, [offset](Vec2 p) { return p + offset; }, [](Vec2 v) { return v; });
}

Curve rotated(const Curve& c, double angle) {
  const double cs = std::cos(angle), sn = std::sin(angle);
  auto rot = [cs, sn](Vec2 p) { return Vec2{cs * p.x - sn * p.y, sn * p.x + cs * p.y}; };
  return transformed(c, rot, rot);
}

Curve reflected_x(const Curve& c) {
  auto mirror = [](Vec2 p) { return Vec2{p.x, -p.y}; };
  return transformed(c, mirror, mirror);
}

Curve scaled(const Curve& c, double factor) {
  auto sc = [factor](Vec2 p) { return p * factor; };
  return transformed(c, sc, sc);
}

Curve reversed(const Curve& c) {
  const double sum = c.a() + c.b();
  Curve out = c.has_analytic_derivatives()
                  ? Curve::analytic(
                        c.a(), c.b(),
                        [c, sum](double t) { return c.eval(sum - t); },
                        [c, sum](double t) { return -c.derivative(sum - t, 1); },
                        [c, sum](double t) { return c.derivative(sum - t, 2); })
                  : Curve::numeric(c.a(), c.b(),
                                   [c, sum](double t) { return c.eval(sum - t); });
  return out.with_periodic_differencing(c.periodic_differencing());
}

Curve reparametrized(const Curve& c, double u_lo, double u_hi,
                     const std::function<double(double)>& phi,
                     const std::function<double(double)>& dphi,
                     const std::function<double(double)>& d2phi) {
  Curve out =
      c.has_analytic_derivatives()
          ? Curve::analytic(
                u_lo, u_hi, [c, phi](double u) { return c.eval(phi(u)); },
                [c, phi, dphi](double u) { return c.derivative(phi(u), 1) * dphi(u); },
                [c, phi, dphi, d2phi](double u) {
                  const double dp = dphi(u);
                  return c.derivative(phi(u), 2) * (dp * dp) +
                         c.derivative(phi(u), 1) * d2phi(u);
                })
          : Curve::numeric(u_lo, u_hi, [c, phi](double u) { return c.eval(phi(u)); });
  return out.with_periodic_differencing(c.periodic_differencing());
}

ClosedCurve translated(const ClosedCurve& c, Vec2 offset) {
  return ClosedCurve(translated(c.curve(), offset));
}
ClosedCurve rotated(const ClosedCurve& c, double angle) {
  return ClosedCurve(rotated(c.curve(), angle));
}
ClosedCurve reflected_x(const ClosedCurve& c) {
  return ClosedCurve(reflected_x(c.curve()));
}
ClosedCurve scaled(const ClosedCurve& c, double factor) {
  return ClosedCurve(scaled(c.curve(), factor));
}
ClosedCurve reversed(const ClosedCurve& c) {
  return ClosedCurve(reversed(c.curve()));
}

}  // namespace parcurve
