#pragma once

#include "parcurve/curve.hpp"
#include "parcurve/quadrature.hpp"

namespace parcurve {

/// |alpha'(t)|.
double speed(const Curve& c, double t);

/// alpha'/|alpha'|. Throws Error(errc::regularity) below the speed floor.
Vec2 unit_tangent(const Curve& c, double t);

/// Unit tangent rotated counter-clockwise by pi/2; det(alpha', e) > 0.
Vec2 left_normal(const Curve& c, double t);

/// Signed curvature det(alpha', alpha'') / |alpha'|^3.
double signed_curvature(const Curve& c, double t);

/// Arc length by adaptive quadrature of the speed.
double length(const Curve& c, const QuadratureOptions& opts = {});

/// Integral of kappa with respect to arc length, as int_a^b kappa |alpha'| dt.
/// Defined for open curves as well; for a closed curve it equals 2*pi*omega.
double total_curvature(const Curve& c, const QuadratureOptions& opts = {});
double total_curvature(const ClosedCurve& c, const QuadratureOptions& opts = {});

}  // namespace parcurve
