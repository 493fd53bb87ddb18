#pragma once

#include "parcurve/curve.hpp"

namespace parcurve {

// Analytic catalog curves used by the CLI and the test suites.
// All closed entries are counter-clockwise as constructed; reverse for the
// clockwise orientation.

/// (R cos t, R sin t), t in [0, 2pi]. kappa = 1/R.
ClosedCurve make_circle(double radius);

/// (a cos t, b sin t), t in [0, 2pi]. kappa = ab / (a^2 sin^2 + b^2 cos^2)^{3/2}.
ClosedCurve make_ellipse(double a, double b);

/// Pascal snail (b + a cos t)(cos t, sin t), t in [0, 2pi]. With a > b > 0
/// the curve has an inner loop and rotation index +-2.
ClosedCurve make_limacon(double a, double b);

/// (sin t, sin t cos t), t in [0, 2pi]. Self-crossing, rotation index 0.
ClosedCurve make_figure_eight();

/// Open half circle (R cos t, R sin t), t in [0, pi].
Curve make_half_circle(double radius);

}  // namespace parcurve
