#pragma once

#include <functional>
#include <span>

namespace parcurve {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 60;
  /// Work cap: panels beyond this are accepted as-is (their error still
  /// counts toward the bound), so noise-like integrands fail fast instead of
  /// filling a 2^max_depth tree.
  std::size_t max_panels = 200000;
};

/// Adaptive bisection with a Gauss-Kronrod 7-15 pair per panel.
/// Throws Error(errc::accuracy) carrying the best estimate (value) and the
/// accumulated error bound (aux) when the subdivision budget is exhausted.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureOptions& opts = {});

/// Same integral with the domain pre-split at interior breakpoints, for
/// integrands that are only piecewise smooth. Breakpoints outside (lo, hi)
/// are ignored; they need not be sorted.
double integrate_split(const std::function<double(double)>& f, double lo, double hi,
                       std::span<const double> breakpoints,
                       const QuadratureOptions& opts = {});

}  // namespace parcurve
