#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "parcurve/curve.hpp"
#include "parcurve/quadrature.hpp"

namespace parcurve {

/// A base curve paired with an offset distance eps >= 0. Negative distances
/// are rejected at construction: reverse the base orientation instead (the
/// left normal flips with it).
class OffsetSpec {
 public:
  OffsetSpec(Curve base, double epsilon);
  OffsetSpec(const ClosedCurve& base, double epsilon);

  const Curve& base() const { return base_; }
  double epsilon() const { return epsilon_; }
  bool base_closed() const { return base_closed_; }

 private:
  Curve base_;
  double epsilon_;
  bool base_closed_;
};

struct OffsetSingularity {
  double s;      // arc-length position on the base, in [0, L)
  double t;      // parameter position
  bool grazing;  // tangential contact: eps*kappa touches 1 without crossing
};

/// Positions where eps * kappa == 1 (the parallel touches the evolute),
/// sorted ascending in s and deduplicated.
struct SingularitySet {
  std::vector<OffsetSingularity> roots;

  std::vector<double> arc_positions() const;
  std::vector<double> param_positions() const;
  bool empty() const { return roots.empty(); }
};

struct OffsetSpeed {
  double magnitude;     // |1 - eps*kappa(s)|
  double signed_value;  // 1 - eps*kappa(s), for branch analysis
};

enum class LengthBranch {
  shrink = 1,   // kappa <= 1/eps everywhere: L(beta) = L(alpha) - eps*K
  swallow = 2,  // kappa >= 0 and eps >= 1/kappa everywhere: L(beta) = eps*K - L(alpha)
};

struct ClosedFormLength {
  double length;
  LengthBranch branch;
  std::string_view label() const {
    return branch == LengthBranch::shrink ? "L(alpha) - eps*K" : "eps*K - L(alpha)";
  }
};

/// beta = alpha + eps * e on the same parameter domain. beta may be
/// non-regular: isolated singular points are allowed and expected when eps
/// reaches the radius of curvature.
Curve parallel_curve(const OffsetSpec& spec);

/// |d beta / ds| = |1 - eps*kappa| at base arc length s in [0, L].
OffsetSpeed offset_speed(const OffsetSpec& spec, double s);

/// Finds all roots of eps*kappa == 1 by sign-change bracketing on a dense
/// grid plus bisection; grazing roots come from grid minima of |1 - eps*kappa|
/// below tolerance without a sign change. Requires eps > 0. Throws
/// Error(errc::degenerate_offset) when the offset is singular on most of the
/// curve (circle with eps == R).
SingularitySet find_offset_singularities(const OffsetSpec& spec);

/// L(beta) as the integral of |1 - eps*kappa(s)| ds, with the domain
/// pre-split at each singularity root (the integrand has a kink there).
double parallel_length(const OffsetSpec& spec, const QuadratureOptions& opts = {});

/// The two closed-form branches, applicable when one hypothesis holds
/// globally (checked on a dense grid). Throws Error(errc::branch) otherwise.
ClosedFormLength parallel_length_closed_form(const OffsetSpec& spec,
                                             const QuadratureOptions& opts = {});

/// kappa_beta = kappa / |1 - eps*kappa|. Throws Error(errc::singularity)
/// within tolerance of an offset singularity.
double offset_curvature(const OffsetSpec& spec, double t);

/// The locus of centers of curvature alpha + (1/kappa) e. Requires kappa != 0
/// on a dense grid; throws Error(errc::inflection) with the offending t.
Curve evolute(const Curve& c);

}  // namespace parcurve
