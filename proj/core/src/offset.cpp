#include "parcurve/offset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "parcurve/arclength.hpp"
#include "parcurve/differential.hpp"
#include "parcurve/error.hpp"

namespace parcurve {

namespace {

constexpr int kScanGrid = 2048;          // sign-change scan for 1 - eps*kappa
constexpr double kGrazeTol = 1e-8;       // |1 - eps*kappa| threshold for grazing
constexpr double kBisectRelTol = 1e-12;  // bisection width relative to the span
constexpr double kInflectionFloor = 1e-9;

double offset_factor(const OffsetSpec& spec, double t) {
  return 1.0 - spec.epsilon() * signed_curvature(spec.base(), t);
}

}  // namespace

OffsetSpec::OffsetSpec(Curve base, double epsilon)
    : base_(std::move(base)), epsilon_(epsilon), base_closed_(false) {
  if (epsilon < 0.0)
    throw Error(errc::domain,
                "offset distance must be >= 0; reverse the base orientation "
                "(reversed()) instead of passing a negative eps",
                epsilon);
}

OffsetSpec::OffsetSpec(const ClosedCurve& base, double epsilon)
    : OffsetSpec(base.curve(), epsilon) {
  base_closed_ = true;
}

std::vector<double> SingularitySet::arc_positions() const {
  std::vector<double> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.s);
  return out;
}

std::vector<double> SingularitySet::param_positions() const {
  std::vector<double> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.t);
  return out;
}

Curve parallel_curve(const OffsetSpec& spec) {
  const Curve base = spec.base();
  const double eps = spec.epsilon();

  auto pos = [base, eps](double t) {
    return base.eval(t) + eps * left_normal(base, t);
  };
  // d beta/dt = (1 - eps*kappa) alpha' via the Frenet relation e' = -kappa|alpha'| t.
  auto d1 = [base, eps](double t) {
    return base.derivative(t, 1) * (1.0 - eps * signed_curvature(base, t));
  };
  // kappa' would need a third derivative of the base, so the second
  // derivative falls back to a symmetric difference of d1.
  const double h = std::max(1e-6, std::cbrt(std::numeric_limits<double>::epsilon()) *
                                      base.span());
  const bool periodic = base.periodic_differencing();
  const double a = base.a(), b = base.b();
  auto d2 = [d1, h, periodic, a, b](double t) {
    if (periodic) {
      const double period = b - a;
      auto wrap = [a, period](double x) {
        double r = std::fmod(x - a, period);
        if (r < 0) r += period;
        return a + r;
      };
      return (d1(wrap(t + h)) - d1(wrap(t - h))) / (2.0 * h);
    }
    const double step = std::min({h, t - a, b - t});
    if (step < 256.0 * std::numeric_limits<double>::epsilon() * (b - a))
      throw Error(errc::boundary,
                  "finite-difference step underflows at the domain boundary", t);
    return (d1(t + step) - d1(t - step)) / (2.0 * step);
  };

  return Curve::analytic(a, b, pos, d1, d2).with_periodic_differencing(periodic);
}

OffsetSpeed offset_speed(const OffsetSpec& spec, double s) {
  ArcLengthMap map(spec.base());
  const double slack = 1e-9 * std::max(map.total(), 1e-300);
  if (s < -slack || s > map.total() + slack)
    throw Error(errc::domain, "arc length outside [0, L]", s);
  const double t = map.inverse(std::clamp(s, 0.0, map.total()));
  const double signed_value = offset_factor(spec, t);
  return {std::abs(signed_value), signed_value};
}

namespace {

double bisect_root(const OffsetSpec& spec, double lo, double hi, double f_lo) {
  const double tol = kBisectRelTol * spec.base().span();
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = offset_factor(spec, mid);
    if (f_mid == 0.0) return mid;
    if ((f_lo < 0) == (f_mid < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Ternary refinement of a local minimum of |1 - eps*kappa|.
double refine_minimum(const OffsetSpec& spec, double lo, double hi) {
  for (int i = 0; i < 200 && hi - lo > kBisectRelTol * spec.base().span(); ++i) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (std::abs(offset_factor(spec, m1)) <= std::abs(offset_factor(spec, m2)))
      hi = m2;
    else
      lo = m1;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

SingularitySet find_offset_singularities(const OffsetSpec& spec) {
  if (!(spec.epsilon() > 0.0))
    throw Error(errc::domain, "singularity search requires eps > 0", spec.epsilon());

  const Curve& base = spec.base();
  const double a = base.a(), span = base.span();

  std::vector<double> g(kScanGrid + 1);
  int near_zero = 0;
  for (int i = 0; i <= kScanGrid; ++i) {
    g[i] = offset_factor(spec, a + span * i / kScanGrid);
    if (std::abs(g[i]) < kGrazeTol) ++near_zero;
  }
  if (near_zero > (kScanGrid + 1) / 2)
    throw Error(errc::degenerate_offset,
                "offset is singular on most of the curve (eps*kappa == 1 almost everywhere)");

  // Sign of the nearest non-zero grid value in the given direction, wrapping
  // on a closed base; 0 when none is found nearby.
  auto nearby_sign = [&](int i, int dir) -> int {
    for (int step = 1; step <= 8; ++step) {
      int j = i + dir * step;
      if (spec.base_closed())
        j = ((j % kScanGrid) + kScanGrid) % kScanGrid;
      else if (j < 0 || j > kScanGrid)
        return 0;
      if (g[j] != 0.0) return g[j] < 0 ? -1 : 1;
    }
    return 0;
  };

  struct Hit {
    double t;
    bool grazing;
  };
  std::vector<Hit> hits;
  for (int i = 0; i <= kScanGrid; ++i) {
    if (g[i] != 0.0) continue;
    const int left = nearby_sign(i, -1);
    const int right = nearby_sign(i, +1);
    hits.push_back({a + span * i / kScanGrid, left * right >= 0});
  }
  for (int i = 0; i < kScanGrid; ++i) {
    if (g[i] == 0.0 || g[i + 1] == 0.0) continue;
    if ((g[i] < 0) != (g[i + 1] < 0)) {
      const double lo = a + span * i / kScanGrid;
      const double hi = a + span * (i + 1) / kScanGrid;
      hits.push_back({bisect_root(spec, lo, hi, g[i]), false});
    }
  }

  // Grazing contact: |g| dips below tolerance at a grid minimum that is not
  // already bracketed by a sign change.
  for (int i = 0; i <= kScanGrid; ++i) {
    if (std::abs(g[i]) >= kGrazeTol || g[i] == 0.0) continue;
    const bool left_ok = i == 0 || std::abs(g[i]) <= std::abs(g[i - 1]);
    const bool right_ok = i == kScanGrid || std::abs(g[i]) <= std::abs(g[i + 1]);
    if (!left_ok || !right_ok) continue;
    const bool sign_change = (i > 0 && (g[i - 1] < 0) != (g[i] < 0)) ||
                             (i < kScanGrid && (g[i] < 0) != (g[i + 1] < 0));
    if (sign_change) continue;
    const double lo = a + span * std::max(i - 1, 0) / kScanGrid;
    const double hi = a + span * std::min(i + 1, kScanGrid) / kScanGrid;
    hits.push_back({refine_minimum(spec, lo, hi), true});
  }

  if (hits.empty()) return {};

  ArcLengthMap map(base);
  const double total = map.total();
  SingularitySet set;
  for (const Hit& h : hits) set.roots.push_back({map.forward(h.t), h.t, h.grazing});

  std::sort(set.roots.begin(), set.roots.end(),
            [](const OffsetSingularity& x, const OffsetSingularity& y) { return x.s < y.s; });

  // Deduplicate within tolerance; on a closed base, s == 0 and s == L are the
  // same point.
  const double dedup = 1e-6 * total;
  std::vector<OffsetSingularity> unique;
  for (const auto& r : set.roots) {
    if (!unique.empty() && r.s - unique.back().s < dedup) {
      unique.back().grazing = unique.back().grazing && r.grazing;
      continue;
    }
    unique.push_back(r);
  }
  if (spec.base_closed() && unique.size() > 1 &&
      (total - unique.back().s) + unique.front().s < dedup) {
    unique.front().grazing = unique.front().grazing && unique.back().grazing;
    unique.pop_back();
  }
  set.roots = std::move(unique);
  return set;
}

double parallel_length(const OffsetSpec& spec, const QuadratureOptions& opts) {
  const Curve& base = spec.base();
  auto integrand = [&](double t) {
    return std::abs(offset_factor(spec, t)) * speed(base, t);
  };
  std::vector<double> cuts;
  if (spec.epsilon() > 0.0) {
    try {
      cuts = find_offset_singularities(spec).param_positions();
    } catch (const Error& e) {
      // A fully singular offset has no isolated kinks to split at; the
      // integrand is ~0 everywhere and integrates cleanly.
      if (e.code() != errc::degenerate_offset) throw;
    }
  }
  return integrate_split(integrand, base.a(), base.b(), cuts, opts);
}

ClosedFormLength parallel_length_closed_form(const OffsetSpec& spec,
                                             const QuadratureOptions& opts) {
  const Curve& base = spec.base();
  const double eps = spec.epsilon();
  const double a = base.a(), span = base.span();

  double min_k = std::numeric_limits<double>::infinity();
  double max_ek = -std::numeric_limits<double>::infinity();
  double min_ek = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kScanGrid; ++i) {
    const double k = signed_curvature(base, a + span * i / kScanGrid);
    min_k = std::min(min_k, k);
    max_ek = std::max(max_ek, eps * k);
    min_ek = std::min(min_ek, eps * k);
  }

  const double tol = 1e-9;
  const bool branch1 = max_ek <= 1.0 + tol;
  const bool branch2 = min_k >= -tol && min_ek >= 1.0 - tol && eps > 0.0;
  if (!branch1 && !branch2)
    throw Error(errc::branch,
                "kappa crosses 1/eps: no closed-form branch applies globally; "
                "use parallel_length");

  const double len = length(base, opts);
  const double total_k = total_curvature(base, opts);
  if (branch1) return {len - eps * total_k, LengthBranch::shrink};
  return {eps * total_k - len, LengthBranch::swallow};
}

double offset_curvature(const OffsetSpec& spec, double t) {
  const double k = signed_curvature(spec.base(), t);
  const double denom = std::abs(1.0 - spec.epsilon() * k);
  if (denom < kGrazeTol)
    throw Error(errc::singularity, "offset is singular at this parameter", t, denom);
  return k / denom;
}

Curve evolute(const Curve& c) {
  const double a = c.a(), span = c.span();
  for (int i = 0; i <= kScanGrid; ++i) {
    const double t = a + span * i / kScanGrid;
    const double k = signed_curvature(c, t);
    if (std::abs(k) < kInflectionFloor)
      throw Error(errc::inflection, "curvature vanishes: evolute diverges", t, k);
  }
  return Curve::numeric(a, c.b(),
                        [c](double t) {
                          return c.eval(t) +
                                 left_normal(c, t) / signed_curvature(c, t);
                        })
      .with_periodic_differencing(c.periodic_differencing());
}

}  // namespace parcurve
