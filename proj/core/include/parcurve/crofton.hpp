#pragma once

#include <cstdint>
#include <optional>

#include "parcurve/curve.hpp"
#include "parcurve/polyline.hpp"

namespace parcurve {

/// Unsigned-direction line in normal coordinates: { x : x . (cos phi, sin phi) = p }
/// with phi in [0, pi) and p a signed distance from the origin.
struct Line {
  double p;
  double phi;
};

/// Monte Carlo Cauchy-Crofton length estimate. Lines are sampled uniformly in
/// the kinematic measure dp dphi restricted to phi in [0, pi),
/// p in [-R_b, R_b], in coordinates relative to the polyline centroid; the
/// estimator is mean = (pi * R_b / N) * sum(n_i). Deterministic for a fixed
/// seed regardless of thread count: the per-line counts are integers and the
/// generator is counter-based.
struct CroftonEstimate {
  double mean;
  double std_error;  // sample standard error of the per-line contributions
  std::uint64_t n_lines;
  std::uint64_t seed;
  double bounding_radius;
  /// Polyline resolution error is separate from Monte Carlo error; set when
  /// the max segment length exceeds bounding_radius / 100.
  bool resolution_caveat;
};

/// Rotation-index estimate from lengths alone: raw = (L(alpha) - L(beta)) / (2*pi*eps).
struct RotationIndexEstimate {
  double raw;
  long long rounded;  // nearest integer to raw
  double margin;      // |raw - rounded|
  double epsilon;
  CroftonEstimate alpha_length;
  CroftonEstimate beta_length;
};

struct CroftonOptions {
  /// Overrides the sampling half-width; must cover the polyline
  /// (>= circumradius about the centroid). Default: 1.05 * circumradius.
  /// The 5% head-room keeps the per-line count non-degenerate for curves
  /// whose convex hull fills the sampling disk (a circle sampled at its
  /// exact circumradius is hit by every line, collapsing the variance).
  std::optional<double> bounding_radius;
  /// 0 = hardware concurrency. The estimate does not depend on this.
  unsigned threads = 0;
};

/// Number of transversal crossings between the line and the polyline's
/// segments. Each segment is half-open (start included, end excluded) so a
/// crossing through a shared vertex counts once; segments lying along the
/// line within tolerance contribute 0.
int count_intersections(const Polyline& poly, const Line& line);

/// Throws Error(errc::degeneracy) for a polyline with zero circumradius and
/// Error(errc::domain) for n_lines == 0 or an override below the circumradius.
CroftonEstimate crofton_length(const Polyline& poly, std::uint64_t n_lines,
                               std::uint64_t seed, const CroftonOptions& opts = {});

/// The estimation pipeline: sample polylines for alpha and beta = alpha + eps*e,
/// estimate both lengths by crofton_length with sub-seeds seed^1 and seed^2,
/// and divide the difference by 2*pi*eps. Requires eps in Theorem 1's safe
/// range (0 < eps <= 0.99 * max_safe_epsilon), else Error(errc::hypothesis).
RotationIndexEstimate estimate_rotation_index(const ClosedCurve& c, double epsilon,
                                              std::uint64_t n_lines, std::uint64_t seed,
                                              std::size_t resolution = 4096,
                                              const CroftonOptions& opts = {});

namespace rng {
/// Stateless counter-based generator (splitmix64 finalizer over a
/// golden-gamma counter walk): value = mix(seed, counter). Identical
/// (seed, counter) always yields identical output, independent of call order
/// or parallel chunking.
std::uint64_t mix(std::uint64_t seed, std::uint64_t counter);
/// Uniform double in [0, 1) from the top 53 bits.
double uniform01(std::uint64_t seed, std::uint64_t counter);
}  // namespace rng

}  // namespace parcurve
