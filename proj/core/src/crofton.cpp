#include "parcurve/crofton.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "parcurve/error.hpp"
#include "parcurve/offset.hpp"
#include "parcurve/theorems.hpp"

namespace parcurve {

namespace rng {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t mix(std::uint64_t seed, std::uint64_t counter) {
  // Hash the seed once so nearby seeds (the ^1 / ^2 sub-streams) land in
  // unrelated counter walks, then take the splitmix64 output at `counter`.
  return finalize(finalize(seed ^ kGamma) + counter * kGamma);
}

double uniform01(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(mix(seed, counter) >> 11) * 0x1.0p-53;
}

}  // namespace rng

namespace {

constexpr double kDefaultBoundingInflation = 1.05;
constexpr std::uint64_t kChunk = 1 << 14;  // lines per deterministic work unit

// Transversal crossings of the line { x . (c, s) = p } with the polyline.
// Each vertex is classified by its signed distance to the line as -1/0/+1
// (0 within tol). Segment k crosses iff sgn[k+1] != 0 && sgn[k] != sgn[k+1]:
// this encodes the half-open rule (a segment whose start lies on the line
// counts, one whose end does is excluded, collinear pieces contribute 0).
// `sgn` is caller scratch of n_vertices + 1 entries; both passes vectorize.
int count_crossings(const double* xs, const double* ys, std::int32_t* sgn,
                    std::size_t n_vertices, bool closed, double cphi, double sphi,
                    double p, double tol) {
  for (std::size_t k = 0; k < n_vertices; ++k) {
    const double d = xs[k] * cphi + ys[k] * sphi - p;
    sgn[k] = (d > tol) - (d < -tol);
  }
  sgn[n_vertices] = closed ? sgn[0] : 0;
  const std::size_t n_segments = closed ? n_vertices : n_vertices - 1;
  int count = 0;
  for (std::size_t k = 0; k < n_segments; ++k) {
    const std::int32_t s0 = sgn[k], s1 = sgn[k + 1];
    count += (s1 != 0) & (s0 != s1);
  }
  return count;
}

struct CenteredPolyline {
  std::vector<double> xs, ys;
  bool closed;
  double circumradius;
  double max_segment;
};

CenteredPolyline center(const Polyline& poly) {
  if (poly.points.size() < 2)
    throw Error(errc::domain, "polyline needs at least 2 points");
  const Vec2 c = poly.centroid();
  CenteredPolyline out;
  out.closed = poly.closed;
  out.xs.reserve(poly.points.size());
  out.ys.reserve(poly.points.size());
  double r2 = 0.0;
  for (const Vec2& pt : poly.points) {
    const Vec2 rel = pt - c;
    out.xs.push_back(rel.x);
    out.ys.push_back(rel.y);
    r2 = std::max(r2, rel.norm2());
  }
  out.circumradius = std::sqrt(r2);
  out.max_segment = poly.max_segment_length();
  return out;
}

}  // namespace

int count_intersections(const Polyline& poly, const Line& line) {
  const CenteredPolyline cp = center(poly);
  const Vec2 c = poly.centroid();
  const double cphi = std::cos(line.phi), sphi = std::sin(line.phi);
  // The public entry point works in absolute coordinates; shift p instead of
  // the vertices.
  const double p_rel = line.p - (c.x * cphi + c.y * sphi);
  const double tol = 1e-12 * std::max(cp.circumradius, 1e-300);

  std::vector<std::int32_t> sgn(cp.xs.size() + 1);
  return count_crossings(cp.xs.data(), cp.ys.data(), sgn.data(), cp.xs.size(),
                         cp.closed, cphi, sphi, p_rel, tol);
}

CroftonEstimate crofton_length(const Polyline& poly, std::uint64_t n_lines,
                               std::uint64_t seed, const CroftonOptions& opts) {
  if (n_lines == 0) throw Error(errc::domain, "n_lines must be >= 1");
  const CenteredPolyline cp = center(poly);
  if (!(cp.circumradius > 0.0))
    throw Error(errc::degeneracy, "degenerate polyline: zero circumradius");

  double bounding_radius = cp.circumradius * kDefaultBoundingInflation;
  if (opts.bounding_radius) {
    if (*opts.bounding_radius < cp.circumradius)
      throw Error(errc::domain,
                  "bounding radius must cover the polyline (>= circumradius)",
                  *opts.bounding_radius, cp.circumradius);
    bounding_radius = *opts.bounding_radius;
  }

  const double tol = 1e-12 * bounding_radius;
  const std::size_t n_vertices = cp.xs.size();
  const double* xs = cp.xs.data();
  const double* ys = cp.ys.data();
  const bool closed = cp.closed;
  const double r_b = bounding_radius;

  const std::uint64_t n_chunks = (n_lines + kChunk - 1) / kChunk;
  unsigned n_threads = opts.threads != 0 ? opts.threads
                                         : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(
      std::min<std::uint64_t>(n_threads, n_chunks));

  // Per-line counts are integers, so the reduction order cannot change the
  // result: any thread count yields bit-identical sums.
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> total_n{0};
  std::atomic<std::uint64_t> total_n2{0};

  auto worker = [&]() {
    std::vector<std::int32_t> sgn(n_vertices + 1);
    std::uint64_t sum_n = 0, sum_n2 = 0;
    for (;;) {
      const std::uint64_t chunk = next_chunk.fetch_add(1, std::memory_order_relaxed);
      if (chunk >= n_chunks) break;
      const std::uint64_t lo = chunk * kChunk;
      const std::uint64_t hi = std::min(n_lines, lo + kChunk);
      for (std::uint64_t i = lo; i < hi; ++i) {
        const double phi = std::numbers::pi * rng::uniform01(seed, 2 * i);
        const double p = r_b * (2.0 * rng::uniform01(seed, 2 * i + 1) - 1.0);
        const std::uint64_t n = count_crossings(xs, ys, sgn.data(), n_vertices, closed,
                                                std::cos(phi), std::sin(phi), p, tol);
        sum_n += n;
        sum_n2 += n * n;
      }
    }
    total_n.fetch_add(sum_n, std::memory_order_relaxed);
    total_n2.fetch_add(sum_n2, std::memory_order_relaxed);
  };

  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const double factor = std::numbers::pi * r_b;
  const double n = static_cast<double>(n_lines);
  const double sum = static_cast<double>(total_n.load());
  const double sum2 = static_cast<double>(total_n2.load());
  const double mean = factor * sum / n;

  double std_error = 0.0;
  if (n_lines >= 2) {
    const double var_counts = std::max(0.0, (sum2 - sum * sum / n) / (n - 1.0));
    std_error = factor * std::sqrt(var_counts / n);
  }

  CroftonEstimate est;
  est.mean = mean;
  est.std_error = std_error;
  est.n_lines = n_lines;
  est.seed = seed;
  est.bounding_radius = r_b;
  est.resolution_caveat = cp.max_segment > r_b / 100.0;
  return est;
}

RotationIndexEstimate estimate_rotation_index(const ClosedCurve& c, double epsilon,
                                              std::uint64_t n_lines, std::uint64_t seed,
                                              std::size_t resolution,
                                              const CroftonOptions& opts) {
  const double safe = max_safe_epsilon(c);
  if (!(epsilon > 0.0) || epsilon > 0.99 * safe)
    throw Error(errc::hypothesis,
                "eps must lie in Theorem 1's safe range (0, 0.99/max kappa+]", epsilon,
                safe);

  const Polyline alpha_poly = sample_polyline(c, resolution);
  const Curve beta = parallel_curve(OffsetSpec(c, epsilon));
  const Polyline beta_poly = sample_polyline(beta, resolution, /*closed=*/true);

  const CroftonEstimate alpha_len = crofton_length(alpha_poly, n_lines, seed ^ 1ull, opts);
  const CroftonEstimate beta_len = crofton_length(beta_poly, n_lines, seed ^ 2ull, opts);

  const double raw =
      (alpha_len.mean - beta_len.mean) / (2.0 * std::numbers::pi * epsilon);
  const long long rounded = std::llround(raw);
  return RotationIndexEstimate{
      .raw = raw,
      .rounded = rounded,
      .margin = std::abs(raw - static_cast<double>(rounded)),
      .epsilon = epsilon,
      .alpha_length = alpha_len,
      .beta_length = beta_len,
  };
}

}  // namespace parcurve
