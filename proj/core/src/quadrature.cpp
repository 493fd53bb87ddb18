#include "parcurve/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "parcurve/error.hpp"

namespace parcurve {
namespace {

// Gauss-Kronrod 7-15 pair on [-1, 1] (QUADPACK dqk15 constants).
// Odd-indexed Kronrod nodes are the embedded 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelResult {
  double kronrod;
  double err;
};

PanelResult gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (lo + hi);

  const double fc = f(mid);
  double result_g = fc * kWg[3];
  double result_k = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fsum = f(mid - dx) + f(mid + dx);
    result_k += kWgk[j] * fsum;
    if (j % 2 == 1) result_g += kWg[j / 2] * fsum;
  }
  result_k *= half;
  result_g *= half;
  return {result_k, std::abs(result_k - result_g)};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureOptions& opts) {
  if (lo == hi) return 0.0;
  const double sign = lo < hi ? 1.0 : -1.0;
  if (lo > hi) std::swap(lo, hi);

  struct Panel {
    double lo, hi, tol;
    int depth;
  };

  const PanelResult first = gk15(f, lo, hi);
  const double tol0 =
      std::max(opts.abs_tol, opts.rel_tol * std::abs(first.kronrod));

  std::vector<Panel> stack;
  stack.push_back({lo, hi, tol0, 0});

  double total = 0.0;
  double bound = 0.0;
  bool exhausted = false;
  std::size_t panels = 0;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const PanelResult r = gk15(f, p.lo, p.hi);
    ++panels;
    if (r.err <= p.tol || p.depth >= opts.max_depth || panels >= opts.max_panels) {
      total += r.kronrod;
      bound += r.err;
      if (r.err > p.tol) exhausted = true;
      continue;
    }
    const double mid = 0.5 * (p.lo + p.hi);
    stack.push_back({p.lo, mid, 0.5 * p.tol, p.depth + 1});
    stack.push_back({mid, p.hi, 0.5 * p.tol, p.depth + 1});
  }

  if (exhausted && bound > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    throw Error(errc::accuracy,
                "quadrature did not converge within the subdivision budget",
                sign * total, bound);
  }
  return sign * total;
}

double integrate_split(const std::function<double(double)>& f, double lo, double hi,
                       std::span<const double> breakpoints,
                       const QuadratureOptions& opts) {
  std::vector<double> cuts(breakpoints.begin(), breakpoints.end());
  std::sort(cuts.begin(), cuts.end());

  double total = 0.0;
  double left = lo;
  for (double c : cuts) {
    if (c <= left || c >= hi) continue;
    total += integrate(f, left, c, opts);
    left = c;
  }
  total += integrate(f, left, hi, opts);
  return total;
}

}  // namespace parcurve
