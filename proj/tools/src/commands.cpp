#include "commands.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "json_util.hpp"
#include "svg.hpp"

namespace parcurve::cli {

namespace {

constexpr double kQuadratureTolerance = 1e-10;

Polyline sample_built(const BuiltCurve& built, std::size_t resolution) {
  if (built.curve)
    return sample_polyline(*built.curve, resolution, built.is_closed_kind());
  return *built.points;
}

nlohmann::json singularities_json(const SingularitySet& set) {
  nlohmann::json arr = nlohmann::json::array();
  for (const OffsetSingularity& root : set.roots) {
    arr.push_back({{"s", round15(root.s)},
                   {"t", round15(root.t)},
                   {"grazing", root.grazing}});
  }
  return arr;
}

}  // namespace

int cmd_length(const CurveSpec& spec) {
  const BuiltCurve built = build_curve(spec);
  double value, tolerance;
  if (built.curve) {
    value = length(*built.curve);
    tolerance = kQuadratureTolerance;
  } else {
    value = built.points->chord_length();  // raw polyline: exact chord sum
    tolerance = 0.0;
  }
  print_json({{"schema", kSchema}, {"length", round15(value)}, {"tolerance", tolerance}});
  return 0;
}

int cmd_offset(const CurveSpec& spec, const OffsetOptions& opts) {
  if (opts.epsilon < 0.0)
    throw UsageError("--eps must be >= 0; pass --orientation cw to offset the other way");
  if (opts.emit != "json" && opts.emit != "svg" && opts.emit != "csv")
    throw UsageError("--emit must be json, svg or csv");
  if (opts.emit != "json" && opts.out.empty())
    throw UsageError("--emit " + opts.emit + " needs --out");

  const BuiltCurve built = build_curve(spec);
  const Curve& base = built.require_curve("offset");
  OffsetSpec offset_spec = built.closed ? OffsetSpec(*built.closed, opts.epsilon)
                                        : OffsetSpec(base, opts.epsilon);

  const double beta_length = parallel_length(offset_spec);
  SingularitySet singularities;
  if (opts.epsilon > 0.0) singularities = find_offset_singularities(offset_spec);
  const Curve beta = parallel_curve(offset_spec);

  if (opts.emit == "json") {
    print_json({{"schema", kSchema},
                {"epsilon", round15(opts.epsilon)},
                {"length", round15(beta_length)},
                {"singularities", singularities_json(singularities)}});
    return 0;
  }

  if (opts.emit == "csv") {
    std::ofstream out(opts.out);
    if (!out) throw Error(errc::io, "cannot write CSV file: " + opts.out);
    out << "t,x,y\n";
    char buf[96];
    for (std::size_t i = 0; i <= opts.resolution; ++i) {
      const double t = base.a() + base.span() * static_cast<double>(i) /
                                      static_cast<double>(opts.resolution);
      const Vec2 p = beta.eval(t);
      std::snprintf(buf, sizeof(buf), "%.15g,%.15g,%.15g\n", t, p.x, p.y);
      out << buf;
    }
    if (!out.good()) throw Error(errc::io, "write failed: " + opts.out);
    return 0;
  }

  PlotSpec plot;
  plot.layers.push_back({sample_built(built, opts.resolution), Stroke::solid, "black"});
  plot.layers.push_back(
      {sample_polyline(beta, opts.resolution, built.is_closed_kind()), Stroke::dotted,
       "black"});
  for (const OffsetSingularity& root : singularities.roots)
    plot.markers.push_back(beta.eval(root.t));
  write_svg(plot, opts.out);
  return 0;
}

int cmd_verify(const std::string& theorem, const CurveSpec& spec,
               std::optional<double> epsilon) {
  const BuiltCurve built = build_curve(spec);
  const ClosedCurve& closed = built.require_closed("verify");

  VerificationReport report;
  if (theorem == "t1") {
    if (!epsilon) throw UsageError("verify t1 needs --eps");
    report = verify_theorem1(closed, *epsilon);
  } else if (theorem == "prop4") {
    report = verify_proposition4(closed);
  } else if (theorem == "cor5") {
    if (!epsilon) throw UsageError("verify cor5 needs --eps");
    report = verify_corollary5(closed, *epsilon);
  } else {
    throw UsageError("unknown theorem: " + theorem + " (expected t1, prop4 or cor5)");
  }

  print_json(to_json(report));
  return report.passed ? 0 : 4;
}

int cmd_crofton(const CurveSpec& spec, const CroftonCmdOptions& opts) {
  const BuiltCurve built = build_curve(spec);
  CroftonOptions mc;
  mc.bounding_radius = opts.bounding_radius;
  mc.threads = opts.threads;

  if (opts.epsilon) {
    const ClosedCurve& closed = built.require_closed("the rotation-index pipeline");
    const RotationIndexEstimate est = estimate_rotation_index(
        closed, *opts.epsilon, opts.n_lines, opts.seed, opts.resolution, mc);
    print_json(to_json(est));
    return 0;
  }

  // Point sets are measured as-is; catalog curves are sampled first.
  const Polyline poly = spec.kind == "points" ? *built.points
                                              : sample_built(built, opts.resolution);
  const CroftonEstimate est = crofton_length(poly, opts.n_lines, opts.seed, mc);
  print_json(to_json(est));
  return 0;
}

int cmd_plot(const CurveSpec& spec, const PlotOptions& opts) {
  if (opts.out.empty()) throw UsageError("plot needs --out");

  const BuiltCurve built = build_curve(spec);
  PlotSpec plot;
  plot.viewport = opts.viewport;
  plot.layers.push_back({sample_built(built, opts.resolution), Stroke::solid, "black"});

  if (opts.evolute) {
    const Curve ev = evolute(built.require_curve("plot --evolute"));
    plot.layers.push_back(
        {sample_polyline(ev, opts.resolution, built.is_closed_kind()), Stroke::dashed,
         "black"});
  }

  for (double eps : opts.offsets) {
    if (eps < 0.0) throw UsageError("--offset must be >= 0");
    const Curve& base = built.require_curve("plot --offset");
    OffsetSpec offset_spec = built.closed ? OffsetSpec(*built.closed, eps)
                                          : OffsetSpec(base, eps);
    const Curve beta = parallel_curve(offset_spec);
    plot.layers.push_back(
        {sample_polyline(beta, opts.resolution, built.is_closed_kind()), Stroke::dotted,
         "black"});
    if (eps > 0.0) {
      for (const OffsetSingularity& root : find_offset_singularities(offset_spec).roots)
        plot.markers.push_back(beta.eval(root.t));
    }
  }

  write_svg(plot, opts.out);
  return 0;
}

}  // namespace parcurve::cli
