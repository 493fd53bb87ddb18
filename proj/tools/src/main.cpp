// parcurve: plane-curve offsets, curvature, evolutes, rotation indices, and
// Monte Carlo Cauchy-Crofton length estimation.
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "curve_spec.hpp"

namespace {

using namespace parcurve;
using namespace parcurve::cli;

void add_curve_flags(CLI::App* sub, CurveSpec& spec) {
  sub->add_option("--curve", spec.kind,
                  "circle | ellipse | limacon | figure_eight | half_circle | points")
      ->capture_default_str();
  sub->add_option("--R", spec.R, "radius for circle / half_circle")->capture_default_str();
  sub->add_option("--a", spec.a, "first parameter for ellipse / limacon")
      ->capture_default_str();
  sub->add_option("--b", spec.b, "second parameter for ellipse / limacon")
      ->capture_default_str();
  sub->add_option("--orientation", spec.orientation, "ccw | cw")->capture_default_str();
  sub->add_option("--file", spec.points_file, "JSON points file for --curve points");
  sub->add_flag("--no-fit", spec.no_fit,
                "keep raw point lists unfitted (rejects curvature queries)");
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::hypothesis: return 2;
    case errc::simplicity: return 3;
    case errc::io: return 5;
    default: return 4;  // numeric / geometric failure
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plane-curve offsets, rotation indices and Crofton estimates"};
  app.require_subcommand(1);

  CurveSpec length_spec;
  CLI::App* length_cmd = app.add_subcommand("length", "arc length of a curve");
  add_curve_flags(length_cmd, length_spec);

  CurveSpec offset_spec;
  OffsetOptions offset_opts;
  CLI::App* offset_cmd = app.add_subcommand("offset", "parallel curve at distance eps");
  add_curve_flags(offset_cmd, offset_spec);
  offset_cmd->add_option("--eps", offset_opts.epsilon, "offset distance (>= 0)")->required();
  offset_cmd->add_option("--emit", offset_opts.emit, "json | svg | csv")
      ->capture_default_str();
  offset_cmd->add_option("--out", offset_opts.out, "output path for svg/csv");
  offset_cmd->add_option("--resolution", offset_opts.resolution, "samples for svg/csv")
      ->capture_default_str();

  CurveSpec verify_spec;
  std::string theorem;
  double verify_eps = 0.0;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check t1 (length identity), prop4, or cor5");
  verify_cmd->add_option("theorem", theorem, "t1 | prop4 | cor5")->required();
  add_curve_flags(verify_cmd, verify_spec);
  CLI::Option* verify_eps_opt = verify_cmd->add_option("--eps", verify_eps, "offset distance");

  CurveSpec crofton_spec;
  CroftonCmdOptions crofton_opts;
  double crofton_eps = 0.0, crofton_rb = 0.0;
  CLI::App* crofton_cmd = app.add_subcommand(
      "crofton", "Monte Carlo Cauchy-Crofton length / rotation-index estimate");
  add_curve_flags(crofton_cmd, crofton_spec);
  crofton_cmd->add_option("--n", crofton_opts.n_lines, "number of random lines")
      ->capture_default_str();
  crofton_cmd->add_option("--seed", crofton_opts.seed, "RNG seed")->capture_default_str();
  CLI::Option* crofton_eps_opt = crofton_cmd->add_option(
      "--eps", crofton_eps, "offset distance: runs the rotation-index pipeline");
  crofton_cmd->add_option("--resolution", crofton_opts.resolution,
                          "polyline samples per curve")
      ->capture_default_str();
  CLI::Option* crofton_rb_opt = crofton_cmd->add_option(
      "--bounding-radius", crofton_rb, "sampling half-width override (>= circumradius)");
  crofton_cmd->add_option("--threads", crofton_opts.threads,
                          "worker threads (0 = hardware); does not affect results")
      ->capture_default_str();

  CurveSpec plot_spec;
  PlotOptions plot_opts;
  std::vector<double> viewport_values;
  CLI::App* plot_cmd = app.add_subcommand("plot", "SVG figure of curve / evolute / offsets");
  add_curve_flags(plot_cmd, plot_spec);
  plot_cmd->add_flag("--evolute", plot_opts.evolute, "add the evolute (dashed)");
  plot_cmd->add_option("--offset", plot_opts.offsets,
                       "add a parallel curve (dotted); repeatable");
  plot_cmd->add_option("--out", plot_opts.out, "output SVG path")->required();
  plot_cmd->add_option("--viewport", viewport_values,
                       "explicit bounds: xmin ymin xmax ymax")
      ->expected(4);
  plot_cmd->add_option("--resolution", plot_opts.resolution, "samples per layer")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*length_cmd) return cmd_length(length_spec);
    if (*offset_cmd) return cmd_offset(offset_spec, offset_opts);
    if (*verify_cmd) {
      std::optional<double> eps;
      if (verify_eps_opt->count() > 0) eps = verify_eps;
      return cmd_verify(theorem, verify_spec, eps);
    }
    if (*crofton_cmd) {
      if (crofton_eps_opt->count() > 0) crofton_opts.epsilon = crofton_eps;
      if (crofton_rb_opt->count() > 0) crofton_opts.bounding_radius = crofton_rb;
      return cmd_crofton(crofton_spec, crofton_opts);
    }
    if (*plot_cmd) {
      if (viewport_values.size() == 4)
        plot_opts.viewport = {viewport_values[0], viewport_values[1], viewport_values[2],
                              viewport_values[3]};
      return cmd_plot(plot_spec, plot_opts);
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", errc_name(e.code()), e.what());
    return exit_code_for(e);
  }
  return 1;
}
