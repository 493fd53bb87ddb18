#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>

#include "parcurve/error.hpp"

namespace parcurve::cli {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string path_data(const Polyline& poly) {
  std::string d;
  d.reserve(poly.points.size() * 22 + 2);
  for (std::size_t i = 0; i < poly.points.size(); ++i) {
    d += i == 0 ? "M " : " L ";
    d += fmt(poly.points[i].x);
    d += ' ';
    d += fmt(-poly.points[i].y);  // SVG y grows downward
  }
  if (poly.closed) d += " Z";
  return d;
}

}  // namespace

void write_svg(const PlotSpec& spec, const std::string& path) {
  if (spec.layers.empty()) throw Error(errc::domain, "plot needs at least one layer");

  double xmin, ymin, xmax, ymax;
  if (spec.viewport) {
    xmin = (*spec.viewport)[0];
    ymin = (*spec.viewport)[1];
    xmax = (*spec.viewport)[2];
    ymax = (*spec.viewport)[3];
  } else {
    xmin = ymin = std::numeric_limits<double>::infinity();
    xmax = ymax = -xmin;
    for (const PlotLayer& layer : spec.layers) {
      const BoundingBox box = layer.poly.bounding_box();
      xmin = std::min(xmin, box.lo.x);
      ymin = std::min(ymin, box.lo.y);
      xmax = std::max(xmax, box.hi.x);
      ymax = std::max(ymax, box.hi.y);
    }
    for (const Vec2& m : spec.markers) {
      xmin = std::min(xmin, m.x);
      ymin = std::min(ymin, m.y);
      xmax = std::max(xmax, m.x);
      ymax = std::max(ymax, m.y);
    }
  }
  double w = xmax - xmin, h = ymax - ymin;
  const double pad = 0.05 * std::max({w, h, 1e-9});
  xmin -= pad;
  ymin -= pad;
  w += 2 * pad;
  h += 2 * pad;

  const double dim = std::max(w, h);
  const double stroke_width = 0.006 * dim;
  const double marker_radius = 0.012 * dim;
  const int px_w = 800;
  const int px_h = std::max(1, static_cast<int>(800.0 * h / w));

  std::ofstream out(path);
  if (!out) throw Error(errc::io, "cannot write SVG file: " + path);

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px_w << "\" height=\""
      << px_h << "\" viewBox=\"" << fmt(xmin) << " " << fmt(-(ymin + h)) << " " << fmt(w)
      << " " << fmt(h) << "\">\n";

  for (const PlotLayer& layer : spec.layers) {
    out << "  <path d=\"" << path_data(layer.poly) << "\" fill=\"none\" stroke=\""
        << layer.color << "\" stroke-width=\"" << fmt(stroke_width) << "\"";
    if (layer.stroke == Stroke::dashed)
      out << " stroke-dasharray=\"" << fmt(4 * stroke_width) << " " << fmt(2 * stroke_width)
          << "\"";
    else if (layer.stroke == Stroke::dotted)
      out << " stroke-dasharray=\"" << fmt(stroke_width) << " " << fmt(2 * stroke_width)
          << "\" stroke-linecap=\"round\"";
    out << "/>\n";

    // A layer collapsed to a point (the evolute of a circle) still gets a
    // visible mark.
    if (layer.poly.bounding_box().diagonal() < 1e-9 * dim && !layer.poly.points.empty()) {
      const Vec2 p = layer.poly.points.front();
      out << "  <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(-p.y) << "\" r=\""
          << fmt(marker_radius) << "\" fill=\"" << layer.color << "\"/>\n";
    }
  }

  for (const Vec2& m : spec.markers) {
    out << "  <circle cx=\"" << fmt(m.x) << "\" cy=\"" << fmt(-m.y) << "\" r=\""
        << fmt(marker_radius) << "\" fill=\"white\" stroke=\"black\" stroke-width=\""
        << fmt(0.5 * stroke_width) << "\"/>\n";
  }

  out << "</svg>\n";
  if (!out.good()) throw Error(errc::io, "write failed: " + path);
}

}  // namespace parcurve::cli
