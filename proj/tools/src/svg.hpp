#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "parcurve/polyline.hpp"

namespace parcurve::cli {

enum class Stroke { solid, dashed, dotted };

struct PlotLayer {
  Polyline poly;
  Stroke stroke = Stroke::solid;
  std::string color = "black";
};

struct PlotSpec {
  std::vector<PlotLayer> layers;
  std::vector<Vec2> markers;  // singular points, drawn as small circles
  /// {xmin, ymin, xmax, ymax}; auto bounds when absent. 5% padding either way.
  std::optional<std::array<double, 4>> viewport;
};

/// Standalone SVG with one path element per layer, y axis up.
/// Throws Error(errc::io) when the file cannot be written.
void write_svg(const PlotSpec& spec, const std::string& path);

}  // namespace parcurve::cli
