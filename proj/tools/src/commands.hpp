#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curve_spec.hpp"

namespace parcurve::cli {

int cmd_length(const CurveSpec& spec);

struct OffsetOptions {
  double epsilon = 0.0;
  std::string emit = "json";  // json|svg|csv
  std::string out;
  std::size_t resolution = 1024;
};
int cmd_offset(const CurveSpec& spec, const OffsetOptions& opts);

int cmd_verify(const std::string& theorem, const CurveSpec& spec,
               std::optional<double> epsilon);

struct CroftonCmdOptions {
  std::optional<double> epsilon;  // present: rotation-index pipeline
  std::uint64_t n_lines = 1000000;
  std::uint64_t seed = 0;
  std::size_t resolution = 4096;
  std::optional<double> bounding_radius;
  unsigned threads = 0;
};
int cmd_crofton(const CurveSpec& spec, const CroftonCmdOptions& opts);

struct PlotOptions {
  bool evolute = false;
  std::vector<double> offsets;
  std::string out;
  std::optional<std::array<double, 4>> viewport;
  std::size_t resolution = 1024;
};
int cmd_plot(const CurveSpec& spec, const PlotOptions& opts);

}  // namespace parcurve::cli
