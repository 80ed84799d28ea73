#pragma once

#include <array>
#include <string>
#include <vector>

#include "inscribe/solver.hpp"

namespace inscribe {

struct RenderSpec {
  double x_min = 0.0, x_max = 0.0;  // equal values: derive from the curves
  int periods = 2;                  // vertical periods covered (>= 1)
  int samples_per_period = 256;
  double stroke_width = 0.012;      // world units
  std::array<std::string, 2> curve_colors{"#1f77b4", "#d62728"};
  bool draw_inscriptions = true;
  bool draw_diagonals = true;
  bool label_vertices = true;
  int width_px = 640;

  void validate() const;
};

// Deterministic SVG: the two curves over the viewport plus one overlay per
// inscription (edges, dashed diagonals, labeled vertices).
std::string render_svg(const PeriodicCurve& g1, const PeriodicCurve& g2,
                       const std::vector<Inscription>& inscriptions, const RenderSpec& spec);

}  // namespace inscribe
