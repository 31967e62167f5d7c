#pragma once

#include <string>
#include <vector>

#include "hermnn/problems.hpp"

namespace hermnn {

// Hex color for t in [0, 1] on the fixed colormap used by the heatmap.
std::string heatmap_color(double t);

// Standalone SVG heatmap.  values is row-major, row r maps to y (row 0 at
// y_min, drawn at the bottom), column c to x.  Linear color scale with a
// legend and min/max axis labels.  A constant grid renders in a single
// color.  Rejects non-finite values.
std::string render_heatmap_svg(const std::vector<double>& values, int rows,
                               int cols, const Domain& extent);

void emit_heatmap(const std::vector<double>& values, int rows, int cols,
                  const Domain& extent, const std::string& path);

}  // namespace hermnn
