#include "hermnn/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hermnn/errors.hpp"
#include "hermnn/io.hpp"

namespace hermnn {

namespace {

struct Rgb {
  double r, g, b;
};

// Dark violet to yellow, perceptually ordered.
constexpr Rgb kStops[] = {{68, 1, 84},
                          {59, 82, 139},
                          {33, 145, 140},
                          {94, 201, 98},
                          {253, 231, 37}};
constexpr int kStopCount = sizeof(kStops) / sizeof(kStops[0]);

std::string format_num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string heatmap_color(double t) {
  if (!std::isfinite(t)) throw NumericalError("heatmap_color: non-finite t");
  t = std::clamp(t, 0.0, 1.0);
  const double pos = t * (kStopCount - 1);
  const int lo = std::min(static_cast<int>(pos), kStopCount - 2);
  const double frac = pos - lo;
  auto mix = [&](double a, double b) {
    return static_cast<int>(std::lround(a + frac * (b - a)));
  };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                mix(kStops[lo].r, kStops[lo + 1].r),
                mix(kStops[lo].g, kStops[lo + 1].g),
                mix(kStops[lo].b, kStops[lo + 1].b));
  return buf;
}

std::string render_heatmap_svg(const std::vector<double>& values, int rows,
                               int cols, const Domain& extent) {
  if (rows < 1 || cols < 1 ||
      values.size() != static_cast<size_t>(rows) * cols) {
    throw ConfigError("render_heatmap_svg: value count does not match grid");
  }
  double vmin = values[0], vmax = values[0];
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw NumericalError("render_heatmap_svg: non-finite value");
    }
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  const bool flat = (vmax == vmin);

  const int plot = 480;
  const int margin_left = 60, margin_top = 20, margin_bottom = 40;
  const int legend_w = 22, legend_gap = 18, legend_text = 70;
  const double cell_w = double(plot) / cols;
  const double cell_h = double(plot) / rows;
  const int width = margin_left + plot + legend_gap + legend_w + legend_text;
  const int height = margin_top + plot + margin_bottom;

  std::string svg;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" "
                "height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                width, height, width, height);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<rect width=\"%d\" height=\"%d\" fill=\"#ffffff\"/>\n", width,
                height);
  svg += buf;

  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double v = values[size_t(r) * cols + c];
      const double t = flat ? 0.5 : (v - vmin) / (vmax - vmin);
      const double x = margin_left + c * cell_w;
      // row 0 (y_min) at the bottom of the plot
      const double y = margin_top + (rows - 1 - r) * cell_h;
      std::snprintf(buf, sizeof buf,
                    "<rect class=\"cell\" x=\"%.2f\" y=\"%.2f\" "
                    "width=\"%.2f\" height=\"%.2f\" fill=\"%s\"/>\n",
                    x, y, cell_w + 0.01, cell_h + 0.01,
                    heatmap_color(t).c_str());
      svg += buf;
    }
  }

  const int legend_x = margin_left + plot + legend_gap;
  const int steps = 48;
  const double step_h = double(plot) / steps;
  for (int s = 0; s < steps; ++s) {
    const double t = flat ? 0.5 : double(s) / (steps - 1);
    const double y = margin_top + plot - (s + 1) * step_h;
    std::snprintf(buf, sizeof buf,
                  "<rect class=\"legend\" x=\"%d\" y=\"%.2f\" width=\"%d\" "
                  "height=\"%.2f\" fill=\"%s\"/>\n",
                  legend_x, y, legend_w, step_h + 0.01,
                  heatmap_color(t).c_str());
    svg += buf;
  }

  auto text = [&](double x, double y, const std::string& s,
                  const char* anchor) {
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                  "font-size=\"12\" text-anchor=\"%s\">%s</text>\n",
                  x, y, anchor, s.c_str());
    svg += buf;
  };
  text(legend_x + legend_w + 6, margin_top + plot, format_num(vmin), "start");
  text(legend_x + legend_w + 6, margin_top + 10, format_num(vmax), "start");
  text(margin_left, margin_top + plot + 16, format_num(extent.x_min), "middle");
  text(margin_left + plot, margin_top + plot + 16, format_num(extent.x_max),
       "middle");
  text(margin_left + plot / 2.0, margin_top + plot + 32, "x", "middle");
  text(margin_left - 8, margin_top + plot, format_num(extent.y_min), "end");
  text(margin_left - 8, margin_top + 12, format_num(extent.y_max), "end");
  text(margin_left - 40, margin_top + plot / 2.0, "y", "middle");
  svg += "</svg>\n";
  return svg;
}

void emit_heatmap(const std::vector<double>& values, int rows, int cols,
                  const Domain& extent, const std::string& path) {
  write_file_atomic(path, render_heatmap_svg(values, rows, cols, extent));
}

}  // namespace hermnn
