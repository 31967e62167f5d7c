#include "hermnn/heatmap.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "hermnn/errors.hpp"
#include "hermnn/problems.hpp"

namespace {

using hermnn::Domain;
using hermnn::emit_heatmap;
using hermnn::heatmap_color;
using hermnn::render_heatmap_svg;

// Cell fills in emission order (row 0 first, columns left to right).
std::vector<std::string> cell_fills(const std::string& svg) {
  std::vector<std::string> fills;
  size_t pos = 0;
  while ((pos = svg.find("class=\"cell\"", pos)) != std::string::npos) {
    const size_t f = svg.find("fill=\"", pos);
    const size_t end = svg.find('"', f + 6);
    fills.push_back(svg.substr(f + 6, end - f - 6));
    pos = end;
  }
  return fills;
}

size_t count_of(const std::string& hay, const std::string& needle) {
  size_t n = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

TEST(HeatmapColor, EndpointsAndMidstop) {
  EXPECT_EQ(heatmap_color(0.0), "#440154");
  EXPECT_EQ(heatmap_color(1.0), "#fde725");
  EXPECT_EQ(heatmap_color(0.5), "#21918c");
}

TEST(HeatmapColor, ClampsAndVaries) {
  EXPECT_EQ(heatmap_color(-0.5), heatmap_color(0.0));
  EXPECT_EQ(heatmap_color(1.5), heatmap_color(1.0));
  EXPECT_NE(heatmap_color(0.0), heatmap_color(0.3));
  EXPECT_NE(heatmap_color(0.3), heatmap_color(0.7));
  EXPECT_THROW(heatmap_color(std::numeric_limits<double>::quiet_NaN()),
               hermnn::NumericalError);
}

TEST(RenderHeatmap, ConstantGridUsesOneColor) {
  const std::vector<double> values(12, 3.25);
  const std::string svg =
      render_heatmap_svg(values, 3, 4, {0.0, 1.0, 0.0, 1.0});
  const auto fills = cell_fills(svg);
  ASSERT_EQ(fills.size(), 12u);
  for (const auto& f : fills) EXPECT_EQ(f, heatmap_color(0.5));
}

TEST(RenderHeatmap, RowZeroDrawsAtBottom) {
  // values: row 0 = {0, 1}, row 1 = {2, 3}
  const std::string svg =
      render_heatmap_svg({0.0, 1.0, 2.0, 3.0}, 2, 2, {0.0, 1.0, 0.0, 1.0});
  const auto fills = cell_fills(svg);
  ASSERT_EQ(fills.size(), 4u);
  EXPECT_EQ(fills[0], heatmap_color(0.0));
  EXPECT_EQ(fills[3], heatmap_color(1.0));
  // first emitted cell (row 0, col 0) sits in the lower half of the plot
  const size_t cell = svg.find("class=\"cell\"");
  ASSERT_NE(cell, std::string::npos);
  const size_t ypos = svg.find("y=\"", cell);
  const double y = std::stod(svg.substr(ypos + 3));
  EXPECT_GT(y, 240.0);
}

TEST(RenderHeatmap, BoxModePeaksAtCenterCells) {
  const hermnn::Problem box = hermnn::box_problem();
  const int n = 50;
  std::vector<double> values(size_t(n) * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double x = (c + 0.5) / n;
      const double y = (r + 0.5) / n;
      values[size_t(r) * n + c] = box.analytic_psi(x, y);
    }
  }
  const std::string svg = render_heatmap_svg(values, n, n, box.domain);
  const auto fills = cell_fills(svg);
  ASSERT_EQ(fills.size(), size_t(n) * n);
  const std::string peak = fills[24 * n + 24];
  std::set<size_t> peak_cells;
  for (size_t i = 0; i < fills.size(); ++i) {
    if (fills[i] == peak) peak_cells.insert(i);
  }
  const std::set<size_t> expected = {24u * n + 24, 24u * n + 25, 25u * n + 24,
                                     25u * n + 25};
  EXPECT_EQ(peak_cells, expected);
}

TEST(RenderHeatmap, LegendAndAxisLabels) {
  const std::vector<double> values = {0.0, 1.0, 2.0, 3.0};
  const std::string svg =
      render_heatmap_svg(values, 2, 2, {-5.0, 5.0, -5.0, 5.0});
  EXPECT_EQ(count_of(svg, "class=\"legend\""), 48u);
  EXPECT_NE(svg.find(">-5<"), std::string::npos);
  EXPECT_NE(svg.find(">5<"), std::string::npos);
  EXPECT_NE(svg.find(">0<"), std::string::npos);  // vmin label
  EXPECT_NE(svg.find(">3<"), std::string::npos);  // vmax label
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(RenderHeatmap, DeterministicOutput) {
  const std::vector<double> values = {0.1, 0.9, 0.4, 0.7, 0.2, 0.6};
  const Domain d{0.0, 2.0, -1.0, 1.0};
  EXPECT_EQ(render_heatmap_svg(values, 2, 3, d),
            render_heatmap_svg(values, 2, 3, d));
}

TEST(RenderHeatmap, RejectsBadInput) {
  EXPECT_THROW(render_heatmap_svg({1.0, 2.0}, 2, 2, {0, 1, 0, 1}),
               hermnn::ConfigError);
  EXPECT_THROW(render_heatmap_svg({}, 0, 0, {0, 1, 0, 1}),
               hermnn::ConfigError);
  EXPECT_THROW(
      render_heatmap_svg({1.0, std::numeric_limits<double>::infinity()}, 1, 2,
                         {0, 1, 0, 1}),
      hermnn::NumericalError);
}

TEST(EmitHeatmap, WritesSvgFileWithoutTempResidue) {
  const std::string path = testing::TempDir() + "/hermnn_heatmap_test.svg";
  emit_heatmap({0.0, 1.0, 2.0, 3.0}, 2, 2, {0, 1, 0, 1}, path);
  std::ifstream in(path);
  ASSERT_TRUE(in.good());
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first.rfind("<svg", 0), 0u);
  EXPECT_FALSE(std::ifstream(path + ".tmp").good());
}

}  // namespace
