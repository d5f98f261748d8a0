#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chartforge/font.hpp"
#include "chartforge/spec.hpp"

namespace chartforge {

inline constexpr int kCanvasSize = 800;

struct Point {
  double x;
  double y;
};

struct Rect {
  double x;
  double y;
  double w;
  double h;

  double right() const { return x + w; }
  double bottom() const { return y + h; }
};

struct Rgb {
  unsigned char r;
  unsigned char g;
  unsigned char b;
  bool operator==(const Rgb&) const = default;
};

/// Pool color code to RGB; unknown codes map to black.
Rgb color_for(std::string_view code);
std::string hex_color(Rgb c);

/// On/off dash lengths in pixels; empty means solid.
std::vector<double> dash_array(std::string_view linestyle);

enum class Anchor { start, middle, end };

/// A run of text anchored at (x, y) on its baseline middle-left/center/right,
/// rotated counter-clockwise by `rotation` degrees around the anchor.
struct TextItem {
  std::string text;
  double x = 0;
  double y = 0;
  Anchor anchor = Anchor::middle;
  double rotation = 0;
  FontFace face = FontFace::sans;
  int px = 14;
  std::string fontname;
  std::string size;
};

struct Tick {
  double pos;
  std::string label;
};

struct BarRect {
  Rect rect;
  std::size_t column;
};

struct SeriesGeometry {
  std::string name;
  Rgb color;
  /// Line charts: one vertex per category, nullopt where the value is missing.
  std::vector<std::optional<Point>> points;
  std::vector<double> dashes;
  std::string marker = "None";
  /// Bar charts.
  std::vector<BarRect> bars;
  std::string hatch = "None";
};

struct LegendEntry {
  std::size_t series;
  Rect swatch;
  TextItem label;
};

struct LegendPlan {
  Rect box;
  std::vector<LegendEntry> entries;
};

struct LayoutPlan {
  int width = kCanvasSize;
  int height = kCanvasSize;
  ChartType chart_type = ChartType::line;
  double title_band = 0;
  Rect plot{};
  double y_min = 0;
  double y_max = 1;
  std::vector<Tick> x_ticks;  ///< pixel x of each category center
  std::vector<Tick> y_ticks;  ///< pixel y of each value tick
  std::vector<TextItem> x_tick_labels;
  std::vector<TextItem> y_tick_labels;
  std::optional<TextItem> title;
  std::optional<TextItem> x_label;
  std::optional<TextItem> y_label;
  bool grid_visible = false;
  std::string grid_axis = "both";
  std::vector<double> grid_dashes;
  std::vector<SeriesGeometry> series;
  LegendPlan legend;

  /// Pixel y of a data value.
  double y_of(double value) const { return plot.bottom() - (value - y_min) / (y_max - y_min) * plot.h; }
};

/// Nice tick values covering [lo, hi] with a 1/2/5 x 10^k step.
std::vector<double> nice_ticks(double lo, double hi);

/// Throws InvalidForChartType for stacked bars with negative values.
LayoutPlan layout(const ChartSpec& spec);

}  // namespace chartforge
