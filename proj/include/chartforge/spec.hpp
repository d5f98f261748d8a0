#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chartforge/pool.hpp"
#include "chartforge/table.hpp"

namespace chartforge {

enum class ChartType { line, grouped_vertical_bar, stacked_vertical_bar };

std::string_view to_string(ChartType type);
std::optional<ChartType> parse_chart_type(std::string_view text);
inline bool is_bar(ChartType type) { return type != ChartType::line; }

/// Which table axis carries the plotted series. Rows is the native layout;
/// columns covers tables stored with categories down the first column.
enum class SeriesAxis { rows, columns };

struct LabelParams {
  std::string fontname = pool::kFonts.front();
  std::string fontsize = pool::kFontSizes.front();
  bool operator==(const LabelParams&) const = default;
};

struct LegendParams {
  int loc = 1;
  int ncol = 1;
  bool operator==(const LegendParams&) const = default;
};

struct TitleParams {
  std::string fontname = pool::kFonts.front();
  std::string fontsize = pool::kFontSizes.front();
  int rotation = 0;
  bool operator==(const TitleParams&) const = default;
};

struct TickParams {
  std::string axis;
  std::string which = "major";
  int rotation = 0;
  std::string labelsize = pool::kTickLabelSizes.front();
  std::string labelfontfamily = pool::kFonts.front();
  bool operator==(const TickParams&) const = default;
};

struct GridParams {
  bool visible = false;
  std::string axis = pool::kGridAxes.front();
  std::string linestyle = pool::kGridLineStyles.front();
  bool operator==(const GridParams&) const = default;
};

struct GlobalProps {
  ChartType chart_type = ChartType::line;
  LabelParams x_label;
  LabelParams y_label;
  LegendParams legend;
  TitleParams title;
  TickParams x_tick{"x"};
  TickParams y_tick{"y"};
  GridParams grid;
  bool operator==(const GlobalProps&) const = default;
};

struct LineProps {
  std::vector<std::string> linestyles;
  std::vector<std::string> markers;
  std::vector<std::string> colors;
  bool operator==(const LineProps&) const = default;
};

struct BarProps {
  std::vector<std::string> hatches;
  std::vector<std::string> colors;
  bool operator==(const BarProps&) const = default;
};

using SeriesProps = std::variant<LineProps, BarProps>;

/// Complete, re-plottable chart description: data plus every visual attribute.
struct ChartSpec {
  DataTable data;
  SeriesAxis series_axis = SeriesAxis::rows;
  std::string chart_title;
  std::string x_axis_title;
  std::string y_axis_title;
  GlobalProps global;
  SeriesProps series = LineProps{};

  bool operator==(const ChartSpec&) const = default;

  ChartType chart_type() const { return global.chart_type; }

  /// Data with one row per plotted series, whatever the storage axis.
  DataTable series_table() const;
  void set_series_table(DataTable table);
  std::size_t series_count() const;
  std::vector<std::string> series_names() const;
  std::vector<std::string> category_names() const;

  const std::vector<std::string>& colors() const;
  std::vector<std::string>& colors();

  /// Throws the same errors as a strict parse would.
  void validate() const;
};

struct RepairNote {
  std::string path;
  std::string reason;
  bool operator==(const RepairNote&) const = default;
};

struct ParsedSpec {
  ChartSpec spec;
  std::vector<RepairNote> repairs;
};

/// Reads the canonical JSON form. With `repair`, broken JSON text is mended
/// and every missing or invalid field falls back to its default, with one
/// note per substitution; otherwise the first violation throws.
ParsedSpec parse_spec(std::string_view json_text, bool repair);

/// Canonical, pretty-printed (4-space) JSON without a trailing newline.
std::string serialize_spec(const ChartSpec& spec);
OrderedJson to_json(const ChartSpec& spec);

/// The value every repaired field falls back to.
ChartSpec default_spec();
DataTable default_table();

/// Default per-series properties for `type`, `count` entries each.
SeriesProps default_series_props(ChartType type, std::size_t count);

}  // namespace chartforge
