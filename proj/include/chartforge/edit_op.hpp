#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chartforge/pool.hpp"
#include "chartforge/spec.hpp"

namespace chartforge {

enum class EditCategory { style, layout, format, data_centric };

/// One subtype per editable pool attribute group plus the data operations.
enum class EditSubtype {
  series_color,
  line_style,
  line_marker,
  bar_hatch,
  font_name,
  font_size,
  tick_label_size,
  grid_visibility,
  legend_position,
  chart_type,
  range_filter,
  column_filter,
  series_filter,
  upsert_point,
  upsert_series,
};

inline constexpr EditCategory kCategories[] = {EditCategory::style, EditCategory::layout, EditCategory::format,
                                               EditCategory::data_centric};

inline constexpr EditSubtype kSubtypes[] = {
    EditSubtype::series_color,  EditSubtype::line_style,      EditSubtype::line_marker,
    EditSubtype::bar_hatch,     EditSubtype::font_name,       EditSubtype::font_size,
    EditSubtype::tick_label_size, EditSubtype::grid_visibility, EditSubtype::legend_position,
    EditSubtype::chart_type,    EditSubtype::range_filter,    EditSubtype::column_filter,
    EditSubtype::series_filter, EditSubtype::upsert_point,    EditSubtype::upsert_series,
};

EditCategory category_of(EditSubtype subtype);
std::string_view to_string(EditCategory category);
std::string_view to_string(EditSubtype subtype);
std::optional<EditCategory> parse_category(std::string_view text);
std::optional<EditSubtype> parse_subtype(std::string_view text);

enum class TargetKind { series_by_name, text_element, global };

/// What an edit points at. Text element names: title, x_label, y_label,
/// x_ticks, y_ticks, legend, grid.
struct TargetRef {
  TargetKind kind = TargetKind::global;
  std::string name;
  bool operator==(const TargetRef&) const = default;
};

/// A pool value for colors, line styles, markers, hatches, fonts and sizes.
struct SetValue {
  std::string value;
  bool operator==(const SetValue&) const = default;
};
struct SetVisible {
  bool visible;
  bool operator==(const SetVisible&) const = default;
};
struct SetLegendLoc {
  int loc;
  bool operator==(const SetLegendLoc&) const = default;
};
struct ConvertType {
  ChartType from;
  ChartType to;
  bool operator==(const ConvertType&) const = default;
};
/// Keeps the columns whose numeric header lies in [lo, hi].
struct RangeFilter {
  double lo;
  double hi;
  bool operator==(const RangeFilter&) const = default;
};
/// Keeps the listed columns, in table order.
struct ColumnFilter {
  std::vector<std::string> columns;
  bool operator==(const ColumnFilter&) const = default;
};
struct SeriesFilter {
  bool keep;
  std::vector<std::string> series;
  bool operator==(const SeriesFilter&) const = default;
};
/// Sets one value of the targeted series, appending the column if new.
struct UpsertPoint {
  std::string column;
  double value;
  bool operator==(const UpsertPoint&) const = default;
};
/// Replaces the values of `name`, appending the series if new.
struct UpsertSeries {
  std::string name;
  std::vector<double> values;
  bool operator==(const UpsertSeries&) const = default;
};

using EditPayload = std::variant<SetValue, SetVisible, SetLegendLoc, ConvertType, RangeFilter, ColumnFilter,
                                 SeriesFilter, UpsertPoint, UpsertSeries>;

struct EditOp {
  EditSubtype subtype;
  TargetRef target;
  EditPayload payload;

  bool operator==(const EditOp&) const = default;
  EditCategory category() const { return category_of(subtype); }
};

/// Template group selector for subtypes whose wording depends on the payload
/// (series filter keep/drop, grid show/hide); empty otherwise.
std::string form_of(const EditOp& op);

/// Structural checks: payload type, target kind and pool membership.
void check_op(const EditOp& op);

OrderedJson to_json(const EditOp& op);
EditOp edit_op_from_json(const Json& j);

}  // namespace chartforge
