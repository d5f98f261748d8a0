#include "chartforge/pool.hpp"

namespace chartforge {

namespace {

template <class T>
std::vector<Json> as_json(const std::vector<T>& values) {
  return {values.begin(), values.end()};
}

}  // namespace

std::string_view to_string(PoolScope scope) {
  switch (scope) {
    case PoolScope::line: return "line";
    case PoolScope::bar: return "bar";
    case PoolScope::global: return "global";
  }
  return "global";
}

const PropertyPool& PropertyPool::instance() {
  static const PropertyPool pool;
  return pool;
}

PropertyPool::PropertyPool() {
  using S = PoolScope;
  const std::string g = "global_properties.";
  entries_ = {
      {S::line, "Color", "line_properties.colors[]", as_json(pool::kColors), true},
      {S::line, "Marker", "line_properties.markers[]", as_json(pool::kMarkers), true},
      {S::line, "Line-style", "line_properties.linestyles[]", as_json(pool::kLineStyles), true},
      {S::bar, "Hatch", "bar_properties.hatches[]", as_json(pool::kHatches), true},
      {S::bar, "Color", "bar_properties.colors[]", as_json(pool::kColors), true},
      {S::global, "X-axis Label Font Name", g + "x_label_params.fontname", as_json(pool::kFonts), true},
      {S::global, "X-axis Label Font Size", g + "x_label_params.fontsize", as_json(pool::kFontSizes), true},
      {S::global, "Y-axis Label Font Name", g + "y_label_params.fontname", as_json(pool::kFonts), true},
      {S::global, "Y-axis Label Font Size", g + "y_label_params.fontsize", as_json(pool::kFontSizes), true},
      {S::global, "Legend Location", g + "legend_params.loc", as_json(pool::kLegendLocs), true},
      {S::global, "Legend Columns", g + "legend_params.ncol", as_json(pool::kLegendColumns), false},
      {S::global, "Title Font Name", g + "chart_title_params.fontname", as_json(pool::kFonts), true},
      {S::global, "Title Font Size", g + "chart_title_params.fontsize", as_json(pool::kFontSizes), true},
      {S::global, "X-tick Label Size", g + "x_tick_params.labelsize", as_json(pool::kTickLabelSizes), true},
      {S::global, "X-tick Rotation", g + "x_tick_params.rotation", as_json(pool::kTickRotations), false},
      {S::global, "Y-tick Label Size", g + "y_tick_params.labelsize", as_json(pool::kTickLabelSizes), true},
      {S::global, "Grid Visibility", g + "grid_params.visible", {Json(true), Json(false)}, true},
      {S::global, "Grid Axis", g + "grid_params.axis", as_json(pool::kGridAxes), false},
      {S::global, "Grid Line-style", g + "grid_params.linestyle", as_json(pool::kGridLineStyles), false},
  };
}

const PoolEntry* PropertyPool::find(PoolScope scope, std::string_view key) const {
  for (const auto& e : entries_)
    if (e.scope == scope && e.key == key) return &e;
  return nullptr;
}

}  // namespace chartforge
