#include "chartforge/spec.hpp"

#include <cmath>
#include <set>

#include "chartforge/error.hpp"
#include "chartforge/json_repair.hpp"

namespace chartforge {

namespace {

const std::vector<std::string> kTickAxes{"x", "y", "both"};

std::string index_path(std::string_view base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

/// Field reader that either throws or records a repair and substitutes the
/// default, depending on mode.
class Reader {
 public:
  explicit Reader(bool repair) : repair_(repair) {}

  std::vector<RepairNote>& notes() { return notes_; }
  bool repairing() const { return repair_; }

  void fail(ErrorKind kind, const std::string& path, const std::string& reason) {
    if (!repair_) throw Error(kind, path + ": " + reason, path);
    notes_.push_back({path, reason});
  }

  const Json* member(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) return nullptr;
    auto it = obj.find(key);
    if (it == obj.end()) {
      fail(ErrorKind::SchemaViolation, path, "missing");
      return nullptr;
    }
    return &*it;
  }

  const Json* object(const Json& obj, const std::string& key, const std::string& path) {
    const Json* v = member(obj, key, path);
    if (v && !v->is_object()) {
      fail(ErrorKind::SchemaViolation, path, "expected an object");
      return nullptr;
    }
    return v;
  }

  void text(const Json& obj, const std::string& key, const std::string& path, std::string& out) {
    const Json* v = member(obj, key, path);
    if (!v) return;
    if (!v->is_string()) {
      fail(ErrorKind::SchemaViolation, path, "expected a string");
      return;
    }
    out = v->get<std::string>();
  }

  void integer(const Json& obj, const std::string& key, const std::string& path, int& out) {
    const Json* v = member(obj, key, path);
    if (!v) return;
    if (v->is_number_integer()) {
      out = v->get<int>();
    } else if (v->is_number_float() && std::trunc(v->get<double>()) == v->get<double>() &&
               std::abs(v->get<double>()) < 1e6) {
      out = static_cast<int>(v->get<double>());
    } else {
      fail(ErrorKind::SchemaViolation, path, "expected an integer");
    }
  }

  void boolean(const Json& obj, const std::string& key, const std::string& path, bool& out) {
    const Json* v = member(obj, key, path);
    if (!v) return;
    if (!v->is_boolean()) {
      fail(ErrorKind::SchemaViolation, path, "expected a boolean");
      return;
    }
    out = v->get<bool>();
  }

  void strings(const Json& obj, const std::string& key, const std::string& path, std::vector<std::string>& out) {
    const Json* v = member(obj, key, path);
    if (!v) return;
    if (!v->is_array()) {
      fail(ErrorKind::SchemaViolation, path, "expected an array");
      return;
    }
    out.clear();
    for (std::size_t i = 0; i < v->size(); ++i) {
      const auto& item = (*v)[i];
      if (item.is_string()) {
        out.push_back(item.get<std::string>());
      } else if (item.is_null()) {
        out.push_back("None");
      } else {
        fail(ErrorKind::SchemaViolation, index_path(path, i), "expected a string");
        out.push_back({});  // replaced during value checks
      }
    }
  }

  void unknown_keys(const Json& obj, std::initializer_list<std::string_view> known, const std::string& prefix) {
    if (!obj.is_object()) return;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      bool ok = false;
      for (auto k : known) ok = ok || it.key() == k;
      if (!ok) fail(ErrorKind::SchemaViolation, prefix + it.key(), "unknown key");
    }
  }

  template <class T>
  void member_of(const std::vector<T>& allowed, const std::string& path, T& value) {
    member_of(allowed, path, value, allowed.front());
  }

  template <class T>
  void member_of(const std::vector<T>& allowed, const std::string& path, T& value, const T& fallback) {
    if (pool::contains(allowed, value)) return;
    if constexpr (std::is_same_v<T, std::string>) {
      fail(ErrorKind::PoolViolation, path, "value '" + value + "' is not in the pool");
    } else {
      fail(ErrorKind::PoolViolation, path, "value " + std::to_string(value) + " is not in the pool");
    }
    value = fallback;
  }

 private:
  bool repair_;
  std::vector<RepairNote> notes_;
};

void read_label(Reader& r, const Json& gp, const std::string& key, LabelParams& out) {
  const std::string path = "global_properties." + key;
  const Json* obj = r.object(gp, key, path);
  if (!obj) return;
  r.text(*obj, "fontname", path + ".fontname", out.fontname);
  r.text(*obj, "fontsize", path + ".fontsize", out.fontsize);
  r.unknown_keys(*obj, {"fontname", "fontsize"}, path + ".");
}

void read_tick(Reader& r, const Json& gp, const std::string& key, TickParams& out) {
  const std::string path = "global_properties." + key;
  const Json* obj = r.object(gp, key, path);
  if (!obj) return;
  r.text(*obj, "axis", path + ".axis", out.axis);
  r.text(*obj, "which", path + ".which", out.which);
  r.integer(*obj, "rotation", path + ".rotation", out.rotation);
  r.text(*obj, "labelsize", path + ".labelsize", out.labelsize);
  r.text(*obj, "labelfontfamily", path + ".labelfontfamily", out.labelfontfamily);
  r.unknown_keys(*obj, {"axis", "which", "rotation", "labelsize", "labelfontfamily"}, path + ".");
}

std::string props_key(ChartType type) { return is_bar(type) ? "bar_properties" : "line_properties"; }

void fit_length(Reader& r, const std::string& path, std::vector<std::string>& values, std::size_t n,
                const std::string& filler) {
  if (values.size() == n) return;
  r.fail(ErrorKind::SchemaViolation, path,
         "has " + std::to_string(values.size()) + " entries for " + std::to_string(n) + " series");
  values.resize(n, filler);
}

void check_list(Reader& r, const std::string& path, std::vector<std::string>& values,
                const std::vector<std::string>& allowed) {
  for (std::size_t i = 0; i < values.size(); ++i) r.member_of(allowed, index_path(path, i), values[i]);
}

/// Pool membership and shape checks shared by parsing and validate().
void check_values(Reader& r, ChartSpec& spec) {
  auto& g = spec.global;
  const std::string gp = "global_properties.";
  r.member_of(pool::kFonts, gp + "x_label_params.fontname", g.x_label.fontname);
  r.member_of(pool::kFontSizes, gp + "x_label_params.fontsize", g.x_label.fontsize);
  r.member_of(pool::kFonts, gp + "y_label_params.fontname", g.y_label.fontname);
  r.member_of(pool::kFontSizes, gp + "y_label_params.fontsize", g.y_label.fontsize);
  r.member_of(pool::kLegendLocs, gp + "legend_params.loc", g.legend.loc, 1);
  r.member_of(pool::kLegendColumns, gp + "legend_params.ncol", g.legend.ncol);
  r.member_of(pool::kFonts, gp + "chart_title_params.fontname", g.title.fontname);
  r.member_of(pool::kFontSizes, gp + "chart_title_params.fontsize", g.title.fontsize);
  if (g.title.rotation < -360 || g.title.rotation > 360) {
    r.fail(ErrorKind::SchemaViolation, gp + "chart_title_params.rotation", "rotation outside [-360, 360]");
    g.title.rotation = 0;
  }
  for (auto [tick, key] : {std::pair{&g.x_tick, "x_tick_params"}, std::pair{&g.y_tick, "y_tick_params"}}) {
    const std::string path = gp + key;
    r.member_of(kTickAxes, path + ".axis", tick->axis);
    r.member_of(pool::kTickWhich, path + ".which", tick->which);
    r.member_of(pool::kTickRotations, path + ".rotation", tick->rotation);
    r.member_of(pool::kTickLabelSizes, path + ".labelsize", tick->labelsize);
    r.member_of(pool::kFonts, path + ".labelfontfamily", tick->labelfontfamily);
  }
  r.member_of(pool::kGridAxes, gp + "grid_params.axis", g.grid.axis);
  r.member_of(pool::kGridLineStyles, gp + "grid_params.linestyle", g.grid.linestyle);

  const std::size_t n = spec.series_count();
  if (auto* line = std::get_if<LineProps>(&spec.series)) {
    fit_length(r, "line_properties.linestyles", line->linestyles, n, pool::kLineStyles.front());
    fit_length(r, "line_properties.markers", line->markers, n, pool::kMarkers.front());
    fit_length(r, "line_properties.colors", line->colors, n, pool::kColors.front());
    check_list(r, "line_properties.linestyles", line->linestyles, pool::kLineStyles);
    check_list(r, "line_properties.markers", line->markers, pool::kMarkers);
    check_list(r, "line_properties.colors", line->colors, pool::kColors);
  } else {
    auto& bar = std::get<BarProps>(spec.series);
    fit_length(r, "bar_properties.hatches", bar.hatches, n, pool::kHatches.front());
    fit_length(r, "bar_properties.colors", bar.colors, n, pool::kColors.front());
    check_list(r, "bar_properties.hatches", bar.hatches, pool::kHatches);
    check_list(r, "bar_properties.colors", bar.colors, pool::kColors);
  }
}

ChartSpec read_spec(Reader& r, const Json& root) {
  ChartSpec spec = default_spec();
  if (!root.is_object()) {
    r.fail(ErrorKind::SchemaViolation, "$", "document root must be an object");
    return spec;
  }

  // Data table: canonical key first, the alternate spelling second.
  const char* data_key = root.contains("underlying_data") ? "underlying_data" : "data_table";
  bool table_ok = false;
  if (const Json* data = r.member(root, data_key, "underlying_data")) {
    if (!data->is_string()) {
      r.fail(ErrorKind::SchemaViolation, "underlying_data", "expected a string");
    } else {
      try {
        spec.data = decode_table(data->get<std::string>());
        table_ok = true;
      } catch (const Error& e) {
        r.fail(ErrorKind::SchemaViolation, "underlying_data", std::string(to_string(e.kind())) + ": " + e.what());
      }
    }
  }

  std::optional<SeriesAxis> axis;
  if (auto it = root.find("series_axis"); it != root.end()) {
    if (it->is_string() && *it == "rows") {
      axis = SeriesAxis::rows;
    } else if (it->is_string() && *it == "columns") {
      axis = SeriesAxis::columns;
    } else {
      r.fail(ErrorKind::SchemaViolation, "series_axis", "expected \"rows\" or \"columns\"");
    }
  }

  r.text(root, "chart_title", "chart_title", spec.chart_title);
  r.text(root, "x_axis_title", "x_axis_title", spec.x_axis_title);
  r.text(root, "y_axis_title", "y_axis_title", spec.y_axis_title);

  auto& g = spec.global;
  if (const Json* gp = r.object(root, "global_properties", "global_properties")) {
    std::string type_text{to_string(g.chart_type)};
    r.text(*gp, "chart_type", "global_properties.chart_type", type_text);
    if (auto type = parse_chart_type(type_text)) {
      g.chart_type = *type;
    } else {
      r.fail(ErrorKind::PoolViolation, "global_properties.chart_type", "unknown chart type '" + type_text + "'");
    }
    read_label(r, *gp, "x_label_params", g.x_label);
    read_label(r, *gp, "y_label_params", g.y_label);
    if (const Json* legend = r.object(*gp, "legend_params", "global_properties.legend_params")) {
      r.integer(*legend, "loc", "global_properties.legend_params.loc", g.legend.loc);
      r.integer(*legend, "ncol", "global_properties.legend_params.ncol", g.legend.ncol);
      r.unknown_keys(*legend, {"loc", "ncol"}, "global_properties.legend_params.");
    }
    if (const Json* title = r.object(*gp, "chart_title_params", "global_properties.chart_title_params")) {
      const std::string path = "global_properties.chart_title_params";
      r.text(*title, "fontname", path + ".fontname", g.title.fontname);
      r.text(*title, "fontsize", path + ".fontsize", g.title.fontsize);
      r.integer(*title, "rotation", path + ".rotation", g.title.rotation);
      r.unknown_keys(*title, {"fontname", "fontsize", "rotation"}, path + ".");
    }
    read_tick(r, *gp, "x_tick_params", g.x_tick);
    read_tick(r, *gp, "y_tick_params", g.y_tick);
    if (const Json* grid = r.object(*gp, "grid_params", "global_properties.grid_params")) {
      r.boolean(*grid, "visible", "global_properties.grid_params.visible", g.grid.visible);
      r.text(*grid, "axis", "global_properties.grid_params.axis", g.grid.axis);
      r.text(*grid, "linestyle", "global_properties.grid_params.linestyle", g.grid.linestyle);
      r.unknown_keys(*grid, {"visible", "axis", "linestyle"}, "global_properties.grid_params.");
    }
    r.unknown_keys(*gp,
                   {"chart_type", "x_label_params", "y_label_params", "legend_params", "chart_title_params",
                    "x_tick_params", "y_tick_params", "grid_params"},
                   "global_properties.");
  }

  const std::string key = props_key(g.chart_type);
  const Json* props = r.object(root, key, key);
  std::optional<std::size_t> color_count;
  if (props) {
    if (auto it = props->find("colors"); it != props->end() && it->is_array()) color_count = it->size();
  }

  if (!table_ok) axis = SeriesAxis::rows;
  if (axis) {
    spec.series_axis = *axis;
  } else if (color_count && *color_count == spec.data.column_count() && *color_count != spec.data.row_count()) {
    spec.series_axis = SeriesAxis::columns;
  } else {
    spec.series_axis = SeriesAxis::rows;
  }

  spec.series = default_series_props(g.chart_type, spec.series_count());
  if (props) {
    if (auto* line = std::get_if<LineProps>(&spec.series)) {
      r.strings(*props, "linestyles", key + ".linestyles", line->linestyles);
      r.strings(*props, "markers", key + ".markers", line->markers);
      r.strings(*props, "colors", key + ".colors", line->colors);
      r.unknown_keys(*props, {"linestyles", "markers", "colors"}, key + ".");
    } else {
      auto& bar = std::get<BarProps>(spec.series);
      r.strings(*props, "hatches", key + ".hatches", bar.hatches);
      r.strings(*props, "colors", key + ".colors", bar.colors);
      r.unknown_keys(*props, {"hatches", "colors"}, key + ".");
    }
  }

  r.unknown_keys(root,
                 {"underlying_data", "data_table", "series_axis", "chart_title", "x_axis_title", "y_axis_title",
                  "global_properties", key},
                 "");
  check_values(r, spec);
  return spec;
}

}  // namespace

std::string_view to_string(ChartType type) {
  switch (type) {
    case ChartType::line: return "line";
    case ChartType::grouped_vertical_bar: return "grouped_vertical_bar";
    case ChartType::stacked_vertical_bar: return "stacked_vertical_bar";
  }
  return "line";
}

std::optional<ChartType> parse_chart_type(std::string_view text) {
  if (text == "line") return ChartType::line;
  if (text == "grouped_vertical_bar") return ChartType::grouped_vertical_bar;
  if (text == "stacked_vertical_bar") return ChartType::stacked_vertical_bar;
  return std::nullopt;
}

DataTable ChartSpec::series_table() const {
  return series_axis == SeriesAxis::rows ? data : data.transposed();
}

void ChartSpec::set_series_table(DataTable table) {
  data = series_axis == SeriesAxis::rows ? std::move(table) : table.transposed();
}

std::size_t ChartSpec::series_count() const {
  return series_axis == SeriesAxis::rows ? data.row_count() : data.column_count();
}

std::vector<std::string> ChartSpec::series_names() const {
  if (series_axis == SeriesAxis::columns) return data.columns;
  std::vector<std::string> out;
  for (const auto& r : data.rows) out.push_back(r.name);
  return out;
}

std::vector<std::string> ChartSpec::category_names() const {
  if (series_axis == SeriesAxis::rows) return data.columns;
  std::vector<std::string> out;
  for (const auto& r : data.rows) out.push_back(r.name);
  return out;
}

const std::vector<std::string>& ChartSpec::colors() const {
  return std::visit([](const auto& p) -> const std::vector<std::string>& { return p.colors; }, series);
}

std::vector<std::string>& ChartSpec::colors() {
  return std::visit([](auto& p) -> std::vector<std::string>& { return p.colors; }, series);
}

void ChartSpec::validate() const {
  data.validate();
  if (is_bar(global.chart_type) != std::holds_alternative<BarProps>(series))
    throw Error(ErrorKind::SchemaViolation, "series properties do not match chart type", props_key(global.chart_type));
  Reader r(false);
  ChartSpec copy = *this;
  check_values(r, copy);
}

DataTable default_table() {
  DataTable t;
  t.columns = {"0"};
  t.rows.push_back({"series_0", {Cell{0.0}}});
  return t;
}

SeriesProps default_series_props(ChartType type, std::size_t count) {
  if (is_bar(type))
    return BarProps{std::vector<std::string>(count, pool::kHatches.front()),
                    std::vector<std::string>(count, pool::kColors.front())};
  return LineProps{std::vector<std::string>(count, pool::kLineStyles.front()),
                   std::vector<std::string>(count, pool::kMarkers.front()),
                   std::vector<std::string>(count, pool::kColors.front())};
}

ChartSpec default_spec() {
  ChartSpec spec;
  spec.data = default_table();
  spec.series = default_series_props(ChartType::line, 1);
  return spec;
}

ParsedSpec parse_spec(std::string_view json_text, bool repair) {
  Reader r(repair);
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    if (!repair) throw Error(ErrorKind::MalformedJson, e.what(), "$");
    r.notes().push_back({"$", "malformed JSON text repaired"});
    try {
      root = Json::parse(repair_json_text(json_text));
    } catch (const Json::parse_error&) {
      root = Json::object();
    }
  }
  ChartSpec spec = read_spec(r, root);
  return {std::move(spec), std::move(r.notes())};
}

OrderedJson to_json(const ChartSpec& spec) {
  OrderedJson j;
  j["underlying_data"] = encode_table(spec.data);
  if (spec.series_axis == SeriesAxis::columns && spec.data.row_count() == spec.data.column_count())
    j["series_axis"] = "columns";  // not recoverable from array lengths alone
  j["chart_title"] = spec.chart_title;
  j["x_axis_title"] = spec.x_axis_title;
  j["y_axis_title"] = spec.y_axis_title;

  const auto& g = spec.global;
  OrderedJson gp;
  gp["chart_type"] = to_string(g.chart_type);
  gp["x_label_params"] = {{"fontname", g.x_label.fontname}, {"fontsize", g.x_label.fontsize}};
  gp["y_label_params"] = {{"fontname", g.y_label.fontname}, {"fontsize", g.y_label.fontsize}};
  gp["legend_params"] = {{"loc", g.legend.loc}, {"ncol", g.legend.ncol}};
  gp["chart_title_params"] = {
      {"fontname", g.title.fontname}, {"fontsize", g.title.fontsize}, {"rotation", g.title.rotation}};
  for (auto [tick, key] : {std::pair{&g.x_tick, "x_tick_params"}, std::pair{&g.y_tick, "y_tick_params"}}) {
    gp[key] = {{"axis", tick->axis},
               {"which", tick->which},
               {"rotation", tick->rotation},
               {"labelsize", tick->labelsize},
               {"labelfontfamily", tick->labelfontfamily}};
  }
  gp["grid_params"] = {{"visible", g.grid.visible}, {"axis", g.grid.axis}, {"linestyle", g.grid.linestyle}};
  j["global_properties"] = std::move(gp);

  if (const auto* line = std::get_if<LineProps>(&spec.series)) {
    j["line_properties"] = {{"linestyles", line->linestyles}, {"markers", line->markers}, {"colors", line->colors}};
  } else {
    const auto& bar = std::get<BarProps>(spec.series);
    j["bar_properties"] = {{"hatches", bar.hatches}, {"colors", bar.colors}};
  }
  return j;
}

std::string serialize_spec(const ChartSpec& spec) {
  spec.validate();
  return to_json(spec).dump(4, ' ', false, OrderedJson::error_handler_t::replace);
}

}  // namespace chartforge
