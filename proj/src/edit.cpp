#include "chartforge/edit.hpp"

#include <algorithm>
#include <cmath>

#include "chartforge/error.hpp"
#include "chartforge/rng.hpp"

namespace chartforge {

namespace {

std::string props_prefix(const ChartSpec& spec) {
  return std::holds_alternative<LineProps>(spec.series) ? "line_properties" : "bar_properties";
}

std::string indexed(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::size_t series_index(const ChartSpec& spec, const std::string& name) {
  auto names = spec.series_names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(ErrorKind::TargetMissing, "no series named '" + name + "'", name);
  return static_cast<std::size_t>(it - names.begin());
}

LineProps& line_props(ChartSpec& spec, std::string_view what) {
  auto* p = std::get_if<LineProps>(&spec.series);
  if (!p) throw Error(ErrorKind::InvalidForChartType, std::string(what) + " applies to line charts only");
  return *p;
}

BarProps& bar_props(ChartSpec& spec, std::string_view what) {
  auto* p = std::get_if<BarProps>(&spec.series);
  if (!p) throw Error(ErrorKind::InvalidForChartType, std::string(what) + " applies to bar charts only");
  return *p;
}

/// Every per-series array key of the spec's current chart type.
void add_series_keys(const ChartSpec& spec, std::set<std::string>& out) {
  const std::string prefix = props_prefix(spec);
  const std::size_t n = spec.series_count();
  std::vector<std::string> arrays = std::holds_alternative<LineProps>(spec.series)
                                        ? std::vector<std::string>{"linestyles", "markers", "colors"}
                                        : std::vector<std::string>{"hatches", "colors"};
  for (const auto& a : arrays)
    for (std::size_t i = 0; i < n; ++i) out.insert(indexed(prefix + "." + a, i));
}

std::string text_params_key(const std::string& element) {
  if (element == "title") return "global_properties.chart_title_params";
  if (element == "x_label") return "global_properties.x_label_params";
  if (element == "y_label") return "global_properties.y_label_params";
  if (element == "x_ticks") return "global_properties.x_tick_params";
  return "global_properties.y_tick_params";
}

std::string& text_field(ChartSpec& spec, const std::string& element, bool font_name) {
  auto& g = spec.global;
  if (element == "title") return font_name ? g.title.fontname : g.title.fontsize;
  if (element == "x_label") return font_name ? g.x_label.fontname : g.x_label.fontsize;
  return font_name ? g.y_label.fontname : g.y_label.fontsize;
}

void require_stackable(const ChartSpec& spec) {
  if (spec.chart_type() == ChartType::stacked_vertical_bar && !spec.data.non_negative())
    throw Error(ErrorKind::InvalidForChartType, "stacked bars need non-negative values");
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& values) {
  return values[rng.index(values.size())];
}

void append_series_props(ChartSpec& spec, Rng& rng) {
  std::visit(
      [&](auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, LineProps>) {
          p.linestyles.push_back(pick(rng, pool::kLineStyles));
          p.markers.push_back(pick(rng, pool::kMarkers));
        } else {
          p.hatches.push_back(pick(rng, pool::kHatches));
        }
        p.colors.push_back(pick(rng, pool::kColors));
      },
      spec.series);
}

void keep_series_props(ChartSpec& spec, const std::vector<std::size_t>& keep) {
  auto select = [&](std::vector<std::string>& v) {
    std::vector<std::string> out;
    for (auto i : keep) out.push_back(v[i]);
    v = std::move(out);
  };
  std::visit(
      [&](auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, LineProps>) {
          select(p.linestyles);
          select(p.markers);
        } else {
          select(p.hatches);
        }
        select(p.colors);
      },
      spec.series);
}

DataTable keep_columns(const DataTable& t, const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw Error(ErrorKind::EmptyResult, "the filter would remove every column");
  DataTable out{t.corner, {}, {}};
  for (auto c : keep) out.columns.push_back(t.columns[c]);
  for (const auto& r : t.rows) {
    DataRow row{r.name, {}};
    for (auto c : keep) row.values.push_back(r.values[c]);
    out.rows.push_back(std::move(row));
  }
  return out;
}

/// Mutates `spec` per `op` and returns the keys the op may have written.
std::set<std::string> mutate(ChartSpec& spec, const EditOp& op, std::uint64_t seed) {
  std::set<std::string> touched;
  const std::string data_key(kDataKey);
  auto set_series_value = [&](std::vector<std::string>& values, const std::string& array) {
    auto i = series_index(spec, op.target.name);
    values.at(i) = std::get<SetValue>(op.payload).value;
    touched.insert(indexed(props_prefix(spec) + "." + array, i));
  };

  switch (op.subtype) {
    case EditSubtype::series_color: set_series_value(spec.colors(), "colors"); break;
    case EditSubtype::line_style: set_series_value(line_props(spec, "line style").linestyles, "linestyles"); break;
    case EditSubtype::line_marker: set_series_value(line_props(spec, "marker").markers, "markers"); break;
    case EditSubtype::bar_hatch: set_series_value(bar_props(spec, "hatch").hatches, "hatches"); break;
    case EditSubtype::font_name:
    case EditSubtype::font_size: {
      bool is_name = op.subtype == EditSubtype::font_name;
      text_field(spec, op.target.name, is_name) = std::get<SetValue>(op.payload).value;
      touched.insert(text_params_key(op.target.name) + (is_name ? ".fontname" : ".fontsize"));
      break;
    }
    case EditSubtype::tick_label_size: {
      auto& tick = op.target.name == "x_ticks" ? spec.global.x_tick : spec.global.y_tick;
      tick.labelsize = std::get<SetValue>(op.payload).value;
      touched.insert(text_params_key(op.target.name) + ".labelsize");
      break;
    }
    case EditSubtype::grid_visibility:
      spec.global.grid.visible = std::get<SetVisible>(op.payload).visible;
      touched.insert("global_properties.grid_params.visible");
      break;
    case EditSubtype::legend_position:
      spec.global.legend.loc = std::get<SetLegendLoc>(op.payload).loc;
      touched.insert("global_properties.legend_params.loc");
      break;
    case EditSubtype::chart_type: {
      const auto& c = std::get<ConvertType>(op.payload);
      if (spec.chart_type() == c.to) break;
      if (spec.chart_type() != c.from)
        throw Error(ErrorKind::InvalidForChartType, "chart is a " + std::string(to_string(spec.chart_type())) +
                                                        ", not a " + std::string(to_string(c.from)));
      add_series_keys(spec, touched);
      Rng rng(seed);
      const std::vector<std::string> colors = spec.colors();
      spec.global.chart_type = c.to;
      if (is_bar(c.to)) {
        BarProps p;
        for (std::size_t i = 0; i < colors.size(); ++i) p.hatches.push_back(pick(rng, pool::kHatches));
        p.colors = colors;
        spec.series = std::move(p);
      } else {
        LineProps p;
        for (std::size_t i = 0; i < colors.size(); ++i) {
          p.linestyles.push_back(pick(rng, pool::kLineStyles));
          p.markers.push_back(pick(rng, pool::kMarkers));
        }
        p.colors = colors;
        spec.series = std::move(p);
      }
      require_stackable(spec);
      touched.insert("global_properties.chart_type");
      add_series_keys(spec, touched);
      break;
    }
    case EditSubtype::range_filter: {
      const auto& r = std::get<RangeFilter>(op.payload);
      DataTable t = spec.series_table();
      std::vector<std::size_t> keep;
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        auto v = parse_cell(t.columns[c]);
        if (!v || !*v)
          throw Error(ErrorKind::TargetMissing, "column '" + t.columns[c] + "' has no numeric header", t.columns[c]);
        if (**v >= r.lo && **v <= r.hi) keep.push_back(c);
      }
      spec.set_series_table(keep_columns(t, keep));
      touched.insert(data_key);
      break;
    }
    case EditSubtype::column_filter: {
      const auto& f = std::get<ColumnFilter>(op.payload);
      DataTable t = spec.series_table();
      for (const auto& name : f.columns)
        if (!t.find_column(name)) throw Error(ErrorKind::TargetMissing, "no column named '" + name + "'", name);
      std::vector<std::size_t> keep;
      for (std::size_t c = 0; c < t.columns.size(); ++c)
        if (std::find(f.columns.begin(), f.columns.end(), t.columns[c]) != f.columns.end()) keep.push_back(c);
      spec.set_series_table(keep_columns(t, keep));
      touched.insert(data_key);
      break;
    }
    case EditSubtype::series_filter: {
      const auto& f = std::get<SeriesFilter>(op.payload);
      for (const auto& name : f.series) series_index(spec, name);
      add_series_keys(spec, touched);
      DataTable t = spec.series_table();
      std::vector<std::size_t> keep;
      DataTable out{t.corner, t.columns, {}};
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        bool listed = std::find(f.series.begin(), f.series.end(), t.rows[i].name) != f.series.end();
        if (listed == f.keep) {
          keep.push_back(i);
          out.rows.push_back(t.rows[i]);
        }
      }
      if (keep.empty()) throw Error(ErrorKind::EmptyResult, "the filter would remove every series");
      keep_series_props(spec, keep);
      spec.set_series_table(std::move(out));
      touched.insert(data_key);
      break;
    }
    case EditSubtype::upsert_point: {
      const auto& p = std::get<UpsertPoint>(op.payload);
      auto i = series_index(spec, op.target.name);
      DataTable t = spec.series_table();
      auto c = t.find_column(p.column);
      if (!c) {
        t.columns.push_back(p.column);
        for (auto& row : t.rows) row.values.emplace_back(std::nullopt);
        c = t.columns.size() - 1;
      }
      t.rows[i].values[*c] = p.value;
      spec.set_series_table(std::move(t));
      require_stackable(spec);
      touched.insert(data_key);
      break;
    }
    case EditSubtype::upsert_series: {
      const auto& s = std::get<UpsertSeries>(op.payload);
      DataTable t = spec.series_table();
      if (s.values.size() != t.columns.size())
        throw Error(ErrorKind::DimensionMismatch, "series '" + s.name + "' has " + std::to_string(s.values.size()) +
                                                      " values for " + std::to_string(t.columns.size()) + " columns");
      std::vector<Cell> values(s.values.begin(), s.values.end());
      if (auto r = t.find_row(s.name)) {
        t.rows[*r].values = std::move(values);
      } else {
        t.rows.push_back({s.name, std::move(values)});
        Rng rng(seed);
        append_series_props(spec, rng);
      }
      spec.set_series_table(std::move(t));
      require_stackable(spec);
      touched.insert(data_key);
      add_series_keys(spec, touched);
      break;
    }
  }
  return touched;
}

}  // namespace

std::uint64_t edit_seed(const ChartSpec& spec, const EditOp& op) {
  return mix_seed(fnv1a(serialize_spec(spec)), fnv1a(to_json(op).dump()));
}

EditResult apply_edit(const ChartSpec& spec, const EditOp& op) {
  check_op(op);
  EditResult result{spec, {}, {}, {}};
  auto touched = mutate(result.edited, op, edit_seed(spec, op));
  result.edited.validate();

  const auto before = flatten_attributes(spec);
  const auto after = flatten_attributes(result.edited);
  for (const auto& key : touched) {
    if (key == kDataKey) {
      if (spec.series_table() != result.edited.series_table()) result.changed_keys.insert(key);
      continue;
    }
    auto a = after.find(key);
    if (a == after.end()) continue;
    auto b = before.find(key);
    if (b == before.end() || b->second != a->second) result.changed_keys.insert(key);
  }
  for (const auto& key : all_keys(result.edited))
    if (!result.changed_keys.contains(key)) result.unchanged_keys.insert(key);
  for (const auto& [key, value] : before)
    if (!after.contains(key)) result.removed_keys.insert(key);
  return result;
}

ChartSpec apply_edits(ChartSpec spec, std::span<const EditOp> ops) {
  for (const auto& op : ops) spec = apply_edit(spec, op).edited;
  return spec;
}

}  // namespace chartforge
