#include "chartforge/edit_op.hpp"

#include <cmath>
#include <set>

#include "chartforge/error.hpp"

namespace chartforge {

namespace {

constexpr std::pair<EditSubtype, std::string_view> kSubtypeNames[] = {
    {EditSubtype::series_color, "series_color"},     {EditSubtype::line_style, "line_style"},
    {EditSubtype::line_marker, "line_marker"},       {EditSubtype::bar_hatch, "bar_hatch"},
    {EditSubtype::font_name, "font_name"},           {EditSubtype::font_size, "font_size"},
    {EditSubtype::tick_label_size, "tick_label_size"}, {EditSubtype::grid_visibility, "grid_visibility"},
    {EditSubtype::legend_position, "legend_position"}, {EditSubtype::chart_type, "chart_type"},
    {EditSubtype::range_filter, "range_filter"},     {EditSubtype::column_filter, "column_filter"},
    {EditSubtype::series_filter, "series_filter"},   {EditSubtype::upsert_point, "upsert_point"},
    {EditSubtype::upsert_series, "upsert_series"},
};

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::SchemaViolation, "invalid edit: " + what); }

template <class T>
const T& payload_as(const EditOp& op) {
  const T* p = std::get_if<T>(&op.payload);
  if (!p) bad(std::string(to_string(op.subtype)) + " has the wrong payload type");
  return *p;
}

void expect_target(const EditOp& op, TargetKind kind, std::initializer_list<std::string_view> names = {}) {
  if (op.target.kind != kind) bad(std::string(to_string(op.subtype)) + " has the wrong target kind");
  if (kind == TargetKind::series_by_name && op.target.name.empty()) bad("series target without a name");
  if (names.size() == 0) return;
  for (auto n : names)
    if (op.target.name == n) return;
  bad("'" + op.target.name + "' is not a valid target for " + std::string(to_string(op.subtype)));
}

void expect_pool(const std::vector<std::string>& pool_values, const std::string& value, std::string_view what) {
  if (!pool::contains(pool_values, value))
    throw Error(ErrorKind::PoolViolation, "'" + value + "' is not a valid " + std::string(what), std::string(what));
}

void expect_names(const std::vector<std::string>& names, std::string_view what) {
  if (names.empty()) bad(std::string(what) + " list is empty");
  std::set<std::string_view> seen;
  for (const auto& n : names)
    if (n.empty() || !seen.insert(n).second) bad(std::string(what) + " list has an empty or repeated name");
}

}  // namespace

EditCategory category_of(EditSubtype subtype) {
  switch (subtype) {
    case EditSubtype::series_color:
    case EditSubtype::line_style:
    case EditSubtype::line_marker:
    case EditSubtype::bar_hatch:
    case EditSubtype::font_name:
    case EditSubtype::font_size:
    case EditSubtype::tick_label_size: return EditCategory::style;
    case EditSubtype::grid_visibility:
    case EditSubtype::legend_position: return EditCategory::layout;
    case EditSubtype::chart_type: return EditCategory::format;
    default: return EditCategory::data_centric;
  }
}

std::string_view to_string(EditCategory category) {
  switch (category) {
    case EditCategory::style: return "style";
    case EditCategory::layout: return "layout";
    case EditCategory::format: return "format";
    case EditCategory::data_centric: return "data_centric";
  }
  return "style";
}

std::string_view to_string(EditSubtype subtype) {
  for (auto [s, name] : kSubtypeNames)
    if (s == subtype) return name;
  return "unknown";
}

std::optional<EditCategory> parse_category(std::string_view text) {
  for (auto c : kCategories)
    if (to_string(c) == text) return c;
  return std::nullopt;
}

std::optional<EditSubtype> parse_subtype(std::string_view text) {
  for (auto [s, name] : kSubtypeNames)
    if (name == text) return s;
  return std::nullopt;
}

std::string form_of(const EditOp& op) {
  if (const auto* f = std::get_if<SeriesFilter>(&op.payload)) return f->keep ? "keep" : "drop";
  if (const auto* v = std::get_if<SetVisible>(&op.payload)) return v->visible ? "show" : "hide";
  return {};
}

void check_op(const EditOp& op) {
  switch (op.subtype) {
    case EditSubtype::series_color:
      expect_target(op, TargetKind::series_by_name);
      expect_pool(pool::kColors, payload_as<SetValue>(op).value, "color");
      break;
    case EditSubtype::line_style:
      expect_target(op, TargetKind::series_by_name);
      expect_pool(pool::kLineStyles, payload_as<SetValue>(op).value, "line style");
      break;
    case EditSubtype::line_marker:
      expect_target(op, TargetKind::series_by_name);
      expect_pool(pool::kMarkers, payload_as<SetValue>(op).value, "marker");
      break;
    case EditSubtype::bar_hatch:
      expect_target(op, TargetKind::series_by_name);
      expect_pool(pool::kHatches, payload_as<SetValue>(op).value, "hatch");
      break;
    case EditSubtype::font_name:
      expect_target(op, TargetKind::text_element, {"title", "x_label", "y_label"});
      expect_pool(pool::kFonts, payload_as<SetValue>(op).value, "font name");
      break;
    case EditSubtype::font_size:
      expect_target(op, TargetKind::text_element, {"title", "x_label", "y_label"});
      expect_pool(pool::kFontSizes, payload_as<SetValue>(op).value, "font size");
      break;
    case EditSubtype::tick_label_size:
      expect_target(op, TargetKind::text_element, {"x_ticks", "y_ticks"});
      expect_pool(pool::kTickLabelSizes, payload_as<SetValue>(op).value, "tick label size");
      break;
    case EditSubtype::grid_visibility:
      expect_target(op, TargetKind::text_element, {"grid"});
      payload_as<SetVisible>(op);
      break;
    case EditSubtype::legend_position: {
      expect_target(op, TargetKind::text_element, {"legend"});
      int loc = payload_as<SetLegendLoc>(op).loc;
      if (!pool::contains(pool::kLegendLocs, loc))
        throw Error(ErrorKind::PoolViolation, "legend location " + std::to_string(loc) + " is not in the pool",
                    "legend_params.loc");
      break;
    }
    case EditSubtype::chart_type: {
      expect_target(op, TargetKind::global);
      const auto& c = payload_as<ConvertType>(op);
      if (is_bar(c.from) == is_bar(c.to)) bad("format conversion must switch between line and bar");
      break;
    }
    case EditSubtype::range_filter: {
      expect_target(op, TargetKind::global);
      const auto& r = payload_as<RangeFilter>(op);
      if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi) bad("range bounds must satisfy lo <= hi");
      break;
    }
    case EditSubtype::column_filter:
      expect_target(op, TargetKind::global);
      expect_names(payload_as<ColumnFilter>(op).columns, "column");
      break;
    case EditSubtype::series_filter:
      expect_target(op, TargetKind::global);
      expect_names(payload_as<SeriesFilter>(op).series, "series");
      break;
    case EditSubtype::upsert_point: {
      expect_target(op, TargetKind::series_by_name);
      const auto& p = payload_as<UpsertPoint>(op);
      if (p.column.empty() || trim(p.column) != p.column || p.column.find('|') != std::string::npos)
        bad("invalid column name '" + p.column + "'");
      if (!std::isfinite(p.value)) bad("value must be finite");
      break;
    }
    case EditSubtype::upsert_series: {
      expect_target(op, TargetKind::global);
      const auto& s = payload_as<UpsertSeries>(op);
      if (s.name.empty() || trim(s.name) != s.name || s.name.find('|') != std::string::npos)
        bad("invalid series name '" + s.name + "'");
      if (s.values.empty()) bad("series needs at least one value");
      for (double v : s.values)
        if (!std::isfinite(v)) bad("values must be finite");
      break;
    }
  }
}

namespace {

std::string_view to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::series_by_name: return "series_by_name";
    case TargetKind::text_element: return "text_element";
    case TargetKind::global: return "global";
  }
  return "global";
}

}  // namespace

OrderedJson to_json(const EditOp& op) {
  OrderedJson j;
  j["category"] = to_string(op.category());
  j["subtype"] = to_string(op.subtype);
  j["target"] = {{"kind", to_string(op.target.kind)}, {"name", op.target.name}};
  OrderedJson p;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SetValue>) p["value"] = v.value;
        if constexpr (std::is_same_v<T, SetVisible>) p["visible"] = v.visible;
        if constexpr (std::is_same_v<T, SetLegendLoc>) p["loc"] = v.loc;
        if constexpr (std::is_same_v<T, ConvertType>) {
          p["from"] = to_string(v.from);
          p["to"] = to_string(v.to);
        }
        if constexpr (std::is_same_v<T, RangeFilter>) {
          p["lo"] = v.lo;
          p["hi"] = v.hi;
        }
        if constexpr (std::is_same_v<T, ColumnFilter>) p["columns"] = v.columns;
        if constexpr (std::is_same_v<T, SeriesFilter>) {
          p["mode"] = v.keep ? "keep" : "drop";
          p["series"] = v.series;
        }
        if constexpr (std::is_same_v<T, UpsertPoint>) {
          p["column"] = v.column;
          p["value"] = v.value;
        }
        if constexpr (std::is_same_v<T, UpsertSeries>) {
          p["name"] = v.name;
          p["values"] = v.values;
        }
      },
      op.payload);
  j["payload"] = std::move(p);
  return j;
}

EditOp edit_op_from_json(const Json& j) {
  try {
    auto subtype = parse_subtype(j.at("subtype").get<std::string>());
    if (!subtype) throw Error(ErrorKind::UnknownSubtype, "unknown edit subtype", "subtype");
    EditOp op{*subtype, {}, SetValue{}};
    const auto& t = j.at("target");
    auto kind = t.at("kind").get<std::string>();
    op.target.kind = kind == "series_by_name" ? TargetKind::series_by_name
                     : kind == "text_element" ? TargetKind::text_element
                                              : TargetKind::global;
    op.target.name = t.at("name").get<std::string>();
    const auto& p = j.at("payload");
    switch (op.subtype) {
      case EditSubtype::grid_visibility: op.payload = SetVisible{p.at("visible").get<bool>()}; break;
      case EditSubtype::legend_position: op.payload = SetLegendLoc{p.at("loc").get<int>()}; break;
      case EditSubtype::chart_type: {
        auto from = parse_chart_type(p.at("from").get<std::string>());
        auto to = parse_chart_type(p.at("to").get<std::string>());
        if (!from || !to) bad("unknown chart type");
        op.payload = ConvertType{*from, *to};
        break;
      }
      case EditSubtype::range_filter: op.payload = RangeFilter{p.at("lo").get<double>(), p.at("hi").get<double>()}; break;
      case EditSubtype::column_filter: op.payload = ColumnFilter{p.at("columns").get<std::vector<std::string>>()}; break;
      case EditSubtype::series_filter:
        op.payload = SeriesFilter{p.at("mode").get<std::string>() == "keep", p.at("series").get<std::vector<std::string>>()};
        break;
      case EditSubtype::upsert_point:
        op.payload = UpsertPoint{p.at("column").get<std::string>(), p.at("value").get<double>()};
        break;
      case EditSubtype::upsert_series:
        op.payload = UpsertSeries{p.at("name").get<std::string>(), p.at("values").get<std::vector<double>>()};
        break;
      default: op.payload = SetValue{p.at("value").get<std::string>()}; break;
    }
    check_op(op);
    return op;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::SchemaViolation, std::string("invalid edit JSON: ") + e.what());
  }
}

}  // namespace chartforge
