#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chartforge/attributes.hpp"
#include "chartforge/json_repair.hpp"
#include "chartforge/pool.hpp"
#include "chartforge/table.hpp"
#include "support.hpp"

using namespace cftest;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

std::string error_path(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.path();
  }
  return "<no error>";
}

DataTable oecd_table() {
  DataTable t;
  t.corner = "Country Name";
  t.columns = {"2004", "1997"};
  t.rows = {{"OECD members", {23.66, 21.08}}};
  return t;
}

std::string strip_ws(const std::string& s) {
  std::string out;
  bool in_string = false;
  for (char c : s) {
    if (c == '"') in_string = !in_string;
    if (!in_string && std::isspace(static_cast<unsigned char>(c))) continue;
    out += c;
  }
  return out;
}

}  // namespace

TEST_CASE("encode_table matches the imports string form") {
  CHECK(encode_table(oecd_table()) == "Country Name | 2004 | 1997 <0x0A> OECD members | 23.66 | 21.08 <0x0A> ");
}

TEST_CASE("encode_table on a minimal table") {
  DataTable t{"X", {"A"}, {{"s", {5.0}}}};
  CHECK(encode_table(t) == "X | A <0x0A> s | 5 <0x0A> ");
}

TEST_CASE("decode_table inverts encode_table") {
  CHECK(decode_table(encode_table(oecd_table())) == oecd_table());
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    DataTable t = random_table(rng, {7, 20, true, true, true});
    CHECK(decode_table(encode_table(t)) == t);
  }
}

TEST_CASE("decode_table rejects a short row with its index") {
  auto f = [] { decode_table("a | b | c <0x0A> r | 1 <0x0A> "); };
  CHECK(kind_of(f) == ErrorKind::RaggedRow);
  CHECK(error_path(f) == "1");
}

TEST_CASE("decode_table rejects empty tables") {
  CHECK(kind_of([] { decode_table(""); }) == ErrorKind::EmptyTable);
  CHECK(kind_of([] { decode_table("a | b <0x0A> "); }) == ErrorKind::EmptyTable);
}

TEST_CASE("table invariants") {
  DataTable dup = oecd_table();
  dup.rows.push_back(dup.rows[0]);
  CHECK_THROWS_AS(dup.validate(), Error);
  DataTable ragged = oecd_table();
  ragged.rows[0].values.pop_back();
  CHECK(kind_of([&] { ragged.validate(); }) == ErrorKind::RaggedRow);
}

TEST_CASE("numbers print in shortest form") {
  CHECK(format_number(23.66) == "23.66");
  CHECK(format_number(29.0) == "29");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_cell(std::nullopt) == "nan");
  CHECK(parse_cell("nan").value() == std::nullopt);
  CHECK(parse_cell("-1e3").value() == Cell(-1000.0));
  CHECK_FALSE(parse_cell("12abc").has_value());
}

TEST_CASE("property pool lists") {
  CHECK(pool::kColors == std::vector<std::string>{"b", "g", "r", "c", "m", "y", "k"});
  CHECK(pool::kMarkers == std::vector<std::string>{"o", "^", "s", "*", "None"});
  CHECK(pool::kLineStyles == std::vector<std::string>{"solid", "dashed", "dotted", "dense dotted", "loose dotted",
                                                      "dense dashed", "loose dashed"});
  CHECK(pool::kHatches == std::vector<std::string>{"xx", ".", "*", "/", "\\", "None"});
  CHECK(pool::kFonts == std::vector<std::string>{"monospace", "Serif", "sans-serif", "Arial Black"});
  CHECK(pool::kFontSizes == std::vector<std::string>{"medium", "large", "x-large"});
  CHECK(pool::kTickLabelSizes == std::vector<std::string>{"x-small", "small", "medium", "large"});
  CHECK(pool::kLegendLocs == std::vector<int>{0, 1, 2, 3, 4, 8, 9});
  CHECK(pool::kLegendColumns == std::vector<int>{1, 2, 3});
  CHECK(pool::kTickRotations == std::vector<int>{0, 45});
  CHECK(pool::kGridAxes == std::vector<std::string>{"both", "x", "y"});
  CHECK(pool::kGridLineStyles == std::vector<std::string>{"solid", "dashed"});
}

TEST_CASE("property pool editability") {
  const auto& p = PropertyPool::instance();
  CHECK(p.entries().size() == 19);
  auto editable = [&](PoolScope scope, const char* key) {
    const auto* e = p.find(scope, key);
    REQUIRE(e != nullptr);
    return e->editable;
  };
  CHECK_FALSE(editable(PoolScope::global, "global_properties.legend_params.ncol"));
  CHECK_FALSE(editable(PoolScope::global, "global_properties.x_tick_params.rotation"));
  CHECK_FALSE(editable(PoolScope::global, "global_properties.grid_params.axis"));
  CHECK_FALSE(editable(PoolScope::global, "global_properties.grid_params.linestyle"));
  CHECK(editable(PoolScope::global, "global_properties.grid_params.visible"));
  CHECK(editable(PoolScope::global, "global_properties.legend_params.loc"));
  CHECK(editable(PoolScope::line, "line_properties.markers[]"));
  CHECK(editable(PoolScope::bar, "bar_properties.hatches[]"));
  const auto* grid = p.find(PoolScope::global, "global_properties.grid_params.visible");
  CHECK(grid->values == std::vector<Json>{true, false});
}

TEST_CASE("imports spec needs repair for its dash-dot style") {
  const std::string text = read_file(fixture("imports_line.json"));
  auto strict = [&] { parse_spec(text, false); };
  CHECK(kind_of(strict) == ErrorKind::PoolViolation);
  CHECK(error_path(strict) == "line_properties.linestyles[0]");

  ParsedSpec parsed = parse_spec(text, true);
  REQUIRE(parsed.repairs.size() == 1);
  CHECK(parsed.repairs[0].path == "line_properties.linestyles[0]");
  const ChartSpec& s = parsed.spec;
  CHECK(s.chart_type() == ChartType::line);
  CHECK(s.series_axis == SeriesAxis::columns);
  CHECK(s.series_names() == std::vector<std::string>{"2004", "1997"});
  CHECK(s.colors() == std::vector<std::string>{"k", "r"});
  CHECK(std::get<LineProps>(s.series).linestyles == std::vector<std::string>{"solid", "solid"});
  CHECK(s.global.legend.loc == 1);
  CHECK(s.data.rows.size() == 3);
  CHECK(s.data.rows[1].values[1] == Cell(29.0));
}

TEST_CASE("imports spec round-trips") {
  const ChartSpec s = imports_spec();
  const std::string text = serialize_spec(s);
  CHECK(parse_spec(text, false).spec == s);
  CHECK(text.find("OECD members | 23.66 | 21.08") != std::string::npos);
  CHECK(text.find("23.660") == std::string::npos);
}

TEST_CASE("canonical key order and layout") {
  const std::string text = serialize_spec(default_spec());
  CHECK(strip_ws(text).rfind("{\"underlying_data\":", 0) == 0);
  CHECK(text.rfind("{\n    \"underlying_data\": ", 0) == 0);
  const std::vector<std::string> order{"\"underlying_data\"", "\"chart_title\"", "\"x_axis_title\"",
                                       "\"y_axis_title\"", "\"global_properties\"", "\"line_properties\""};
  std::size_t at = 0;
  for (const auto& key : order) {
    auto pos = text.find(key);
    REQUIRE(pos != std::string::npos);
    CHECK(pos >= at);
    at = pos;
  }
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("empty object repairs to the default spec") {
  ParsedSpec parsed = parse_spec("{}", true);
  CHECK(parsed.spec == default_spec());
  CHECK(parsed.spec.series_names() == std::vector<std::string>{"series_0"});
  std::set<std::string> paths;
  for (const auto& r : parsed.repairs) paths.insert(r.path);
  for (const char* key : {"underlying_data", "chart_title", "x_axis_title", "y_axis_title", "global_properties"})
    CHECK(paths.count(key) == 1);
  CHECK_THROWS_AS(parse_spec("{}", false), Error);
}

TEST_CASE("legend loc outside the pool") {
  Json j = Json::parse(serialize_spec(default_spec()));
  j["global_properties"]["legend_params"]["loc"] = 7;
  auto f = [&] { parse_spec(j.dump(), false); };
  CHECK(kind_of(f) == ErrorKind::PoolViolation);
  CHECK(error_path(f) == "global_properties.legend_params.loc");
  ParsedSpec fixed = parse_spec(j.dump(), true);
  CHECK(fixed.spec.global.legend.loc == 1);
}

TEST_CASE("malformed and schema errors") {
  CHECK(kind_of([] { parse_spec("{\"chart_title\": ", false); }) == ErrorKind::MalformedJson);
  CHECK(kind_of([] { parse_spec("[1, 2]", false); }) == ErrorKind::SchemaViolation);
  Json j = Json::parse(serialize_spec(default_spec()));
  j["chart_title"] = 5;
  CHECK(kind_of([&] { parse_spec(j.dump(), false); }) == ErrorKind::SchemaViolation);
  j = Json::parse(serialize_spec(default_spec()));
  j["line_properties"]["colors"] = Json::array({"b", "r"});
  CHECK(kind_of([&] { parse_spec(j.dump(), false); }) == ErrorKind::SchemaViolation);
}

TEST_CASE("data_table is accepted as an input alias") {
  Json j = Json::parse(serialize_spec(imports_spec()));
  j["data_table"] = j["underlying_data"];
  j.erase("underlying_data");
  ChartSpec s = parse_spec(j.dump(), false).spec;
  CHECK(s == imports_spec());
  CHECK(serialize_spec(s).find("\"data_table\"") == std::string::npos);
}

TEST_CASE("every pool value is accepted and outsiders are rejected") {
  const std::string base = serialize_spec(default_spec());
  auto set_and_parse = [&](const Json::json_pointer& ptr, const Json& value) {
    Json j = Json::parse(base);
    j[ptr] = value;
    return parse_spec(j.dump(), false).spec;
  };
  struct Field {
    const char* ptr;
    std::vector<Json> values;
  };
  auto as_json = [](const auto& v) { return std::vector<Json>(v.begin(), v.end()); };
  const std::vector<Field> fields{
      {"/line_properties/colors/0", as_json(pool::kColors)},
      {"/line_properties/markers/0", as_json(pool::kMarkers)},
      {"/line_properties/linestyles/0", as_json(pool::kLineStyles)},
      {"/global_properties/x_label_params/fontname", as_json(pool::kFonts)},
      {"/global_properties/y_label_params/fontsize", as_json(pool::kFontSizes)},
      {"/global_properties/chart_title_params/fontname", as_json(pool::kFonts)},
      {"/global_properties/legend_params/loc", as_json(pool::kLegendLocs)},
      {"/global_properties/legend_params/ncol", as_json(pool::kLegendColumns)},
      {"/global_properties/x_tick_params/labelsize", as_json(pool::kTickLabelSizes)},
      {"/global_properties/y_tick_params/rotation", as_json(pool::kTickRotations)},
      {"/global_properties/grid_params/visible", {true, false}},
      {"/global_properties/grid_params/axis", as_json(pool::kGridAxes)},
      {"/global_properties/grid_params/linestyle", as_json(pool::kGridLineStyles)},
  };
  for (const auto& f : fields) {
    CAPTURE(f.ptr);
    const Json::json_pointer ptr(f.ptr);
    for (const auto& v : f.values) CHECK_NOTHROW(set_and_parse(ptr, v));
    const Json outsider = f.values.front().is_string() ? Json("dashdot") : Json(7);
    CHECK_THROWS_AS(set_and_parse(ptr, outsider), Error);
  }
  Json bar = Json::parse(serialize_spec(country_spec(ChartType::grouped_vertical_bar)));
  for (const auto& h : pool::kHatches) {
    bar["bar_properties"]["hatches"][0] = h;
    CHECK_NOTHROW(parse_spec(bar.dump(), false));
  }
  bar["bar_properties"]["hatches"][0] = "+";
  CHECK_THROWS_AS(parse_spec(bar.dump(), false), Error);
}

TEST_CASE("serialization round-trips random pool-valid specs") {
  Rng rng(2024);
  for (int i = 0; i < 500; ++i) {
    ChartSpec s = random_spec(rng, {7, 20, true, true, true});
    REQUIRE_NOTHROW(s.validate());
    const std::string text = serialize_spec(s);
    ParsedSpec back = parse_spec(text, false);
    CHECK(back.spec == s);
    CHECK(back.repairs.empty());
    CHECK(serialize_spec(back.spec) == text);
    CHECK(flatten_attributes(back.spec) == flatten_attributes(s));
  }
}

TEST_CASE("repair is idempotent on damaged text") {
  Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    const std::string text = serialize_spec(random_spec(rng));
    std::string damaged = text.substr(0, rng.index(text.size() + 1));
    if (rng.chance(0.3)) damaged += "#garbage";
    ParsedSpec once = parse_spec(damaged, true);
    ParsedSpec twice = parse_spec(serialize_spec(once.spec), true);
    CHECK(twice.repairs.empty());
    CHECK(twice.spec == once.spec);
  }
}

TEST_CASE("repair_json_text closes truncated documents") {
  CHECK(Json::parse(repair_json_text("{\"a\": [1, 2, ")) == Json::parse("{\"a\": [1, 2]}"));
  // a number at the very end may itself be cut short
  CHECK(Json::parse(repair_json_text("{\"a\": [1, 2")) == Json::parse("{\"a\": [1]}"));
  CHECK(Json::parse(repair_json_text("{\"a\": 1, \"b\"")) == Json::parse("{\"a\": 1}"));
  CHECK(Json::parse(repair_json_text("{\"a\": \"tex")) == Json::parse("{}"));
  CHECK(repair_json_text("garbage") == "{}");
  CHECK(Json::parse(repair_json_text("{\"a\": 1} trailing")) == Json::parse("{\"a\": 1}"));
}

TEST_CASE("flatten_attributes") {
  const AttributeMap m = flatten_attributes(imports_spec());
  REQUIRE(m.count("global_properties.legend_params.loc"));
  CHECK(std::get<double>(m.at("global_properties.legend_params.loc")) == 1.0);
  CHECK(std::get<std::string>(m.at("line_properties.colors[1]")) == "r");
  CHECK(std::get<std::string>(m.at("chart_title")) == "Imp");
  CHECK(m.count(std::string(kDataKey)) == 0);

  ChartSpec a = imports_spec();
  ChartSpec b = a;
  b.global.grid.visible = !b.global.grid.visible;
  CHECK(diff_specs(a, b) == std::set<std::string>{"global_properties.grid_params.visible"});
  CHECK(diff_specs(a, a).empty());
}
