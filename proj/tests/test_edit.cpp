#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chartforge/attributes.hpp"
#include "chartforge/edit.hpp"
#include "chartforge/table.hpp"
#include "support.hpp"

using namespace cftest;

namespace {

ErrorKind edit_error(const ChartSpec& spec, const EditOp& op) {
  try {
    apply_edit(spec, op);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("edit succeeded");
  return ErrorKind::Io;
}

EditOp series_op(EditSubtype st, const std::string& series, EditPayload payload) {
  return {st, {TargetKind::series_by_name, series}, std::move(payload)};
}

std::set<std::string> union_of(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

/// Ops that leave the spec as it is: re-setting current values.
std::vector<EditOp> identity_ops(const ChartSpec& s) {
  std::vector<EditOp> ops;
  const auto names = s.series_names();
  ops.push_back(series_op(EditSubtype::series_color, names[0], SetValue{s.colors()[0]}));
  ops.push_back({EditSubtype::grid_visibility, {TargetKind::text_element, "grid"}, SetVisible{s.global.grid.visible}});
  ops.push_back({EditSubtype::legend_position, {TargetKind::text_element, "legend"}, SetLegendLoc{s.global.legend.loc}});
  ops.push_back({EditSubtype::series_filter, {}, SeriesFilter{true, names}});
  ops.push_back({EditSubtype::chart_type, {}, ConvertType{s.chart_type(), s.chart_type()}});
  return ops;
}

std::vector<EditOp> drawn_ops(const ChartSpec& spec, Rng& rng) {
  std::vector<EditOp> ops;
  for (EditSubtype st : kSubtypes)
    if (auto op = draw_op(spec, st, rng)) ops.push_back(*op);
  return ops;
}

}  // namespace

TEST_CASE("recoloring one imports series") {
  const ChartSpec s = imports_spec();
  const EditResult r = apply_edit(s, series_op(EditSubtype::series_color, "1997", SetValue{"g"}));
  CHECK(r.edited.colors() == std::vector<std::string>{"k", "g"});
  CHECK(r.changed_keys == std::set<std::string>{"line_properties.colors[1]"});
  CHECK(r.removed_keys.empty());
  CHECK(diff_specs(s, r.edited) == r.changed_keys);
  CHECK(encode_table(r.edited.data) == encode_table(s.data));
}

TEST_CASE("keeping every series is the identity") {
  const ChartSpec s = country_spec();
  const EditResult r = apply_edit(s, {EditSubtype::series_filter, {}, SeriesFilter{true, s.series_names()}});
  CHECK(r.edited == s);
  CHECK(r.changed_keys.empty());
  CHECK(r.unchanged_keys == all_keys(s));
}

TEST_CASE("converting the imports chart to grouped bars") {
  const ChartSpec s = imports_spec();
  const EditOp op{EditSubtype::chart_type, {}, ConvertType{ChartType::line, ChartType::grouped_vertical_bar}};
  const EditResult r = apply_edit(s, op);
  CHECK(r.edited.chart_type() == ChartType::grouped_vertical_bar);
  CHECK(r.edited.data == s.data);
  CHECK(encode_table(r.edited.data) == encode_table(s.data));
  const auto& bar = std::get<BarProps>(r.edited.series);
  CHECK(bar.colors == std::vector<std::string>{"k", "r"});
  REQUIRE(bar.hatches.size() == 2);
  for (const auto& h : bar.hatches) CHECK(pool::contains(pool::kHatches, h));
  for (const char* key : {"global_properties.chart_type", "bar_properties.hatches[0]", "bar_properties.hatches[1]"})
    CHECK(r.changed_keys.count(key) == 1);
  CHECK(r.changed_keys.count(std::string(kDataKey)) == 0);
  CHECK(r.removed_keys.count("line_properties.markers[0]") == 1);
  CHECK(apply_edit(s, op).edited == r.edited);
  CHECK(diff_specs(s, r.edited) == union_of(r.changed_keys, r.removed_keys));
}

TEST_CASE("format conversion keeps the table through line to bar to line") {
  Rng rng(200);
  for (int i = 0; i < 200; ++i) {
    ChartSpec s = random_spec(rng);
    if (s.chart_type() != ChartType::line) {
      s = apply_edit(s, {EditSubtype::chart_type, {}, ConvertType{s.chart_type(), ChartType::line}}).edited;
    }
    const auto bar = rng.chance(0.5) && s.data.non_negative() ? ChartType::stacked_vertical_bar
                                                              : ChartType::grouped_vertical_bar;
    const ChartSpec b = apply_edit(s, {EditSubtype::chart_type, {}, ConvertType{ChartType::line, bar}}).edited;
    const ChartSpec l = apply_edit(b, {EditSubtype::chart_type, {}, ConvertType{bar, ChartType::line}}).edited;
    CHECK(l.data == s.data);
    CHECK(encode_table(l.data) == encode_table(s.data));
    CHECK(l.colors() == s.colors());
  }
}

TEST_CASE("changed keys equal the field-wise diff") {
  Rng rng(4242);
  std::size_t checked = 0;
  for (int i = 0; i < 150; ++i) {
    const ChartSpec s = random_spec(rng);
    auto ops = drawn_ops(s, rng);
    for (auto& op : identity_ops(s)) ops.push_back(op);
    for (const EditOp& op : ops) {
      EditResult r;
      try {
        r = apply_edit(s, op);
      } catch (const Error&) {
        continue;
      }
      CAPTURE(to_json(op).dump());
      const auto diff = diff_specs(s, r.edited);
      CHECK(diff == union_of(r.changed_keys, r.removed_keys));
      const auto keys = all_keys(r.edited);
      CHECK(union_of(r.changed_keys, r.unchanged_keys) == keys);
      for (const auto& k : r.changed_keys) CHECK(r.unchanged_keys.count(k) == 0);
      for (const auto& k : r.removed_keys) CHECK(keys.count(k) == 0);
      CHECK_NOTHROW(r.edited.validate());
      ++checked;
    }
  }
  CHECK(checked > 1500);
}

TEST_CASE("style and layout edits leave the table untouched") {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const ChartSpec s = random_spec(rng);
    for (const EditOp& op : drawn_ops(s, rng)) {
      if (op.category() != EditCategory::style && op.category() != EditCategory::layout) continue;
      const EditResult r = apply_edit(s, op);
      CHECK(encode_table(r.edited.data) == encode_table(s.data));
      CHECK(r.changed_keys.size() == 1);
      CHECK(r.changed_keys.count(std::string(kDataKey)) == 0);
    }
  }
}

TEST_CASE("set-to-value edits are idempotent") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const ChartSpec s = random_spec(rng);
    for (const EditOp& op : drawn_ops(s, rng)) {
      if (op.category() == EditCategory::data_centric) continue;
      const ChartSpec once = apply_edit(s, op).edited;
      const EditResult twice = apply_edit(once, op);
      CHECK(twice.edited == once);
      CHECK(twice.changed_keys.empty());
    }
  }
}

TEST_CASE("chained edits compose") {
  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    const ChartSpec s = random_spec(rng);
    auto first = drawn_ops(s, rng);
    const EditOp op1 = first[rng.index(first.size())];
    const ChartSpec mid = apply_edit(s, op1).edited;
    auto second = drawn_ops(mid, rng);
    const EditOp op2 = second[rng.index(second.size())];
    const ChartSpec step = apply_edit(mid, op2).edited;
    const std::vector<EditOp> both{op1, op2};
    CHECK(apply_edits(s, both) == step);
  }
}

TEST_CASE("edit randomness depends only on spec and op") {
  const ChartSpec s = country_spec();
  const EditOp add{EditSubtype::upsert_series, {}, UpsertSeries{"Europe", {10, 12}}};
  CHECK(edit_seed(s, add) == edit_seed(s, add));
  CHECK(apply_edit(s, add).edited == apply_edit(s, add).edited);
  const EditOp add2{EditSubtype::upsert_series, {}, UpsertSeries{"Europe", {10, 13}}};
  CHECK(edit_seed(s, add) != edit_seed(s, add2));
}

TEST_CASE("series filters resize the property arrays") {
  const ChartSpec s = country_spec();
  const EditResult r = apply_edit(s, {EditSubtype::series_filter, {}, SeriesFilter{false, {"South Asia"}}});
  CHECK(r.edited.series_names() == std::vector<std::string>{"OECD members", "Middle East & North Africa"});
  CHECK(r.edited.colors() == std::vector<std::string>{s.colors()[0], s.colors()[1]});
  CHECK(r.changed_keys.count(std::string(kDataKey)) == 1);
  CHECK(r.removed_keys == std::set<std::string>{"line_properties.colors[2]", "line_properties.linestyles[2]",
                                                "line_properties.markers[2]"});
  const EditResult keep = apply_edit(s, {EditSubtype::series_filter, {}, SeriesFilter{true, {"South Asia"}}});
  CHECK(keep.edited.series_names() == std::vector<std::string>{"South Asia"});
  CHECK(keep.edited.colors() == std::vector<std::string>{s.colors()[2]});
}

TEST_CASE("range and column filters") {
  const ChartSpec s = country_spec();
  const EditResult r = apply_edit(s, {EditSubtype::range_filter, {}, RangeFilter{2000, 2010}});
  CHECK(r.edited.category_names() == std::vector<std::string>{"2004"});
  CHECK(r.changed_keys == std::set<std::string>{std::string(kDataKey)});
  CHECK(edit_error(s, {EditSubtype::range_filter, {}, RangeFilter{1900, 1950}}) == ErrorKind::EmptyResult);
  const EditResult c = apply_edit(s, {EditSubtype::column_filter, {}, ColumnFilter{{"1997"}}});
  CHECK(c.edited.category_names() == std::vector<std::string>{"1997"});
  CHECK(edit_error(s, {EditSubtype::column_filter, {}, ColumnFilter{{"1980"}}}) == ErrorKind::TargetMissing);

  ChartSpec words = s;
  DataTable t = words.series_table();
  t.columns = {"Imports", "Exports"};
  words.set_series_table(t);
  CHECK(edit_error(words, {EditSubtype::range_filter, {}, RangeFilter{0, 10}}) == ErrorKind::TargetMissing);
}

TEST_CASE("upserting points") {
  const ChartSpec s = country_spec();
  const EditResult upd = apply_edit(s, series_op(EditSubtype::upsert_point, "South Asia", UpsertPoint{"1997", 15.5}));
  const DataTable t = upd.edited.series_table();
  CHECK(t.rows[2].values[1] == Cell(15.5));
  CHECK(t.columns == s.series_table().columns);

  const EditResult add = apply_edit(s, series_op(EditSubtype::upsert_point, "South Asia", UpsertPoint{"2010", 30}));
  const DataTable a = add.edited.series_table();
  CHECK(a.columns == std::vector<std::string>{"2004", "1997", "2010"});
  CHECK(a.rows[2].values[2] == Cell(30.0));
  CHECK(a.rows[0].values[2] == Cell(std::nullopt));
  CHECK(add.changed_keys == std::set<std::string>{std::string(kDataKey)});
  CHECK(edit_error(s, series_op(EditSubtype::upsert_point, "Atlantis", UpsertPoint{"2004", 1})) ==
        ErrorKind::TargetMissing);
}

TEST_CASE("upserting series") {
  const ChartSpec s = country_spec(ChartType::grouped_vertical_bar);
  const EditResult add = apply_edit(s, {EditSubtype::upsert_series, {}, UpsertSeries{"Europe", {10, 12}}});
  CHECK(add.edited.series_count() == 4);
  const auto& bar = std::get<BarProps>(add.edited.series);
  CHECK(bar.colors.size() == 4);
  CHECK(pool::contains(pool::kColors, bar.colors[3]));
  CHECK(pool::contains(pool::kHatches, bar.hatches[3]));
  CHECK(add.changed_keys.count(std::string(kDataKey)) == 1);
  CHECK(add.changed_keys.count("bar_properties.colors[3]") == 1);

  const EditResult rep = apply_edit(s, {EditSubtype::upsert_series, {}, UpsertSeries{"South Asia", {1, 2}}});
  CHECK(rep.edited.series_count() == 3);
  CHECK(rep.edited.series_table().rows[2].values == std::vector<Cell>{1.0, 2.0});
  CHECK(rep.changed_keys == std::set<std::string>{std::string(kDataKey)});
  CHECK(edit_error(s, {EditSubtype::upsert_series, {}, UpsertSeries{"Europe", {1, 2, 3}}}) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("edit preconditions") {
  const ChartSpec s = country_spec();
  CHECK(edit_error(s, series_op(EditSubtype::series_color, "Atlantis", SetValue{"r"})) == ErrorKind::TargetMissing);
  CHECK(edit_error(s, series_op(EditSubtype::series_color, "South Asia", SetValue{"purple"})) ==
        ErrorKind::PoolViolation);
  CHECK(edit_error(s, series_op(EditSubtype::bar_hatch, "South Asia", SetValue{"xx"})) ==
        ErrorKind::InvalidForChartType);
  CHECK(edit_error(country_spec(ChartType::grouped_vertical_bar),
                   {EditSubtype::chart_type, {}, ConvertType{ChartType::line, ChartType::stacked_vertical_bar}}) ==
        ErrorKind::InvalidForChartType);
  // only line <-> bar conversions exist
  CHECK(edit_error(s, {EditSubtype::chart_type, {}, ConvertType{ChartType::grouped_vertical_bar,
                                                                  ChartType::stacked_vertical_bar}}) ==
        ErrorKind::SchemaViolation);
  // already at the target type
  CHECK(apply_edit(s, {EditSubtype::chart_type, {}, ConvertType{ChartType::grouped_vertical_bar, ChartType::line}})
            .edited == s);

  ChartSpec neg = s;
  DataTable t = neg.series_table();
  t.rows[0].values[0] = -3.0;
  neg.set_series_table(t);
  CHECK(edit_error(neg, {EditSubtype::chart_type, {}, ConvertType{ChartType::line, ChartType::stacked_vertical_bar}}) ==
        ErrorKind::InvalidForChartType);
  CHECK_NOTHROW(apply_edit(neg, {EditSubtype::chart_type, {}, ConvertType{ChartType::line, ChartType::grouped_vertical_bar}}));
}

TEST_CASE("grid toggle diff") {
  const ChartSpec s = imports_spec();
  const EditResult r = apply_edit(s, {EditSubtype::grid_visibility, {TargetKind::text_element, "grid"}, SetVisible{false}});
  CHECK(diff_specs(s, r.edited) == std::set<std::string>{"global_properties.grid_params.visible"});
  CHECK(r.changed_keys == std::set<std::string>{"global_properties.grid_params.visible"});
}
