#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chartforge/attributes.hpp"
#include "chartforge/edit.hpp"
#include "chartforge/prompt.hpp"
#include "support.hpp"

using namespace cftest;

namespace {

ErrorKind error_kind(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

Json small_config(std::uint64_t seed, std::size_t per_cell) {
  Json counts;
  for (const char* t : {"line", "grouped_vertical_bar", "stacked_vertical_bar"})
    for (const char* c : {"style", "layout", "format", "data_centric"}) counts[t][c] = per_cell;
  return Json{{"seed", seed}, {"tables", (source_dir() / "data" / "tables").string()}, {"counts", counts}};
}

SynthConfig config_from(const Json& j) { return SynthConfig::from_json(j, source_dir()); }

std::string manifest_text(const fs::path& dir) { return read_file(dir / "manifest.jsonl"); }

}  // namespace

TEST_CASE("CSV with one series") {
  const DataTable t = parse_csv_table("Country Name,2004,1997\nOECD members,23.66,21.08\n");
  CHECK(t.corner == "Country Name");
  CHECK(t.columns == std::vector<std::string>{"2004", "1997"});
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].name == "OECD members");
  CHECK(t.rows[0].values == std::vector<Cell>{23.66, 21.08});
  const DataTable quoted = parse_csv_table("Region,\"Q1, early\",Q2\r\n\"East, North\",1,2\r\n");
  CHECK(quoted.columns[0] == "Q1, early");
  CHECK(quoted.rows[0].name == "East, North");
  CHECK(error_kind([] { parse_csv_table("a,b,c\nr,1\n"); }) == ErrorKind::RaggedRow);
  CHECK(error_kind([] { parse_csv_table("a,b\nr,abc\n"); }) == ErrorKind::InvalidNumber);
  CHECK(error_kind([] { parse_csv_table("a,b\n"); }) == ErrorKind::EmptyTable);
}

TEST_CASE("ingesting a directory") {
  TempDir dir("ingest");
  CHECK(error_kind([&] { ingest_tables(dir.path()); }) == ErrorKind::NoTablesFound);
  write_file(dir / "b_good.csv", "Year,2001,2002\nA,1,2\nB,3,4\n");
  write_file(dir / "a_ragged.csv", "Year,2001,2002\nA,1\n");
  write_file(dir / "c_good.csv", "Item,x\nZ,5\n");
  write_file(dir / "notes.txt", "not a table");
  const IngestResult r = ingest_tables(dir.path());
  REQUIRE(r.tables.size() == 2);
  CHECK(r.tables[0].name == "b_good");
  CHECK(r.tables[1].name == "c_good");
  REQUIRE(r.skipped.size() == 1);
  CHECK(r.skipped[0].file.filename() == "a_ragged.csv");
  CHECK(!r.skipped[0].reason.empty());
}

TEST_CASE("oversized tables are cut down") {
  TempDir dir("big");
  std::string csv = "Year";
  for (int c = 0; c < 30; ++c) csv += "," + std::to_string(1990 + c);
  csv += "\n";
  for (int r = 0; r < 10; ++r) {
    csv += "S" + std::to_string(r);
    for (int c = 0; c < 30; ++c) csv += "," + std::to_string(r + c);
    csv += "\n";
  }
  write_file(dir / "big.csv", csv);
  const IngestResult res = ingest_tables(dir.path());
  REQUIRE(res.tables.size() == 1);
  CHECK(res.tables[0].table.row_count() == kMaxSeries);
  CHECK(res.tables[0].table.column_count() == kMaxColumns);
  CHECK(!res.warnings.empty());
  CHECK(ingest_tables(dir.path()).tables[0].table == res.tables[0].table);
}

TEST_CASE("sampled specs are pool-valid and deterministic") {
  const IngestResult ing = ingest_tables(source_dir() / "data" / "tables");
  REQUIRE(ing.tables.size() >= 10);
  for (const auto& src : ing.tables) {
    for (ChartType type : {ChartType::line, ChartType::grouped_vertical_bar, ChartType::stacked_vertical_bar}) {
      if (type == ChartType::stacked_vertical_bar && !src.table.non_negative()) {
        Rng rng(1);
        CHECK(error_kind([&] { sample_spec(src, type, rng); }) == ErrorKind::InvalidForChartType);
        continue;
      }
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Rng a(seed), b(seed);
        const ChartSpec s = sample_spec(src, type, a);
        CHECK(s == sample_spec(src, type, b));
        CHECK_NOTHROW(s.validate());
        CHECK(parse_spec(serialize_spec(s), false).spec == s);
        const auto& colors = s.colors();
        CHECK(std::set<std::string>(colors.begin(), colors.end()).size() == colors.size());
      }
    }
  }
  const ChartSpec three = country_spec(ChartType::line, 77);
  CHECK(three.series_count() == 3);
  CHECK(std::set<std::string>(three.colors().begin(), three.colors().end()).size() == 3);
}

TEST_CASE("reference preset at one percent") {
  const SynthConfig cfg = SynthConfig::load(source_dir() / "data" / "presets" / "reference_1pct.json");
  const std::map<std::pair<std::string, std::string>, std::size_t> expected{
      {{"line", "style"}, 177},
      {{"line", "layout"}, 23},
      {{"line", "data_centric"}, 41},
      {{"line", "format"}, 100},
      {{"stacked_vertical_bar", "style"}, 88},
      {{"stacked_vertical_bar", "layout"}, 12},
      {{"stacked_vertical_bar", "data_centric"}, 42},
      {{"stacked_vertical_bar", "format"}, 61},
      {{"grouped_vertical_bar", "style"}, 67},
      {{"grouped_vertical_bar", "layout"}, 11},
      {{"grouped_vertical_bar", "data_centric"}, 50},
      {{"grouped_vertical_bar", "format"}, 78},
  };
  for (const auto& [key, n] : expected) {
    const CellKey k{*parse_chart_type(key.first), *parse_category(key.second)};
    CHECK_MESSAGE(cfg.counts.at(k) == n, key.first << "/" << key.second);
  }
  CHECK(cfg.total() == 750);
  const SynthConfig full = SynthConfig::load(source_dir() / "data" / "presets" / "reference_full.json");
  CHECK(full.counts.at({ChartType::line, EditCategory::style}) == 17663);
  CHECK(full.counts.at({ChartType::line, EditCategory::layout}) == 2331);
  CHECK(full.counts.at({ChartType::line, EditCategory::data_centric}) == 4082);
  CHECK(full.counts.at({ChartType::line, EditCategory::format}) == 9996);
}

TEST_CASE("rescaling to a total") {
  const SynthConfig full = SynthConfig::load(source_dir() / "data" / "presets" / "reference_full.json");
  for (std::size_t total : {1u, 12u, 600u, 999u, 5000u}) {
    const auto scaled = scale_to_total(full.counts, total);
    std::size_t sum = 0;
    for (const auto& [k, v] : scaled) {
      sum += v;
      const double exact = static_cast<double>(full.counts.at(k)) * total / full.total();
      CHECK(std::abs(static_cast<double>(v) - exact) < 1.0);
    }
    CHECK(sum == total);
  }
  CHECK(SynthConfig::load(source_dir() / "data" / "presets" / "fixture_600.json").total() == 600);
  const auto half = scale_counts({{{ChartType::line, EditCategory::style}, 5}}, 0.5);
  CHECK(half.at({ChartType::line, EditCategory::style}) == 3);
}

TEST_CASE("config validation") {
  Json j = small_config(1, 1);
  j["counts"]["line"]["style"] = -1;
  CHECK(error_kind([&] { config_from(j); }) == ErrorKind::InvalidConfig);
  j = small_config(1, 0);
  CHECK(error_kind([&] { config_from(j); }) == ErrorKind::InvalidConfig);
  j = small_config(1, 1);
  j["counts"]["pie"] = Json{{"style", 1}};
  CHECK(error_kind([&] { config_from(j); }) == ErrorKind::InvalidConfig);
  j = small_config(1, 1);
  j["scale"] = 0.5;
  j["total"] = 10;
  CHECK(error_kind([&] { config_from(j); }) == ErrorKind::InvalidConfig);
}

TEST_CASE("synthesis is deterministic and self-consistent") {
  TempDir a("synth-a"), b("synth-b");
  SynthConfig cfg = config_from(small_config(7, 3));
  const SynthResult ra = synthesize(cfg, a.path());
  cfg.workers = 1;
  const SynthResult rb = synthesize(cfg, b.path());
  CHECK(manifest_text(a.path()) == manifest_text(b.path()));
  CHECK(read_file(a / "stats.json") == read_file(b / "stats.json"));
  CHECK(ra.stats.produced == 36);
  CHECK(ra.stats.failed == 0);
  for (const auto& [k, n] : cfg.counts) CHECK(ra.stats.counts.at(k) == n);

  const auto records = read_manifest(a / "manifest.jsonl");
  REQUIRE(records.size() == 36);
  std::set<std::string> ids;
  for (const auto& rec : records) {
    CAPTURE(rec.id);
    CHECK(ids.insert(rec.id).second);
    CHECK(rec.id.size() == 6);
    const ChartSpec src = load_spec(a / rec.source_spec);
    const ChartSpec gold = load_spec(a / rec.edited_spec);
    CHECK(src.chart_type() == rec.chart_type);
    CHECK(rec.op.subtype == rec.subtype);
    CHECK(category_of(rec.subtype) == rec.category);
    const EditOp op = parse_prompt(rec.prompt, src);
    CHECK(op == rec.op);
    const EditResult r = apply_edit(src, op);
    CHECK(r.edited == gold);
    CHECK(std::vector<std::string>(r.changed_keys.begin(), r.changed_keys.end()) == rec.changed_keys);
    CHECK(!rec.changed_keys.empty());
    CHECK(render_prompt(rec.op, rec.variation, mix_seed(7, 0)) .size() > 0);
    for (const auto& img : {rec.source_image, rec.edited_image}) {
      CHECK(fs::exists(a / img));
      CHECK(fs::exists((a / img).replace_extension(".svg")));
    }
  }
  const Json stats = Json::parse(read_file(a / "stats.json"));
  CHECK(stats["requested"] == 36);
  CHECK(stats["produced"] == 36);
}

TEST_CASE("a limited run is a prefix of the full run") {
  TempDir full("synth-full"), part("synth-part");
  SynthConfig cfg = config_from(small_config(11, 2));
  cfg.write_images = false;
  synthesize(cfg, full.path());
  cfg.limit = 7;
  const SynthResult r = synthesize(cfg, part.path());
  CHECK(r.records.size() == 7);
  const auto all = read_manifest(full / "manifest.jsonl");
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    CHECK(r.records[i].id == all[i].id);
    CHECK(r.records[i].prompt == all[i].prompt);
    CHECK(read_file(part / r.records[i].edited_spec) == read_file(full / all[i].edited_spec));
  }
}

TEST_CASE("different seeds give different datasets") {
  TempDir a("seed-a"), b("seed-b");
  SynthConfig cfg = config_from(small_config(1, 2));
  cfg.write_images = false;
  synthesize(cfg, a.path());
  cfg.seed = 2;
  synthesize(cfg, b.path());
  CHECK(manifest_text(a.path()) != manifest_text(b.path()));
}

TEST_CASE("subtype frequencies follow the weights") {
  TempDir dir("weights");
  Json j = small_config(3, 0);
  j["counts"] = Json{{"line", {{"style", 1500}}}, {"grouped_vertical_bar", {{"style", 1500}}}};
  SynthConfig cfg = config_from(j);
  cfg.write_images = false;
  const SynthResult r = synthesize(cfg, dir.path());
  for (ChartType type : {ChartType::line, ChartType::grouped_vertical_bar}) {
    const auto subtypes = applicable_subtypes(type, EditCategory::style);
    double total_weight = 0;
    for (auto st : subtypes) total_weight += subtype_weight(st, cfg.oversample);
    std::map<EditSubtype, double> seen;
    for (const auto& rec : r.records)
      if (rec.chart_type == type) seen[rec.subtype] += 1.0;
    for (auto st : subtypes) {
      CAPTURE(to_string(st));
      const double share = subtype_weight(st, cfg.oversample) / total_weight;
      CHECK(std::abs(seen[st] / 1500 - share) <= 0.02);
      CHECK(std::abs(seen[st] - 1500 * share) < 1.0);
    }
  }
  CHECK(subtype_weight(EditSubtype::line_marker, 3.0) == 3.0);
  CHECK(subtype_weight(EditSubtype::bar_hatch, 3.0) == 3.0);
  CHECK(subtype_weight(EditSubtype::series_color, 3.0) == 1.0);
}

TEST_CASE("prompt variations are spread over all forms") {
  TempDir dir("variations");
  SynthConfig cfg = config_from(small_config(5, 40));
  cfg.write_images = false;
  const SynthResult r = synthesize(cfg, dir.path());
  std::map<std::size_t, std::size_t> seen;
  for (const auto& rec : r.records) ++seen[rec.variation];
  CHECK(seen.size() == 6);
  for (const auto& [v, n] : seen) CHECK(n > r.records.size() / 12);
}

TEST_CASE("titles from file names") {
  CHECK(title_from_stem("import_share") == "Import Share");
  CHECK(title_from_stem("co2_per_capita") == "Co2 Per Capita");
}
