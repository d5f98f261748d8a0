#include "chartforge/synth.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <boost/tokenizer.hpp>

#include "chartforge/error.hpp"
#include "chartforge/prompt.hpp"
#include "chartforge/render.hpp"

namespace chartforge {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string(), path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string(), path.string());
  out << text;
}

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.index(i)]);
}

/// `n` draws from `values`, distinct while the pool allows.
std::vector<std::string> draw_distinct(const std::vector<std::string>& values, std::size_t n, Rng& rng) {
  std::vector<std::string> out;
  while (out.size() < n) {
    auto round = values;
    shuffle(round, rng);
    for (auto& v : round) {
      if (out.size() == n) break;
      out.push_back(std::move(v));
    }
  }
  return out;
}

template <class T>
T pick(const std::vector<T>& values, Rng& rng) {
  return values[rng.index(values.size())];
}

/// Pool value different from `current`.
std::string pick_other(const std::vector<std::string>& values, const std::string& current, Rng& rng) {
  std::vector<std::string> rest;
  for (const auto& v : values)
    if (v != current) rest.push_back(v);
  return pick(rest, rng);
}

double round2(double v) {
  double r = std::round(v * 100) / 100;
  return r == 0 ? 0.0 : r;
}

std::pair<double, double> value_range(const DataTable& t, bool non_negative) {
  double lo = 0, hi = 0;
  bool any = false;
  for (const auto& r : t.rows)
    for (const auto& v : r.values)
      if (v) {
        lo = any ? std::min(lo, *v) : *v;
        hi = any ? std::max(hi, *v) : *v;
        any = true;
      }
  if (non_negative) lo = std::max(lo, 0.0);
  if (!any || hi <= lo) hi = lo + 10;
  return {lo, hi};
}

std::string category_name(EditCategory c) { return std::string(to_string(c)); }

const std::vector<ChartType> kChartTypes{ChartType::line, ChartType::stacked_vertical_bar,
                                         ChartType::grouped_vertical_bar};

}  // namespace

// --- ingest -----------------------------------------------------------------

DataTable parse_csv_table(std::string_view csv) {
  using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(csv)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    try {
      Tokenizer tok(line, boost::escaped_list_separator<char>('\\', ',', '"'));
      for (const auto& cell : tok) cells.push_back(trim(cell));
    } catch (const boost::escaped_list_error& e) {
      throw Error(ErrorKind::SchemaViolation, std::string("bad CSV line: ") + e.what());
    }
    lines.push_back(std::move(cells));
  }
  if (lines.size() < 2) throw Error(ErrorKind::EmptyTable, "CSV needs a header row and at least one data row");
  DataTable t;
  t.corner = lines[0][0];
  t.columns.assign(lines[0].begin() + 1, lines[0].end());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != lines[0].size())
      throw Error(ErrorKind::RaggedRow,
                  "row " + std::to_string(i) + " has " + std::to_string(lines[i].size()) + " cells, expected " +
                      std::to_string(lines[0].size()),
                  std::to_string(i));
    DataRow row{lines[i][0], {}};
    for (std::size_t c = 1; c < lines[i].size(); ++c) {
      auto cell = parse_cell(lines[i][c]);
      if (!cell) throw Error(ErrorKind::InvalidNumber, "not a number: '" + lines[i][c] + "'", std::to_string(i));
      row.values.push_back(*cell);
    }
    t.rows.push_back(std::move(row));
  }
  t.validate();
  return t;
}

IngestResult ingest_tables(const fs::path& dir) {
  IngestResult out;
  std::vector<fs::path> files;
  if (fs::is_directory(dir))
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".csv") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    try {
      DataTable t = parse_csv_table(read_file(f));
      if (t.rows.size() > kMaxSeries) {
        out.warnings.push_back(f.filename().string() + ": " + std::to_string(t.rows.size()) +
                               " series truncated to " + std::to_string(kMaxSeries));
        t.rows.resize(kMaxSeries);
      }
      if (t.columns.size() > kMaxColumns) {
        out.warnings.push_back(f.filename().string() + ": " + std::to_string(t.columns.size()) +
                               " columns truncated to " + std::to_string(kMaxColumns));
        t.columns.resize(kMaxColumns);
        for (auto& r : t.rows) r.values.resize(kMaxColumns);
      }
      out.tables.push_back({f.stem().string(), std::move(t)});
    } catch (const Error& e) {
      out.skipped.push_back({f, std::string(to_string(e.kind())) + ": " + e.what()});
    }
  }
  if (out.tables.empty()) throw Error(ErrorKind::NoTablesFound, "no usable CSV tables in " + dir.string(), dir.string());
  return out;
}

std::string title_from_stem(std::string_view stem) {
  std::string out;
  bool start = true;
  for (char c : stem) {
    if (c == '_' || c == '-') {
      out += ' ';
      start = true;
    } else {
      out += start ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
      start = false;
    }
  }
  return out;
}

// --- sampling ---------------------------------------------------------------

ChartSpec sample_spec(const SourceTable& source, ChartType type, Rng& rng) {
  const DataTable& table = source.table;
  if (table.rows.size() > kMaxSeries)
    throw Error(ErrorKind::TooManySeries, source.name + " has " + std::to_string(table.rows.size()) + " series");
  if (type == ChartType::stacked_vertical_bar && !table.non_negative())
    throw Error(ErrorKind::InvalidForChartType, source.name + " has negative values and cannot be stacked");

  ChartSpec spec;
  spec.data = table;
  spec.chart_title = title_from_stem(source.name);
  spec.x_axis_title = table.corner;
  spec.y_axis_title = "Values";
  auto& g = spec.global;
  g.chart_type = type;
  g.x_label = {pick(pool::kFonts, rng), pick(pool::kFontSizes, rng)};
  g.y_label = {pick(pool::kFonts, rng), pick(pool::kFontSizes, rng)};
  g.legend = {pick(pool::kLegendLocs, rng), pick(pool::kLegendColumns, rng)};
  g.title.fontname = pick(pool::kFonts, rng);
  g.title.fontsize = pick(pool::kFontSizes, rng);
  g.x_tick.rotation = pick(pool::kTickRotations, rng);
  g.x_tick.labelsize = pick(pool::kTickLabelSizes, rng);
  g.x_tick.labelfontfamily = pick(pool::kFonts, rng);
  g.y_tick.rotation = pick(pool::kTickRotations, rng);
  g.y_tick.labelsize = pick(pool::kTickLabelSizes, rng);
  g.y_tick.labelfontfamily = pick(pool::kFonts, rng);
  g.grid.visible = rng.chance(0.5);
  g.grid.axis = pick(pool::kGridAxes, rng);
  g.grid.linestyle = pick(pool::kGridLineStyles, rng);

  const std::size_t n = table.rows.size();
  if (type == ChartType::line) {
    LineProps p;
    p.linestyles = draw_distinct(pool::kLineStyles, n, rng);
    p.markers = draw_distinct(pool::kMarkers, n, rng);
    p.colors = draw_distinct(pool::kColors, n, rng);
    spec.series = std::move(p);
  } else {
    BarProps p;
    p.hatches = draw_distinct(pool::kHatches, n, rng);
    p.colors = draw_distinct(pool::kColors, n, rng);
    spec.series = std::move(p);
  }
  spec.validate();
  return spec;
}

std::vector<EditSubtype> applicable_subtypes(ChartType type, EditCategory category) {
  using S = EditSubtype;
  switch (category) {
    case EditCategory::style:
      if (type == ChartType::line)
        return {S::series_color, S::line_style, S::line_marker, S::font_name, S::font_size, S::tick_label_size};
      return {S::series_color, S::bar_hatch, S::font_name, S::font_size, S::tick_label_size};
    case EditCategory::layout: return {S::grid_visibility, S::legend_position};
    case EditCategory::format: return {S::chart_type};
    case EditCategory::data_centric:
      return {S::range_filter, S::column_filter, S::series_filter, S::upsert_point, S::upsert_series};
  }
  return {};
}

double subtype_weight(EditSubtype subtype, double oversample) {
  switch (subtype) {
    case EditSubtype::line_style:
    case EditSubtype::line_marker:
    case EditSubtype::bar_hatch: return oversample;
    default: return 1.0;
  }
}

std::optional<EditOp> draw_op(const ChartSpec& spec, EditSubtype subtype, Rng& rng) {
  const auto names = spec.series_names();
  const DataTable table = spec.series_table();
  const bool stacked = spec.chart_type() == ChartType::stacked_vertical_bar;
  auto series_target = [&](std::size_t i) { return TargetRef{TargetKind::series_by_name, names[i]}; };
  const std::vector<std::string> text_elements{"title", "x_label", "y_label"};

  switch (subtype) {
    case EditSubtype::series_color: {
      auto i = rng.index(names.size());
      return EditOp{subtype, series_target(i), SetValue{pick_other(pool::kColors, spec.colors()[i], rng)}};
    }
    case EditSubtype::line_style:
    case EditSubtype::line_marker: {
      const auto* lp = std::get_if<LineProps>(&spec.series);
      if (!lp) return std::nullopt;
      auto i = rng.index(names.size());
      const bool style = subtype == EditSubtype::line_style;
      const auto& values = style ? pool::kLineStyles : pool::kMarkers;
      return EditOp{subtype, series_target(i),
                    SetValue{pick_other(values, style ? lp->linestyles[i] : lp->markers[i], rng)}};
    }
    case EditSubtype::bar_hatch: {
      const auto* bp = std::get_if<BarProps>(&spec.series);
      if (!bp) return std::nullopt;
      auto i = rng.index(names.size());
      return EditOp{subtype, series_target(i), SetValue{pick_other(pool::kHatches, bp->hatches[i], rng)}};
    }
    case EditSubtype::font_name:
    case EditSubtype::font_size: {
      const auto& element = pick(text_elements, rng);
      const auto& g = spec.global;
      const bool is_name = subtype == EditSubtype::font_name;
      std::string current;
      if (element == "title") current = is_name ? g.title.fontname : g.title.fontsize;
      if (element == "x_label") current = is_name ? g.x_label.fontname : g.x_label.fontsize;
      if (element == "y_label") current = is_name ? g.y_label.fontname : g.y_label.fontsize;
      return EditOp{subtype, {TargetKind::text_element, element},
                    SetValue{pick_other(is_name ? pool::kFonts : pool::kFontSizes, current, rng)}};
    }
    case EditSubtype::tick_label_size: {
      const bool x = rng.chance(0.5);
      const auto& current = x ? spec.global.x_tick.labelsize : spec.global.y_tick.labelsize;
      return EditOp{subtype, {TargetKind::text_element, x ? "x_ticks" : "y_ticks"},
                    SetValue{pick_other(pool::kTickLabelSizes, current, rng)}};
    }
    case EditSubtype::grid_visibility:
      return EditOp{subtype, {TargetKind::text_element, "grid"}, SetVisible{!spec.global.grid.visible}};
    case EditSubtype::legend_position: {
      std::vector<int> locs;
      for (int l : pool::kLegendLocs)
        if (l != spec.global.legend.loc) locs.push_back(l);
      return EditOp{subtype, {TargetKind::text_element, "legend"}, SetLegendLoc{pick(locs, rng)}};
    }
    case EditSubtype::chart_type: {
      const ChartType from = spec.chart_type();
      ChartType to = ChartType::line;
      if (from == ChartType::line) {
        const bool can_stack = table.non_negative();
        to = can_stack && rng.chance(0.5) ? ChartType::stacked_vertical_bar : ChartType::grouped_vertical_bar;
      }
      return EditOp{subtype, {}, ConvertType{from, to}};
    }
    case EditSubtype::range_filter: {
      std::vector<double> headers;
      for (const auto& c : table.columns) {
        auto v = parse_cell(c);
        if (!v || !*v) return std::nullopt;
        headers.push_back(**v);
      }
      if (headers.size() < 2) return std::nullopt;
      std::sort(headers.begin(), headers.end());
      const std::size_t n = headers.size();
      const std::size_t len = 1 + rng.index(n - 1);  // keep 1..n-1 columns
      const std::size_t start = rng.index(n - len + 1);
      return EditOp{subtype, {}, RangeFilter{headers[start], headers[start + len - 1]}};
    }
    case EditSubtype::column_filter: {
      const std::size_t n = table.columns.size();
      if (n < 2) return std::nullopt;
      std::vector<std::size_t> idx(n);
      for (std::size_t i = 0; i < n; ++i) idx[i] = i;
      shuffle(idx, rng);
      const std::size_t k = 1 + rng.index(std::min<std::size_t>(n - 1, 4));
      idx.resize(k);
      std::sort(idx.begin(), idx.end());
      ColumnFilter f;
      for (auto i : idx) f.columns.push_back(table.columns[i]);
      return EditOp{subtype, {}, f};
    }
    case EditSubtype::series_filter: {
      const std::size_t n = names.size();
      if (n < 2) return std::nullopt;
      std::vector<std::size_t> idx(n);
      for (std::size_t i = 0; i < n; ++i) idx[i] = i;
      shuffle(idx, rng);
      const std::size_t k = 1 + rng.index(std::min<std::size_t>(n - 1, 3));
      idx.resize(k);
      std::sort(idx.begin(), idx.end());
      SeriesFilter f{rng.chance(0.5), {}};
      for (auto i : idx) f.series.push_back(names[i]);
      return EditOp{subtype, {}, f};
    }
    case EditSubtype::upsert_point: {
      const auto i = rng.index(names.size());
      const auto [lo, hi] = value_range(table, stacked);
      std::string column;
      if (rng.chance(0.5)) {
        column = table.columns[rng.index(table.columns.size())];
      } else {
        std::optional<double> top;
        for (const auto& c : table.columns) {
          auto v = parse_cell(c);
          if (!v || !*v || std::floor(**v) != **v) {
            top.reset();
            break;
          }
          top = std::max(top.value_or(**v), **v);
        }
        if (top) {
          column = format_number(*top + 1);
        } else {
          for (const char* cand : {"Other", "Extra", "Next", "Later"})
            if (!table.find_column(cand)) {
              column = cand;
              break;
            }
          if (column.empty()) return std::nullopt;
        }
      }
      double value = round2(rng.uniform(lo, hi));
      auto c = table.find_column(column);
      if (c && table.rows[i].values[*c] == value) value = round2(value + (hi - lo) / 10 + 1);
      return EditOp{subtype, series_target(i), UpsertPoint{column, value}};
    }
    case EditSubtype::upsert_series: {
      const auto [lo, hi] = value_range(table, stacked);
      std::string name;
      if (names.size() >= kMaxSeries || rng.chance(0.25)) {
        name = names[rng.index(names.size())];
      } else {
        std::vector<std::string> fresh;
        for (const char* cand : {"Average", "Benchmark", "Target", "Forecast", "Other"})
          if (!table.find_row(cand)) fresh.push_back(cand);
        if (fresh.empty()) return std::nullopt;
        name = pick(fresh, rng);
      }
      UpsertSeries s{name, {}};
      for (std::size_t c = 0; c < table.columns.size(); ++c) s.values.push_back(round2(rng.uniform(lo, hi)));
      return EditOp{subtype, {}, s};
    }
  }
  return std::nullopt;
}

// --- config -----------------------------------------------------------------

std::map<CellKey, std::size_t> scale_counts(const std::map<CellKey, std::size_t>& counts, double factor) {
  std::map<CellKey, std::size_t> out;
  for (const auto& [k, v] : counts) out[k] = static_cast<std::size_t>(std::floor(static_cast<double>(v) * factor + 0.5));
  return out;
}

std::map<CellKey, std::size_t> scale_to_total(const std::map<CellKey, std::size_t>& counts, std::size_t total) {
  std::size_t sum = 0;
  for (const auto& [k, v] : counts) sum += v;
  if (sum == 0) throw Error(ErrorKind::InvalidConfig, "all counts are zero");
  struct Share {
    CellKey key;
    std::size_t base;
    double remainder;
  };
  std::vector<Share> shares;
  std::size_t assigned = 0;
  for (const auto& [k, v] : counts) {
    const double exact = static_cast<double>(v) * static_cast<double>(total) / static_cast<double>(sum);
    const auto base = static_cast<std::size_t>(std::floor(exact));
    shares.push_back({k, base, exact - static_cast<double>(base)});
    assigned += base;
  }
  std::vector<std::size_t> order(shares.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return shares[a].remainder > shares[b].remainder; });
  for (std::size_t i = 0; assigned < total; ++i, ++assigned) ++shares[order[i % order.size()]].base;
  std::map<CellKey, std::size_t> out;
  for (const auto& s : shares) out[s.key] = s.base;
  return out;
}

SynthConfig SynthConfig::from_json(const Json& j, const fs::path& base_dir) {
  SynthConfig cfg;
  try {
    cfg.seed = j.value("seed", std::uint64_t{0});
    cfg.tables_dir = base_dir / j.value("tables", std::string("tables"));
    cfg.oversample = j.value("oversample", 3.0);
    cfg.write_images = j.value("write_images", true);
    cfg.workers = j.value("workers", std::size_t{0});
    if (j.contains("limit")) cfg.limit = j.at("limit").get<std::size_t>();
    for (const auto& [type_name, cats] : j.at("counts").items()) {
      auto type = parse_chart_type(type_name);
      if (!type) throw Error(ErrorKind::InvalidConfig, "unknown chart type '" + type_name + "' in counts");
      for (const auto& [cat_name, n] : cats.items()) {
        auto cat = parse_category(cat_name);
        if (!cat) throw Error(ErrorKind::InvalidConfig, "unknown edit category '" + cat_name + "' in counts");
        if (!n.is_number_unsigned() && !(n.is_number_integer() && n.get<long long>() >= 0))
          throw Error(ErrorKind::InvalidConfig, "count for " + type_name + "/" + cat_name + " must be >= 0");
        cfg.counts[{*type, *cat}] = n.get<std::size_t>();
      }
    }
    if (j.contains("scale") && j.contains("total"))
      throw Error(ErrorKind::InvalidConfig, "give either scale or total, not both");
    if (j.contains("scale")) cfg.counts = scale_counts(cfg.counts, j.at("scale").get<double>());
    if (j.contains("total")) cfg.counts = scale_to_total(cfg.counts, j.at("total").get<std::size_t>());
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, std::string("invalid synth config: ") + e.what());
  }
  if (cfg.oversample < 0) throw Error(ErrorKind::InvalidConfig, "oversample must be >= 0");
  if (cfg.total() == 0) throw Error(ErrorKind::InvalidConfig, "config requests no samples");
  return cfg;
}

SynthConfig SynthConfig::load(const fs::path& path) {
  try {
    return from_json(Json::parse(read_file(path)), path.parent_path());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidConfig, path.string() + ": " + e.what(), path.string());
  }
}

std::size_t SynthConfig::total() const {
  std::size_t n = 0;
  for (const auto& [k, v] : counts) n += v;
  return n;
}

// --- records ----------------------------------------------------------------

OrderedJson to_json(const EditPairRecord& r) {
  OrderedJson j;
  j["id"] = r.id;
  j["chart_type"] = to_string(r.chart_type);
  j["category"] = to_string(r.category);
  j["subtype"] = to_string(r.subtype);
  j["prompt"] = r.prompt;
  j["variation"] = r.variation;
  j["op"] = to_json(r.op);
  j["source_spec"] = r.source_spec;
  j["edited_spec"] = r.edited_spec;
  j["source_image"] = r.source_image;
  j["edited_image"] = r.edited_image;
  j["changed_keys"] = r.changed_keys;
  return j;
}

EditPairRecord record_from_json(const Json& j) {
  try {
    EditPairRecord r;
    r.id = j.at("id").get<std::string>();
    auto type = parse_chart_type(j.at("chart_type").get<std::string>());
    auto cat = parse_category(j.at("category").get<std::string>());
    auto sub = parse_subtype(j.at("subtype").get<std::string>());
    if (!type || !cat || !sub) throw Error(ErrorKind::SchemaViolation, "record " + r.id + " has unknown labels");
    r.chart_type = *type;
    r.category = *cat;
    r.subtype = *sub;
    r.prompt = j.at("prompt").get<std::string>();
    r.variation = j.value("variation", std::size_t{0});
    r.op = edit_op_from_json(j.at("op"));
    r.source_spec = j.at("source_spec").get<std::string>();
    r.edited_spec = j.at("edited_spec").get<std::string>();
    r.source_image = j.value("source_image", std::string{});
    r.edited_image = j.value("edited_image", std::string{});
    r.changed_keys = j.at("changed_keys").get<std::vector<std::string>>();
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::SchemaViolation, std::string("invalid manifest record: ") + e.what());
  }
}

OrderedJson to_json(const SynthStats& s) {
  OrderedJson j;
  j["requested"] = s.requested;
  j["produced"] = s.produced;
  j["failed"] = s.failed;
  OrderedJson counts = OrderedJson::object();
  for (ChartType t : kChartTypes) {
    OrderedJson row = OrderedJson::object();
    for (EditCategory c : kCategories) {
      auto it = s.counts.find({t, c});
      row[category_name(c)] = it == s.counts.end() ? 0 : it->second;
    }
    counts[std::string(to_string(t))] = row;
  }
  j["counts"] = counts;
  OrderedJson subtypes = OrderedJson::object();
  for (EditSubtype st : kSubtypes) {
    auto it = s.subtypes.find(st);
    subtypes[std::string(to_string(st))] = it == s.subtypes.end() ? 0 : it->second;
  }
  j["subtypes"] = subtypes;
  return j;
}

std::vector<EditPairRecord> read_manifest(const fs::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + manifest.string(), manifest.string());
  std::vector<EditPairRecord> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (trim(line).empty()) continue;
    try {
      out.push_back(record_from_json(Json::parse(line)));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::MalformedJson, manifest.string() + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

ChartSpec load_spec(const fs::path& path) { return parse_spec(read_file(path), false).spec; }

// --- synthesis --------------------------------------------------------------

namespace {

struct Planned {
  ChartType type;
  EditCategory category;
  EditSubtype subtype;
};

/// Splits `n` samples over `subtypes` in proportion to their weights,
/// largest remainder first.
std::vector<std::size_t> subtype_quotas(const std::vector<EditSubtype>& subtypes, double oversample, std::size_t n) {
  double total = 0;
  for (auto s : subtypes) total += subtype_weight(s, oversample);
  std::vector<std::size_t> quota(subtypes.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < subtypes.size(); ++i) {
    const double exact = static_cast<double>(n) * subtype_weight(subtypes[i], oversample) / total;
    quota[i] = static_cast<std::size_t>(std::floor(exact));
    assigned += quota[i];
    remainders.emplace_back(exact - static_cast<double>(quota[i]), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < n; ++k, ++assigned) ++quota[remainders[k % remainders.size()].second];
  return quota;
}

struct Produced {
  EditPairRecord record;
  ChartSpec source;
  ChartSpec edited;
};

constexpr int kAttempts = 24;

std::optional<Produced> try_sample(const std::vector<SourceTable>& tables, const Planned& plan, Rng& rng,
                                   std::string& why) {
  const auto& source = tables[rng.index(tables.size())];
  ChartSpec spec;
  try {
    spec = sample_spec(source, plan.type, rng);
  } catch (const Error& e) {
    why = e.what();
    return std::nullopt;
  }
  const EditSubtype subtype = plan.subtype;
  auto op = draw_op(spec, subtype, rng);
  if (!op) {
    why = "no " + std::string(to_string(subtype)) + " edit fits " + source.name;
    return std::nullopt;
  }
  const auto& grammar = PromptGrammar::builtin();
  const std::size_t variation = rng.index(grammar.template_for(*op).surface_count());
  const std::string prompt = grammar.render(*op, variation, rng.next());
  try {
    if (grammar.parse(prompt, spec) != *op) {
      why = "prompt '" + prompt + "' reads back as a different edit";
      return std::nullopt;
    }
    auto result = apply_edit(spec, *op);
    if (result.changed_keys.empty()) {
      why = "edit leaves the chart unchanged";
      return std::nullopt;
    }
    layout(spec);
    layout(result.edited);
    Produced p;
    p.record.chart_type = plan.type;
    p.record.category = plan.category;
    p.record.subtype = subtype;
    p.record.prompt = prompt;
    p.record.variation = variation;
    p.record.op = *op;
    p.record.changed_keys.assign(result.changed_keys.begin(), result.changed_keys.end());
    p.source = std::move(spec);
    p.edited = std::move(result.edited);
    return p;
  } catch (const Error& e) {
    why = std::string(to_string(e.kind())) + ": " + e.what();
    return std::nullopt;
  }
}

}  // namespace

SynthResult synthesize(const SynthConfig& config, const fs::path& out_dir) {
  SynthResult result;
  auto ingest = ingest_tables(config.tables_dir);
  for (const auto& s : ingest.skipped) result.log.push_back("skipped " + s.file.string() + ": " + s.reason);
  for (const auto& w : ingest.warnings) result.log.push_back(w);

  // Plan: one slot per requested sample, shuffled so any prefix mixes cells.
  std::vector<Planned> plan;
  for (ChartType t : kChartTypes)
    for (EditCategory c : kCategories) {
      auto it = config.counts.find({t, c});
      if (it == config.counts.end()) continue;
      const auto subtypes = applicable_subtypes(t, c);
      const auto quota = subtype_quotas(subtypes, config.oversample, it->second);
      for (std::size_t k = 0; k < subtypes.size(); ++k) plan.insert(plan.end(), quota[k], Planned{t, c, subtypes[k]});
    }
  Rng plan_rng(mix_seed(config.seed, 0x706c616eULL));
  shuffle(plan, plan_rng);
  if (config.limit && *config.limit < plan.size()) plan.resize(*config.limit);

  fs::create_directories(out_dir / "specs");
  if (config.write_images) fs::create_directories(out_dir / "images");

  std::vector<std::optional<EditPairRecord>> slots(plan.size());
  std::vector<std::string> failures(plan.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr fatal;

  auto worker = [&] {
    for (std::size_t i = next++; i < plan.size(); i = next++) {
      try {
        char id_buf[16];
        std::snprintf(id_buf, sizeof id_buf, "%06zu", i);
        const std::string id = id_buf;
        std::optional<Produced> produced;
        std::string why;
        for (int attempt = 0; attempt < kAttempts && !produced; ++attempt) {
          Rng rng(mix_seed(mix_seed(config.seed, i), static_cast<std::uint64_t>(attempt)));
          produced = try_sample(ingest.tables, plan[i], rng, why);
        }
        if (!produced) {
          failures[i] = id + ": " + why;
          continue;
        }
        auto& rec = produced->record;
        rec.id = id;
        rec.source_spec = "specs/" + id + "_source.json";
        rec.edited_spec = "specs/" + id + "_edited.json";
        rec.source_image = "images/" + id + "_source.png";
        rec.edited_image = "images/" + id + "_edited.png";
        write_file(out_dir / rec.source_spec, serialize_spec(produced->source) + "\n");
        write_file(out_dir / rec.edited_spec, serialize_spec(produced->edited) + "\n");
        if (config.write_images) {
          for (const auto& [spec, stem] : {std::pair{&produced->source, id + "_source"},
                                           std::pair{&produced->edited, id + "_edited"}}) {
            const LayoutPlan lp = layout(*spec);
            write_file(out_dir / "images" / (stem + ".svg"), render_svg(lp));
            write_png(out_dir / "images" / (stem + ".png"), rasterize(lp));
          }
        }
        slots[i] = std::move(rec);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!fatal) fatal = std::current_exception();
      }
    }
  };
  std::size_t n_workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min(n_workers, std::max<std::size_t>(plan.size(), 1));
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < n_workers; ++w) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (fatal) std::rethrow_exception(fatal);

  result.stats.requested = plan.size();
  std::ofstream manifest(out_dir / "manifest.jsonl", std::ios::binary);
  if (!manifest) throw Error(ErrorKind::Io, "cannot write manifest in " + out_dir.string());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      ++result.stats.failed;
      result.log.push_back("failed " + failures[i]);
      continue;
    }
    const auto& rec = *slots[i];
    manifest << to_json(rec).dump() << "\n";
    ++result.stats.produced;
    ++result.stats.counts[{rec.chart_type, rec.category}];
    ++result.stats.subtypes[rec.subtype];
    result.records.push_back(rec);
  }
  manifest.close();
  write_file(out_dir / "stats.json", to_json(result.stats).dump(4) + "\n");
  if (result.stats.failed * 10 > result.stats.requested)
    throw Error(ErrorKind::InvalidConfig, std::to_string(result.stats.failed) + " of " +
                                              std::to_string(result.stats.requested) + " samples failed");
  return result;
}

}  // namespace chartforge
