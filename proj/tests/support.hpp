#pragma once

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "chartforge/error.hpp"
#include "chartforge/rng.hpp"
#include "chartforge/spec.hpp"
#include "chartforge/synth.hpp"

namespace cftest {

using namespace chartforge;
namespace fs = std::filesystem;

inline fs::path source_dir() { return CF_SOURCE_DIR; }
inline fs::path fixture(const std::string& name) { return source_dir() / "tests" / "fixtures" / name; }

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

/// Fresh empty directory under the build tree, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = fs::path(CF_BINARY_DIR) / "test-tmp" / (tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

/// The imports line chart, with its one out-of-pool line style repaired.
inline ChartSpec imports_spec() { return parse_spec(read_file(fixture("imports_line.json")), true).spec; }

/// Three country series over two years, stored one series per row.
inline ChartSpec country_spec(ChartType type = ChartType::line, std::uint64_t seed = 1) {
  SourceTable src{"import_share", parse_csv_table(read_file(source_dir() / "data" / "tables" / "import_share.csv"))};
  Rng rng(seed);
  return sample_spec(src, type, rng);
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& values) {
  return values[rng.index(values.size())];
}

inline double round2(double v) { return std::round(v * 100.0) / 100.0; }

struct TableShape {
  std::size_t max_rows = 5;
  std::size_t max_cols = 8;
  bool negatives = true;
  bool missing = false;
  bool numeric_headers = true;
};

inline DataTable random_table(Rng& rng, const TableShape& shape = {}) {
  static const std::vector<std::string> words{"North", "South", "East", "West", "Alpha", "Beta", "Gamma", "Delta",
                                              "Oak",   "Pine",  "Elm",  "Ash",  "Rye",   "Corn", "Wheat", "Barley"};
  DataTable t;
  t.corner = pick(rng, std::vector<std::string>{"Year", "Country Name", "Region", "Item"});
  const std::size_t rows = 1 + rng.index(shape.max_rows);
  const std::size_t cols = 1 + rng.index(shape.max_cols);
  const bool years = shape.numeric_headers && rng.chance(0.6);
  const int start = 1990 + static_cast<int>(rng.index(20));
  for (std::size_t c = 0; c < cols; ++c)
    t.columns.push_back(years ? std::to_string(start + static_cast<int>(c)) : words[c % words.size()] + " " + std::to_string(c));
  for (std::size_t r = 0; r < rows; ++r) {
    DataRow row;
    row.name = "Series " + std::string(1, static_cast<char>('A' + r)) + " " + words[rng.index(words.size())];
    const double lo = shape.negatives && rng.chance(0.3) ? -80.0 : 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (shape.missing && rng.chance(0.1)) row.values.push_back(std::nullopt);
      else row.values.push_back(round2(rng.uniform(lo, 120.0)));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

/// Any pool-valid spec, including non-editable pool fields.
inline ChartSpec random_spec(Rng& rng, const TableShape& shape = {}) {
  ChartSpec s;
  const auto type = pick(rng, std::vector<ChartType>{ChartType::line, ChartType::grouped_vertical_bar,
                                                     ChartType::stacked_vertical_bar});
  TableShape ts = shape;
  if (type == ChartType::stacked_vertical_bar) ts.negatives = false;
  DataTable table = random_table(rng, ts);
  const std::size_t n = table.row_count();
  s.series_axis = rng.chance(0.2) ? SeriesAxis::columns : SeriesAxis::rows;
  s.data = s.series_axis == SeriesAxis::rows ? table : table.transposed();
  s.chart_title = pick(rng, std::vector<std::string>{"", "Imports", "Average rainfall by month", "GDP growth (%)"});
  s.x_axis_title = pick(rng, std::vector<std::string>{"", "Year", "Country Name"});
  s.y_axis_title = pick(rng, std::vector<std::string>{"", "Values", "Share of imports"});
  auto& g = s.global;
  g.chart_type = type;
  g.x_label = {pick(rng, pool::kFonts), pick(rng, pool::kFontSizes)};
  g.y_label = {pick(rng, pool::kFonts), pick(rng, pool::kFontSizes)};
  g.legend = {pick(rng, pool::kLegendLocs), pick(rng, pool::kLegendColumns)};
  g.title = {pick(rng, pool::kFonts), pick(rng, pool::kFontSizes), 0};
  for (auto* tick : {&g.x_tick, &g.y_tick}) {
    tick->which = pick(rng, pool::kTickWhich);
    tick->rotation = pick(rng, pool::kTickRotations);
    tick->labelsize = pick(rng, pool::kTickLabelSizes);
    tick->labelfontfamily = pick(rng, pool::kFonts);
  }
  g.grid = {rng.chance(0.5), pick(rng, pool::kGridAxes), pick(rng, pool::kGridLineStyles)};
  if (type == ChartType::line) {
    LineProps p;
    for (std::size_t i = 0; i < n; ++i) {
      p.linestyles.push_back(pick(rng, pool::kLineStyles));
      p.markers.push_back(pick(rng, pool::kMarkers));
      p.colors.push_back(pick(rng, pool::kColors));
    }
    s.series = p;
  } else {
    BarProps p;
    for (std::size_t i = 0; i < n; ++i) {
      p.hatches.push_back(pick(rng, pool::kHatches));
      p.colors.push_back(pick(rng, pool::kColors));
    }
    s.series = p;
  }
  return s;
}

}  // namespace cftest
