#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chartforge/edit.hpp"
#include "chartforge/edit_op.hpp"
#include "chartforge/rng.hpp"
#include "chartforge/spec.hpp"

namespace chartforge {

struct SourceTable {
  std::string name;  ///< file stem
  DataTable table;
};

struct SkippedFile {
  std::filesystem::path file;
  std::string reason;
};

struct IngestResult {
  std::vector<SourceTable> tables;
  std::vector<SkippedFile> skipped;
  std::vector<std::string> warnings;
};

inline constexpr std::size_t kMaxSeries = 7;
inline constexpr std::size_t kMaxColumns = 20;

/// One table from CSV text: header = corner + column headers, one row per series.
DataTable parse_csv_table(std::string_view csv);

/// Reads every *.csv under `dir`, sorted by file name. Invalid files are
/// skipped with a reason; oversized tables are truncated with a warning.
/// Throws NoTablesFound when nothing usable remains.
IngestResult ingest_tables(const std::filesystem::path& dir);

/// Chart title shown for a table read from `stem` ("gdp_growth" -> "Gdp Growth").
std::string title_from_stem(std::string_view stem);

/// Draws every visual attribute from the property pool. Series get distinct
/// colors. Throws InvalidForChartType for stacked charts with negative
/// values and TooManySeries above kMaxSeries.
ChartSpec sample_spec(const SourceTable& source, ChartType type, Rng& rng);

/// Subtypes that can be drawn for a source chart of `type` in `category`.
std::vector<EditSubtype> applicable_subtypes(ChartType type, EditCategory category);

/// Relative draw weight of a subtype (chart-specific style edits are
/// oversampled by `oversample`).
double subtype_weight(EditSubtype subtype, double oversample);

/// Draws a concrete op of `subtype` that changes `spec`; nullopt when the
/// spec offers no such edit (e.g. a series filter on a one-series chart).
std::optional<EditOp> draw_op(const ChartSpec& spec, EditSubtype subtype, Rng& rng);

using CellKey = std::pair<ChartType, EditCategory>;

struct SynthConfig {
  std::uint64_t seed = 0;
  std::filesystem::path tables_dir;
  std::map<CellKey, std::size_t> counts;
  double oversample = 3.0;
  bool write_images = true;
  std::size_t workers = 0;  ///< 0 = hardware concurrency
  std::optional<std::size_t> limit;

  /// Reads a JSON config. "counts" holds per-chart-type category counts;
  /// "scale" multiplies and rounds each cell, "total" rescales to an exact
  /// total by largest remainder. Relative paths resolve against `base_dir`.
  static SynthConfig from_json(const Json& j, const std::filesystem::path& base_dir);
  static SynthConfig load(const std::filesystem::path& path);

  std::size_t total() const;
};

/// Largest-remainder rescaling of `counts` to sum exactly to `total`.
std::map<CellKey, std::size_t> scale_to_total(const std::map<CellKey, std::size_t>& counts, std::size_t total);
/// Per-cell half-up rounding of count * factor.
std::map<CellKey, std::size_t> scale_counts(const std::map<CellKey, std::size_t>& counts, double factor);

struct EditPairRecord {
  std::string id;
  ChartType chart_type;
  EditCategory category;
  EditSubtype subtype;
  std::string prompt;
  std::size_t variation;
  EditOp op;
  std::string source_spec;  ///< paths relative to the manifest directory
  std::string edited_spec;
  std::string source_image;
  std::string edited_image;
  std::vector<std::string> changed_keys;
};

OrderedJson to_json(const EditPairRecord& record);
EditPairRecord record_from_json(const Json& j);

struct SynthStats {
  std::size_t requested = 0;
  std::size_t produced = 0;
  std::size_t failed = 0;
  std::map<CellKey, std::size_t> counts;
  std::map<EditSubtype, std::size_t> subtypes;
};

OrderedJson to_json(const SynthStats& stats);

struct SynthResult {
  std::vector<EditPairRecord> records;
  SynthStats stats;
  std::vector<std::string> log;
};

/// Generates the dataset into `out_dir`: manifest.jsonl, stats.json,
/// specs/ and (optionally) images/. Throws when more than 10% of the
/// requested samples cannot be produced.
SynthResult synthesize(const SynthConfig& config, const std::filesystem::path& out_dir);

/// Records of a manifest.jsonl file, in file order.
std::vector<EditPairRecord> read_manifest(const std::filesystem::path& manifest);

/// Reads a canonical spec file (strict).
ChartSpec load_spec(const std::filesystem::path& path);

}  // namespace chartforge
