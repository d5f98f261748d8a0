#pragma once

#include <chrono>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chartforge/error.hpp"
#include "chartforge/metrics.hpp"
#include "chartforge/synth.hpp"

namespace chartforge {

struct PredictRequest {
  std::size_t index;  ///< position in the manifest
  const EditPairRecord* record;
  std::filesystem::path root;  ///< manifest directory
};

/// Predicted spec text, or the reason none was produced.
struct Prediction {
  std::optional<std::string> spec_text;
  ErrorKind error = ErrorKind::PredictorUnavailable;
  std::string message;
};

class Predictor {
 public:
  virtual ~Predictor() = default;
  virtual std::string name() const = 0;
  virtual Prediction predict(const PredictRequest& request) = 0;
};

/// Returns the gold edited spec.
std::unique_ptr<Predictor> make_oracle_predictor();
/// Returns the unedited source spec.
std::unique_ptr<Predictor> make_copy_predictor();
/// Oracle output with every tenth sample (index % 10 == 9) cut in half.
std::unique_ptr<Predictor> make_corrupt_predictor();

/// Runs `command` through /bin/sh and talks line-delimited JSON over its
/// stdin/stdout: requests {id, image_path, prompt}, responses {id, spec_json}.
/// Throws PredictorUnavailable when the process cannot be started.
std::unique_ptr<Predictor> make_command_predictor(const std::string& command,
                                                  std::chrono::milliseconds timeout = std::chrono::seconds(60));

/// "oracle", "copy", "corrupt" or "cmd:<shell command>".
std::unique_ptr<Predictor> make_predictor(const std::string& ref,
                                          std::chrono::milliseconds timeout = std::chrono::seconds(60));

struct EvalOptions {
  MetricConfig metrics;
  bool repair = false;
  /// When false, failed samples count as SSIM 0 in the SSIM average.
  bool exclude_failed_from_ssim = false;
  std::size_t workers = 0;  ///< 0 = hardware concurrency
  /// Keep only samples of these categories (empty = all).
  std::vector<EditCategory> categories;
};

struct SampleOutcome {
  std::string id;
  ChartType chart_type;
  EditCategory category;
  EditSubtype subtype;
  bool success = false;
  std::optional<ErrorKind> error;
  std::string message;
  std::optional<VaesScore> vaes;
  std::optional<RmsScore> rms;
  double ssim = 0;
};

struct CategorySummary {
  std::string category;  ///< edit category name or "total"
  std::size_t samples = 0;
  std::size_t succeeded = 0;
  VaesScore vaes;  ///< x100, means over successful samples
  RmsScore rms;
  double ssim = 0;
  double success_rate = 0;
};

struct MetricReport {
  std::string predictor;
  bool repair = false;
  std::vector<SampleOutcome> samples;
  std::vector<CategorySummary> categories;  ///< one per category present, then "total"

  const CategorySummary& total() const { return categories.back(); }
  const CategorySummary* find(std::string_view category) const;
};

/// Scores one prediction against its record.
SampleOutcome score_sample(const EditPairRecord& record, const std::filesystem::path& root, const Prediction& prediction,
                           const EvalOptions& options);

/// Macro averages per category plus a total over all samples.
std::vector<CategorySummary> summarize(const std::vector<SampleOutcome>& samples, bool exclude_failed_from_ssim);

/// Runs a predictor over a manifest. Per-sample failures never abort the run.
MetricReport run_eval(const std::filesystem::path& manifest, Predictor& predictor, const EvalOptions& options);

OrderedJson to_json(const MetricReport& report);

}  // namespace chartforge
