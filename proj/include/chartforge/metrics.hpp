#pragma once

#include <set>
#include <span>
#include <string>

#include "chartforge/attributes.hpp"
#include "chartforge/pool.hpp"
#include "chartforge/raster.hpp"
#include "chartforge/spec.hpp"
#include "chartforge/table.hpp"

namespace chartforge {

struct MetricConfig {
  double numeric_threshold = 0.4;      ///< attribute numeric tolerance
  double rms_text_threshold = 0.5;     ///< Levenshtein clip for RMS names
  double rms_numeric_threshold = 0.4;  ///< relative value tolerance for RMS
  double key_threshold = 0.5;          ///< Levenshtein clip for attribute keys
  int ssim_window = 11;
  double ssim_sigma = 1.5;
  double ssim_k1 = 0.01;
  double ssim_k2 = 0.03;
  double ssim_range = 255;

  /// Throws InvalidConfig when a threshold leaves (0, 1].
  void validate() const;
};

struct Prf {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

struct VaesScore {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  double s_changed = 0;
  double s_unchanged = 0;
  double s_f = 0;
};

using RmsScore = Prf;

double harmonic_mean(double a, double b);

/// Edit distance over bytes divided by the longer length; 0 for two empty strings.
double normalized_levenshtein(std::string_view a, std::string_view b);

/// Similarity of one predicted attribute value to its gold value.
double attribute_similarity(const AttributeValue& pred, const AttributeValue& gold, const MetricConfig& cfg = {});

VaesScore vaes(const AttributeMap& pred, const AttributeMap& gold, const std::set<std::string>& changed_keys,
               const MetricConfig& cfg = {});
VaesScore vaes(const ChartSpec& pred, const ChartSpec& gold, const std::set<std::string>& changed_keys,
               const MetricConfig& cfg = {});

RmsScore rms(const DataTable& pred, const DataTable& gold, const MetricConfig& cfg = {});
/// Compares the series-major tables of two specs.
RmsScore rms(const ChartSpec& pred, const ChartSpec& gold, const MetricConfig& cfg = {});

/// Normalized 2-D Gaussian window, row-major size x size.
std::vector<double> gaussian_window(int size, double sigma);

/// Mean SSIM over all fully contained windows of the luma planes.
double ssim(const RasterImage& a, const RasterImage& b, const MetricConfig& cfg = {});

/// ok / total; throws EmptyBatch on an empty batch.
double success_rate(std::span<const bool> outcomes);

}  // namespace chartforge
