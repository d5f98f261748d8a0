#include "chartforge/metrics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "chartforge/assignment.hpp"
#include "chartforge/error.hpp"

namespace chartforge {

namespace {

constexpr double kEps = 1e-9;

double clipped_distance(std::string_view a, std::string_view b, double tau) {
  const double d = normalized_levenshtein(a, b);
  return d > tau ? 1.0 : d;
}

double relative_distance(double pred, double gold, double theta) {
  return std::min(1.0, std::abs(pred - gold) / (theta * std::max(std::abs(gold), kEps)));
}

Eigen::MatrixXf luma(const RasterImage& img) {
  Eigen::MatrixXf out(img.height, img.width);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      const auto* p = img.at(x, y);
      out(y, x) = img.channels == 1 ? p[0] : static_cast<float>(0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2]);
    }
  return out;
}

/// Separable "valid" filtering with a 1-D kernel along both axes.
Eigen::MatrixXf filter_valid(const Eigen::MatrixXf& img, const std::vector<float>& k) {
  const Eigen::Index n = static_cast<Eigen::Index>(k.size());
  const Eigen::Index rows = img.rows() - n + 1;
  const Eigen::Index cols = img.cols() - n + 1;
  // Column by column so each accumulation stays in cache.
  Eigen::MatrixXf tmp(rows, img.cols());
  for (Eigen::Index c = 0; c < img.cols(); ++c) {
    auto dst = tmp.col(c);
    dst = k[0] * img.col(c).head(rows);
    for (Eigen::Index i = 1; i < n; ++i) dst += k[i] * img.col(c).segment(i, rows);
  }
  Eigen::MatrixXf out(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    auto dst = out.col(c);
    dst = k[0] * tmp.col(c);
    for (Eigen::Index i = 1; i < n; ++i) dst += k[i] * tmp.col(c + i);
  }
  return out;
}

struct Triple {
  std::string key;
  double value;
};

std::vector<Triple> triples(const DataTable& t) {
  std::vector<Triple> out;
  for (const auto& r : t.rows)
    for (std::size_t c = 0; c < t.columns.size(); ++c)
      if (c < r.values.size() && r.values[c]) out.push_back({r.name + " " + t.columns[c], *r.values[c]});
  return out;
}

}  // namespace

void MetricConfig::validate() const {
  for (double v : {numeric_threshold, rms_text_threshold, rms_numeric_threshold, key_threshold})
    if (!(v > 0 && v <= 1)) throw Error(ErrorKind::InvalidConfig, "metric thresholds must lie in (0, 1]");
  if (ssim_window < 1 || ssim_window % 2 == 0) throw Error(ErrorKind::InvalidConfig, "SSIM window must be odd");
  if (!(ssim_sigma > 0)) throw Error(ErrorKind::InvalidConfig, "SSIM sigma must be positive");
}

double harmonic_mean(double a, double b) { return a + b > 0 ? 2 * a * b / (a + b) : 0.0; }

double normalized_levenshtein(std::string_view a, std::string_view b) {
  if (a.empty() && b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return static_cast<double>(prev[b.size()]) / static_cast<double>(std::max(a.size(), b.size()));
}

double attribute_similarity(const AttributeValue& pred, const AttributeValue& gold, const MetricConfig& cfg) {
  const auto* pg = std::get_if<double>(&gold);
  const auto* pp = std::get_if<double>(&pred);
  if (pg && pp) return 1.0 - relative_distance(*pp, *pg, cfg.numeric_threshold);
  return pred == gold ? 1.0 : 0.0;
}

VaesScore vaes(const AttributeMap& pred, const AttributeMap& gold, const std::set<std::string>& changed_keys,
               const MetricConfig& cfg) {
  std::vector<const std::pair<const std::string, AttributeValue>*> p, g;
  for (const auto& kv : pred) p.push_back(&kv);
  for (const auto& kv : gold) g.push_back(&kv);

  Eigen::MatrixXd sim = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(g.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double key = 1.0 - clipped_distance(p[i]->first, g[j]->first, cfg.key_threshold);
      if (key > 0) sim(i, j) = key * attribute_similarity(p[i]->second, g[j]->second, cfg);
    }
  const auto match = max_similarity_assignment(sim);

  std::vector<double> gold_score(g.size(), 0.0);
  double total = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (match[i] >= 0) {
      gold_score[match[i]] = sim(i, match[i]);
      total += sim(i, match[i]);
    }

  VaesScore out;
  out.precision = p.empty() ? (g.empty() ? 1.0 : 0.0) : total / static_cast<double>(p.size());
  out.recall = g.empty() ? (p.empty() ? 1.0 : 0.0) : total / static_cast<double>(g.size());
  out.f1 = harmonic_mean(out.precision, out.recall);

  double changed = 0, unchanged = 0;
  std::size_t n_changed = 0, n_unchanged = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (changed_keys.contains(g[j]->first)) {
      changed += gold_score[j];
      ++n_changed;
    } else {
      unchanged += gold_score[j];
      ++n_unchanged;
    }
  }
  out.s_changed = n_changed ? changed / static_cast<double>(n_changed) : 1.0;
  out.s_unchanged = n_unchanged ? unchanged / static_cast<double>(n_unchanged) : 1.0;
  out.s_f = harmonic_mean(out.s_changed, out.s_unchanged);
  return out;
}

VaesScore vaes(const ChartSpec& pred, const ChartSpec& gold, const std::set<std::string>& changed_keys,
               const MetricConfig& cfg) {
  return vaes(flatten_attributes(pred), flatten_attributes(gold), changed_keys, cfg);
}

RmsScore rms(const DataTable& pred, const DataTable& gold, const MetricConfig& cfg) {
  const auto p = triples(pred);
  const auto g = triples(gold);
  RmsScore out;
  if (p.empty() || g.empty()) {
    out.precision = out.recall = out.f1 = (p.empty() && g.empty()) ? 1.0 : 0.0;
    return out;
  }
  Eigen::MatrixXd sim(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(g.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      sim(i, j) = (1.0 - clipped_distance(p[i].key, g[j].key, cfg.rms_text_threshold)) *
                  (1.0 - relative_distance(p[i].value, g[j].value, cfg.rms_numeric_threshold));
  const auto match = max_similarity_assignment(sim);
  double total = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (match[i] >= 0) total += sim(i, match[i]);
  out.precision = total / static_cast<double>(p.size());
  out.recall = total / static_cast<double>(g.size());
  out.f1 = harmonic_mean(out.precision, out.recall);
  return out;
}

RmsScore rms(const ChartSpec& pred, const ChartSpec& gold, const MetricConfig& cfg) {
  return rms(pred.series_table(), gold.series_table(), cfg);
}

std::vector<double> gaussian_window(int size, double sigma) {
  std::vector<double> w(static_cast<std::size_t>(size) * size);
  const double c = (size - 1) / 2.0;
  double sum = 0;
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x) {
      const double v = std::exp(-((x - c) * (x - c) + (y - c) * (y - c)) / (2 * sigma * sigma));
      w[static_cast<std::size_t>(y) * size + x] = v;
      sum += v;
    }
  for (auto& v : w) v /= sum;
  return w;
}

double ssim(const RasterImage& a, const RasterImage& b, const MetricConfig& cfg) {
  if (a.width != b.width || a.height != b.height)
    throw Error(ErrorKind::DimensionMismatch, "images differ in size: " + std::to_string(a.width) + "x" +
                                                  std::to_string(a.height) + " vs " + std::to_string(b.width) + "x" +
                                                  std::to_string(b.height));
  const int n = cfg.ssim_window;
  if (a.width < n || a.height < n) throw Error(ErrorKind::DimensionMismatch, "image smaller than the SSIM window");

  // 1-D factor of the separable Gaussian.
  std::vector<double> k(n);
  double sum = 0;
  const double c = (n - 1) / 2.0;
  for (int i = 0; i < n; ++i) sum += k[i] = std::exp(-(i - c) * (i - c) / (2 * cfg.ssim_sigma * cfg.ssim_sigma));
  std::vector<float> kf;
  for (double v : k) kf.push_back(static_cast<float>(v / sum));

  const Eigen::MatrixXf x = luma(a);
  const Eigen::MatrixXf y = luma(b);
  const Eigen::ArrayXXf mx = filter_valid(x, kf).array();
  const Eigen::ArrayXXf my = filter_valid(y, kf).array();
  const Eigen::ArrayXXf sxx = filter_valid(x.cwiseProduct(x), kf).array() - mx * mx;
  const Eigen::ArrayXXf syy = filter_valid(y.cwiseProduct(y), kf).array() - my * my;
  const Eigen::ArrayXXf sxy = filter_valid(x.cwiseProduct(y), kf).array() - mx * my;

  const auto c1 = static_cast<float>(std::pow(cfg.ssim_k1 * cfg.ssim_range, 2));
  const auto c2 = static_cast<float>(std::pow(cfg.ssim_k2 * cfg.ssim_range, 2));
  const Eigen::ArrayXXf map = ((2 * mx * my + c1) * (2 * sxy + c2)) / ((mx * mx + my * my + c1) * (sxx + syy + c2));
  return map.cast<double>().sum() / static_cast<double>(map.size());
}

double success_rate(std::span<const bool> outcomes) {
  if (outcomes.empty()) throw Error(ErrorKind::EmptyBatch, "no outcomes to score");
  const auto ok = std::count(outcomes.begin(), outcomes.end(), true);
  return static_cast<double>(ok) / static_cast<double>(outcomes.size());
}

}  // namespace chartforge
