// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>

#include "chartforge/assignment.hpp"
#include "chartforge/edit.hpp"
#include "chartforge/harness.hpp"
#include "chartforge/metrics.hpp"
#include "chartforge/prompt.hpp"
#include "chartforge/raster.hpp"
#include "support.hpp"

using namespace cftest;

namespace {

/// Collects failed expectations for one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t total() const { return total_; }
  std::string summary() const {
    std::string s = std::to_string(failed_) + "/" + std::to_string(total_) + " checks failed";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

std::string num(double v) {
  std::ostringstream o;
  o << std::setprecision(10) << v;
  return o.str();
}

void expect_eq(Checks& c, double got, double want, const std::string& what) {
  c.expect(got == want, what + " = " + num(got) + ", expected " + num(want));
}

const fs::path& fixture_600() {
  static TempDir dir("acceptance-600");
  static bool built = false;
  if (!built) {
    synthesize(SynthConfig::load(source_dir() / "data" / "presets" / "fixture_600.json"), dir.path());
    built = true;
  }
  return dir.path();
}

void oracle_fixture(Checks& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto records = read_manifest(fixture_600() / "manifest.jsonl");
  expect_eq(c, static_cast<double>(records.size()), 600, "records");
  auto p = make_oracle_predictor();
  const MetricReport r = run_eval(fixture_600() / "manifest.jsonl", *p, {});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& cat : r.categories) {
    expect_eq(c, cat.vaes.precision, 100, cat.category + " VAES P");
    expect_eq(c, cat.vaes.recall, 100, cat.category + " VAES R");
    expect_eq(c, cat.vaes.f1, 100, cat.category + " VAES F1");
    expect_eq(c, cat.rms.f1, 100, cat.category + " RMS F1");
    expect_eq(c, cat.ssim, 100, cat.category + " SSIM");
    expect_eq(c, cat.success_rate, 100, cat.category + " success");
  }
  c.expect(seconds < 300, "runtime " + num(seconds) + " s");
}

void copy_fixture(Checks& c) {
  auto p = make_copy_predictor();
  EvalOptions opts;
  opts.categories = {EditCategory::style};
  const MetricReport r = run_eval(fixture_600() / "manifest.jsonl", *p, opts);
  c.expect(!r.samples.empty(), "style subset is empty");
  for (const auto& s : r.samples) {
    c.expect(s.success && s.vaes.has_value(), s.id + " failed");
    if (!s.vaes) continue;
    expect_eq(c, s.vaes->s_changed, 0, s.id + " S_changed");
    expect_eq(c, s.vaes->s_f, 0, s.id + " S_f");
  }
  expect_eq(c, r.total().rms.f1, 100, "RMS F1");
}

void corruption_fixture(Checks& c) {
  const fs::path manifest = fixture_600() / "manifest.jsonl";
  auto corrupt = make_corrupt_predictor();
  const MetricReport strict = run_eval(manifest, *corrupt, {});
  expect_eq(c, strict.total().success_rate, 90.0, "success without repair");
  EvalOptions repair;
  repair.repair = true;
  const MetricReport fixed = run_eval(manifest, *corrupt, repair);
  expect_eq(c, fixed.total().success_rate, 100.0, "success with repair");
  auto oracle = make_oracle_predictor();
  const MetricReport clean = run_eval(manifest, *oracle, {});
  c.expect(fixed.total().vaes.f1 < clean.total().vaes.f1,
           "repaired VAES F1 " + num(fixed.total().vaes.f1) + " not below " + num(clean.total().vaes.f1));
}

double brute_force_min(const Eigen::MatrixXd& cost) {
  const int rows = static_cast<int>(cost.rows()), cols = static_cast<int>(cost.cols());
  std::vector<int> perm(std::max(rows, cols));
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0;
    for (int r = 0; r < rows; ++r)
      if (perm[r] < cols) total += cost(r, perm[r]);
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

DataTable shuffled(const DataTable& t, Rng& rng) {
  std::vector<std::size_t> rows(t.row_count()), cols(t.column_count());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  for (std::size_t i = rows.size(); i > 1; --i) std::swap(rows[i - 1], rows[rng.index(i)]);
  for (std::size_t i = cols.size(); i > 1; --i) std::swap(cols[i - 1], cols[rng.index(i)]);
  DataTable out;
  out.corner = t.corner;
  for (auto col : cols) out.columns.push_back(t.columns[col]);
  for (auto r : rows) {
    DataRow row{t.rows[r].name, {}};
    for (auto col : cols) row.values.push_back(t.rows[r].values[col]);
    out.rows.push_back(row);
  }
  return out;
}

void metric_unit_suite(Checks& c) {
  const AttributeMap gold{{"a", "x"}, {"b", "y"}, {"u1", "p"}, {"u2", "q"}};
  const AttributeMap pred{{"a", "x"}, {"b", "z"}, {"u1", "p"}, {"u2", "q"}};
  const VaesScore v = vaes(pred, gold, {"a", "b"});
  c.expect(std::abs(v.s_f - 2.0 / 3.0) <= 1e-9, "worked example S_f = " + num(v.s_f));
  expect_eq(c, std::round(v.s_f * 1e4) / 1e4, 0.6667, "worked example S_f to 4 places");

  const double s = ssim(RasterImage(64, 64, 3, 0), RasterImage(64, 64, 3, 255));
  c.expect(std::abs(s - 1.0e-4) <= 1e-6, "constant-image SSIM = " + num(s));

  Rng rng(200);
  for (int i = 0; i < 200; ++i) {
    const int rows = 1 + static_cast<int>(rng.index(8)), cols = 1 + static_cast<int>(rng.index(8));
    Eigen::MatrixXd cost(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int col = 0; col < cols; ++col) cost(r, col) = rng.uniform(0, 10);
    const auto a = min_cost_assignment(cost);
    double total = 0;
    for (std::size_t r = 0; r < a.size(); ++r)
      if (a[r] >= 0) total += cost(static_cast<Eigen::Index>(r), a[r]);
    const double best = brute_force_min(cost);
    c.expect(std::abs(total - best) <= 1e-9 * std::max(1.0, best),
             "matrix " + std::to_string(i) + ": " + num(total) + " vs " + num(best));
  }

  Rng trng(100);
  for (int i = 0; i < 100; ++i) {
    const DataTable g = random_table(trng, {5, 6, true, false, true});
    DataTable p = g;
    for (auto& row : p.rows)
      for (auto& x : row.values)
        if (trng.chance(0.3)) x = *x + trng.uniform(-20, 20);
    const RmsScore base = rms(p, g);
    const RmsScore moved = rms(shuffled(p, trng), shuffled(g, trng));
    c.expect(std::abs(base.f1 - moved.f1) <= 1e-12 && std::abs(base.precision - moved.precision) <= 1e-12 &&
                 std::abs(base.recall - moved.recall) <= 1e-12,
             "RMS table " + std::to_string(i) + " changed under permutation");
  }
}

void pipeline_invariants(Checks& c) {
  const fs::path root = fixture_600();
  for (const auto& rec : read_manifest(root / "manifest.jsonl")) {
    try {
      const ChartSpec src = load_spec(root / rec.source_spec);
      const ChartSpec gold = load_spec(root / rec.edited_spec);
      const EditOp op = parse_prompt(rec.prompt, src);
      c.expect(op == rec.op, rec.id + " prompt parses to a different op");
      c.expect(apply_edit(src, op).edited == gold, rec.id + " edit does not reproduce the gold spec");
    } catch (const std::exception& e) {
      c.expect(false, rec.id + ": " + e.what());
    }
  }

  Rng rng(1000);
  for (int i = 0; i < 1000; ++i) {
    const ChartSpec s = random_spec(rng, {7, 20, true, true, true});
    const std::string text = serialize_spec(s);
    try {
      const ParsedSpec back = parse_spec(text, false);
      c.expect(back.spec == s && serialize_spec(back.spec) == text, "round-trip " + std::to_string(i));
    } catch (const std::exception& e) {
      c.expect(false, "round-trip " + std::to_string(i) + ": " + e.what());
    }
  }

  Rng crng(200);
  for (int i = 0; i < 200; ++i) {
    ChartSpec s = random_spec(crng);
    if (s.chart_type() != ChartType::line)
      s = apply_edit(s, {EditSubtype::chart_type, {}, ConvertType{s.chart_type(), ChartType::line}}).edited;
    const auto bar = crng.chance(0.5) && s.data.non_negative() ? ChartType::stacked_vertical_bar
                                                               : ChartType::grouped_vertical_bar;
    const ChartSpec b = apply_edit(s, {EditSubtype::chart_type, {}, ConvertType{ChartType::line, bar}}).edited;
    const ChartSpec l = apply_edit(b, {EditSubtype::chart_type, {}, ConvertType{bar, ChartType::line}}).edited;
    c.expect(l.data == s.data && encode_table(l.data) == encode_table(s.data),
             "conversion " + std::to_string(i) + " changed the table");
  }
}

void synthesis_stats(Checks& c) {
  TempDir dir("acceptance-stats");
  SynthConfig cfg = SynthConfig::load(source_dir() / "data" / "presets" / "reference_1pct.json");
  cfg.write_images = false;
  synthesize(cfg, dir.path());
  const Json stats = Json::parse(read_file(dir / "stats.json"));
  const std::map<std::string, std::map<std::string, std::size_t>> reference = {
      {"line", {{"style", 177}, {"layout", 23}, {"data_centric", 41}, {"format", 100}}},
      {"stacked_vertical_bar", {{"style", 88}, {"layout", 12}, {"data_centric", 42}, {"format", 61}}},
      {"grouped_vertical_bar", {{"style", 67}, {"layout", 11}, {"data_centric", 50}, {"format", 78}}},
  };
  std::size_t sum = 0;
  for (const auto& [type, cats] : reference)
    for (const auto& [cat, n] : cats) {
      const std::size_t configured = cfg.counts.at({*parse_chart_type(type), *parse_category(cat)});
      expect_eq(c, static_cast<double>(configured), static_cast<double>(n), "configured " + type + "/" + cat);
      expect_eq(c, stats["counts"][type][cat].get<double>(), static_cast<double>(n), "stats " + type + "/" + cat);
      sum += n;
    }
  expect_eq(c, stats["produced"].get<double>(), static_cast<double>(sum), "produced");
  expect_eq(c, stats["failed"].get<double>(), 0, "failed");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria = {
      {"oracle fixture: 600 pairs score 100 on every metric in under 5 minutes", oracle_fixture},
      {"copy predictor: style edits get S_changed = S_f = 0 with RMS F1 = 100", copy_fixture},
      {"corruption: 90% success without repair, 100% with repair and lower VAES", corruption_fixture},
      {"metric unit suite: VAES example, constant SSIM, assignment, RMS permutations", metric_unit_suite},
      {"pipeline invariants: manifest reproduction, 1000 round-trips, 200 conversions", pipeline_invariants},
      {"synthesis stats: 1/100 preset counts are exact in stats.json", synthesis_stats},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Checks c;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.ok()) {
      std::cout << "PASS  " << name << "  (" << c.total() << " checks, " << std::fixed << std::setprecision(1) << secs
                << " s)" << std::endl;
    } else {
      ++failed;
      std::cout << "FAIL  " << name << "  (" << c.summary() << ")" << std::endl;
    }
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
