#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>

#include "chartforge/harness.hpp"
#include "support.hpp"

using namespace cftest;

namespace {

/// A 30-sample dataset shared by every case in this file.
const fs::path& dataset() {
  static TempDir dir("harness-data");
  static bool built = false;
  if (!built) {
    Json counts;
    for (const char* t : {"line", "grouped_vertical_bar", "stacked_vertical_bar"})
      for (const char* c : {"style", "layout", "format", "data_centric"}) counts[t][c] = 5;
    const Json j{{"seed", 31}, {"tables", (source_dir() / "data" / "tables").string()}, {"counts", counts}, {"total", 30}};
    synthesize(SynthConfig::from_json(j, source_dir()), dir.path());
    built = true;
  }
  return dir.path();
}

fs::path manifest() { return dataset() / "manifest.jsonl"; }

std::string script_predictor(const std::string& mode) {
  return "cmd:python3 " + fixture("predictor.py").string() + " " + manifest().string() + " " + mode;
}

void check_perfect(const CategorySummary& c) {
  CAPTURE(c.category);
  CHECK(c.vaes.precision == 100);
  CHECK(c.vaes.recall == 100);
  CHECK(c.vaes.f1 == 100);
  CHECK(c.vaes.s_f == 100);
  CHECK(c.rms.f1 == 100);
  CHECK(c.ssim == 100);
  CHECK(c.success_rate == 100);
}

bool same_outcome(const SampleOutcome& a, const SampleOutcome& b) {
  return a.id == b.id && a.success == b.success && a.error == b.error && a.ssim == b.ssim &&
         a.vaes.has_value() == b.vaes.has_value() && (!a.vaes || a.vaes->f1 == b.vaes->f1) &&
         (!a.rms || a.rms->f1 == b.rms->f1);
}

}  // namespace

TEST_CASE("oracle predictor scores 100 everywhere") {
  auto p = make_oracle_predictor();
  const MetricReport r = run_eval(manifest(), *p, {});
  CHECK(r.samples.size() == 30);
  CHECK(r.categories.back().category == "total");
  CHECK(r.categories.size() == 5);
  for (const auto& c : r.categories) check_perfect(c);
}

TEST_CASE("copy predictor gets no credit for style edits") {
  auto p = make_copy_predictor();
  EvalOptions opts;
  opts.categories = {EditCategory::style};
  const MetricReport r = run_eval(manifest(), *p, opts);
  REQUIRE(!r.samples.empty());
  for (const auto& s : r.samples) {
    CHECK(s.category == EditCategory::style);
    REQUIRE(s.vaes);
    CHECK(s.vaes->s_changed == 0);
    CHECK(s.vaes->s_f == 0);
    CHECK(s.rms->f1 == 1);
  }
  CHECK(r.total().rms.f1 == 100);
  CHECK(r.total().vaes.s_f == 0);
}

TEST_CASE("corrupt predictor with and without repair") {
  auto p = make_corrupt_predictor();
  const MetricReport strict = run_eval(manifest(), *p, {});
  CHECK(strict.total().success_rate == 90.0);
  for (std::size_t i = 0; i < strict.samples.size(); ++i) {
    CHECK(strict.samples[i].success == (i % 10 != 9));
    if (i % 10 == 9) {
      CHECK(strict.samples[i].ssim == 0);
      CHECK_FALSE(strict.samples[i].vaes.has_value());
      CHECK(strict.samples[i].error == ErrorKind::MalformedJson);
    }
  }
  EvalOptions repair;
  repair.repair = true;
  const MetricReport fixed = run_eval(manifest(), *p, repair);
  CHECK(fixed.total().success_rate == 100.0);
  CHECK(fixed.total().success_rate >= strict.total().success_rate);
  auto oracle = make_oracle_predictor();
  const MetricReport clean = run_eval(manifest(), *oracle, {});
  CHECK(fixed.total().vaes.f1 < clean.total().vaes.f1);
}

TEST_CASE("failed samples and the SSIM average") {
  auto p = make_corrupt_predictor();
  EvalOptions opts;
  const MetricReport with = run_eval(manifest(), *p, opts);
  opts.exclude_failed_from_ssim = true;
  const MetricReport without = run_eval(manifest(), *p, opts);
  CHECK(with.total().ssim == doctest::Approx(90.0));
  CHECK(without.total().ssim == 100.0);
  CHECK(with.total().vaes.f1 == without.total().vaes.f1);
  CHECK(with.total().vaes.f1 == 100.0);
}

TEST_CASE("aggregates ignore sample order") {
  auto p = make_corrupt_predictor();
  const MetricReport r = run_eval(manifest(), *p, {});
  auto samples = r.samples;
  std::reverse(samples.begin(), samples.end());
  std::rotate(samples.begin(), samples.begin() + 7, samples.end());
  const auto again = summarize(samples, false);
  REQUIRE(again.size() == r.categories.size());
  for (std::size_t i = 0; i < again.size(); ++i) {
    CHECK(again[i].category == r.categories[i].category);
    CHECK(again[i].vaes.f1 == doctest::Approx(r.categories[i].vaes.f1).epsilon(1e-12));
    CHECK(again[i].rms.f1 == doctest::Approx(r.categories[i].rms.f1).epsilon(1e-12));
    CHECK(again[i].ssim == doctest::Approx(r.categories[i].ssim).epsilon(1e-12));
    CHECK(again[i].success_rate == r.categories[i].success_rate);
  }
}

TEST_CASE("scoring is the same with one worker or many") {
  auto p = make_copy_predictor();
  EvalOptions one;
  one.workers = 1;
  EvalOptions four;
  four.workers = 4;
  const MetricReport a = run_eval(manifest(), *p, one);
  const MetricReport b = run_eval(manifest(), *p, four);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(same_outcome(a.samples[i], b.samples[i]));
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("echo process equals the oracle") {
  auto echo = make_predictor(script_predictor("echo"));
  auto oracle = make_oracle_predictor();
  const MetricReport a = run_eval(manifest(), *echo, {});
  const MetricReport b = run_eval(manifest(), *oracle, {});
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(same_outcome(a.samples[i], b.samples[i]));
  for (const auto& c : a.categories) check_perfect(c);
}

TEST_CASE("answers for other ids are skipped") {
  auto p = make_predictor(script_predictor("shuffle"));
  const MetricReport r = run_eval(manifest(), *p, {});
  CHECK(r.total().success_rate == 100);
}

TEST_CASE("a garbage line fails one sample only") {
  auto p = make_predictor(script_predictor("garbage"));
  const MetricReport r = run_eval(manifest(), *p, {});
  REQUIRE(r.samples.size() == 30);
  CHECK_FALSE(r.samples[1].success);
  CHECK(r.samples[1].error == ErrorKind::ProtocolViolation);
  CHECK(r.samples[1].ssim == 0);
  for (std::size_t i = 0; i < r.samples.size(); ++i)
    if (i != 1) CHECK(r.samples[i].success);
}

TEST_CASE("a silent predictor times out and the batch goes on") {
  auto p = make_predictor(script_predictor("slow"), std::chrono::milliseconds(1000));
  const auto start = std::chrono::steady_clock::now();
  const MetricReport r = run_eval(manifest(), *p, {});
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(30));
  CHECK_FALSE(r.samples[0].success);
  CHECK(r.samples[0].error == ErrorKind::Timeout);
  for (std::size_t i = 1; i < r.samples.size(); ++i) CHECK(r.samples[i].success);
}

TEST_CASE("a predictor that exits fails the rest of the batch") {
  auto p = make_predictor(script_predictor("exit"));
  const MetricReport r = run_eval(manifest(), *p, {});
  REQUIRE(r.samples.size() == 30);
  CHECK(r.samples[0].success);
  CHECK(r.samples[1].success);
  for (std::size_t i = 2; i < r.samples.size(); ++i) {
    CHECK_FALSE(r.samples[i].success);
    CHECK(r.samples[i].error == ErrorKind::PredictorUnavailable);
  }
}

TEST_CASE("unknown predictors") {
  try {
    make_predictor("nonsense");
    FAIL("expected PredictorUnavailable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PredictorUnavailable);
  }
  auto p = make_predictor("cmd:exit 0");
  const MetricReport r = run_eval(manifest(), *p, {});
  CHECK(r.total().success_rate == 0);
}

TEST_CASE("report layout") {
  auto p = make_oracle_predictor();
  const OrderedJson j = to_json(run_eval(manifest(), *p, {}));
  CHECK(j["predictor"] == "oracle");
  CHECK(j["repair"] == false);
  for (const auto& c : j["categories"]) {
    for (const char* k : {"category", "vaes", "rms", "ssim", "success_rate"}) CHECK(c.contains(k));
    for (const char* k : {"p", "r", "f1"}) {
      CHECK(c["vaes"].contains(k));
      CHECK(c["rms"].contains(k));
    }
  }
  CHECK(j["samples"].size() == 30);
  CHECK(j["samples"][0].contains("id"));
}

TEST_CASE("empty selections") {
  TempDir dir("empty-manifest");
  write_file(dir / "manifest.jsonl", "");
  auto p = make_oracle_predictor();
  try {
    run_eval(dir / "manifest.jsonl", *p, {});
    FAIL("expected EmptyBatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyBatch);
  }
}

TEST_CASE("perfect scores average to exactly 100") {
  for (std::size_t n : {1u, 3u, 7u, 41u, 97u, 600u}) {
    std::vector<SampleOutcome> samples(n);
    for (auto& s : samples) {
      s.category = EditCategory::layout;
      s.success = true;
      s.ssim = 1;
      s.vaes = VaesScore{1, 1, 1, 1, 1, 1};
      s.rms = RmsScore{1, 1, 1};
    }
    const auto sum = summarize(samples, false);
    CAPTURE(n);
    CHECK(sum.back().vaes.f1 == 100.0);
    CHECK(sum.back().vaes.s_f == 100.0);
    CHECK(sum.back().rms.f1 == 100.0);
    CHECK(sum.back().ssim == 100.0);
  }
}
