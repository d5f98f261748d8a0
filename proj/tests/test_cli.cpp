#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include "chartforge/edit.hpp"
#include "chartforge/prompt.hpp"
#include "support.hpp"

using namespace cftest;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

/// Runs the CLI with `args` (already quoted) and captures both streams.
Run cli(const std::string& args, const std::string& env = {}) {
  static TempDir io("cli-io");
  const fs::path out = io / "stdout", err = io / "stderr";
  const std::string cmd = env + " " + quote(CF_CLI) + " " + args + " >" + quote(out.string()) + " 2>" + quote(err.string());
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), read_file(out), read_file(err)};
}

Json last_json_line(const std::string& text) {
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return Json::parse(last);
}

std::pair<unsigned, unsigned> png_size(const std::string& bytes) {
  REQUIRE(bytes.size() > 24);
  REQUIRE(bytes.compare(1, 3, "PNG") == 0);
  auto be32 = [&](std::size_t at) {
    unsigned v = 0;
    for (std::size_t i = 0; i < 4; ++i) v = (v << 8) | static_cast<unsigned char>(bytes[at + i]);
    return v;
  };
  return {be32(16), be32(20)};
}

std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file()) files[fs::relative(e.path(), root).string()] = read_file(e.path());
  return files;
}

const std::string kPreset = (source_dir() / "data" / "presets" / "reference_1pct.json").string();

}  // namespace

TEST_CASE("version") {
  const Run r = cli("--version");
  CHECK(r.code == 0);
  CHECK(r.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("edit writes the spec and its renders") {
  TempDir dir("cli-edit");
  const Run r = cli("edit --spec " + quote(fixture("imports_line.json").string()) +
                    " --prompt 'Show the grid lines' --out " + quote((dir / "out.json").string()));
  REQUIRE(r.code == 0);
  const ChartSpec out = parse_spec(read_file(dir / "out.json"), false).spec;
  CHECK(out.global.grid.visible);
  const Json keys = Json::parse(r.out);
  CHECK(keys.contains("changed_keys"));
  CHECK(keys.contains("removed_keys"));
  CHECK(fs::exists(dir / "out.svg"));
  CHECK(png_size(read_file(dir / "out.png")) == std::pair<unsigned, unsigned>{800, 800});
}

TEST_CASE("repairs are reported and --strict refuses them") {
  TempDir dir("cli-strict");
  write_file(dir / "in.json", "{\"underlying_data\": \"Year | A <0x0A> 2001 | 1 <0x0A> 2002 | 3\", \"chart_title\": \"t\"");
  Run r = cli("render --spec " + quote((dir / "in.json").string()) + " --out " + quote((dir / "r.png").string()));
  CHECK(r.code == 0);
  CHECK(r.err.find("Repaired") != std::string::npos);
  CHECK(fs::exists(dir / "r.svg"));
  r = cli("render --strict --spec " + quote((dir / "in.json").string()) + " --out " + quote((dir / "s.png").string()));
  CHECK(r.code == 2);
  CHECK_FALSE(fs::exists(dir / "s.svg"));
}

TEST_CASE("error exit codes") {
  TempDir dir("cli-errors");
  const std::string spec = quote(fixture("imports_line.json").string());
  const std::string out = quote((dir / "o.json").string());

  Run r = cli("edit --spec " + spec + " --prompt 'Make it sparkle' --out " + out);
  CHECK(r.code == 2);
  CHECK(last_json_line(r.err)["kind"] == "UnrecognizedPrompt");
  CHECK_FALSE(fs::exists(dir / "o.json"));

  r = cli("edit --spec " + spec + " --prompt 'Change the color of Atlantis to red' --out " + out);
  CHECK(r.code == 2);
  CHECK(last_json_line(r.err)["kind"] == "UnknownTarget");

  r = cli("edit --spec " + spec + " --prompt 'Keep only the columns 1850' --out " + out);
  CHECK(r.code == 2);

  r = cli("edit --spec " + quote((dir / "missing.json").string()) + " --prompt 'Show the grid lines' --out " + out);
  CHECK(r.code == 5);
  CHECK(last_json_line(r.err)["kind"] == "Io");

  r = cli("edit --spec " + spec);
  CHECK(r.code == 1);
  CHECK(last_json_line(r.err)["kind"] == "Usage");

  r = cli("frobnicate");
  CHECK(r.code == 1);
}

TEST_CASE("edit failures exit 3") {
  TempDir dir("cli-edit-fail");
  write_file(dir / "in.json", serialize_spec(country_spec()));
  const Run r = cli("edit --spec " + quote((dir / "in.json").string()) +
                    " --prompt 'Filter the data to the range 1800 to 1810' --out " + quote((dir / "o.json").string()));
  CHECK(r.code == 3);
  CHECK(last_json_line(r.err)["kind"] == "EmptyResult");
}

TEST_CASE("chained edits match the library") {
  TempDir dir("cli-chain");
  const ChartSpec start = country_spec();
  write_file(dir / "s0.json", serialize_spec(start));
  const std::vector<std::string> prompts = {"Change the color of OECD members to red", "Move the legend to the upper left",
                                            "Convert this line chart into a grouped bar chart",
                                            "Set the value of South Asia at 2004 to 12"};
  std::vector<EditOp> ops;
  ChartSpec cur = start;
  for (std::size_t i = 0; i < prompts.size(); ++i) {
    ops.push_back(parse_prompt(prompts[i], cur));
    cur = apply_edit(cur, ops.back()).edited;
    const Run r = cli("edit --spec " + quote((dir / ("s" + std::to_string(i) + ".json")).string()) + " --prompt " +
                      quote(prompts[i]) + " --out " + quote((dir / ("s" + std::to_string(i + 1) + ".json")).string()));
    REQUIRE(r.code == 0);
  }
  CHECK(read_file(dir / "s4.json") == serialize_spec(apply_edits(start, ops)) + "\n");
}

TEST_CASE("synth is reproducible and honours seed precedence") {
  TempDir a("cli-synth-a"), b("cli-synth-b"), c("cli-synth-c"), d("cli-synth-d");
  const std::string base = "synth --config " + quote(kPreset) + " --limit 10 ";
  REQUIRE(cli(base + "--seed 7 --out " + quote(a.path().string())).code == 0);
  REQUIRE(cli(base + "--seed 7 --out " + quote(b.path().string())).code == 0);
  const auto ta = tree(a.path());
  CHECK(ta == tree(b.path()));
  CHECK(ta.size() > 10);

  REQUIRE(cli(base + "--out " + quote(c.path().string()), "CHARTFORGE_SEED=7").code == 0);
  CHECK(tree(c.path()) == ta);
  REQUIRE(cli(base + "--seed 8 --out " + quote(d.path().string()), "CHARTFORGE_SEED=7").code == 0);
  CHECK(read_file(d / "manifest.jsonl") != read_file(a / "manifest.jsonl"));
}

TEST_CASE("eval with the oracle") {
  TempDir data("cli-eval");
  REQUIRE(cli("synth --config " + quote(kPreset) + " --limit 12 --seed 3 --out " + quote(data.path().string())).code == 0);
  const Run r = cli("eval --manifest " + quote((data / "manifest.jsonl").string()) + " --predictor oracle --out " +
                    quote((data / "report.json").string()));
  REQUIRE(r.code == 0);
  const Json summary = Json::parse(r.out);
  CHECK_FALSE(summary.contains("samples"));
  for (const auto& c : summary["categories"]) {
    CHECK(c["vaes"]["f1"] == 100.0);
    CHECK(c["rms"]["f1"] == 100.0);
    CHECK(c["ssim"] == 100.0);
    CHECK(c["success_rate"] == 100.0);
  }
  const Json report = Json::parse(read_file(data / "report.json"));
  CHECK(report["samples"].size() == 12);

  const Run bad = cli("eval --manifest " + quote((data / "manifest.jsonl").string()) +
                      " --predictor nonsense --out " + quote((data / "x.json").string()));
  CHECK(bad.code == 5);
  CHECK(last_json_line(bad.err)["kind"] == "PredictorUnavailable");
}
