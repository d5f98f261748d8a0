// chartforge command line: synth, edit, render, eval, serve.

#include <CLI11.hpp>
#include <signal.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "chartforge/edit.hpp"
#include "chartforge/error.hpp"
#include "chartforge/harness.hpp"
#include "chartforge/prompt.hpp"
#include "chartforge/raster.hpp"
#include "chartforge/render.hpp"
#include "chartforge/service.hpp"
#include "chartforge/synth.hpp"

namespace fs = std::filesystem;
using namespace chartforge;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kEdit = 3, kRender = 4, kOther = 5 };

/// Thrown out of a stage with the exit code it maps to.
struct StageError {
  int code;
  std::string kind;
  std::string message;
  std::string path;
};

void report(const StageError& e) {
  Json j{{"kind", e.kind}, {"message", e.message}};
  if (!e.path.empty()) j["path"] = e.path;
  std::cerr << j.dump() << std::endl;
}

template <class F>
auto stage(int code, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw StageError{e.kind() == ErrorKind::Io ? kOther : code, std::string(to_string(e.kind())), e.what(), e.path()};
  }
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string(), path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, std::string_view text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string(), path.string());
}

ChartSpec read_spec(const fs::path& path, bool strict) {
  const std::string text = stage(kOther, [&] { return read_text(path); });
  return stage(kParse, [&] {
    ParsedSpec parsed = parse_spec(text, !strict);
    for (const auto& note : parsed.repairs)
      std::cerr << Json{{"kind", "Repaired"}, {"path", note.path}, {"message", note.reason}}.dump() << std::endl;
    return parsed.spec;
  });
}

/// Writes `<base>.svg` and `<base>.png` next to each other.
void write_renders(const ChartSpec& spec, const fs::path& base) {
  auto [svg, png] = stage(kRender, [&] {
    return std::pair{render_svg(spec), encode_png(rasterize(spec))};
  });
  stage(kOther, [&] {
    fs::path p = base;
    write_text(p.replace_extension(".svg"), svg);
    write_text(p.replace_extension(".png"), std::string_view(reinterpret_cast<const char*>(png.data()), png.size()));
    return 0;
  });
}

std::optional<std::uint64_t> env_seed() {
  const char* v = std::getenv("CHARTFORGE_SEED");
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t used = 0;
    auto seed = std::stoull(v, &used);
    if (used == std::strlen(v)) return seed;
  } catch (const std::exception&) {
  }
  throw StageError{kUsage, "InvalidConfig", "CHARTFORGE_SEED is not an unsigned integer", "CHARTFORGE_SEED"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chart editing toolkit: dataset synthesis, prompt edits, rendering and evaluation", "chartforge"};
  app.set_version_flag("--version", std::string(CHARTFORGE_VERSION));
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "Generate an edit-pair dataset");
  fs::path synth_config, synth_out;
  std::optional<std::uint64_t> synth_seed;
  std::optional<std::size_t> synth_limit, synth_workers;
  bool synth_no_images = false;
  synth->add_option("--config", synth_config, "Synthesis config JSON")->required()->check(CLI::ExistingFile);
  synth->add_option("--out", synth_out, "Output directory")->required();
  synth->add_option("--seed", synth_seed, "Override the config seed (fallback: CHARTFORGE_SEED)");
  synth->add_option("--limit", synth_limit, "Produce at most N samples");
  synth->add_option("--workers", synth_workers, "Worker threads (default: all cores)");
  synth->add_flag("--no-images", synth_no_images, "Skip PNG/SVG output");

  // edit
  auto* edit = app.add_subcommand("edit", "Apply one prompt edit to a spec");
  fs::path edit_spec, edit_out;
  std::string edit_prompt;
  bool edit_strict = false;
  edit->add_option("--spec", edit_spec, "Input spec JSON")->required();
  edit->add_option("--prompt", edit_prompt, "Edit prompt")->required();
  edit->add_option("--out", edit_out, "Output spec path; .svg and .png are written beside it")->required();
  edit->add_flag("--strict", edit_strict, "Reject specs that need repair");

  // render
  auto* render = app.add_subcommand("render", "Render a spec to SVG and PNG");
  fs::path render_spec, render_out;
  bool render_strict = false;
  render->add_option("--spec", render_spec, "Input spec JSON")->required();
  render->add_option("--out", render_out, "Output base path; extension is replaced by .svg and .png")->required();
  render->add_flag("--strict", render_strict, "Reject specs that need repair");

  // eval
  auto* eval = app.add_subcommand("eval", "Score a predictor on a dataset manifest");
  fs::path eval_manifest, eval_out;
  std::string eval_predictor = "oracle";
  bool eval_repair = false, eval_exclude_failed = false;
  std::optional<std::size_t> eval_workers;
  double eval_timeout = 60.0;
  std::vector<std::string> eval_categories;
  MetricConfig metric_cfg;
  eval->add_option("--manifest", eval_manifest, "manifest.jsonl")->required()->check(CLI::ExistingFile);
  eval->add_option("--predictor", eval_predictor, "oracle | copy | corrupt | cmd:<shell command>");
  eval->add_option("--out", eval_out, "Report JSON path")->required();
  eval->add_flag("--repair", eval_repair, "Repair predicted JSON before scoring");
  eval->add_flag("--exclude-failed-ssim", eval_exclude_failed, "Leave failed samples out of the SSIM mean");
  eval->add_option("--workers", eval_workers, "Scoring threads (default: all cores)");
  eval->add_option("--timeout", eval_timeout, "Seconds per sample for cmd: predictors")->check(CLI::PositiveNumber);
  eval->add_option("--category", eval_categories, "Restrict to these edit categories")
      ->check(CLI::IsMember({"style", "layout", "format", "data_centric"}));
  eval->add_option("--tau-t", metric_cfg.rms_text_threshold, "RMS text threshold");
  eval->add_option("--theta", metric_cfg.rms_numeric_threshold, "RMS numeric threshold");
  eval->add_option("--tau-v", metric_cfg.numeric_threshold, "VAES numeric threshold");
  eval->add_option("--tau-k", metric_cfg.key_threshold, "VAES key threshold");

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP chart-session service");
  ServiceOptions service_opts;
  std::string state_dir, ui_dir;
  serve->add_option("--host", service_opts.host, "Bind address");
  serve->add_option("--port", service_opts.port, "Port (0 picks a free one)");
  serve->add_option("--state-dir", state_dir, "Persist sessions as JSON files here");
  serve->add_option("--ui-dir", ui_dir, "Static web UI served under /ui");
  serve->add_option("--cors-origin", service_opts.cors_origin, "Access-Control-Allow-Origin value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << Json{{"kind", "Usage"}, {"message", e.what()}}.dump() << std::endl;
    return kUsage;
  }

  try {
    if (*synth) {
      SynthConfig cfg = stage(kParse, [&] { return SynthConfig::load(synth_config); });
      if (synth_seed) cfg.seed = *synth_seed;
      else if (auto s = env_seed()) cfg.seed = *s;
      if (synth_limit) cfg.limit = *synth_limit;
      if (synth_workers) cfg.workers = *synth_workers;
      if (synth_no_images) cfg.write_images = false;
      SynthResult result = stage(kOther, [&] { return synthesize(cfg, synth_out); });
      for (const auto& line : result.log) std::cerr << Json{{"kind", "SynthLog"}, {"message", line}}.dump() << "\n";
      std::cout << to_json(result.stats).dump() << std::endl;
    } else if (*edit) {
      ChartSpec spec = read_spec(edit_spec, edit_strict);
      EditOp op = stage(kParse, [&] { return parse_prompt(edit_prompt, spec); });
      EditResult result = stage(kEdit, [&] { return apply_edit(spec, op); });
      stage(kOther, [&] {
        write_text(edit_out, serialize_spec(result.edited) + "\n");
        return 0;
      });
      write_renders(result.edited, edit_out);
      std::cout << OrderedJson{{"changed_keys", result.changed_keys}, {"removed_keys", result.removed_keys}}.dump()
                << std::endl;
    } else if (*render) {
      ChartSpec spec = read_spec(render_spec, render_strict);
      write_renders(spec, render_out);
      fs::path p = render_out;
      std::cout << OrderedJson{{"svg", p.replace_extension(".svg").string()},
                               {"png", fs::path(render_out).replace_extension(".png").string()}}
                       .dump()
                << std::endl;
    } else if (*eval) {
      EvalOptions opts;
      opts.metrics = metric_cfg;
      opts.repair = eval_repair;
      opts.exclude_failed_from_ssim = eval_exclude_failed;
      if (eval_workers) opts.workers = *eval_workers;
      for (const auto& c : eval_categories) opts.categories.push_back(*parse_category(c));
      stage(kParse, [&] {
        opts.metrics.validate();
        return 0;
      });
      auto timeout = std::chrono::milliseconds(static_cast<long long>(eval_timeout * 1000));
      auto predictor = stage(kOther, [&] { return make_predictor(eval_predictor, timeout); });
      MetricReport report = stage(kOther, [&] { return run_eval(eval_manifest, *predictor, opts); });
      OrderedJson j = to_json(report);
      stage(kOther, [&] {
        write_text(eval_out, j.dump(2) + "\n");
        return 0;
      });
      j.erase("samples");
      std::cout << j.dump() << std::endl;
    } else if (*serve) {
      if (!state_dir.empty()) service_opts.state_dir = state_dir;
      if (!ui_dir.empty()) service_opts.ui_dir = ui_dir;
      sigset_t signals;
      sigemptyset(&signals);
      sigaddset(&signals, SIGINT);
      sigaddset(&signals, SIGTERM);
      pthread_sigmask(SIG_BLOCK, &signals, nullptr);
      auto service = stage(kOther, [&] { return std::make_unique<ChartService>(service_opts); });
      const int port = service->bind();
      if (port < 0)
        throw StageError{kOther, "Io", "cannot bind " + service_opts.host + ":" + std::to_string(service_opts.port), ""};
      std::cout << Json{{"listening", "http://" + service_opts.host + ":" + std::to_string(port)}}.dump()
                << std::endl;
      std::thread waiter([&] {
        int sig = 0;
        sigwait(&signals, &sig);
        service->stop();
      });
      service->listen();
      if (waiter.joinable()) {
        pthread_kill(waiter.native_handle(), SIGTERM);
        waiter.join();
      }
    }
  } catch (const StageError& e) {
    report(e);
    return e.code;
  } catch (const std::exception& e) {
    report({kOther, "Internal", e.what(), ""});
    return kOther;
  }
  return kOk;
}
