#include "chartforge/harness.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "chartforge/render.hpp"

namespace chartforge {

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string(), path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Prediction from_file(const fs::path& path) {
  try {
    return {slurp(path), {}, {}};
  } catch (const Error& e) {
    return {std::nullopt, e.kind(), e.what()};
  }
}

class FilePredictor : public Predictor {
 public:
  enum class Mode { oracle, copy, corrupt };
  explicit FilePredictor(Mode mode) : mode_(mode) {}

  std::string name() const override {
    switch (mode_) {
      case Mode::oracle: return "oracle";
      case Mode::copy: return "copy";
      case Mode::corrupt: return "corrupt";
    }
    return "oracle";
  }

  Prediction predict(const PredictRequest& req) override {
    const auto& rec = *req.record;
    if (mode_ == Mode::copy) return from_file(req.root / rec.source_spec);
    Prediction p = from_file(req.root / rec.edited_spec);
    if (mode_ == Mode::corrupt && p.spec_text && req.index % 10 == 9) p.spec_text->resize(p.spec_text->size() / 2);
    return p;
  }

 private:
  Mode mode_;
};

class CommandPredictor : public Predictor {
 public:
  CommandPredictor(std::string command, std::chrono::milliseconds timeout)
      : command_(std::move(command)), timeout_(timeout) {
    signal(SIGPIPE, SIG_IGN);
    int to_child[2], from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0)
      throw Error(ErrorKind::PredictorUnavailable, std::string("pipe failed: ") + std::strerror(errno));
    pid_ = fork();
    if (pid_ < 0) throw Error(ErrorKind::PredictorUnavailable, std::string("fork failed: ") + std::strerror(errno));
    if (pid_ == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    in_ = to_child[1];
    out_ = from_child[0];
    fcntl(out_, F_SETFL, fcntl(out_, F_GETFL) | O_NONBLOCK);
    fcntl(in_, F_SETFD, FD_CLOEXEC);
    fcntl(out_, F_SETFD, FD_CLOEXEC);
  }

  ~CommandPredictor() override {
    if (in_ >= 0) close(in_);
    if (out_ >= 0) close(out_);
    if (pid_ > 0) {
      for (int i = 0; i < 50; ++i) {
        if (waitpid(pid_, nullptr, WNOHANG) == pid_) return;
        usleep(10000);
      }
      kill(pid_, SIGKILL);
      waitpid(pid_, nullptr, 0);
    }
  }

  std::string name() const override { return "cmd:" + command_; }

  Prediction predict(const PredictRequest& req) override {
    if (dead_) return {std::nullopt, ErrorKind::PredictorUnavailable, "predictor process has exited"};
    const auto& rec = *req.record;
    Json request{{"id", rec.id}, {"image_path", (req.root / rec.source_image).string()}, {"prompt", rec.prompt}};
    const std::string line = request.dump() + "\n";
    if (!write_all(line)) {
      dead_ = true;
      return {std::nullopt, ErrorKind::PredictorUnavailable, "predictor stopped reading requests"};
    }
    const auto deadline = std::chrono::steady_clock::now() + timeout_;
    while (true) {
      auto got = read_line(deadline);
      if (!got) {
        if (dead_) return {std::nullopt, ErrorKind::PredictorUnavailable, "predictor process has exited"};
        return {std::nullopt, ErrorKind::Timeout,
                "no response for " + rec.id + " within " + std::to_string(timeout_.count()) + " ms"};
      }
      Json reply;
      try {
        reply = Json::parse(*got);
      } catch (const Json::parse_error&) {
        return {std::nullopt, ErrorKind::ProtocolViolation, "non-JSON line from predictor"};
      }
      if (!reply.is_object() || !reply.contains("id") || !reply["id"].is_string())
        return {std::nullopt, ErrorKind::ProtocolViolation, "response without a string id"};
      if (reply["id"] != rec.id) continue;  // late answer to an earlier, timed-out request
      if (!reply.contains("spec_json") || !reply["spec_json"].is_string())
        return {std::nullopt, ErrorKind::ProtocolViolation, "response without spec_json text"};
      return {reply["spec_json"].get<std::string>(), {}, {}};
    }
  }

 private:
  bool write_all(std::string_view data) {
    while (!data.empty()) {
      ssize_t n = write(in_, data.data(), data.size());
      if (n < 0) {
        if (errno == EINTR) continue;
        return false;
      }
      data.remove_prefix(static_cast<std::size_t>(n));
    }
    return true;
  }

  std::optional<std::string> read_line(std::chrono::steady_clock::time_point deadline) {
    while (true) {
      auto nl = buffer_.find('\n');
      if (nl != std::string::npos) {
        std::string line = buffer_.substr(0, nl);
        buffer_.erase(0, nl + 1);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        return line;
      }
      if (dead_) return std::nullopt;
      const auto left =
          std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now()).count();
      if (left <= 0) return std::nullopt;
      pollfd pfd{out_, POLLIN, 0};
      int r = poll(&pfd, 1, static_cast<int>(left));
      if (r < 0 && errno == EINTR) continue;
      if (r <= 0) return std::nullopt;
      char buf[65536];
      ssize_t n = read(out_, buf, sizeof buf);
      if (n > 0) {
        buffer_.append(buf, static_cast<std::size_t>(n));
      } else if (n == 0 || (errno != EAGAIN && errno != EINTR)) {
        dead_ = true;
      }
    }
  }

  std::string command_;
  std::chrono::milliseconds timeout_;
  pid_t pid_ = -1;
  int in_ = -1;
  int out_ = -1;
  bool dead_ = false;
  std::string buffer_;
};

void add(VaesScore& acc, const VaesScore& v) {
  acc.precision += v.precision;
  acc.recall += v.recall;
  acc.f1 += v.f1;
  acc.s_changed += v.s_changed;
  acc.s_unchanged += v.s_unchanged;
  acc.s_f += v.s_f;
}

}  // namespace

std::unique_ptr<Predictor> make_oracle_predictor() {
  return std::make_unique<FilePredictor>(FilePredictor::Mode::oracle);
}
std::unique_ptr<Predictor> make_copy_predictor() { return std::make_unique<FilePredictor>(FilePredictor::Mode::copy); }
std::unique_ptr<Predictor> make_corrupt_predictor() {
  return std::make_unique<FilePredictor>(FilePredictor::Mode::corrupt);
}

std::unique_ptr<Predictor> make_command_predictor(const std::string& command, std::chrono::milliseconds timeout) {
  return std::make_unique<CommandPredictor>(command, timeout);
}

std::unique_ptr<Predictor> make_predictor(const std::string& ref, std::chrono::milliseconds timeout) {
  if (ref == "oracle") return make_oracle_predictor();
  if (ref == "copy") return make_copy_predictor();
  if (ref == "corrupt") return make_corrupt_predictor();
  if (ref.rfind("cmd:", 0) == 0 && ref.size() > 4) return make_command_predictor(ref.substr(4), timeout);
  throw Error(ErrorKind::PredictorUnavailable, "unknown predictor '" + ref + "'");
}

const CategorySummary* MetricReport::find(std::string_view category) const {
  for (const auto& c : categories)
    if (c.category == category) return &c;
  return nullptr;
}

SampleOutcome score_sample(const EditPairRecord& record, const fs::path& root, const Prediction& prediction,
                           const EvalOptions& options) {
  SampleOutcome out;
  out.id = record.id;
  out.chart_type = record.chart_type;
  out.category = record.category;
  out.subtype = record.subtype;
  if (!prediction.spec_text) {
    out.error = prediction.error;
    out.message = prediction.message;
    return out;
  }
  try {
    const ChartSpec gold = load_spec(root / record.edited_spec);
    const ChartSpec pred = parse_spec(*prediction.spec_text, options.repair).spec;
    const RasterImage pred_image = rasterize(pred);
    const RasterImage gold_image = rasterize(gold);
    const std::set<std::string> changed(record.changed_keys.begin(), record.changed_keys.end());
    out.vaes = vaes(pred, gold, changed, options.metrics);
    out.rms = rms(pred, gold, options.metrics);
    out.ssim = ssim(pred_image, gold_image, options.metrics);
    out.success = true;
  } catch (const Error& e) {
    out.error = e.kind();
    out.message = e.what();
    out.vaes.reset();
    out.rms.reset();
    out.ssim = 0;
  }
  return out;
}

std::vector<CategorySummary> summarize(const std::vector<SampleOutcome>& samples, bool exclude_failed_from_ssim) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<const SampleOutcome*>> groups;
  for (EditCategory c : kCategories) order.emplace_back(to_string(c));
  for (const auto& s : samples) groups[std::string(to_string(s.category))].push_back(&s);

  auto summarize_group = [&](const std::string& name, const std::vector<const SampleOutcome*>& group) {
    CategorySummary sum;
    sum.category = name;
    sum.samples = group.size();
    std::size_t ssim_n = 0;
    for (const auto* s : group) {
      if (s->success) {
        ++sum.succeeded;
        add(sum.vaes, *s->vaes);
        sum.rms.precision += s->rms->precision;
        sum.rms.recall += s->rms->recall;
        sum.rms.f1 += s->rms->f1;
      }
      if (s->success || !exclude_failed_from_ssim) {
        sum.ssim += s->ssim;
        ++ssim_n;
      }
    }
    auto k = [n = static_cast<double>(sum.succeeded)](double total) { return n > 0 ? total * 100.0 / n : 0.0; };
    sum.vaes = {k(sum.vaes.precision), k(sum.vaes.recall), k(sum.vaes.f1),
                k(sum.vaes.s_changed), k(sum.vaes.s_unchanged), k(sum.vaes.s_f)};
    sum.rms = {k(sum.rms.precision), k(sum.rms.recall), k(sum.rms.f1)};
    sum.ssim = ssim_n ? sum.ssim * 100.0 / static_cast<double>(ssim_n) : 0.0;
    sum.success_rate =
        group.empty() ? 0.0 : 100.0 * static_cast<double>(sum.succeeded) / static_cast<double>(group.size());
    return sum;
  };

  std::vector<CategorySummary> out;
  std::vector<const SampleOutcome*> all;
  for (const auto& name : order) {
    auto it = groups.find(name);
    if (it == groups.end()) continue;
    out.push_back(summarize_group(name, it->second));
  }
  for (const auto& s : samples) all.push_back(&s);
  out.push_back(summarize_group("total", all));
  return out;
}

MetricReport run_eval(const fs::path& manifest, Predictor& predictor, const EvalOptions& options) {
  options.metrics.validate();
  const fs::path root = manifest.parent_path();
  std::vector<EditPairRecord> records;
  for (auto& r : read_manifest(manifest)) {
    if (!options.categories.empty() &&
        std::find(options.categories.begin(), options.categories.end(), r.category) == options.categories.end())
      continue;
    records.push_back(std::move(r));
  }
  if (records.empty()) throw Error(ErrorKind::EmptyBatch, "no samples to evaluate in " + manifest.string());

  // Predictions run in manifest order on one stream; scoring fans out.
  std::vector<Prediction> predictions;
  predictions.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) predictions.push_back(predictor.predict({i, &records[i], root}));

  MetricReport report;
  report.predictor = predictor.name();
  report.repair = options.repair;
  report.samples.resize(records.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++)
      report.samples[i] = score_sample(records[i], root, predictions[i], options);
  };
  std::size_t n = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  n = std::min(n, records.size());
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < n; ++w) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  report.categories = summarize(report.samples, options.exclude_failed_from_ssim);
  return report;
}

OrderedJson to_json(const MetricReport& report) {
  auto vaes_json = [](const VaesScore& v) {
    return OrderedJson{{"p", v.precision},         {"r", v.recall},
                       {"f1", v.f1},               {"s_changed", v.s_changed},
                       {"s_unchanged", v.s_unchanged}, {"s_f", v.s_f}};
  };
  auto rms_json = [](const RmsScore& r) { return OrderedJson{{"p", r.precision}, {"r", r.recall}, {"f1", r.f1}}; };
  OrderedJson j;
  j["predictor"] = report.predictor;
  j["repair"] = report.repair;
  j["scale"] = 100;
  OrderedJson cats = OrderedJson::array();
  for (const auto& c : report.categories) {
    OrderedJson o;
    o["category"] = c.category;
    o["samples"] = c.samples;
    o["succeeded"] = c.succeeded;
    o["vaes"] = vaes_json(c.vaes);
    o["rms"] = rms_json(c.rms);
    o["ssim"] = c.ssim;
    o["success_rate"] = c.success_rate;
    cats.push_back(o);
  }
  j["categories"] = cats;
  OrderedJson samples = OrderedJson::array();
  for (const auto& s : report.samples) {
    OrderedJson o;
    o["id"] = s.id;
    o["chart_type"] = to_string(s.chart_type);
    o["category"] = to_string(s.category);
    o["subtype"] = to_string(s.subtype);
    o["success"] = s.success;
    if (s.error) o["error"] = {{"kind", to_string(*s.error)}, {"message", s.message}};
    if (s.vaes) o["vaes"] = vaes_json(*s.vaes);
    if (s.rms) o["rms"] = rms_json(*s.rms);
    o["ssim"] = s.ssim;
    samples.push_back(o);
  }
  j["samples"] = samples;
  return j;
}

}  // namespace chartforge
