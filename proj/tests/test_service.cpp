#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <httplib.h>

#include <thread>

#include "chartforge/edit.hpp"
#include "chartforge/prompt.hpp"
#include "chartforge/service.hpp"
#include "support.hpp"

using namespace cftest;

namespace {

/// Service on a free port, served from a background thread.
class Running {
 public:
  explicit Running(ServiceOptions opts = {}) {
    opts.port = 0;
    service_ = std::make_unique<ChartService>(std::move(opts));
    port_ = service_->bind();
    REQUIRE(port_ > 0);
    thread_ = std::thread([this] { service_->listen(); });
    while (!service_->running()) std::this_thread::yield();
  }
  ~Running() {
    service_->stop();
    thread_.join();
  }
  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_read_timeout(30, 0);
    return c;
  }
  ChartService& service() { return *service_; }

 private:
  std::unique_ptr<ChartService> service_;
  int port_ = -1;
  std::thread thread_;
};

Json body_of(const httplib::Result& r) {
  REQUIRE(r);
  return Json::parse(r->body);
}

std::string create(httplib::Client& c, const ChartSpec& spec, std::string* etag = nullptr) {
  const Json req{{"spec", Json::parse(serialize_spec(spec))}};
  auto r = c.Post("/charts", req.dump(), "application/json");
  REQUIRE(r);
  REQUIRE(r->status == 201);
  if (etag) *etag = r->get_header_value("ETag");
  const Json j = Json::parse(r->body);
  CHECK(r->get_header_value("Location") == "/charts/" + j["id"].get<std::string>());
  return j["id"].get<std::string>();
}

httplib::Result edit(httplib::Client& c, const std::string& id, const std::string& prompt,
                     const std::string& if_match = {}) {
  httplib::Headers h;
  if (!if_match.empty()) h.emplace("If-Match", if_match);
  return c.Post("/charts/" + id + "/edits", h, Json{{"prompt", prompt}}.dump(), "application/json");
}

std::string current_spec(httplib::Client& c, const std::string& id) {
  auto r = c.Get("/charts/" + id + "/spec");
  REQUIRE(r);
  REQUIRE(r->status == 200);
  return r->body;
}

const std::vector<std::string> kPrompts = {
    "Change the color of OECD members to red",
    "Change the color of South Asia to blue",
    "Show the grid lines",
    "Hide the grid lines",
    "Move the legend to the upper left",
    "Move the legend to the lower right",
    "Convert this line chart into a grouped bar chart",
    "Convert this grouped bar chart into a line chart",
    "Set the value of South Asia at 2004 to 12",
    "Remove the data series South Asia",
    "Keep only the columns 2004",
    "Make it sparkle",
};

}  // namespace

TEST_CASE("health check") {
  Running s;
  auto c = s.client();
  auto r = c.Get("/healthz");
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(body_of(r)["status"] == "ok");
  CHECK(r->get_header_value("Access-Control-Allow-Origin") == "*");
}

TEST_CASE("convert, inspect and undo over HTTP") {
  Running s;
  auto c = s.client();
  const ChartSpec original = imports_spec();
  const std::string id = create(c, original);
  const std::string created = current_spec(c, id);
  CHECK(created == serialize_spec(original));

  auto r = edit(c, id, "Convert this line chart into a grouped bar chart");
  REQUIRE(r);
  REQUIRE(r->status == 200);
  const Json reply = Json::parse(r->body);
  CHECK(reply["current"] == 1);
  CHECK(reply["history_length"] == 2);
  CHECK(reply["svg"].get<std::string>().find("<svg") != std::string::npos);
  CHECK_FALSE(reply["changed_keys"].empty());

  const ChartSpec now = parse_spec(current_spec(c, id), false).spec;
  CHECK(now.chart_type() == ChartType::grouped_vertical_bar);
  CHECK(now.data == original.data);

  r = c.Post("/charts/" + id + "/undo", "", "application/json");
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(current_spec(c, id) == created);

  r = c.Post("/charts/" + id + "/redo", "", "application/json");
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(parse_spec(current_spec(c, id), false).spec.chart_type() == ChartType::grouped_vertical_bar);

  r = c.Post("/charts/" + id + "/redo", "", "application/json");
  REQUIRE(r);
  CHECK(r->status == 409);
  CHECK(body_of(r)["kind"] == "NothingToRedo");
}

TEST_CASE("a bad prompt leaves the session alone") {
  Running s;
  auto c = s.client();
  const std::string id = create(c, imports_spec());
  const std::string before = current_spec(c, id);
  auto r = edit(c, id, "Make it sparkle");
  REQUIRE(r);
  CHECK(r->status == 422);
  CHECK(body_of(r)["kind"] == "UnrecognizedPrompt");
  CHECK(current_spec(c, id) == before);
  CHECK(body_of(c.Get("/charts/" + id))["history"].size() == 1);

  r = c.Post("/charts/" + id + "/undo", "", "application/json");
  REQUIRE(r);
  CHECK(r->status == 409);
  CHECK(body_of(r)["kind"] == "NothingToUndo");
}

TEST_CASE("unknown charts and malformed requests") {
  Running s;
  auto c = s.client();
  for (const std::string path : {"/charts/nope", "/charts/nope/spec", "/charts/nope/render.svg"}) {
    auto r = c.Get(path);
    REQUIRE(r);
    CHECK(r->status == 404);
    CHECK(body_of(r)["kind"] == "NotFound");
  }
  auto r = edit(c, "nope", "Show the grid lines");
  REQUIRE(r);
  CHECK(r->status == 404);

  r = c.Post("/charts", "{not json", "application/json");
  REQUIRE(r);
  CHECK(r->status == 422);
  CHECK(body_of(r)["kind"] == "MalformedJson");

  r = c.Post("/charts", Json{{"spec", "{\"chart_type\": \"pie\"}"}}.dump(), "application/json");
  REQUIRE(r);
  CHECK(r->status == 422);

  const std::string id = create(c, imports_spec());
  r = c.Post("/charts/" + id + "/edits", Json{{"text", "hi"}}.dump(), "application/json");
  REQUIRE(r);
  CHECK(r->status == 422);
  CHECK(body_of(r)["kind"] == "SchemaViolation");
}

TEST_CASE("etags guard writes and reads") {
  Running s;
  auto c = s.client();
  std::string tag;
  const std::string id = create(c, country_spec(), &tag);
  CHECK(tag.size() == 18);
  CHECK(tag.front() == '"');

  auto r = c.Get("/charts/" + id + "/spec", {{"If-None-Match", tag}});
  REQUIRE(r);
  CHECK(r->status == 304);
  CHECK(r->body.empty());

  r = edit(c, id, "Change the color of OECD members to red", tag);
  REQUIRE(r);
  REQUIRE(r->status == 200);
  const std::string next = r->get_header_value("ETag");
  CHECK(next != tag);

  r = edit(c, id, "Change the color of South Asia to blue", tag);
  REQUIRE(r);
  CHECK(r->status == 409);
  CHECK(body_of(r)["kind"] == "StaleVersion");

  r = c.Get("/charts/" + id + "/spec", {{"If-None-Match", tag}});
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(r->get_header_value("ETag") == next);

  r = c.Get("/charts/" + id + "/render.svg", {{"If-None-Match", next}});
  REQUIRE(r);
  CHECK(r->status == 304);
}

TEST_CASE("charts from CSV") {
  Running s;
  auto c = s.client();
  const std::string csv = read_file(source_dir() / "data" / "tables" / "import_share.csv");
  const Json req{{"csv", csv}, {"chart_type", "stacked_vertical_bar"}, {"seed", 4}, {"name", "import_share"}};
  auto r = c.Post("/charts", req.dump(), "application/json");
  REQUIRE(r);
  REQUIRE(r->status == 201);
  const Json j = Json::parse(r->body);
  CHECK(j["spec"]["global_properties"]["chart_type"] == "stacked_vertical_bar");
  auto again = c.Post("/charts", req.dump(), "application/json");
  REQUIRE(again);
  CHECK(Json::parse(again->body)["spec"] == j["spec"]);

  r = c.Post("/charts", Json{{"csv", csv}, {"chart_type", "pie"}}.dump(), "application/json");
  REQUIRE(r);
  CHECK(r->status == 422);
}

TEST_CASE("templates list every subtype") {
  Running s;
  auto c = s.client();
  const Json t = body_of(c.Get("/templates"));
  std::set<std::string> subtypes;
  for (const auto& e : t) subtypes.insert(e["subtype"].get<std::string>());
  CHECK(subtypes.size() == 15);
}

TEST_CASE("state directory survives a restart") {
  TempDir dir("service-state");
  ServiceOptions opts;
  opts.state_dir = dir.path();
  std::string id, spec_text;
  {
    Running s(opts);
    auto c = s.client();
    id = create(c, country_spec());
    auto r = edit(c, id, "Change the color of OECD members to red");
    REQUIRE(r);
    REQUIRE(r->status == 200);
    r = edit(c, id, "Show the grid lines");
    REQUIRE(r);
    REQUIRE(r->status == 200);
    r = c.Post("/charts/" + id + "/undo", "", "application/json");
    REQUIRE(r);
    spec_text = current_spec(c, id);
  }
  CHECK(fs::exists(dir / (id + ".json")));
  Running s(opts);
  auto c = s.client();
  CHECK(current_spec(c, id) == spec_text);
  const Json summary = body_of(c.Get("/charts/" + id));
  CHECK(summary["current"] == 1);
  CHECK(summary["history"].size() == 3);
  auto r = c.Post("/charts/" + id + "/redo", "", "application/json");
  REQUIRE(r);
  CHECK(r->status == 200);
}

TEST_CASE("CORS preflight") {
  ServiceOptions opts;
  opts.cors_origin = "http://localhost:5173";
  Running s(opts);
  auto c = s.client();
  auto r = c.Options("/charts");
  REQUIRE(r);
  CHECK(r->status == 204);
  CHECK(r->get_header_value("Access-Control-Allow-Origin") == "http://localhost:5173");
}

TEST_CASE("session spec is the fold of its edits") {
  SessionStore store;
  Rng rng(77);
  int applied = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const ChartSpec start = country_spec(ChartType::line, trial + 1);
    const std::string id = store.create(start)->id;
    for (int step = 0; step < 25; ++step) {
      const auto before = store.get(id);
      const int action = static_cast<int>(rng.index(10));
      try {
        if (action < 6) {
          store.edit(id, kPrompts[rng.index(kPrompts.size())]);
          ++applied;
        } else if (action < 8) {
          store.undo(id);
        } else {
          store.redo(id);
        }
      } catch (const Error&) {
        CHECK(store.get(id) == before);
      } catch (const SessionStore::Conflict&) {
        CHECK(store.get(id) == before);
      }
      const auto s = store.get(id);
      std::vector<EditOp> ops;
      for (std::size_t i = 1; i <= s->current; ++i) ops.push_back(*s->history[i]->op);
      CHECK(serialize_spec(apply_edits(start, ops)) == serialize_spec(s->spec()));
      CHECK(s->history.front()->prompt.empty());
      for (std::size_t i = 1; i < s->history.size(); ++i)
        CHECK(serialize_spec(s->history[i]->spec) ==
              serialize_spec(apply_edit(s->history[i - 1]->spec, *s->history[i]->op).edited));
    }
  }
  CHECK(applied > 100);
}

TEST_CASE("concurrent edits serialize per session") {
  SessionStore store;
  const std::string id = store.create(country_spec())->id;
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&store, &id, t] {
      for (int i = 0; i < 10; ++i)
        store.edit(id, t % 2 ? "Show the grid lines" : "Move the legend to the upper left");
    });
  for (auto& t : threads) t.join();
  const auto s = store.get(id);
  CHECK(s->history.size() == 81);
  CHECK(s->current == 80);
}
