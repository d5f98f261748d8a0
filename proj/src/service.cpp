#include "chartforge/service.hpp"

#include <httplib.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "chartforge/edit.hpp"
#include "chartforge/error.hpp"
#include "chartforge/prompt.hpp"
#include "chartforge/render.hpp"
#include "chartforge/rng.hpp"
#include "chartforge/synth.hpp"

namespace chartforge {

namespace fs = std::filesystem;

namespace {

std::string new_session_id() {
  static std::mutex mutex;
  static std::random_device device;
  static std::mt19937_64 engine(mix_seed(device(), device()));
  std::lock_guard lock(mutex);
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(engine()),
                static_cast<unsigned long long>(engine()));
  return buf;
}

bool valid_id(const std::string& id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') return false;
  return true;
}

std::shared_ptr<const HistoryEntry> creation_entry(ChartSpec spec) {
  auto entry = std::make_shared<HistoryEntry>();
  entry->spec = std::move(spec);
  return entry;
}

void check_match(const ChartSession& session, const std::optional<std::string>& if_match) {
  if (if_match && *if_match != "*" && *if_match != session.etag())
    throw SessionStore::Conflict("StaleVersion", "session " + session.id + " changed since " + *if_match);
}

}  // namespace

std::string ChartSession::etag() const {
  char buf[24];
  std::snprintf(buf, sizeof buf, "\"%016llx\"", static_cast<unsigned long long>(fnv1a(serialize_spec(spec()))));
  return buf;
}

OrderedJson session_to_json(const ChartSession& session) {
  OrderedJson history = OrderedJson::array();
  for (const auto& h : session.history) {
    OrderedJson e;
    e["prompt"] = h->prompt;
    e["op"] = h->op ? to_json(*h->op) : OrderedJson(nullptr);
    e["changed_keys"] = h->changed_keys;
    e["spec"] = to_json(h->spec);
    history.push_back(std::move(e));
  }
  OrderedJson j;
  j["id"] = session.id;
  j["current"] = session.current;
  j["history"] = std::move(history);
  return j;
}

ChartSession session_from_json(const Json& j) {
  ChartSession s;
  try {
    s.id = j.at("id").get<std::string>();
    s.current = j.at("current").get<std::size_t>();
    for (const auto& e : j.at("history")) {
      auto entry = std::make_shared<HistoryEntry>();
      entry->prompt = e.at("prompt").get<std::string>();
      if (!e.at("op").is_null()) entry->op = edit_op_from_json(e.at("op"));
      entry->changed_keys = e.at("changed_keys").get<std::vector<std::string>>();
      entry->spec = parse_spec(e.at("spec").dump(), false).spec;
      s.history.push_back(std::move(entry));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::SchemaViolation, std::string("bad session record: ") + e.what());
  }
  if (s.history.empty() || s.current >= s.history.size() || !valid_id(s.id))
    throw Error(ErrorKind::SchemaViolation, "bad session record " + s.id);
  return s;
}

SessionStore::SessionStore(std::optional<fs::path> state_dir) : state_dir_(std::move(state_dir)) {
  if (state_dir_) {
    std::error_code ec;
    fs::create_directories(*state_dir_, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create " + state_dir_->string() + ": " + ec.message());
    load_state();
  }
}

void SessionStore::load_state() {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(*state_dir_))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    try {
      std::ifstream in(file);
      auto session = std::make_shared<ChartSession>(session_from_json(Json::parse(in)));
      auto slot = std::make_shared<Slot>();
      slot->session = std::move(session);
      slots_[slot->session->id] = std::move(slot);
    } catch (const std::exception& e) {
      std::cerr << "skipping session file " << file << ": " << e.what() << "\n";
    }
  }
}

void SessionStore::persist(const ChartSession& session) const {
  if (!state_dir_) return;
  const fs::path target = *state_dir_ / (session.id + ".json");
  const fs::path tmp = *state_dir_ / (session.id + ".json.tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << session_to_json(session).dump(2) << "\n";
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::shared_ptr<SessionStore::Slot> SessionStore::slot(const std::string& id) const {
  std::shared_lock lock(map_mutex_);
  auto it = slots_.find(id);
  if (it == slots_.end()) throw NotFound("no chart " + id);
  return it->second;
}

std::shared_ptr<const ChartSession> SessionStore::create(ChartSpec spec) {
  spec.validate();
  auto session = std::make_shared<ChartSession>();
  session->history.push_back(creation_entry(std::move(spec)));
  auto slot = std::make_shared<Slot>();
  std::unique_lock lock(map_mutex_);
  do {
    session->id = new_session_id();
  } while (slots_.count(session->id));
  persist(*session);
  slot->session = session;
  slots_[session->id] = slot;
  return session;
}

std::shared_ptr<const ChartSession> SessionStore::get(const std::string& id) const {
  std::shared_lock lock(map_mutex_);
  auto it = slots_.find(id);
  if (it == slots_.end()) return nullptr;
  std::lock_guard write(it->second->write);
  return it->second->session;
}

std::shared_ptr<const ChartSession> SessionStore::edit(const std::string& id, const std::string& prompt,
                                                       const std::optional<std::string>& if_match) {
  auto s = slot(id);
  std::lock_guard lock(s->write);
  const ChartSession& cur = *s->session;
  check_match(cur, if_match);
  const EditOp op = parse_prompt(prompt, cur.spec());
  EditResult result = apply_edit(cur.spec(), op);
  auto entry = std::make_shared<HistoryEntry>();
  entry->prompt = prompt;
  entry->op = op;
  entry->spec = std::move(result.edited);
  entry->changed_keys.assign(result.changed_keys.begin(), result.changed_keys.end());
  auto next = std::make_shared<ChartSession>();
  next->id = cur.id;
  next->history.assign(cur.history.begin(), cur.history.begin() + static_cast<std::ptrdiff_t>(cur.current + 1));
  next->history.push_back(std::move(entry));
  next->current = next->history.size() - 1;
  persist(*next);
  s->session = next;
  return next;
}

std::shared_ptr<const ChartSession> SessionStore::undo(const std::string& id,
                                                       const std::optional<std::string>& if_match) {
  auto s = slot(id);
  std::lock_guard lock(s->write);
  const ChartSession& cur = *s->session;
  check_match(cur, if_match);
  if (cur.current == 0) throw Conflict("NothingToUndo", "chart " + id + " is at its first version");
  auto next = std::make_shared<ChartSession>(cur);
  --next->current;
  persist(*next);
  s->session = next;
  return next;
}

std::shared_ptr<const ChartSession> SessionStore::redo(const std::string& id,
                                                       const std::optional<std::string>& if_match) {
  auto s = slot(id);
  std::lock_guard lock(s->write);
  const ChartSession& cur = *s->session;
  check_match(cur, if_match);
  if (cur.current + 1 >= cur.history.size()) throw Conflict("NothingToRedo", "chart " + id + " has nothing to redo");
  auto next = std::make_shared<ChartSession>(cur);
  ++next->current;
  persist(*next);
  s->session = next;
  return next;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(map_mutex_);
  return slots_.size();
}

struct ChartService::Impl {
  httplib::Server server;
};

namespace {

void send_json(httplib::Response& res, int status, const OrderedJson& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, std::string_view kind, const std::string& message,
                const std::string& path = {}) {
  OrderedJson body{{"kind", kind}, {"message", message}};
  if (!path.empty()) body["path"] = path;
  send_json(res, status, body);
}

std::optional<std::string> if_match_of(const httplib::Request& req) {
  if (!req.has_header("If-Match")) return std::nullopt;
  return req.get_header_value("If-Match");
}

OrderedJson session_summary(const ChartSession& s) {
  OrderedJson history = OrderedJson::array();
  for (const auto& h : s.history)
    history.push_back(OrderedJson{{"prompt", h->prompt}, {"changed_keys", h->changed_keys}});
  return OrderedJson{{"id", s.id}, {"current", s.current}, {"history", history}, {"spec", to_json(s.spec())}};
}

OrderedJson templates_json() {
  OrderedJson out = OrderedJson::array();
  for (const auto& t : PromptGrammar::builtin().templates()) {
    OrderedJson o;
    o["category"] = to_string(category_of(t.subtype));
    o["subtype"] = to_string(t.subtype);
    o["form"] = t.form;
    o["base"] = t.base;
    o["variations"] = t.variations;
    out.push_back(std::move(o));
  }
  return out;
}

ChartSpec spec_from_request(const Json& body) {
  if (body.contains("spec")) {
    const Json& s = body["spec"];
    return parse_spec(s.is_string() ? s.get<std::string>() : s.dump(), false).spec;
  }
  if (!body.contains("csv") || !body["csv"].is_string())
    throw Error(ErrorKind::SchemaViolation, "request needs either spec or csv");
  if (!body.contains("chart_type") || !body["chart_type"].is_string())
    throw Error(ErrorKind::SchemaViolation, "csv charts need a chart_type", "chart_type");
  auto type = parse_chart_type(body["chart_type"].get<std::string>());
  if (!type) throw Error(ErrorKind::SchemaViolation, "unknown chart_type", "chart_type");
  std::uint64_t seed = 0;
  if (body.contains("seed")) {
    if (!body["seed"].is_number_unsigned()) throw Error(ErrorKind::SchemaViolation, "seed must be unsigned", "seed");
    seed = body["seed"].get<std::uint64_t>();
  }
  std::string name = "chart";
  if (body.contains("name") && body["name"].is_string()) name = body["name"].get<std::string>();
  SourceTable source{name, parse_csv_table(body["csv"].get<std::string>())};
  Rng rng(seed);
  return sample_spec(source, *type, rng);
}

}  // namespace

ChartService::ChartService(ServiceOptions options)
    : options_(std::move(options)), store_(options_.state_dir), impl_(std::make_unique<Impl>()) {
  auto& srv = impl_->server;
  const std::string origin = options_.cors_origin;
  srv.set_default_headers({{"Access-Control-Allow-Origin", origin},
                           {"Access-Control-Allow-Headers", "Content-Type, If-Match, If-None-Match"},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                           {"Access-Control-Expose-Headers", "ETag"}});

  srv.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    try {
      std::rethrow_exception(ep);
    } catch (const SessionStore::NotFound& e) {
      send_error(res, 404, "NotFound", e.what());
    } catch (const SessionStore::Conflict& e) {
      send_error(res, 409, e.kind, e.what());
    } catch (const Error& e) {
      send_error(res, e.kind() == ErrorKind::Io ? 500 : 422, to_string(e.kind()), e.what(), e.path());
    } catch (const std::exception& e) {
      send_error(res, 500, "Internal", e.what());
    }
  });

  srv.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  srv.Get("/healthz", [this](const httplib::Request&, httplib::Response& res) {
    send_json(res, 200, OrderedJson{{"status", "ok"}, {"sessions", store_.size()}});
  });

  srv.Get("/templates",
          [](const httplib::Request&, httplib::Response& res) { send_json(res, 200, templates_json()); });

  auto parse_body = [](const httplib::Request& req) {
    try {
      return Json::parse(req.body);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::MalformedJson, e.what());
    }
  };

  srv.Post("/charts", [this, parse_body](const httplib::Request& req, httplib::Response& res) {
    const Json body = parse_body(req);
    if (!body.is_object()) throw Error(ErrorKind::SchemaViolation, "request body must be an object");
    auto session = store_.create(spec_from_request(body));
    res.set_header("ETag", session->etag());
    res.set_header("Location", "/charts/" + session->id);
    send_json(res, 201, OrderedJson{{"id", session->id}, {"spec", to_json(session->spec())}});
  });

  auto lookup = [this](const httplib::Request& req) {
    auto session = store_.get(req.matches[1]);
    if (!session) throw SessionStore::NotFound("no chart " + std::string(req.matches[1]));
    return session;
  };

  auto cached = [](const httplib::Request& req, httplib::Response& res, const ChartSession& s) {
    const std::string tag = s.etag();
    res.set_header("ETag", tag);
    res.set_header("Cache-Control", "no-cache");
    if (req.has_header("If-None-Match") && req.get_header_value("If-None-Match") == tag) {
      res.status = 304;
      return true;
    }
    return false;
  };

  srv.Get(R"(/charts/([^/]+))", [lookup](const httplib::Request& req, httplib::Response& res) {
    auto s = lookup(req);
    res.set_header("ETag", s->etag());
    send_json(res, 200, session_summary(*s));
  });

  srv.Get(R"(/charts/([^/]+)/spec)", [lookup, cached](const httplib::Request& req, httplib::Response& res) {
    auto s = lookup(req);
    if (cached(req, res, *s)) return;
    res.set_content(serialize_spec(s->spec()), "application/json");
  });

  srv.Get(R"(/charts/([^/]+)/render\.svg)", [lookup, cached](const httplib::Request& req, httplib::Response& res) {
    auto s = lookup(req);
    if (cached(req, res, *s)) return;
    res.set_content(render_svg(s->spec()), "image/svg+xml");
  });

  auto mutation_reply = [](httplib::Response& res, const ChartSession& s, bool with_changes) {
    OrderedJson body;
    body["spec"] = to_json(s.spec());
    if (with_changes) body["changed_keys"] = s.history[s.current]->changed_keys;
    body["svg"] = render_svg(s.spec());
    body["current"] = s.current;
    body["history_length"] = s.history.size();
    res.set_header("ETag", s.etag());
    send_json(res, 200, body);
  };

  srv.Post(R"(/charts/([^/]+)/edits)",
           [this, parse_body, mutation_reply](const httplib::Request& req, httplib::Response& res) {
             const Json body = parse_body(req);
             if (!body.is_object() || !body.contains("prompt") || !body["prompt"].is_string())
               throw Error(ErrorKind::SchemaViolation, "request needs a prompt string", "prompt");
             auto s = store_.edit(req.matches[1], body["prompt"].get<std::string>(), if_match_of(req));
             mutation_reply(res, *s, true);
           });

  srv.Post(R"(/charts/([^/]+)/undo)", [this, mutation_reply](const httplib::Request& req, httplib::Response& res) {
    mutation_reply(res, *store_.undo(req.matches[1], if_match_of(req)), false);
  });

  srv.Post(R"(/charts/([^/]+)/redo)", [this, mutation_reply](const httplib::Request& req, httplib::Response& res) {
    mutation_reply(res, *store_.redo(req.matches[1], if_match_of(req)), false);
  });

  if (options_.ui_dir) {
    if (!srv.set_mount_point("/ui", options_.ui_dir->string()))
      throw Error(ErrorKind::Io, "ui directory not found: " + options_.ui_dir->string());
  }
}

ChartService::~ChartService() { stop(); }

int ChartService::bind() {
  auto& srv = impl_->server;
  if (options_.port == 0) return srv.bind_to_any_port(options_.host);
  return srv.bind_to_port(options_.host, options_.port) ? options_.port : -1;
}

bool ChartService::listen() { return impl_->server.listen_after_bind(); }

void ChartService::stop() {
  if (impl_) impl_->server.stop();
}

bool ChartService::running() const { return impl_->server.is_running(); }

}  // namespace chartforge
