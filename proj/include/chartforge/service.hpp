#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "chartforge/edit_op.hpp"
#include "chartforge/spec.hpp"

namespace chartforge {

struct HistoryEntry {
  std::string prompt;         ///< empty for the creation entry
  std::optional<EditOp> op;   ///< absent for the creation entry
  ChartSpec spec;
  std::vector<std::string> changed_keys;
};

/// Immutable view of a session; mutations publish a new one.
struct ChartSession {
  std::string id;
  std::vector<std::shared_ptr<const HistoryEntry>> history;
  std::size_t current = 0;

  const ChartSpec& spec() const { return history[current]->spec; }
  /// Quoted strong validator derived from the canonical spec text.
  std::string etag() const;
};

/// In-memory sessions, optionally mirrored to one JSON file per session.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> state_dir = std::nullopt);

  std::shared_ptr<const ChartSession> create(ChartSpec spec);
  /// nullptr for an unknown id.
  std::shared_ptr<const ChartSession> get(const std::string& id) const;

  /// Applies a prompt to the current spec and drops any redo tail. Throws the
  /// prompt or edit error; the session is left untouched in that case.
  /// `if_match` that differs from the current etag throws Conflict.
  std::shared_ptr<const ChartSession> edit(const std::string& id, const std::string& prompt,
                                           const std::optional<std::string>& if_match = std::nullopt);
  std::shared_ptr<const ChartSession> undo(const std::string& id,
                                           const std::optional<std::string>& if_match = std::nullopt);
  std::shared_ptr<const ChartSession> redo(const std::string& id,
                                           const std::optional<std::string>& if_match = std::nullopt);

  std::size_t size() const;

  struct NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
  };
  /// Stale If-Match ("StaleVersion") or an empty undo/redo stack
  /// ("NothingToUndo", "NothingToRedo").
  struct Conflict : std::runtime_error {
    Conflict(std::string kind, const std::string& message) : std::runtime_error(message), kind(std::move(kind)) {}
    std::string kind;
  };

 private:
  struct Slot {
    std::mutex write;
    std::shared_ptr<const ChartSession> session;
  };

  std::shared_ptr<Slot> slot(const std::string& id) const;
  void persist(const ChartSession& session) const;
  void load_state();

  std::optional<std::filesystem::path> state_dir_;
  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Slot>> slots_;
};

OrderedJson session_to_json(const ChartSession& session);
ChartSession session_from_json(const Json& j);

struct ServiceOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::filesystem::path> state_dir;
  std::optional<std::filesystem::path> ui_dir;
  std::string cors_origin = "*";
};

/// HTTP front end over a SessionStore.
class ChartService {
 public:
  explicit ChartService(ServiceOptions options);
  ~ChartService();
  ChartService(const ChartService&) = delete;
  ChartService& operator=(const ChartService&) = delete;

  /// Binds host:port (port 0 picks a free one) and returns the bound port, or -1.
  int bind();
  /// Serves until stop(); call after bind().
  bool listen();
  void stop();
  bool running() const;

  SessionStore& store() { return store_; }

 private:
  struct Impl;
  ServiceOptions options_;
  SessionStore store_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace chartforge
