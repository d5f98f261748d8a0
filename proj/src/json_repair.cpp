#include "chartforge/json_repair.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace chartforge {

namespace {

struct Frame {
  char closer;
  bool expecting_key;  // object frames only
};

// Cut point: prefix length plus the closers needed at that point.
struct Cut {
  std::size_t length = 0;
  std::string closers;
};

std::string closers_for(const std::vector<Frame>& stack) {
  std::string out;
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) out += it->closer;
  return out;
}

}  // namespace

std::string repair_json_text(std::string_view text) {
  std::vector<Frame> stack;
  std::optional<Cut> best;
  bool started = false;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto mark_value_end = [&](std::size_t end) {
    if (stack.empty()) {
      best = Cut{end, ""};
      return;
    }
    if (stack.back().closer == '}') stack.back().expecting_key = true;
    best = Cut{end, closers_for(stack)};
  };

  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (started && stack.empty()) break;  // trailing garbage after the root
    if (c == '{' || c == '[') {
      started = true;
      stack.push_back({c == '{' ? '}' : ']', true});
      best = Cut{i + 1, closers_for(stack)};
      ++i;
      continue;
    }
    if (c == '}' || c == ']') {
      if (stack.empty() || stack.back().closer != c) break;
      stack.pop_back();
      mark_value_end(i + 1);
      ++i;
      continue;
    }
    if (c == ',' || c == ':') {
      if (c == ':' && !stack.empty() && stack.back().closer == '}') stack.back().expecting_key = false;
      ++i;
      continue;
    }
    if (c == '"') {
      started = true;
      std::size_t j = i + 1;
      bool closed = false;
      while (j < n) {
        if (text[j] == '\\') {
          j += 2;
          continue;
        }
        if (text[j] == '"') {
          closed = true;
          break;
        }
        ++j;
      }
      if (!closed) break;
      bool is_key = !stack.empty() && stack.back().closer == '}' && stack.back().expecting_key;
      if (!is_key) mark_value_end(j + 1);
      i = j + 1;
      continue;
    }
    // Scalar literal: number, true, false, null.
    std::size_t j = i;
    while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '-' || text[j] == '+' ||
                     text[j] == '.'))
      ++j;
    if (j == i) break;  // unexpected character
    // A literal running into end of input may be incomplete.
    if (j == n) break;
    started = true;
    mark_value_end(j);
    i = j;
  }

  if (!best) return "{}";
  if (best->length == n && stack.empty()) return std::string(text);
  std::string out(text.substr(0, best->length));
  // Strip a trailing comma left by the cut.
  while (!out.empty() && (std::isspace(static_cast<unsigned char>(out.back())) || out.back() == ',')) out.pop_back();
  return out + best->closers;
}

}  // namespace chartforge
