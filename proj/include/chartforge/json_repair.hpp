#pragma once

#include <string>
#include <string_view>

namespace chartforge {

/// Mends truncated or trailing-garbage JSON: keeps the longest prefix that
/// ends on a complete value, drops a dangling key or comma, and closes every
/// open container. Returns "{}" when nothing usable remains.
std::string repair_json_text(std::string_view text);

}  // namespace chartforge
