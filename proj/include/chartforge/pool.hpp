#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace chartforge {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

enum class PoolScope { line, bar, global };

std::string_view to_string(PoolScope scope);

/// One row of the closed property pool.
struct PoolEntry {
  PoolScope scope;
  std::string property;  ///< human label, e.g. "X-axis Label Font Name"
  std::string key;       ///< flattened attribute path the entry governs
  std::vector<Json> values;
  bool editable;
};

/// The closed set of plotting values charts are sampled from.
class PropertyPool {
 public:
  static const PropertyPool& instance();

  std::span<const PoolEntry> entries() const { return entries_; }
  const PoolEntry* find(PoolScope scope, std::string_view key) const;

 private:
  PropertyPool();
  std::vector<PoolEntry> entries_;
};

/// Value lists, in pool order. The first element is the repair default.
namespace pool {
inline const std::vector<std::string> kColors{"b", "g", "r", "c", "m", "y", "k"};
inline const std::vector<std::string> kMarkers{"o", "^", "s", "*", "None"};
inline const std::vector<std::string> kLineStyles{"solid",        "dashed",       "dotted",      "dense dotted",
                                                  "loose dotted", "dense dashed", "loose dashed"};
inline const std::vector<std::string> kHatches{"xx", ".", "*", "/", "\\", "None"};
inline const std::vector<std::string> kFonts{"monospace", "Serif", "sans-serif", "Arial Black"};
inline const std::vector<std::string> kFontSizes{"medium", "large", "x-large"};
inline const std::vector<std::string> kTickLabelSizes{"x-small", "small", "medium", "large"};
inline const std::vector<int> kLegendLocs{0, 1, 2, 3, 4, 8, 9};
inline const std::vector<int> kLegendColumns{1, 2, 3};
inline const std::vector<int> kTickRotations{0, 45};
inline const std::vector<std::string> kGridAxes{"both", "x", "y"};
inline const std::vector<std::string> kGridLineStyles{"solid", "dashed"};
inline const std::vector<std::string> kTickWhich{"major", "minor", "both"};

template <class T>
bool contains(const std::vector<T>& values, const T& v) {
  for (const auto& x : values)
    if (x == v) return true;
  return false;
}
}  // namespace pool

}  // namespace chartforge
