#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>

#include "chartforge/spec.hpp"

namespace chartforge {

/// Categorical text or a number.
using AttributeValue = std::variant<std::string, double>;

/// Flattened visual attributes keyed by dotted path, e.g.
/// "global_properties.grid_params.visible" or "line_properties.colors[0]".
using AttributeMap = std::map<std::string, AttributeValue>;

/// Key under which the whole data table is tracked in edit results.
inline constexpr std::string_view kDataKey = "underlying_data";

/// Every field of the canonical JSON except the data table.
AttributeMap flatten_attributes(const ChartSpec& spec);

/// Flattened attributes plus kDataKey.
std::set<std::string> all_keys(const ChartSpec& spec);

/// Paths whose values differ between `a` and `b`, including paths present
/// on one side only; kDataKey is included when the tables differ.
std::set<std::string> diff_specs(const ChartSpec& a, const ChartSpec& b);

std::string to_string(const AttributeValue& value);

}  // namespace chartforge
