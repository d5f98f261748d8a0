#include "chartforge/attributes.hpp"

namespace chartforge {

namespace {

void flatten_into(const OrderedJson& node, const std::string& path, AttributeMap& out) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it)
      flatten_into(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten_into(node[i], path + "[" + std::to_string(i) + "]", out);
  } else if (node.is_number()) {
    out.emplace(path, node.get<double>());
  } else if (node.is_boolean()) {
    out.emplace(path, node.get<bool>() ? "true" : "false");
  } else if (node.is_string()) {
    out.emplace(path, node.get<std::string>());
  }
}

}  // namespace

AttributeMap flatten_attributes(const ChartSpec& spec) {
  OrderedJson j = to_json(spec);
  j.erase(std::string(kDataKey));
  j.erase("series_axis");
  AttributeMap out;
  flatten_into(j, "", out);
  return out;
}

std::set<std::string> all_keys(const ChartSpec& spec) {
  std::set<std::string> keys;
  for (const auto& [k, v] : flatten_attributes(spec)) keys.insert(k);
  keys.emplace(kDataKey);
  return keys;
}

std::set<std::string> diff_specs(const ChartSpec& a, const ChartSpec& b) {
  const auto fa = flatten_attributes(a);
  const auto fb = flatten_attributes(b);
  std::set<std::string> out;
  for (const auto& [k, v] : fa) {
    auto it = fb.find(k);
    if (it == fb.end() || it->second != v) out.insert(k);
  }
  for (const auto& [k, v] : fb)
    if (!fa.contains(k)) out.insert(k);
  if (a.series_table() != b.series_table()) out.emplace(kDataKey);
  return out;
}

std::string to_string(const AttributeValue& value) {
  if (const auto* s = std::get_if<std::string>(&value)) return *s;
  return format_number(std::get<double>(value));
}

}  // namespace chartforge
