#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chartforge/edit_op.hpp"
#include "chartforge/spec.hpp"

namespace chartforge {

/// One edit wording family: a base sentence and its paraphrases. Placeholders
/// are written {name}; every surface form mentions the same placeholders.
struct PromptTemplate {
  EditSubtype subtype;
  std::string form;
  std::string base;
  std::vector<std::string> variations;

  std::size_t surface_count() const { return 1 + variations.size(); }
  /// Index 0 is the base sentence.
  const std::string& surface(std::size_t index) const { return index == 0 ? base : variations.at(index - 1); }
};

/// A template surface that fully matched a prompt, and the op it denotes.
struct PromptMatch {
  std::size_t template_index;
  std::size_t surface_index;
  EditOp op;
};

/// The closed edit-prompt language: renders ops to sentences and parses
/// sentences back into ops against a chart's series and column names.
class PromptGrammar {
 public:
  /// Template set compiled into the library from data/prompt_templates.json.
  static const PromptGrammar& builtin();
  static PromptGrammar from_json(std::string_view json_text);
  static PromptGrammar load(const std::filesystem::path& path);

  std::span<const PromptTemplate> templates() const { return templates_; }

  /// Throws Error{UnknownSubtype} when no template covers the op.
  const PromptTemplate& template_for(const EditOp& op) const;

  std::string render(const EditOp& op, std::size_t variation_index, std::uint64_t rng_seed = 0) const;

  /// Throws UnrecognizedPrompt, UnknownTarget or AmbiguousPrompt.
  EditOp parse(std::string_view prompt, const ChartSpec& context) const;

  /// Every (template, surface) pair matching the prompt, without dedup.
  std::vector<PromptMatch> match_all(std::string_view prompt, const ChartSpec& context) const;

 private:
  explicit PromptGrammar(std::vector<PromptTemplate> templates);
  std::vector<PromptTemplate> templates_;
};

std::string render_prompt(const EditOp& op, std::size_t variation_index, std::uint64_t rng_seed = 0);
EditOp parse_prompt(std::string_view prompt, const ChartSpec& context);

/// Value <-> surface-word table for one placeholder vocabulary, e.g.
/// "color": {"r", "red"}. Lookups on the surface side ignore case.
struct LexiconEntry {
  std::string value;
  std::string surface;
};
std::span<const LexiconEntry> lexicon(std::string_view key);
std::string lexicon_surface(std::string_view key, std::string_view value);

/// Joins names as "a", "a and b", "a, b and c" (Oxford comma when asked).
std::string join_list(std::span<const std::string> items, bool oxford_comma = false);

}  // namespace chartforge
