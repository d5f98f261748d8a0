#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>

#include "chartforge/edit_op.hpp"
#include "chartforge/prompt.hpp"
#include "support.hpp"

using namespace cftest;

namespace {

ErrorKind parse_error(std::string_view prompt, const ChartSpec& ctx) {
  try {
    parse_prompt(prompt, ctx);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("prompt parsed: " << prompt);
  return ErrorKind::Io;
}

std::set<std::string> placeholders(const std::string& text) {
  std::set<std::string> out;
  static const std::regex re(R"(\{([a-z_]+)\})");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it)
    out.insert((*it)[1]);
  return out;
}

const EditOp kOecdRed{EditSubtype::series_color, {TargetKind::series_by_name, "OECD members"}, SetValue{"r"}};
const EditOp kGridOn{EditSubtype::grid_visibility, {TargetKind::text_element, "grid"}, SetVisible{true}};
const EditOp kToGrouped{EditSubtype::chart_type, {}, ConvertType{ChartType::line, ChartType::grouped_vertical_bar}};
const EditOp kDropSouthAsia{EditSubtype::series_filter, {}, SeriesFilter{false, {"South Asia"}}};

/// Ops of every subtype that fit `spec`.
std::vector<EditOp> sample_ops(const ChartSpec& spec, Rng& rng, int per_subtype) {
  std::vector<EditOp> ops;
  for (EditSubtype st : kSubtypes)
    for (int k = 0; k < per_subtype; ++k)
      if (auto op = draw_op(spec, st, rng)) ops.push_back(*op);
  return ops;
}

}  // namespace

TEST_CASE("base prompts") {
  CHECK(render_prompt(kOecdRed, 0) == "Change the color of OECD members to red");
  CHECK(render_prompt(kGridOn, 0) == "Show the grid lines");
  CHECK(render_prompt(kToGrouped, 0) == "Convert this line chart into a grouped bar chart");
  CHECK(render_prompt(kDropSouthAsia, 0) == "Remove the data series South Asia");
}

TEST_CASE("parsing the base prompts") {
  const ChartSpec ctx = country_spec();
  CHECK(parse_prompt("Change the color of OECD members to red", ctx) == kOecdRed);
  CHECK(parse_prompt("Show the grid lines", ctx) == kGridOn);
  CHECK(parse_prompt("Convert this line chart into a grouped bar chart", ctx) == kToGrouped);
  CHECK(parse_prompt("Remove the data series South Asia", ctx) == kDropSouthAsia);
}

TEST_CASE("out-of-grammar prompts") {
  const ChartSpec ctx = country_spec();
  CHECK(parse_error("Paint the moon blue", ctx) == ErrorKind::UnrecognizedPrompt);
  CHECK(parse_error("", ctx) == ErrorKind::UnrecognizedPrompt);
  CHECK(parse_error("Change the color of OECD members to mauve", ctx) == ErrorKind::UnrecognizedPrompt);
}

TEST_CASE("unknown series names") {
  CHECK(parse_error("Change the color of Atlantis to red", country_spec()) == ErrorKind::UnknownTarget);
  // the imports chart plots its year columns, so the countries are categories there
  CHECK(parse_error("Change the color of OECD members to red", imports_spec()) == ErrorKind::UnknownTarget);
  CHECK(parse_prompt("Change the color of 1997 to green", imports_spec()) ==
        EditOp{EditSubtype::series_color, {TargetKind::series_by_name, "1997"}, SetValue{"g"}});
}

TEST_CASE("scaffolding is case-insensitive, values are exact") {
  const ChartSpec ctx = country_spec();
  CHECK(parse_prompt("CHANGE THE COLOR OF OECD members TO Red", ctx) == kOecdRed);
  CHECK(parse_prompt("  show the GRID lines  ", ctx) == kGridOn);
  CHECK(parse_error("Change the color of oecd members to red", ctx) == ErrorKind::UnknownTarget);
}

TEST_CASE("series names match longest first") {
  ChartSpec s = country_spec();
  DataTable t = s.series_table();
  t.rows[0].name = "South";
  s.set_series_table(t);
  CHECK(parse_prompt("Change the color of South Asia to red", s).target.name == "South Asia");
  CHECK(parse_prompt("Change the color of South to red", s).target.name == "South");
  EditOp drop = parse_prompt("Remove the data series South and South Asia", s);
  CHECK(std::get<SeriesFilter>(drop.payload).series == std::vector<std::string>{"South", "South Asia"});
}

TEST_CASE("numbers render in shortest form") {
  const EditOp op{EditSubtype::upsert_point, {TargetKind::series_by_name, "OECD members"}, UpsertPoint{"2004", 23.5}};
  const std::string text = render_prompt(op, 0);
  CHECK(text.find("23.5") != std::string::npos);
  CHECK(text.find("23.50") == std::string::npos);
  CHECK(parse_prompt(text, country_spec()) == op);
}

TEST_CASE("round trip over every subtype, variation and seed") {
  Rng rng(5);
  const auto& grammar = PromptGrammar::builtin();
  std::set<EditSubtype> covered;
  std::size_t checked = 0;
  for (int k = 0; k < 24; ++k) {
    ChartSpec spec = random_spec(rng, {6, 10, true, false, true});
    for (const EditOp& op : sample_ops(spec, rng, 2)) {
      covered.insert(op.subtype);
      const auto& tmpl = grammar.template_for(op);
      for (std::size_t v = 0; v < tmpl.surface_count(); ++v) {
        for (std::uint64_t seed = 0; seed < 100; seed += (op.subtype == EditSubtype::series_filter ||
                                                          op.subtype == EditSubtype::column_filter)
                                                             ? 1
                                                             : 25) {
          const std::string text = render_prompt(op, v, seed);
          CAPTURE(text);
          CHECK(parse_prompt(text, spec) == op);
          ++checked;
        }
      }
    }
  }
  CHECK(covered.size() == std::size(kSubtypes));
  CHECK(checked > 1000);
}

TEST_CASE("rendering is deterministic and the seed only picks list punctuation") {
  Rng rng(9);
  ChartSpec spec = random_spec(rng);
  for (const EditOp& op : sample_ops(spec, rng, 1))
    for (std::size_t v = 0; v < 6; ++v) CHECK(render_prompt(op, v, 3) == render_prompt(op, v, 3));
  const EditOp three{EditSubtype::series_filter, {}, SeriesFilter{true, {"A", "B", "C"}}};
  std::set<std::string> forms;
  for (std::uint64_t seed = 0; seed < 50; ++seed) forms.insert(render_prompt(three, 0, seed));
  CHECK(forms == std::set<std::string>{"Keep only the data series A, B and C", "Keep only the data series A, B, and C"});
}

TEST_CASE("every rendered prompt matches exactly one template") {
  Rng rng(31);
  const auto& grammar = PromptGrammar::builtin();
  for (int k = 0; k < 12; ++k) {
    ChartSpec spec = random_spec(rng);
    for (const EditOp& op : sample_ops(spec, rng, 2)) {
      for (std::size_t v = 0; v < grammar.template_for(op).surface_count(); ++v) {
        const std::string text = render_prompt(op, v, k);
        const auto matches = grammar.match_all(text, spec);
        REQUIRE(!matches.empty());
        std::set<std::size_t> templates;
        for (const auto& m : matches) {
          templates.insert(m.template_index);
          CHECK(m.op == op);
        }
        CAPTURE(text);
        CHECK(templates.size() == 1);
      }
    }
  }
}

TEST_CASE("surface forms never collide across templates") {
  const auto& ts = PromptGrammar::builtin().templates();
  std::map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t v = 0; v < ts[i].surface_count(); ++v) {
      std::string key = ts[i].surface(v);
      std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
      auto [it, fresh] = owner.emplace(key, i);
      CHECK_MESSAGE(fresh, key);
    }
}

TEST_CASE("lexicons are one-to-one") {
  for (const char* key : {"color", "linestyle", "marker", "hatch", "fontname", "fontsize", "labelsize", "loc",
                          "element", "axis", "chart_type"}) {
    CAPTURE(key);
    auto entries = lexicon(key);
    REQUIRE(!entries.empty());
    std::set<std::string> values, surfaces;
    for (const auto& e : entries) {
      values.insert(e.value);
      std::string s = e.surface;
      std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
      surfaces.insert(s);
      CHECK(lexicon_surface(key, e.value) == e.surface);
    }
    CHECK(values.size() == entries.size());
    CHECK(surfaces.size() == entries.size());
  }
  CHECK(lexicon_surface("color", "r") == "red");
  CHECK(lexicon_surface("linestyle", "dense dotted") == "dense dotted");
  CHECK(lexicon("color").size() == pool::kColors.size());
  CHECK(lexicon("hatch").size() == pool::kHatches.size());
  CHECK(lexicon("loc").size() == pool::kLegendLocs.size());
}

TEST_CASE("template data file") {
  const auto& builtin = PromptGrammar::builtin();
  const auto loaded = PromptGrammar::load(source_dir() / "data" / "prompt_templates.json");
  REQUIRE(loaded.templates().size() == builtin.templates().size());
  std::set<std::pair<EditSubtype, std::string>> keys;
  for (const auto& t : builtin.templates()) {
    CAPTURE(t.base);
    CHECK(t.variations.size() >= 5);
    const auto base = placeholders(t.base);
    for (const auto& v : t.variations) CHECK(placeholders(v) == base);
    CHECK(keys.emplace(t.subtype, t.form).second);
  }
  for (EditSubtype st : kSubtypes) {
    bool found = false;
    for (const auto& k : keys) found |= k.first == st;
    CHECK_MESSAGE(found, to_string(st));
  }
}

TEST_CASE("custom grammars report ambiguity and missing templates") {
  const std::string five = R"(["Flip the grid", "Grid toggle", "Switch the grid", "Grid switch", "Swap the grid"])";
  const auto g = PromptGrammar::from_json(
      R"([{"subtype": "grid_visibility", "form": "show", "base": "Toggle the grid", "variations": )" + five +
      R"(}, {"subtype": "grid_visibility", "form": "hide", "base": "Toggle the grid", "variations": )" + five + "}]");
  try {
    g.parse("Toggle the grid", country_spec());
    FAIL("expected AmbiguousPrompt");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AmbiguousPrompt);
  }
  try {
    g.render(kOecdRed, 0);
    FAIL("expected UnknownSubtype");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownSubtype);
  }
  CHECK_THROWS_AS(PromptGrammar::from_json(R"([{"subtype": "series_color", "form": "", "base": "Recolor", "variations": ["a", "b", "c", "d", "e"]}])"),
                  Error);
}

TEST_CASE("join_list") {
  std::vector<std::string> one{"a"}, two{"a", "b"}, three{"a", "b", "c"};
  CHECK(join_list(one) == "a");
  CHECK(join_list(two) == "a and b");
  CHECK(join_list(two, true) == "a and b");
  CHECK(join_list(three) == "a, b and c");
  CHECK(join_list(three, true) == "a, b, and c");
}
