#include "chartforge/prompt.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "chartforge/error.hpp"
#include "chartforge/rng.hpp"

namespace chartforge {

namespace detail {
extern const char* const kBuiltinPromptTemplates;
}

namespace {

// --- lexicons --------------------------------------------------------------

const std::map<std::string, std::vector<LexiconEntry>, std::less<>>& lexicons() {
  static const std::map<std::string, std::vector<LexiconEntry>, std::less<>> table{
      {"color",
       {{"b", "blue"}, {"g", "green"}, {"r", "red"}, {"c", "cyan"}, {"m", "magenta"}, {"y", "yellow"}, {"k", "black"}}},
      {"linestyle",
       {{"solid", "solid"},
        {"dashed", "dashed"},
        {"dotted", "dotted"},
        {"dense dotted", "dense dotted"},
        {"loose dotted", "loose dotted"},
        {"dense dashed", "dense dashed"},
        {"loose dashed", "loose dashed"}}},
      {"marker", {{"o", "circles"}, {"^", "triangles"}, {"s", "squares"}, {"*", "stars"}, {"None", "no markers"}}},
      {"hatch",
       {{"xx", "crosshatch"},
        {".", "dots"},
        {"*", "stars"},
        {"/", "forward slashes"},
        {"\\", "backslashes"},
        {"None", "no pattern"}}},
      {"fontname",
       {{"monospace", "monospace"}, {"Serif", "serif"}, {"sans-serif", "sans-serif"}, {"Arial Black", "Arial Black"}}},
      {"fontsize", {{"medium", "medium"}, {"large", "large"}, {"x-large", "x-large"}}},
      {"labelsize", {{"x-small", "x-small"}, {"small", "small"}, {"medium", "medium"}, {"large", "large"}}},
      {"loc",
       {{"0", "best position"},
        {"1", "upper right"},
        {"2", "upper left"},
        {"3", "lower left"},
        {"4", "lower right"},
        {"8", "lower center"},
        {"9", "upper center"}}},
      {"element", {{"title", "chart title"}, {"x_label", "x-axis label"}, {"y_label", "y-axis label"}}},
      {"axis", {{"x_ticks", "x-axis"}, {"y_ticks", "y-axis"}}},
      {"chart_type",
       {{"line", "line chart"},
        {"grouped_vertical_bar", "grouped bar chart"},
        {"stacked_vertical_bar", "stacked bar chart"}}},
  };
  return table;
}

// --- placeholders -----------------------------------------------------------

enum class SlotKind { lexicon, series, series_list, column, column_list, number, number_list, name };

struct SlotSpec {
  SlotKind kind;
  std::string_view lexicon;
};

const std::map<std::string, SlotSpec, std::less<>>& slot_specs() {
  static const std::map<std::string, SlotSpec, std::less<>> specs{
      {"series", {SlotKind::series, {}}},
      {"color", {SlotKind::lexicon, "color"}},
      {"linestyle", {SlotKind::lexicon, "linestyle"}},
      {"marker", {SlotKind::lexicon, "marker"}},
      {"hatch", {SlotKind::lexicon, "hatch"}},
      {"fontname", {SlotKind::lexicon, "fontname"}},
      {"fontsize", {SlotKind::lexicon, "fontsize"}},
      {"labelsize", {SlotKind::lexicon, "labelsize"}},
      {"loc", {SlotKind::lexicon, "loc"}},
      {"element", {SlotKind::lexicon, "element"}},
      {"axis", {SlotKind::lexicon, "axis"}},
      {"from_type", {SlotKind::lexicon, "chart_type"}},
      {"to_type", {SlotKind::lexicon, "chart_type"}},
      {"lo", {SlotKind::number, {}}},
      {"hi", {SlotKind::number, {}}},
      {"value", {SlotKind::number, {}}},
      {"columns", {SlotKind::column_list, {}}},
      {"series_list", {SlotKind::series_list, {}}},
      {"column", {SlotKind::column, {}}},
      {"name", {SlotKind::name, {}}},
      {"values", {SlotKind::number_list, {}}},
  };
  return specs;
}

std::set<std::string> required_slots(EditSubtype subtype) {
  switch (subtype) {
    case EditSubtype::series_color: return {"series", "color"};
    case EditSubtype::line_style: return {"series", "linestyle"};
    case EditSubtype::line_marker: return {"series", "marker"};
    case EditSubtype::bar_hatch: return {"series", "hatch"};
    case EditSubtype::font_name: return {"element", "fontname"};
    case EditSubtype::font_size: return {"element", "fontsize"};
    case EditSubtype::tick_label_size: return {"axis", "labelsize"};
    case EditSubtype::grid_visibility: return {};
    case EditSubtype::legend_position: return {"loc"};
    case EditSubtype::chart_type: return {"from_type", "to_type"};
    case EditSubtype::range_filter: return {"lo", "hi"};
    case EditSubtype::column_filter: return {"columns"};
    case EditSubtype::series_filter: return {"series_list"};
    case EditSubtype::upsert_point: return {"series", "column", "value"};
    case EditSubtype::upsert_series: return {"name", "values"};
  }
  return {};
}

std::set<std::string> allowed_forms(EditSubtype subtype) {
  if (subtype == EditSubtype::grid_visibility) return {"show", "hide"};
  if (subtype == EditSubtype::series_filter) return {"keep", "drop"};
  return {""};
}

struct Segment {
  bool is_slot;
  std::string text;  // literal text or placeholder name
};

std::vector<Segment> compile(const std::string& surface) {
  std::vector<Segment> out;
  std::size_t pos = 0;
  while (pos < surface.size()) {
    auto open = surface.find('{', pos);
    if (open == std::string::npos) {
      out.push_back({false, surface.substr(pos)});
      break;
    }
    if (open > pos) out.push_back({false, surface.substr(pos, open - pos)});
    auto close = surface.find('}', open);
    if (close == std::string::npos)
      throw Error(ErrorKind::InvalidConfig, "unterminated placeholder in template '" + surface + "'");
    auto name = surface.substr(open + 1, close - open - 1);
    if (!slot_specs().contains(name))
      throw Error(ErrorKind::InvalidConfig, "unknown placeholder {" + name + "} in template '" + surface + "'");
    if (!out.empty() && out.back().is_slot)
      throw Error(ErrorKind::InvalidConfig, "adjacent placeholders in template '" + surface + "'");
    out.push_back({true, name});
    pos = close + 1;
  }
  return out;
}

std::multiset<std::string> slot_names(const std::vector<Segment>& segs) {
  std::multiset<std::string> names;
  for (const auto& s : segs)
    if (s.is_slot) names.insert(s.text);
  return names;
}

// --- matching ---------------------------------------------------------------

bool ci_equal_at(std::string_view text, std::size_t pos, std::string_view lit) {
  if (pos + lit.size() > text.size()) return false;
  for (std::size_t i = 0; i < lit.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(text[pos + i])) != std::tolower(static_cast<unsigned char>(lit[i])))
      return false;
  return true;
}

struct Bound {
  std::string text;
  double number = 0;
  std::vector<std::string> list;
  std::vector<double> numbers;
};

using Bindings = std::map<std::string, Bound, std::less<>>;

Bound text_bound(std::string text) {
  Bound b;
  b.text = std::move(text);
  return b;
}

struct Candidate {
  std::size_t end;
  Bound value;
};

struct MatchContext {
  std::string_view text;
  const std::vector<Segment>* segments;
  std::vector<std::string> series;
  std::vector<std::string> columns;
  bool free_series = false;  // fallback pass that reports unknown targets
};

bool valid_free_name(std::string_view s) {
  return !s.empty() && trim(s) == s && s.find('|') == std::string_view::npos;
}

/// End positions where the literal following slot `seg` could start.
std::vector<std::size_t> free_text_ends(const MatchContext& ctx, std::size_t seg, std::size_t pos) {
  std::vector<std::size_t> ends;
  const auto& segs = *ctx.segments;
  if (seg + 1 >= segs.size()) {
    ends.push_back(ctx.text.size());
    return ends;
  }
  const std::string& lit = segs[seg + 1].text;
  for (std::size_t e = pos + 1; e + lit.size() <= ctx.text.size(); ++e)
    if (ci_equal_at(ctx.text, e, lit)) ends.push_back(e);
  return ends;
}

std::optional<std::pair<std::size_t, double>> scan_number(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  if (i + 1 < text.size() && text[i] == '.' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  }
  if (digits == 0) return std::nullopt;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
    std::size_t exp_digits = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j, ++exp_digits;
    if (exp_digits > 0) i = j;
  }
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + i, value);
  if (ec != std::errc{} || ptr != text.data() + i) return std::nullopt;
  return std::pair{i, value};
}

constexpr std::string_view kListSeparators[] = {", and ", " and ", ", "};

void list_candidates(const MatchContext& ctx, std::size_t pos, const std::vector<std::string>& names,
                     std::vector<std::string>& acc, std::vector<Candidate>& out) {
  for (const auto& name : names) {
    if (ctx.text.compare(pos, name.size(), name) != 0) continue;
    if (std::find(acc.begin(), acc.end(), name) != acc.end()) continue;
    acc.push_back(name);
    std::size_t end = pos + name.size();
    Bound b;
    b.list = acc;
    out.push_back({end, b});
    for (auto sep : kListSeparators)
      if (ctx.text.compare(end, sep.size(), sep) == 0) list_candidates(ctx, end + sep.size(), names, acc, out);
    acc.pop_back();
  }
}

std::vector<Candidate> slot_candidates(const MatchContext& ctx, std::size_t seg, std::size_t pos) {
  const auto& name = (*ctx.segments)[seg].text;
  const SlotSpec& spec = slot_specs().find(name)->second;
  std::vector<Candidate> out;
  auto add_names = [&](const std::vector<std::string>& names) {
    for (const auto& n : names)
      if (ctx.text.compare(pos, n.size(), n) == 0) out.push_back({pos + n.size(), text_bound(n)});
  };
  auto add_free = [&] {
    for (auto end : free_text_ends(ctx, seg, pos)) {
      auto piece = ctx.text.substr(pos, end - pos);
      if (valid_free_name(piece)) out.push_back({end, text_bound(std::string(piece))});
    }
  };
  switch (spec.kind) {
    case SlotKind::lexicon:
      for (const auto& e : lexicon(spec.lexicon))
        if (ci_equal_at(ctx.text, pos, e.surface)) out.push_back({pos + e.surface.size(), text_bound(e.value)});
      break;
    case SlotKind::series:
      if (ctx.free_series) {
        add_free();
      } else {
        add_names(ctx.series);
      }
      break;
    case SlotKind::column:
    case SlotKind::name:
      add_free();
      break;
    case SlotKind::series_list:
    case SlotKind::column_list: {
      if (spec.kind == SlotKind::series_list && ctx.free_series) {
        for (auto end : free_text_ends(ctx, seg, pos)) {
          auto piece = ctx.text.substr(pos, end - pos);
          if (!valid_free_name(piece)) continue;
          Bound b;
          b.list = {std::string(piece)};
          out.push_back({end, b});
        }
        break;
      }
      std::vector<std::string> acc;
      list_candidates(ctx, pos, spec.kind == SlotKind::series_list ? ctx.series : ctx.columns, acc, out);
      break;
    }
    case SlotKind::number:
      if (auto n = scan_number(ctx.text, pos)) {
        Bound b;
        b.number = n->second;
        out.push_back({n->first, b});
      }
      break;
    case SlotKind::number_list: {
      Bound b;
      std::size_t p = pos;
      while (auto n = scan_number(ctx.text, p)) {
        b.numbers.push_back(n->second);
        p = n->first;
        out.push_back({p, b});
        if (ctx.text.compare(p, 2, ", ") != 0) break;
        p += 2;
      }
      break;
    }
  }
  return out;
}

void match_from(const MatchContext& ctx, std::size_t seg, std::size_t pos, Bindings& bound,
                std::vector<Bindings>& out) {
  const auto& segs = *ctx.segments;
  if (seg == segs.size()) {
    if (pos == ctx.text.size()) out.push_back(bound);
    return;
  }
  const Segment& s = segs[seg];
  if (!s.is_slot) {
    if (ci_equal_at(ctx.text, pos, s.text)) match_from(ctx, seg + 1, pos + s.text.size(), bound, out);
    return;
  }
  for (auto& cand : slot_candidates(ctx, seg, pos)) {
    bound[s.text] = std::move(cand.value);
    match_from(ctx, seg + 1, cand.end, bound, out);
    bound.erase(s.text);
  }
}

EditOp build_op(const PromptTemplate& t, const Bindings& b) {
  auto text = [&](std::string_view key) -> const std::string& { return b.find(key)->second.text; };
  EditOp op{t.subtype, {}, SetValue{}};
  switch (t.subtype) {
    case EditSubtype::series_color:
      op.target = {TargetKind::series_by_name, text("series")};
      op.payload = SetValue{text("color")};
      break;
    case EditSubtype::line_style:
      op.target = {TargetKind::series_by_name, text("series")};
      op.payload = SetValue{text("linestyle")};
      break;
    case EditSubtype::line_marker:
      op.target = {TargetKind::series_by_name, text("series")};
      op.payload = SetValue{text("marker")};
      break;
    case EditSubtype::bar_hatch:
      op.target = {TargetKind::series_by_name, text("series")};
      op.payload = SetValue{text("hatch")};
      break;
    case EditSubtype::font_name:
      op.target = {TargetKind::text_element, text("element")};
      op.payload = SetValue{text("fontname")};
      break;
    case EditSubtype::font_size:
      op.target = {TargetKind::text_element, text("element")};
      op.payload = SetValue{text("fontsize")};
      break;
    case EditSubtype::tick_label_size:
      op.target = {TargetKind::text_element, text("axis")};
      op.payload = SetValue{text("labelsize")};
      break;
    case EditSubtype::grid_visibility:
      op.target = {TargetKind::text_element, "grid"};
      op.payload = SetVisible{t.form == "show"};
      break;
    case EditSubtype::legend_position:
      op.target = {TargetKind::text_element, "legend"};
      op.payload = SetLegendLoc{std::stoi(text("loc"))};
      break;
    case EditSubtype::chart_type:
      op.payload = ConvertType{*parse_chart_type(text("from_type")), *parse_chart_type(text("to_type"))};
      break;
    case EditSubtype::range_filter:
      op.payload = RangeFilter{b.find("lo")->second.number, b.find("hi")->second.number};
      break;
    case EditSubtype::column_filter: op.payload = ColumnFilter{b.find("columns")->second.list}; break;
    case EditSubtype::series_filter: op.payload = SeriesFilter{t.form == "keep", b.find("series_list")->second.list}; break;
    case EditSubtype::upsert_point:
      op.target = {TargetKind::series_by_name, text("series")};
      op.payload = UpsertPoint{text("column"), b.find("value")->second.number};
      break;
    case EditSubtype::upsert_series:
      op.payload = UpsertSeries{text("name"), b.find("values")->second.numbers};
      break;
  }
  return op;
}

std::string fill(const std::string& surface, const EditOp& op, std::uint64_t seed) {
  const bool oxford = (mix_seed(seed, 0x5eed) & 1) != 0;
  auto value_of = [&](const std::string& slot) -> std::string {
    const SlotSpec& spec = slot_specs().find(slot)->second;
    if (slot == "series") return op.target.name;
    if (slot == "element" || slot == "axis") return lexicon_surface(spec.lexicon, op.target.name);
    if (slot == "loc") return lexicon_surface("loc", std::to_string(std::get<SetLegendLoc>(op.payload).loc));
    if (slot == "from_type") return lexicon_surface("chart_type", to_string(std::get<ConvertType>(op.payload).from));
    if (slot == "to_type") return lexicon_surface("chart_type", to_string(std::get<ConvertType>(op.payload).to));
    if (spec.kind == SlotKind::lexicon) return lexicon_surface(spec.lexicon, std::get<SetValue>(op.payload).value);
    if (slot == "lo") return format_number(std::get<RangeFilter>(op.payload).lo);
    if (slot == "hi") return format_number(std::get<RangeFilter>(op.payload).hi);
    if (slot == "columns") return join_list(std::get<ColumnFilter>(op.payload).columns, oxford);
    if (slot == "series_list") return join_list(std::get<SeriesFilter>(op.payload).series, oxford);
    if (slot == "column") return std::get<UpsertPoint>(op.payload).column;
    if (slot == "value") return format_number(std::get<UpsertPoint>(op.payload).value);
    if (slot == "name") return std::get<UpsertSeries>(op.payload).name;
    if (slot == "values") {
      std::string out;
      for (double v : std::get<UpsertSeries>(op.payload).values) {
        if (!out.empty()) out += ", ";
        out += format_number(v);
      }
      return out;
    }
    throw Error(ErrorKind::InvalidConfig, "unhandled placeholder {" + slot + "}");
  };
  std::string out;
  for (const auto& seg : compile(surface)) out += seg.is_slot ? value_of(seg.text) : seg.text;
  return out;
}

}  // namespace

std::span<const LexiconEntry> lexicon(std::string_view key) {
  auto it = lexicons().find(key);
  if (it == lexicons().end()) throw Error(ErrorKind::InvalidConfig, "unknown lexicon '" + std::string(key) + "'");
  return it->second;
}

std::string lexicon_surface(std::string_view key, std::string_view value) {
  for (const auto& e : lexicon(key))
    if (e.value == value) return e.surface;
  throw Error(ErrorKind::PoolViolation, "no surface word for " + std::string(key) + " '" + std::string(value) + "'",
              std::string(key));
}

std::string join_list(std::span<const std::string> items, bool oxford_comma) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      if (i + 1 < items.size()) {
        out += ", ";
      } else {
        out += (oxford_comma && items.size() > 2) ? ", and " : " and ";
      }
    }
    out += items[i];
  }
  return out;
}

PromptGrammar::PromptGrammar(std::vector<PromptTemplate> templates) : templates_(std::move(templates)) {
  std::set<std::pair<EditSubtype, std::string>> seen;
  for (const auto& t : templates_) {
    if (!allowed_forms(t.subtype).contains(t.form))
      throw Error(ErrorKind::InvalidConfig, "form '" + t.form + "' is not valid for " + std::string(to_string(t.subtype)));
    if (!seen.insert({t.subtype, t.form}).second)
      throw Error(ErrorKind::InvalidConfig, "duplicate template group for " + std::string(to_string(t.subtype)));
    if (t.variations.size() < 5)
      throw Error(ErrorKind::InvalidConfig, "template for " + std::string(to_string(t.subtype)) + " needs 5 variations");
    auto base_slots = slot_names(compile(t.base));
    auto required = required_slots(t.subtype);
    if (std::set<std::string>(base_slots.begin(), base_slots.end()) != required || base_slots.size() != required.size())
      throw Error(ErrorKind::InvalidConfig, "base template '" + t.base + "' has the wrong placeholders");
    for (const auto& v : t.variations)
      if (slot_names(compile(v)) != base_slots)
        throw Error(ErrorKind::InvalidConfig, "variation '" + v + "' does not mention the base placeholders");
  }
}

PromptGrammar PromptGrammar::from_json(std::string_view json_text) {
  std::vector<PromptTemplate> templates;
  try {
    for (const auto& j : Json::parse(json_text)) {
      auto subtype = parse_subtype(j.at("subtype").get<std::string>());
      if (!subtype)
        throw Error(ErrorKind::UnknownSubtype, "unknown subtype '" + j.at("subtype").get<std::string>() + "'");
      templates.push_back({*subtype, j.value("form", std::string{}), j.at("base").get<std::string>(),
                           j.at("variations").get<std::vector<std::string>>()});
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, std::string("invalid template file: ") + e.what());
  }
  return PromptGrammar(std::move(templates));
}

PromptGrammar PromptGrammar::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string(), path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

const PromptGrammar& PromptGrammar::builtin() {
  static const PromptGrammar grammar = from_json(detail::kBuiltinPromptTemplates);
  return grammar;
}

const PromptTemplate& PromptGrammar::template_for(const EditOp& op) const {
  const auto form = form_of(op);
  for (const auto& t : templates_)
    if (t.subtype == op.subtype && t.form == form) return t;
  throw Error(ErrorKind::UnknownSubtype, "no prompt template for " + std::string(to_string(op.subtype)));
}

std::string PromptGrammar::render(const EditOp& op, std::size_t variation_index, std::uint64_t rng_seed) const {
  check_op(op);
  const auto& t = template_for(op);
  if (variation_index >= t.surface_count())
    throw Error(ErrorKind::InvalidConfig, "variation index " + std::to_string(variation_index) + " out of range");
  return fill(t.surface(variation_index), op, rng_seed);
}

std::vector<PromptMatch> PromptGrammar::match_all(std::string_view prompt, const ChartSpec& context) const {
  std::string text = trim(prompt);
  std::vector<std::string> inputs{text};
  if (!text.empty() && text.back() == '.') inputs.push_back(trim(std::string_view(text).substr(0, text.size() - 1)));

  MatchContext ctx;
  ctx.series = context.series_names();
  ctx.columns = context.category_names();
  // Longest names first so list parses prefer complete names.
  auto by_length = [](const std::string& a, const std::string& b) { return a.size() > b.size(); };
  std::stable_sort(ctx.series.begin(), ctx.series.end(), by_length);
  std::stable_sort(ctx.columns.begin(), ctx.columns.end(), by_length);

  std::vector<PromptMatch> out;
  for (const auto& input : inputs) {
    ctx.text = input;
    for (std::size_t ti = 0; ti < templates_.size(); ++ti) {
      const auto& t = templates_[ti];
      for (std::size_t si = 0; si < t.surface_count(); ++si) {
        auto segs = compile(t.surface(si));
        ctx.segments = &segs;
        std::vector<Bindings> found;
        Bindings bound;
        match_from(ctx, 0, 0, bound, found);
        for (const auto& b : found) {
          EditOp op = build_op(t, b);
          try {
            check_op(op);
          } catch (const Error&) {
            continue;
          }
          out.push_back({ti, si, std::move(op)});
        }
      }
    }
  }
  return out;
}

EditOp PromptGrammar::parse(std::string_view prompt, const ChartSpec& context) const {
  auto matches = match_all(prompt, context);
  std::vector<EditOp> ops;
  for (auto& m : matches)
    if (std::find(ops.begin(), ops.end(), m.op) == ops.end()) ops.push_back(std::move(m.op));
  if (ops.size() == 1) return ops.front();
  if (ops.size() > 1)
    throw Error(ErrorKind::AmbiguousPrompt,
                "prompt matches " + std::to_string(ops.size()) + " different edits: '" + std::string(prompt) + "'");

  // Second pass: accept any series wording to tell unknown names from
  // out-of-grammar sentences.
  MatchContext ctx;
  ctx.free_series = true;
  std::string text = trim(prompt);
  if (!text.empty() && text.back() == '.') text.pop_back();
  ctx.text = text;
  const auto known = context.series_names();
  for (const auto& t : templates_) {
    for (std::size_t si = 0; si < t.surface_count(); ++si) {
      auto segs = compile(t.surface(si));
      ctx.segments = &segs;
      std::vector<Bindings> found;
      Bindings bound;
      match_from(ctx, 0, 0, bound, found);
      for (const auto& b : found) {
        for (const auto& key : {"series", "series_list"}) {
          auto it = b.find(key);
          if (it == b.end()) continue;
          const std::string& name = it->second.list.empty() ? it->second.text : it->second.list.front();
          if (std::find(known.begin(), known.end(), name) == known.end())
            throw Error(ErrorKind::UnknownTarget, "no series named '" + name + "' in this chart", name);
        }
      }
    }
  }
  throw Error(ErrorKind::UnrecognizedPrompt, "prompt is not in the edit grammar: '" + std::string(prompt) + "'");
}

std::string render_prompt(const EditOp& op, std::size_t variation_index, std::uint64_t rng_seed) {
  return PromptGrammar::builtin().render(op, variation_index, rng_seed);
}

EditOp parse_prompt(std::string_view prompt, const ChartSpec& context) {
  return PromptGrammar::builtin().parse(prompt, context);
}

}  // namespace chartforge
