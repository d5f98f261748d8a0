#include "chartforge/layout.hpp"

#include <algorithm>
#include <cmath>

#include "chartforge/error.hpp"

namespace chartforge {

Rgb color_for(std::string_view code) {
  if (code == "b") return {0x00, 0x00, 0xFF};
  if (code == "g") return {0x00, 0x80, 0x00};
  if (code == "r") return {0xFF, 0x00, 0x00};
  if (code == "c") return {0x00, 0xBF, 0xBF};
  if (code == "m") return {0xBF, 0x00, 0xBF};
  if (code == "y") return {0xBF, 0xBF, 0x00};
  return {0x00, 0x00, 0x00};
}

std::string hex_color(Rgb c) {
  static constexpr char digits[] = "0123456789ABCDEF";
  std::string out = "#";
  for (unsigned char v : {c.r, c.g, c.b}) {
    out += digits[v >> 4];
    out += digits[v & 15];
  }
  return out;
}

std::vector<double> dash_array(std::string_view linestyle) {
  if (linestyle == "dashed") return {6, 6};
  if (linestyle == "dotted") return {1, 5};
  if (linestyle == "dense dotted") return {1, 1};
  if (linestyle == "loose dotted") return {1, 10};
  if (linestyle == "dense dashed") return {5, 1};
  if (linestyle == "loose dashed") return {5, 10};
  return {};
}

std::vector<double> nice_ticks(double lo, double hi) {
  if (hi < lo) std::swap(lo, hi);
  if (hi - lo <= 0) {
    if (lo == 0) {
      hi = 1;
    } else {
      double pad = std::abs(lo) * 0.1;
      lo -= pad;
      hi += pad;
    }
  }
  const int top = static_cast<int>(std::floor(std::log10(hi - lo)));
  for (int k = top - 2; k <= top + 2; ++k) {
    for (int m : {1, 2, 5}) {
      const double unit = std::pow(10.0, std::abs(k));
      const double step = k >= 0 ? m * unit : m / unit;
      const auto first = static_cast<long long>(std::floor(lo / step + 1e-9));
      auto last = static_cast<long long>(std::ceil(hi / step - 1e-9));
      if (last - first + 1 > 8) continue;
      while (last - first + 1 < 5) ++last;
      std::vector<double> ticks;
      for (long long i = first; i <= last; ++i) {
        double v = k >= 0 ? static_cast<double>(i * m) * unit : static_cast<double>(i * m) / unit;
        ticks.push_back(v == 0 ? 0.0 : v);
      }
      return ticks;
    }
  }
  return {lo, hi};
}

namespace {

constexpr double kPad = 12;
constexpr double kTickLength = 5;

double rotated_height(double w, double h, double deg) {
  const double r = deg * M_PI / 180;
  return std::abs(w * std::sin(r)) + std::abs(h * std::cos(r));
}

double rotated_width(double w, double h, double deg) {
  const double r = deg * M_PI / 180;
  return std::abs(w * std::cos(r)) + std::abs(h * std::sin(r));
}

TextItem make_text(std::string text, const std::string& fontname, const std::string& size, double rotation = 0) {
  TextItem t;
  t.text = std::move(text);
  t.fontname = fontname;
  t.size = size;
  t.face = face_for(fontname);
  t.px = pixel_size(size);
  t.rotation = rotation;
  return t;
}

double text_width(const TextItem& t) { return font_strike(t.face, t.px).text_width(t.text); }

void place_legend(LayoutPlan& plan, const ChartSpec& spec) {
  const auto names = spec.series_names();
  const int ncol = std::max(1, std::min<int>(spec.global.legend.ncol, static_cast<int>(names.size())));
  const int nrow = (static_cast<int>(names.size()) + ncol - 1) / ncol;
  const FontFace face = FontFace::sans;
  const int px = pixel_size("small");
  const auto& strike = font_strike(face, px);
  constexpr double swatch_w = 22, gap = 6, row_h = 20, inner = 8;
  double col_w = 0;
  for (const auto& n : names) col_w = std::max(col_w, swatch_w + gap + strike.text_width(n));
  col_w += inner;
  const double box_w = std::min(plan.plot.w - 2 * inner, ncol * col_w + inner);
  const double box_h = std::min(plan.plot.h - 2 * inner, nrow * row_h + inner);

  const Rect& p = plan.plot;
  double x = p.right() - box_w - inner;
  double y = p.y + inner;
  switch (spec.global.legend.loc) {
    case 2: x = p.x + inner; break;
    case 3:
      x = p.x + inner;
      y = p.bottom() - box_h - inner;
      break;
    case 4: y = p.bottom() - box_h - inner; break;
    case 8:
      x = p.x + (p.w - box_w) / 2;
      y = p.bottom() - box_h - inner;
      break;
    case 9: x = p.x + (p.w - box_w) / 2; break;
    default: break;
  }
  plan.legend.box = {x, y, box_w, box_h};
  for (std::size_t i = 0; i < names.size(); ++i) {
    const double cx = x + inner + static_cast<double>(i % ncol) * col_w;
    const double cy = y + inner / 2 + static_cast<double>(i / ncol) * row_h;
    LegendEntry e;
    e.series = i;
    e.swatch = {cx, cy + row_h / 2 - 5, swatch_w, 10};
    e.label = make_text(names[i], "sans-serif", "small");
    e.label.anchor = Anchor::start;
    e.label.x = cx + swatch_w + gap;
    e.label.y = cy + row_h / 2 + strike.ascent / 2.0 - 1;
    plan.legend.entries.push_back(std::move(e));
  }
}

}  // namespace

LayoutPlan layout(const ChartSpec& spec) {
  if (spec.series_count() == 0) throw Error(ErrorKind::EmptyTable, "chart has no series");
  const DataTable table = spec.series_table();
  const ChartType type = spec.chart_type();
  if (type == ChartType::stacked_vertical_bar && !table.non_negative())
    throw Error(ErrorKind::InvalidForChartType, "stacked bars need non-negative values");

  LayoutPlan plan;
  plan.chart_type = type;
  const auto& g = spec.global;

  // Value range.
  double lo = 0, hi = 0;
  bool any = false;
  auto take = [&](double v) {
    lo = any ? std::min(lo, v) : v;
    hi = any ? std::max(hi, v) : v;
    any = true;
  };
  if (type == ChartType::stacked_vertical_bar) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      double sum = 0;
      for (const auto& r : table.rows) sum += r.values[c].value_or(0);
      take(sum);
    }
  } else {
    for (const auto& r : table.rows)
      for (const auto& v : r.values)
        if (v) take(*v);
  }
  if (!any) hi = 1;
  if (is_bar(type) || !any) {
    lo = std::min(lo, 0.0);
    hi = std::max(hi, 0.0);
  }
  const auto values = nice_ticks(lo, hi);
  plan.y_min = values.front();
  plan.y_max = values.back();

  // Text elements and margins.
  if (!spec.chart_title.empty()) {
    plan.title = make_text(spec.chart_title, g.title.fontname, g.title.fontsize, g.title.rotation);
    plan.title_band =
        std::min(rotated_height(text_width(*plan.title), plan.title->px, g.title.rotation), 160.0) + kPad;
  }
  if (!spec.x_axis_title.empty()) plan.x_label = make_text(spec.x_axis_title, g.x_label.fontname, g.x_label.fontsize);
  if (!spec.y_axis_title.empty())
    plan.y_label = make_text(spec.y_axis_title, g.y_label.fontname, g.y_label.fontsize, 90);

  for (const auto& name : table.columns)
    plan.x_tick_labels.push_back(make_text(name, g.x_tick.labelfontfamily, g.x_tick.labelsize, g.x_tick.rotation));
  for (double v : values)
    plan.y_tick_labels.push_back(make_text(format_number(v), g.y_tick.labelfontfamily, g.y_tick.labelsize,
                                           g.y_tick.rotation));

  double x_tick_extent = 0, y_tick_extent = 0;
  for (const auto& t : plan.x_tick_labels)
    x_tick_extent = std::max(x_tick_extent, rotated_height(text_width(t), t.px, t.rotation));
  for (const auto& t : plan.y_tick_labels)
    y_tick_extent = std::max(y_tick_extent, rotated_width(text_width(t), t.px, t.rotation));
  x_tick_extent = std::min(x_tick_extent, 220.0);
  y_tick_extent = std::min(y_tick_extent, 220.0);

  const double top = kPad + plan.title_band;
  const double bottom =
      kPad + kTickLength + 4 + x_tick_extent + (plan.x_label ? plan.x_label->px + kPad / 2 : 0) + kPad / 2;
  const double left = kPad + (plan.y_label ? plan.y_label->px + kPad / 2 : 0) + y_tick_extent + 4 + kTickLength;
  const double right = kPad * 2;
  plan.plot = {left, top, plan.width - left - right, plan.height - top - bottom};

  if (plan.title) {
    plan.title->x = plan.plot.x + plan.plot.w / 2;
    plan.title->y = kPad / 2 + plan.title_band / 2 + font_strike(plan.title->face, plan.title->px).ascent / 2.0;
  }
  if (plan.x_label) {
    plan.x_label->x = plan.plot.x + plan.plot.w / 2;
    const auto& strike = font_strike(plan.x_label->face, plan.x_label->px);
    plan.x_label->y = plan.height - kPad / 2 - strike.height + strike.ascent;
  }
  if (plan.y_label) {
    plan.y_label->x = kPad + font_strike(plan.y_label->face, plan.y_label->px).ascent;
    plan.y_label->y = plan.plot.y + plan.plot.h / 2;
  }

  // Ticks.
  const std::size_t ncat = table.columns.size();
  const double slot = plan.plot.w / static_cast<double>(ncat);
  for (std::size_t c = 0; c < ncat; ++c) {
    const double x = plan.plot.x + (static_cast<double>(c) + 0.5) * slot;
    plan.x_ticks.push_back({x, table.columns[c]});
    auto& t = plan.x_tick_labels[c];
    t.x = x;
    t.y = plan.plot.bottom() + kTickLength + 4 + font_strike(t.face, t.px).ascent;
    if (t.rotation != 0) {
      t.anchor = Anchor::end;
      t.y = plan.plot.bottom() + kTickLength + 4;
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double y = plan.y_of(values[i]);
    plan.y_ticks.push_back({y, format_number(values[i])});
    auto& t = plan.y_tick_labels[i];
    t.anchor = Anchor::end;
    t.x = plan.plot.x - kTickLength - 4;
    t.y = y + font_strike(t.face, t.px).ascent / 2.0;
  }

  plan.grid_visible = g.grid.visible;
  plan.grid_axis = g.grid.axis;
  plan.grid_dashes = dash_array(g.grid.linestyle);

  // Series geometry.
  const std::size_t n = table.rows.size();
  const auto& colors = spec.colors();
  std::vector<double> stack_base(ncat, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    SeriesGeometry geo;
    geo.name = table.rows[s].name;
    geo.color = color_for(colors[s]);
    const auto& row = table.rows[s].values;
    if (const auto* lp = std::get_if<LineProps>(&spec.series)) {
      geo.dashes = dash_array(lp->linestyles[s]);
      geo.marker = lp->markers[s];
      for (std::size_t c = 0; c < ncat; ++c) {
        if (row[c]) {
          geo.points.push_back(Point{plan.x_ticks[c].pos, plan.y_of(*row[c])});
        } else {
          geo.points.push_back(std::nullopt);
        }
      }
    } else {
      const auto& bp = std::get<BarProps>(spec.series);
      geo.hatch = bp.hatches[s];
      const double group = 0.8 * slot;
      for (std::size_t c = 0; c < ncat; ++c) {
        if (!row[c]) continue;
        const double left_edge = plan.x_ticks[c].pos - group / 2;
        double x0, w, v0, v1;
        if (type == ChartType::stacked_vertical_bar) {
          x0 = left_edge;
          w = group;
          v0 = stack_base[c];
          v1 = v0 + *row[c];
          stack_base[c] = v1;
        } else {
          w = group / static_cast<double>(n);
          x0 = left_edge + static_cast<double>(s) * w;
          v0 = 0;
          v1 = *row[c];
        }
        const double y0 = plan.y_of(std::max(v0, v1));
        const double y1 = plan.y_of(std::min(v0, v1));
        geo.bars.push_back({{x0, y0, w, y1 - y0}, c});
      }
    }
    plan.series.push_back(std::move(geo));
  }

  place_legend(plan, spec);
  return plan;
}

}  // namespace chartforge
