#include "chartforge/render.hpp"

#include <charconv>
#include <cmath>

namespace chartforge {

Rgb contrast_color(Rgb c) {
  const double luma = 0.299 * c.r + 0.587 * c.g + 0.114 * c.b;
  return luma < 110 ? Rgb{255, 255, 255} : Rgb{0, 0, 0};
}

namespace {

constexpr Rgb kBlack{0, 0, 0};
constexpr Rgb kWhite{255, 255, 255};
constexpr Rgb kGridGray{176, 176, 176};
constexpr Rgb kLegendEdge{204, 204, 204};
constexpr double kLineWidth = 2;

// --- SVG --------------------------------------------------------------------

std::string num(double v) {
  if (std::abs(v) < 0.005) v = 0;
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  std::string s(buf, end);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string font_family(FontFace face) {
  switch (face) {
    case FontFace::monospace: return "font-family=\"DejaVu Sans Mono, monospace\"";
    case FontFace::serif: return "font-family=\"DejaVu Serif, serif\"";
    case FontFace::sans: return "font-family=\"DejaVu Sans, sans-serif\"";
    case FontFace::heavy_sans: return "font-family=\"DejaVu Sans, sans-serif\" font-weight=\"bold\"";
  }
  return {};
}

std::string svg_text(const TextItem& t) {
  std::string anchor = t.anchor == Anchor::start ? "start" : t.anchor == Anchor::middle ? "middle" : "end";
  std::string out = "<text x=\"" + num(t.x) + "\" y=\"" + num(t.y) + "\" " + font_family(t.face) +
                    " font-size=\"" + std::to_string(t.px) + "px\" text-anchor=\"" + anchor + "\"";
  if (t.rotation != 0) out += " transform=\"rotate(" + num(-t.rotation) + " " + num(t.x) + " " + num(t.y) + ")\"";
  return out + ">" + escape(t.text) + "</text>\n";
}

std::string dash_attr(const std::vector<double>& dashes) {
  if (dashes.empty()) return {};
  std::string out = " stroke-dasharray=\"";
  for (std::size_t i = 0; i < dashes.size(); ++i) out += (i ? "," : "") + num(dashes[i]);
  return out + "\"";
}

std::string svg_line(double x1, double y1, double x2, double y2, Rgb c, const std::vector<double>& dashes = {}) {
  return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) +
         "\" stroke=\"" + hex_color(c) + "\" stroke-width=\"1\"" + dash_attr(dashes) + "/>\n";
}

std::string svg_rect(const Rect& r, const std::string& fill, const std::string& extra = {}) {
  return "<rect x=\"" + num(r.x) + "\" y=\"" + num(r.y) + "\" width=\"" + num(r.w) + "\" height=\"" + num(r.h) +
         "\" fill=\"" + fill + "\"" + extra + "/>\n";
}

std::string svg_marker(Point c, const std::string& kind, Rgb color) {
  const std::string fill = hex_color(color);
  constexpr double s = 4.5;
  if (kind == "o")
    return "<circle cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" + num(s) + "\" fill=\"" + fill + "\"/>\n";
  if (kind == "s") return svg_rect({c.x - s, c.y - s, 2 * s, 2 * s}, fill);
  std::vector<Point> pts;
  if (kind == "^") {
    pts = {{c.x, c.y - s - 1}, {c.x + s + 1, c.y + s}, {c.x - s - 1, c.y + s}};
  } else if (kind == "*") {
    for (int i = 0; i < 10; ++i) {
      const double r = i % 2 == 0 ? s + 2 : (s + 2) * 0.4;
      const double a = -M_PI / 2 + i * M_PI / 5;
      pts.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
    }
  } else {
    return {};
  }
  std::string out = "<polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? " " : "") + num(pts[i].x) + "," + num(pts[i].y);
  return out + "\" fill=\"" + fill + "\"/>\n";
}

std::string svg_hatch_pattern(std::size_t index, const std::string& hatch, Rgb color) {
  const std::string c = hex_color(color);
  auto line = [&](double x1, double y1, double x2, double y2) {
    return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) +
           "\" stroke=\"" + c + "\" stroke-width=\"1\"/>";
  };
  std::string size = hatch == "xx" || hatch == "." ? "6" : hatch == "*" ? "10" : "8";
  std::string body;
  if (hatch == "/") {
    body = line(0, 8, 8, 0);
  } else if (hatch == "\\") {
    body = line(0, 0, 8, 8);
  } else if (hatch == "xx") {
    body = line(0, 6, 6, 0) + line(0, 0, 6, 6);
  } else if (hatch == ".") {
    body = "<rect x=\"2\" y=\"2\" width=\"2\" height=\"2\" fill=\"" + c + "\"/>";
  } else if (hatch == "*") {
    body = line(5.5, 3, 5.5, 8) + line(3, 5.5, 8, 5.5) + line(4, 4, 7, 7) + line(4, 7, 7, 4);
  }
  return "<pattern id=\"hatch-" + std::to_string(index) + "\" patternUnits=\"userSpaceOnUse\" width=\"" + size +
         "\" height=\"" + size + "\">" + body + "</pattern>\n";
}

std::vector<std::vector<Point>> runs(const std::vector<std::optional<Point>>& points) {
  std::vector<std::vector<Point>> out(1);
  for (const auto& p : points) {
    if (p) {
      out.back().push_back(*p);
    } else if (!out.back().empty()) {
      out.emplace_back();
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const ChartSpec& spec) { return render_svg(layout(spec)); }

std::string render_svg(const LayoutPlan& plan) {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(plan.width) +
       "\" height=\"" + std::to_string(plan.height) + "\" viewBox=\"0 0 " + std::to_string(plan.width) + " " +
       std::to_string(plan.height) + "\">\n";
  s += "<defs>\n";
  for (std::size_t i = 0; i < plan.series.size(); ++i)
    if (is_bar(plan.chart_type) && plan.series[i].hatch != "None")
      s += svg_hatch_pattern(i, plan.series[i].hatch, contrast_color(plan.series[i].color));
  s += "</defs>\n";
  s += svg_rect({0, 0, static_cast<double>(plan.width), static_cast<double>(plan.height)}, "#FFFFFF");

  const Rect& p = plan.plot;
  s += "<g id=\"grid\">\n";
  if (plan.grid_visible) {
    if (plan.grid_axis != "y")
      for (const auto& t : plan.x_ticks) s += svg_line(t.pos, p.y, t.pos, p.bottom(), kGridGray, plan.grid_dashes);
    if (plan.grid_axis != "x")
      for (const auto& t : plan.y_ticks) s += svg_line(p.x, t.pos, p.right(), t.pos, kGridGray, plan.grid_dashes);
  }
  s += "</g>\n";

  for (std::size_t i = 0; i < plan.series.size(); ++i) {
    const auto& g = plan.series[i];
    const std::string color = hex_color(g.color);
    s += "<g id=\"series-" + std::to_string(i) + "\">\n";
    if (is_bar(plan.chart_type)) {
      for (const auto& b : g.bars) {
        s += svg_rect(b.rect, color);
        if (g.hatch != "None") s += svg_rect(b.rect, "url(#hatch-" + std::to_string(i) + ")");
      }
    } else {
      for (const auto& run : runs(g.points)) {
        if (run.size() < 2) continue;
        s += "<polyline points=\"";
        for (std::size_t k = 0; k < run.size(); ++k) s += (k ? " " : "") + num(run[k].x) + "," + num(run[k].y);
        s += "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + num(kLineWidth) + "\"" +
             dash_attr(g.dashes) + "/>\n";
      }
      for (const auto& pt : g.points)
        if (pt) s += svg_marker(*pt, g.marker, g.color);
    }
    s += "</g>\n";
  }

  s += "<g id=\"x-axis\">\n";
  s += svg_line(p.x, p.bottom(), p.right(), p.bottom(), kBlack);
  s += svg_line(p.x, p.y, p.right(), p.y, kBlack);
  for (const auto& t : plan.x_ticks) s += svg_line(t.pos, p.bottom(), t.pos, p.bottom() + 5, kBlack);
  for (const auto& t : plan.x_tick_labels) s += svg_text(t);
  if (plan.x_label) s += svg_text(*plan.x_label);
  s += "</g>\n";

  s += "<g id=\"y-axis\">\n";
  s += svg_line(p.x, p.y, p.x, p.bottom(), kBlack);
  s += svg_line(p.right(), p.y, p.right(), p.bottom(), kBlack);
  for (const auto& t : plan.y_ticks) s += svg_line(p.x - 5, t.pos, p.x, t.pos, kBlack);
  for (const auto& t : plan.y_tick_labels) s += svg_text(t);
  if (plan.y_label) s += svg_text(*plan.y_label);
  s += "</g>\n";

  s += "<g id=\"legend\">\n";
  s += svg_rect(plan.legend.box, "#FFFFFF", " stroke=\"" + hex_color(kLegendEdge) + "\" stroke-width=\"1\"");
  for (const auto& e : plan.legend.entries) {
    const auto& g = plan.series[e.series];
    if (is_bar(plan.chart_type)) {
      s += svg_rect(e.swatch, hex_color(g.color));
      if (g.hatch != "None") s += svg_rect(e.swatch, "url(#hatch-" + std::to_string(e.series) + ")");
    } else {
      const double y = e.swatch.y + e.swatch.h / 2;
      s += "<line x1=\"" + num(e.swatch.x) + "\" y1=\"" + num(y) + "\" x2=\"" + num(e.swatch.right()) + "\" y2=\"" +
           num(y) + "\" stroke=\"" + hex_color(g.color) + "\" stroke-width=\"" + num(kLineWidth) + "\"" +
           dash_attr(g.dashes) + "/>\n";
      s += svg_marker({e.swatch.x + e.swatch.w / 2, y}, g.marker, g.color);
    }
    s += svg_text(e.label);
  }
  s += "</g>\n";

  s += "<g id=\"title\">\n";
  if (plan.title) s += svg_text(*plan.title);
  s += "</g>\n";
  s += "</svg>\n";
  return s;
}

RasterImage rasterize(const ChartSpec& spec) { return rasterize(layout(spec)); }

RasterImage rasterize(const LayoutPlan& plan) {
  Canvas canvas(plan.width, plan.height);
  const Rect& p = plan.plot;

  if (plan.grid_visible) {
    if (plan.grid_axis != "y")
      for (const auto& t : plan.x_ticks) canvas.vline(t.pos, p.y, p.bottom(), kGridGray, plan.grid_dashes);
    if (plan.grid_axis != "x")
      for (const auto& t : plan.y_ticks) canvas.hline(p.x, p.right(), t.pos, kGridGray, plan.grid_dashes);
  }

  for (const auto& g : plan.series) {
    if (is_bar(plan.chart_type)) {
      for (const auto& b : g.bars) {
        canvas.fill_rect(b.rect, g.color);
        canvas.hatch_rect(b.rect, g.hatch, contrast_color(g.color));
      }
    } else {
      for (const auto& run : runs(g.points)) canvas.stroke_polyline(run, kLineWidth, g.color, g.dashes);
      for (const auto& pt : g.points)
        if (pt) canvas.marker(*pt, g.marker, g.color);
    }
  }

  canvas.stroke_rect(p, kBlack);
  for (const auto& t : plan.x_ticks) canvas.vline(t.pos, p.bottom(), p.bottom() + 5, kBlack);
  for (const auto& t : plan.y_ticks) canvas.hline(p.x - 5, p.x, t.pos, kBlack);
  for (const auto& t : plan.x_tick_labels) canvas.text(t, kBlack);
  for (const auto& t : plan.y_tick_labels) canvas.text(t, kBlack);
  if (plan.x_label) canvas.text(*plan.x_label, kBlack);
  if (plan.y_label) canvas.text(*plan.y_label, kBlack);

  canvas.fill_rect(plan.legend.box, kWhite);
  canvas.stroke_rect(plan.legend.box, kLegendEdge);
  for (const auto& e : plan.legend.entries) {
    const auto& g = plan.series[e.series];
    if (is_bar(plan.chart_type)) {
      canvas.fill_rect(e.swatch, g.color);
      canvas.hatch_rect(e.swatch, g.hatch, contrast_color(g.color));
    } else {
      const double y = e.swatch.y + e.swatch.h / 2;
      const Point seg[] = {{e.swatch.x, y}, {e.swatch.right(), y}};
      canvas.stroke_polyline(seg, kLineWidth, g.color, g.dashes);
      canvas.marker({e.swatch.x + e.swatch.w / 2, y}, g.marker, g.color);
    }
    canvas.text(e.label, kBlack);
  }

  if (plan.title) canvas.text(*plan.title, kBlack);
  return canvas.take();
}

}  // namespace chartforge
