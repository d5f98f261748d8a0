#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <png.h>

#include "chartforge/font.hpp"
#include "chartforge/layout.hpp"
#include "chartforge/metrics.hpp"
#include "chartforge/raster.hpp"
#include "chartforge/render.hpp"
#include "support.hpp"

using namespace cftest;

namespace {

/// One flat line series over three categories, no text, no grid.
ChartSpec probe_spec(ChartType type = ChartType::line) {
  ChartSpec s = default_spec();
  s.data = DataTable{"", {"a", "b", "c"}, {{"s", {5.0, 5.0, 5.0}}}};
  s.chart_title.clear();
  s.x_axis_title.clear();
  s.y_axis_title.clear();
  s.global.grid.visible = false;
  s.global.legend.loc = 3;
  s.global.chart_type = type;
  if (type == ChartType::line) s.series = LineProps{{"solid"}, {"None"}, {"b"}};
  else s.series = BarProps{{"None"}, {"b"}};
  return s;
}

bool is_white(Rgb c) { return c == Rgb{255, 255, 255}; }

/// Fraction of columns between the first and last vertex where the line is drawn.
double line_coverage(const ChartSpec& s) {
  const LayoutPlan plan = layout(s);
  const RasterImage img = rasterize(plan);
  const auto& pts = plan.series[0].points;
  const int y = static_cast<int>(std::floor(pts[0]->y));
  const int x0 = static_cast<int>(std::ceil(pts.front()->x)) + 2;
  const int x1 = static_cast<int>(std::floor(pts.back()->x)) - 2;
  int on = 0;
  for (int x = x0; x <= x1; ++x) {
    bool hit = false;
    for (int dy = -1; dy <= 1; ++dy) hit |= !is_white(img.rgb(x, y + dy));
    on += hit;
  }
  return static_cast<double>(on) / (x1 - x0 + 1);
}

std::string without_group(const std::string& svg, const std::string& id) {
  const std::string open = "<g id=\"" + id + "\">";
  const auto start = svg.find(open);
  if (start == std::string::npos) return svg;
  const auto end = svg.find("</g>", start);
  return svg.substr(0, start) + svg.substr(end + 4);
}

std::string group(const std::string& svg, const std::string& id) {
  const std::string open = "<g id=\"" + id + "\">";
  const auto start = svg.find(open);
  if (start == std::string::npos) return {};
  return svg.substr(start, svg.find("</g>", start) - start);
}

/// Step sizes 1/2/5 x 10^k for k in [-4, 8], ascending.
std::vector<double> candidate_steps() {
  std::vector<double> out;
  for (int k = -4; k <= 8; ++k)
    for (int m : {1, 2, 5}) out.push_back(m * std::pow(10.0, k));
  return out;
}

}  // namespace

TEST_CASE("nice ticks for [0, 10]") {
  CHECK(nice_ticks(0, 10) == std::vector<double>{0, 2, 4, 6, 8, 10});
  const LayoutPlan plan = layout([] {
    ChartSpec s = probe_spec();
    s.data.rows[0].values = {0.0, 10.0, 5.0};
    return s;
  }());
  std::vector<std::string> labels;
  for (const auto& t : plan.y_ticks) labels.push_back(t.label);
  CHECK(labels == std::vector<std::string>{"0", "2", "4", "6", "8", "10"});
}

TEST_CASE("nice ticks use the smallest 1-2-5 step with at most eight ticks") {
  Rng rng(3);
  const auto steps = candidate_steps();
  for (int i = 0; i < 2000; ++i) {
    const double scale = std::pow(10.0, rng.uniform(-2, 6));
    double lo = rng.chance(0.3) ? 0.0 : rng.uniform(-1, 1) * scale;
    const double hi = lo + rng.uniform(0.01, 3) * scale;
    CAPTURE(lo);
    CAPTURE(hi);
    const auto ticks = nice_ticks(lo, hi);
    REQUIRE(ticks.size() >= 5);
    REQUIRE(ticks.size() <= 8);
    CHECK(ticks.front() <= lo + 1e-9 * scale);
    CHECK(ticks.back() >= hi - 1e-9 * scale);
    const double step = ticks[1] - ticks[0];
    for (std::size_t k = 1; k < ticks.size(); ++k) CHECK(ticks[k] - ticks[k - 1] == doctest::Approx(step));
    // oracle: first candidate whose covering range needs <= 8 ticks
    double expected = 0;
    for (double c : steps) {
      const double count = std::ceil(hi / c - 1e-9) - std::floor(lo / c + 1e-9) + 1;
      if (count <= 8) {
        expected = c;
        break;
      }
    }
    CHECK(step == doctest::Approx(expected));
    CHECK(ticks.front() == doctest::Approx(std::floor(lo / expected + 1e-9) * expected));
  }
}

TEST_CASE("y range includes zero for bars and hugs the data for lines") {
  ChartSpec s = probe_spec();
  s.data.rows[0].values = {52.0, 57.0, 61.0};
  const LayoutPlan line = layout(s);
  // span 9 needs step 2: floor(52/2)*2 and ceil(61/2)*2
  CHECK(line.y_min == 52);
  CHECK(line.y_max == 62);
  s.global.chart_type = ChartType::grouped_vertical_bar;
  s.series = BarProps{{"None"}, {"b"}};
  const LayoutPlan bar = layout(s);
  CHECK(bar.y_min == 0);
  CHECK(bar.y_max >= 61);
}

TEST_CASE("imports legend sits upper right") {
  const LayoutPlan plan = layout(imports_spec());
  const Rect& box = plan.legend.box;
  CHECK(box.right() <= plan.plot.right());
  CHECK(plan.plot.right() - box.right() < 20);
  CHECK(box.y - plan.plot.y < 20);
  CHECK(box.y >= plan.plot.y);
  CHECK(plan.legend.entries.size() == 2);
}

TEST_CASE("legend codes") {
  ChartSpec s = country_spec();
  auto box_for = [&](int loc) {
    s.global.legend.loc = loc;
    const LayoutPlan p = layout(s);
    return std::pair{p.legend.box, p.plot};
  };
  for (int loc : pool::kLegendLocs) {
    auto [b, plot] = box_for(loc);
    CAPTURE(loc);
    CHECK(b.x >= plot.x);
    CHECK(b.right() <= plot.right());
    CHECK(b.y >= plot.y);
    CHECK(b.bottom() <= plot.bottom());
    const double cx = b.x + b.w / 2 - (plot.x + plot.w / 2), cy = b.y + b.h / 2 - (plot.y + plot.h / 2);
    const bool upper = loc == 0 || loc == 1 || loc == 2 || loc == 9;
    CHECK((cy < 0) == upper);
    if (loc == 1 || loc == 4 || loc == 0) CHECK(cx > 0);
    if (loc == 2 || loc == 3) CHECK(cx < 0);
    if (loc == 8 || loc == 9) CHECK(std::abs(cx) < 1);
  }
  CHECK(box_for(0).first.x == box_for(1).first.x);
  CHECK(box_for(0).first.y == box_for(1).first.y);
}

TEST_CASE("an empty title leaves no title band") {
  ChartSpec s = country_spec();
  s.chart_title = "Imports";
  const LayoutPlan with = layout(s);
  s.chart_title.clear();
  const LayoutPlan without = layout(s);
  CHECK(without.title_band == 0);
  CHECK(with.title_band > 0);
  CHECK_FALSE(without.title.has_value());
  CHECK(without.plot.h > with.plot.h);
  CHECK(without.plot.y < with.plot.y);
}

TEST_CASE("geometry stays on the canvas") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const ChartSpec s = random_spec(rng, {7, 20, true, false, true});
    const LayoutPlan p = layout(s);
    CHECK(p.plot.x >= 0);
    CHECK(p.plot.y >= 0);
    CHECK(p.plot.right() <= kCanvasSize);
    CHECK(p.plot.bottom() <= kCanvasSize);
    for (const auto& g : p.series) {
      for (const auto& pt : g.points)
        if (pt) {
          CHECK(pt->x >= 0);
          CHECK(pt->x <= kCanvasSize);
          CHECK(pt->y >= -0.5);
          CHECK(pt->y <= kCanvasSize + 0.5);
        }
      for (const auto& b : g.bars) {
        CHECK(b.rect.x >= 0);
        CHECK(b.rect.right() <= kCanvasSize);
        CHECK(b.rect.y >= -0.5);
        CHECK(b.rect.bottom() <= kCanvasSize + 0.5);
      }
    }
  }
}

TEST_CASE("line vertices are equally spaced") {
  Rng rng(18);
  for (int i = 0; i < 50; ++i) {
    ChartSpec s = random_spec(rng);
    if (s.chart_type() != ChartType::line) continue;
    const LayoutPlan p = layout(s);
    for (std::size_t k = 2; k < p.x_ticks.size(); ++k)
      CHECK(p.x_ticks[k].pos - p.x_ticks[k - 1].pos == doctest::Approx(p.x_ticks[1].pos - p.x_ticks[0].pos));
    for (const auto& g : p.series)
      for (std::size_t k = 0; k < g.points.size(); ++k)
        if (g.points[k]) CHECK(g.points[k]->x == doctest::Approx(p.x_ticks[k].pos));
  }
}

TEST_CASE("stacked segment tops equal cumulative sums") {
  Rng rng(19);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    ChartSpec s = random_spec(rng, {6, 10, false, false, true});
    if (s.chart_type() == ChartType::line) continue;
    s.global.chart_type = ChartType::stacked_vertical_bar;
    const LayoutPlan p = layout(s);
    const DataTable t = s.series_table();
    for (std::size_t c = 0; c < t.column_count(); ++c) {
      double total = 0;
      for (std::size_t r = 0; r < t.row_count(); ++r) {
        const double base = total;
        total += t.rows[r].values[c].value_or(0);
        for (const auto& bar : p.series[r].bars) {
          if (bar.column != c) continue;
          CHECK(std::abs(bar.rect.y - p.y_of(total)) <= 0.5);
          CHECK(std::abs(bar.rect.bottom() - p.y_of(base)) <= 0.5);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("grouped bars split the group evenly without overlap") {
  const ChartSpec s = country_spec(ChartType::grouped_vertical_bar);
  const LayoutPlan p = layout(s);
  const double slot = p.plot.w / static_cast<double>(s.category_names().size());
  for (std::size_t c = 0; c < s.category_names().size(); ++c) {
    std::vector<Rect> group;
    for (const auto& g : p.series)
      for (const auto& b : g.bars)
        if (b.column == c) group.push_back(b.rect);
    REQUIRE(group.size() == 3);
    for (std::size_t k = 0; k < group.size(); ++k) {
      CHECK(group[k].w == doctest::Approx(0.8 * slot / 3));
      if (k) CHECK(group[k].x >= group[k - 1].right() - 1e-9);
    }
    CHECK(group.back().right() - group.front().x == doctest::Approx(0.8 * slot));
    CHECK((group.front().x + group.back().right()) / 2 == doctest::Approx(p.x_ticks[c].pos));
  }
}

TEST_CASE("color lexicon") {
  const std::map<std::string, std::string> hex{{"b", "#0000FF"}, {"g", "#008000"}, {"r", "#FF0000"},
                                               {"c", "#00BFBF"}, {"m", "#BF00BF"}, {"y", "#BFBF00"},
                                               {"k", "#000000"}};
  for (const auto& [code, want] : hex) CHECK(hex_color(color_for(code)) == want);
  ChartSpec s = probe_spec();
  std::get<LineProps>(s.series).colors = {"r"};
  CHECK(group(render_svg(s), "series-0").find("stroke=\"#FF0000\"") != std::string::npos);
  const RasterImage img = rasterize(s);
  const auto pt = *layout(s).series[0].points[1];
  CHECK(img.rgb(static_cast<int>(pt.x), static_cast<int>(pt.y)) == Rgb{255, 0, 0});
}

TEST_CASE("dash table") {
  CHECK(dash_array("solid").empty());
  CHECK(dash_array("dashed") == std::vector<double>{6, 6});
  CHECK(dash_array("dotted") == std::vector<double>{1, 5});
  CHECK(dash_array("dense dotted") == std::vector<double>{1, 1});
  CHECK(dash_array("loose dotted") == std::vector<double>{1, 10});
  CHECK(dash_array("dense dashed") == std::vector<double>{5, 1});
  CHECK(dash_array("loose dashed") == std::vector<double>{5, 10});
}

TEST_CASE("line style probes") {
  for (const auto& style : pool::kLineStyles) {
    ChartSpec s = probe_spec();
    std::get<LineProps>(s.series).linestyles = {style};
    const double coverage = line_coverage(s);
    const auto dashes = dash_array(style);
    CAPTURE(style);
    if (dashes.empty()) {
      CHECK(coverage == 1.0);
    } else {
      CHECK(coverage < 1.0);
      const double expected = dashes[0] / (dashes[0] + dashes[1]);
      CHECK(coverage == doctest::Approx(expected).epsilon(0.35));
    }
    const bool dashed_svg = group(render_svg(s), "series-0").find("stroke-dasharray") != std::string::npos;
    CHECK(dashed_svg == !dashes.empty());
  }
}

TEST_CASE("marker probes") {
  std::vector<std::vector<bool>> masks;
  for (const auto& marker : pool::kMarkers) {
    ChartSpec s = probe_spec();
    auto& lp = std::get<LineProps>(s.series);
    lp.markers = {marker};
    const LayoutPlan p = layout(s);
    const RasterImage img = rasterize(p);
    const auto c = *p.series[0].points[1];
    std::vector<bool> mask;
    for (int dy = -7; dy <= 7; ++dy)
      for (int dx = -7; dx <= 7; ++dx) mask.push_back(!is_white(img.rgb(static_cast<int>(c.x) + dx, static_cast<int>(c.y) + dy)));
    masks.push_back(mask);
  }
  for (std::size_t a = 0; a < masks.size(); ++a)
    for (std::size_t b = a + 1; b < masks.size(); ++b) CHECK(masks[a] != masks[b]);
}

TEST_CASE("hatch probes") {
  std::vector<std::size_t> contrast;
  for (const auto& hatch : pool::kHatches) {
    ChartSpec s = probe_spec(ChartType::grouped_vertical_bar);
    std::get<BarProps>(s.series).hatches = {hatch};
    const LayoutPlan p = layout(s);
    const RasterImage img = rasterize(p);
    const Rect r = p.series[0].bars[1].rect;
    std::size_t n = 0;
    for (int y = static_cast<int>(r.y) + 2; y < static_cast<int>(r.bottom()) - 2; ++y)
      for (int x = static_cast<int>(r.x) + 2; x < static_cast<int>(r.right()) - 2; ++x)
        n += img.rgb(x, y) != color_for("b");
    contrast.push_back(n);
    CAPTURE(hatch);
    if (hatch == "None") CHECK(n == 0);
    else CHECK(n > 50);
    const std::string svg = render_svg(s);
    CHECK((svg.find("<pattern") != std::string::npos) == (hatch != "None"));
  }
  CHECK(contrast_color(color_for("k")) == Rgb{255, 255, 255});
  CHECK(contrast_color(color_for("y")) == Rgb{0, 0, 0});
}

TEST_CASE("font faces render differently") {
  std::set<std::vector<unsigned char>> images;
  for (const auto& font : pool::kFonts) {
    ChartSpec s = probe_spec();
    s.chart_title = "Average Rainfall";
    s.global.title.fontname = font;
    images.insert(rasterize(s).pixels);
  }
  CHECK(images.size() == pool::kFonts.size());
  CHECK(face_for("Serif") == FontFace::serif);
  CHECK(face_for("Arial Black") == FontFace::heavy_sans);
  CHECK(face_for("monospace") == FontFace::monospace);
  CHECK(face_for("sans-serif") == FontFace::sans);
  CHECK(point_size("x-small") == doctest::Approx(6.9));
  CHECK(point_size("small") == doctest::Approx(8.3));
  CHECK(point_size("medium") == doctest::Approx(10));
  CHECK(point_size("large") == doctest::Approx(12));
  CHECK(point_size("x-large") == doctest::Approx(14.4));
  CHECK(pixel_size("x-small") < pixel_size("small"));
  CHECK(pixel_size("large") < pixel_size("x-large"));
}

TEST_CASE("grid toggle changes only the grid group") {
  ChartSpec s = imports_spec();
  s.global.grid.visible = false;
  const std::string off = render_svg(s);
  s.global.grid.visible = true;
  const std::string on = render_svg(s);
  CHECK(off != on);
  CHECK(without_group(off, "grid") == without_group(on, "grid"));
  CHECK(group(off, "grid").find("<line") == std::string::npos);
  CHECK(group(on, "grid").find("<line") != std::string::npos);
}

TEST_CASE("svg structure") {
  const std::string svg = render_svg(country_spec(ChartType::stacked_vertical_bar));
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("width=\"800\" height=\"800\"") != std::string::npos);
  for (const char* id : {"title", "x-axis", "y-axis", "grid", "legend", "series-0", "series-1", "series-2"})
    CHECK_MESSAGE(svg.find(std::string("id=\"") + id + "\"") != std::string::npos, id);
  CHECK(svg.find("id=\"series-3\"") == std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  Rng rng(20);
  for (int i = 0; i < 20; ++i) {
    const ChartSpec s = random_spec(rng);
    CHECK(render_svg(s) == render_svg(s));
    const RasterImage a = rasterize(s);
    CHECK(a == rasterize(s));
    CHECK(a.width == 800);
    CHECK(a.height == 800);
    CHECK(a.channels == 3);
    CHECK(a.pixels.size() == 800u * 800u * 3u);
  }
  const RasterImage img = rasterize(imports_spec());
  CHECK(ssim(img, img) == 1.0);
}

TEST_CASE("a chart with nothing to draw is almost all white") {
  ChartSpec s = probe_spec();
  s.data.rows[0].values = {std::nullopt, std::nullopt, std::nullopt};
  s.data.columns = {"", "", ""};
  s.data.rows[0].name = "";
  const RasterImage img = rasterize(s);
  std::size_t white = 0;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) white += is_white(img.rgb(x, y));
  CHECK(static_cast<double>(white) / (800.0 * 800.0) >= 0.99);
}

TEST_CASE("stacked layout rejects negatives") {
  ChartSpec s = country_spec(ChartType::stacked_vertical_bar);
  s.data.rows[0].values[0] = -1.0;
  CHECK_THROWS_AS(layout(s), Error);
}

TEST_CASE("png encoding") {
  const RasterImage img = rasterize(imports_spec());
  const auto bytes = encode_png(img);
  REQUIRE(bytes.size() > 24);
  const unsigned char sig[8] = {137, 80, 78, 71, 13, 10, 26, 10};
  CHECK(std::equal(sig, sig + 8, bytes.begin()));
  png_image decoded{};
  decoded.version = PNG_IMAGE_VERSION;
  REQUIRE(png_image_begin_read_from_memory(&decoded, bytes.data(), bytes.size()));
  decoded.format = PNG_FORMAT_RGB;
  std::vector<unsigned char> pixels(PNG_IMAGE_SIZE(decoded));
  REQUIRE(png_image_finish_read(&decoded, nullptr, pixels.data(), 0, nullptr));
  CHECK(decoded.width == 800);
  CHECK(decoded.height == 800);
  CHECK(pixels == img.pixels);
}
