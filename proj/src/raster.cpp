#include "chartforge/raster.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <fstream>

#include "chartforge/error.hpp"

namespace chartforge {

Canvas::Canvas(int width, int height, Rgb background) : image_(width, height, 3) {
  for (std::size_t i = 0; i < image_.pixels.size(); i += 3) {
    image_.pixels[i] = background.r;
    image_.pixels[i + 1] = background.g;
    image_.pixels[i + 2] = background.b;
  }
}

void Canvas::set(int x, int y, Rgb c) {
  if (x < 0 || y < 0 || x >= image_.width || y >= image_.height) return;
  auto* p = image_.at(x, y);
  p[0] = c.r;
  p[1] = c.g;
  p[2] = c.b;
}

void Canvas::fill_rect(const Rect& r, Rgb color) {
  const int x0 = std::max(0, static_cast<int>(std::ceil(r.x - 0.5)));
  const int x1 = std::min(image_.width, static_cast<int>(std::ceil(r.right() - 0.5)));
  const int y0 = std::max(0, static_cast<int>(std::ceil(r.y - 0.5)));
  const int y1 = std::min(image_.height, static_cast<int>(std::ceil(r.bottom() - 0.5)));
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) set(x, y, color);
}

void Canvas::fill_polygon(std::span<const Point> pts, Rgb color) {
  if (pts.size() < 3) return;
  double ymin = pts[0].y, ymax = pts[0].y;
  for (const auto& p : pts) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const int y0 = std::max(0, static_cast<int>(std::ceil(ymin - 0.5)));
  const int y1 = std::min(image_.height - 1, static_cast<int>(std::floor(ymax - 0.5)));
  std::vector<double> xs;
  for (int y = y0; y <= y1; ++y) {
    const double sy = y + 0.5;
    xs.clear();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point& a = pts[i];
      const Point& b = pts[(i + 1) % pts.size()];
      if ((a.y <= sy && b.y > sy) || (b.y <= sy && a.y > sy)) xs.push_back(a.x + (sy - a.y) / (b.y - a.y) * (b.x - a.x));
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      const int xa = std::max(0, static_cast<int>(std::ceil(xs[i] - 0.5)));
      const int xb = std::min(image_.width, static_cast<int>(std::ceil(xs[i + 1] - 0.5)));
      for (int x = xa; x < xb; ++x) set(x, y, color);
    }
  }
}

void Canvas::fill_circle(Point c, double radius, Rgb color) {
  const int y0 = static_cast<int>(std::floor(c.y - radius));
  const int y1 = static_cast<int>(std::ceil(c.y + radius));
  const int x0 = static_cast<int>(std::floor(c.x - radius));
  const int x1 = static_cast<int>(std::ceil(c.x + radius));
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) {
      const double dx = x + 0.5 - c.x, dy = y + 0.5 - c.y;
      if (dx * dx + dy * dy <= radius * radius) set(x, y, color);
    }
}

namespace {

/// Splits a polyline into its "on" pieces under a dash pattern.
std::vector<std::vector<Point>> dash_pieces(std::span<const Point> pts, std::span<const double> dashes) {
  std::vector<std::vector<Point>> out;
  if (pts.size() < 2) return out;
  if (dashes.empty()) {
    out.emplace_back(pts.begin(), pts.end());
    return out;
  }
  std::size_t k = 0;
  double left = dashes[0];
  bool on = true;
  std::vector<Point> cur{pts[0]};
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Point a = pts[i];
    const Point b = pts[i + 1];
    double seg = std::hypot(b.x - a.x, b.y - a.y);
    while (seg > 0) {
      const double step = std::min(seg, left);
      const double t = step / seg;
      const Point p{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
      if (on) cur.push_back(p);
      a = p;
      seg -= step;
      left -= step;
      if (left <= 1e-9) {
        if (on && cur.size() >= 2) out.push_back(cur);
        on = !on;
        k = (k + 1) % dashes.size();
        left = dashes[k];
        cur.assign(1, a);
      }
    }
  }
  if (on && cur.size() >= 2) out.push_back(cur);
  return out;
}

}  // namespace

void Canvas::stroke_polyline(std::span<const Point> points, double width, Rgb color, std::span<const double> dashes) {
  const double h = width / 2;
  for (const auto& piece : dash_pieces(points, dashes)) {
    for (std::size_t i = 0; i + 1 < piece.size(); ++i) {
      const Point a = piece[i], b = piece[i + 1];
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      if (len == 0) continue;
      const double ux = (b.x - a.x) / len, uy = (b.y - a.y) / len;
      const double nx = -uy * h, ny = ux * h;
      const Point quad[] = {{a.x + nx, a.y + ny}, {b.x + nx, b.y + ny}, {b.x - nx, b.y - ny}, {a.x - nx, a.y - ny}};
      fill_polygon(quad, color);
    }
    // Round-ish joins between consecutive segments.
    for (std::size_t i = 1; i + 1 < piece.size(); ++i) fill_circle(piece[i], h, color);
  }
}

void Canvas::hline(double x0, double x1, double y, Rgb color, std::span<const double> dashes) {
  const double row = std::floor(y) + 0.5;
  const Point pts[] = {{x0, row}, {x1, row}};
  for (const auto& piece : dash_pieces(pts, dashes)) fill_rect({piece.front().x, row - 0.5, piece.back().x - piece.front().x, 1}, color);
}

void Canvas::vline(double x, double y0, double y1, Rgb color, std::span<const double> dashes) {
  const double col = std::floor(x) + 0.5;
  const Point pts[] = {{col, y0}, {col, y1}};
  for (const auto& piece : dash_pieces(pts, dashes)) fill_rect({col - 0.5, piece.front().y, 1, piece.back().y - piece.front().y}, color);
}

void Canvas::stroke_rect(const Rect& r, Rgb color) {
  hline(r.x, r.right() + 1, r.y, color);
  hline(r.x, r.right() + 1, r.bottom(), color);
  vline(r.x, r.y, r.bottom(), color);
  vline(r.right(), r.y, r.bottom(), color);
}

void Canvas::hatch_rect(const Rect& r, std::string_view hatch, Rgb color) {
  if (hatch == "None") return;
  const int x0 = std::max(0, static_cast<int>(std::ceil(r.x - 0.5)));
  const int x1 = std::min(image_.width, static_cast<int>(std::ceil(r.right() - 0.5)));
  const int y0 = std::max(0, static_cast<int>(std::ceil(r.y - 0.5)));
  const int y1 = std::min(image_.height, static_cast<int>(std::ceil(r.bottom() - 0.5)));
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) {
      const int u = x, v = y;
      bool on = false;
      if (hatch == "/") {
        on = (u + v) % 8 == 0;
      } else if (hatch == "\\") {
        on = ((u - v) % 8 + 8) % 8 == 0;
      } else if (hatch == "xx") {
        on = (u + v) % 6 == 0 || ((u - v) % 6 + 6) % 6 == 0;
      } else if (hatch == ".") {
        on = u % 6 >= 2 && u % 6 <= 3 && v % 6 >= 2 && v % 6 <= 3;
      } else if (hatch == "*") {
        const int a = u % 10, b = v % 10;
        on = (a == 5 && b >= 3 && b <= 7) || (b == 5 && a >= 3 && a <= 7) || (a == b && a >= 4 && a <= 6) ||
             (a + b == 10 && a >= 4 && a <= 6);
      }
      if (on) set(x, y, color);
    }
}

void Canvas::marker(Point c, std::string_view kind, Rgb color) {
  constexpr double s = 4.5;
  if (kind == "o") {
    fill_circle(c, s, color);
  } else if (kind == "s") {
    fill_rect({c.x - s, c.y - s, 2 * s, 2 * s}, color);
  } else if (kind == "^") {
    const Point tri[] = {{c.x, c.y - s - 1}, {c.x + s + 1, c.y + s}, {c.x - s - 1, c.y + s}};
    fill_polygon(tri, color);
  } else if (kind == "*") {
    std::vector<Point> star;
    for (int i = 0; i < 10; ++i) {
      const double r = i % 2 == 0 ? s + 2 : (s + 2) * 0.4;
      const double a = -M_PI / 2 + i * M_PI / 5;
      star.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
    }
    fill_polygon(star, color);
  }
}

void Canvas::text(const TextItem& item, Rgb color) {
  if (item.text.empty()) return;
  const FontStrike& f = font_strike(item.face, item.px);
  const int w = f.text_width(item.text);
  const int h = f.height;
  // Text mask in text-local coordinates.
  std::vector<unsigned char> mask(static_cast<std::size_t>(w) * h, 0);
  int pen = 0;
  for (char ch : item.text) {
    const GlyphInfo& g = f.glyph(ch);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < g.width; ++x)
        if (pen + x < w && f.pixel(g, x, y)) mask[static_cast<std::size_t>(y) * w + pen + x] = 1;
    pen += g.advance;
  }
  const double u0 = item.anchor == Anchor::start ? 0 : item.anchor == Anchor::middle ? w / 2.0 : w;
  const double rad = item.rotation * M_PI / 180;
  const double cs = std::cos(rad), sn = std::sin(rad);
  if (item.rotation == 0) {
    const int left = static_cast<int>(std::lround(item.x - u0));
    const int top = static_cast<int>(std::lround(item.y)) - f.ascent;
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        if (mask[static_cast<std::size_t>(y) * w + x]) set(left + x, top + y, color);
    return;
  }
  // Screen offset of local (du, dv): (du cos + dv sin, -du sin + dv cos).
  double minx = 1e9, maxx = -1e9, miny = 1e9, maxy = -1e9;
  for (double du : {-u0, w - u0})
    for (double dv : {-static_cast<double>(f.ascent), static_cast<double>(h - f.ascent)}) {
      const double sx = du * cs + dv * sn, sy = -du * sn + dv * cs;
      minx = std::min(minx, sx);
      maxx = std::max(maxx, sx);
      miny = std::min(miny, sy);
      maxy = std::max(maxy, sy);
    }
  const int X0 = static_cast<int>(std::floor(item.x + minx)), X1 = static_cast<int>(std::ceil(item.x + maxx));
  const int Y0 = static_cast<int>(std::floor(item.y + miny)), Y1 = static_cast<int>(std::ceil(item.y + maxy));
  for (int Y = Y0; Y <= Y1; ++Y)
    for (int X = X0; X <= X1; ++X) {
      const double dx = X + 0.5 - item.x, dy = Y + 0.5 - item.y;
      const double du = dx * cs - dy * sn, dv = dx * sn + dy * cs;
      const int u = static_cast<int>(std::floor(du + u0)), v = static_cast<int>(std::floor(dv + f.ascent));
      if (u >= 0 && u < w && v >= 0 && v < h && mask[static_cast<std::size_t>(v) * w + u]) set(X, Y, color);
    }
}

std::vector<unsigned char> encode_png(const RasterImage& image) {
  std::vector<unsigned char> out;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw Error(ErrorKind::Io, "png encoder unavailable");
  png_infop info = png_create_info_struct(png);
  if (!info || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorKind::Io, "png encoding failed");
  }
  png_set_write_fn(
      png, &out,
      [](png_structp p, png_bytep data, png_size_t len) {
        auto* buf = static_cast<std::vector<unsigned char>*>(png_get_io_ptr(p));
        buf->insert(buf->end(), data, data + len);
      },
      nullptr);
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width), static_cast<png_uint_32>(image.height), 8,
               image.channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_set_compression_level(png, 3);
  png_set_filter(png, PNG_FILTER_TYPE_BASE, PNG_FILTER_SUB);
  png_write_info(png, info);
  for (int y = 0; y < image.height; ++y) png_write_row(png, const_cast<png_bytep>(image.at(0, y)));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

void write_png(const std::filesystem::path& path, const RasterImage& image) {
  const auto bytes = encode_png(image);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string(), path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace chartforge
