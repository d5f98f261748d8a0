#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "chartforge/layout.hpp"

namespace chartforge {

/// Row-major 8-bit image with 1 (gray) or 3 (RGB) channels.
struct RasterImage {
  int width = 0;
  int height = 0;
  int channels = 3;
  std::vector<unsigned char> pixels;

  RasterImage() = default;
  RasterImage(int w, int h, int c, unsigned char fill = 255)
      : width(w), height(h), channels(c), pixels(static_cast<std::size_t>(w) * h * c, fill) {}

  bool operator==(const RasterImage&) const = default;

  unsigned char* at(int x, int y) { return pixels.data() + (static_cast<std::size_t>(y) * width + x) * channels; }
  const unsigned char* at(int x, int y) const {
    return pixels.data() + (static_cast<std::size_t>(y) * width + x) * channels;
  }
  Rgb rgb(int x, int y) const {
    const auto* p = at(x, y);
    return channels == 3 ? Rgb{p[0], p[1], p[2]} : Rgb{p[0], p[0], p[0]};
  }
};

/// Scanline painter over an RGB RasterImage. Coverage is decided at pixel
/// centers; nothing is anti-aliased.
class Canvas {
 public:
  Canvas(int width, int height, Rgb background = {255, 255, 255});

  void fill_rect(const Rect& r, Rgb color);
  void fill_polygon(std::span<const Point> points, Rgb color);
  void fill_circle(Point center, double radius, Rgb color);
  /// Solid or dashed polyline; `dashes` alternates on/off lengths.
  void stroke_polyline(std::span<const Point> points, double width, Rgb color, std::span<const double> dashes = {});
  void hline(double x0, double x1, double y, Rgb color, std::span<const double> dashes = {});
  void vline(double x, double y0, double y1, Rgb color, std::span<const double> dashes = {});
  void stroke_rect(const Rect& r, Rgb color);
  void hatch_rect(const Rect& r, std::string_view hatch, Rgb color);
  void marker(Point center, std::string_view marker, Rgb color);
  void text(const TextItem& item, Rgb color);

  const RasterImage& image() const { return image_; }
  RasterImage take() { return std::move(image_); }

 private:
  void set(int x, int y, Rgb c);
  RasterImage image_;
};

/// 8-bit PNG bytes of an RGB or gray image.
std::vector<unsigned char> encode_png(const RasterImage& image);
void write_png(const std::filesystem::path& path, const RasterImage& image);

}  // namespace chartforge
