#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace chartforge {

/// The four embedded faces. Pool font names map onto them via face_for().
enum class FontFace { monospace = 0, serif = 1, sans = 2, heavy_sans = 3 };

FontFace face_for(std::string_view fontname);

/// Pixel height for a size keyword ("x-small" .. "x-large").
int pixel_size(std::string_view size_keyword);

/// Point size as written in SVG output.
double point_size(std::string_view size_keyword);

struct GlyphInfo {
  std::uint32_t offset;  ///< bit offset of the glyph's first pixel
  int width;
  int advance;
};

/// One face at one pixel size; glyphs cover ASCII 32..126, packed 1 bit per
/// pixel, row-major, least significant bit first.
struct FontStrike {
  int face;
  int px;
  int height;
  int ascent;
  const unsigned char* bits;
  const GlyphInfo* glyphs;

  const GlyphInfo& glyph(char c) const;
  bool pixel(const GlyphInfo& g, int x, int y) const {
    std::uint32_t bit = g.offset + static_cast<std::uint32_t>(y * g.width + x);
    return (bits[bit >> 3] >> (bit & 7)) & 1;
  }
  int text_width(std::string_view text) const;
};

/// Strike with the closest available pixel size.
const FontStrike& font_strike(FontFace face, int px);

namespace detail {
extern const FontStrike kFontStrikes[];
extern const std::size_t kFontStrikeCount;
}  // namespace detail

}  // namespace chartforge
