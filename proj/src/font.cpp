#include "chartforge/font.hpp"

#include <cstdlib>

namespace chartforge {

FontFace face_for(std::string_view fontname) {
  if (fontname == "monospace") return FontFace::monospace;
  if (fontname == "Serif") return FontFace::serif;
  if (fontname == "Arial Black") return FontFace::heavy_sans;
  return FontFace::sans;
}

int pixel_size(std::string_view size_keyword) {
  if (size_keyword == "x-small") return 10;
  if (size_keyword == "small") return 12;
  if (size_keyword == "large") return 17;
  if (size_keyword == "x-large") return 20;
  return 14;
}

double point_size(std::string_view size_keyword) {
  if (size_keyword == "x-small") return 6.9;
  if (size_keyword == "small") return 8.3;
  if (size_keyword == "large") return 12;
  if (size_keyword == "x-large") return 14.4;
  return 10;
}

const GlyphInfo& FontStrike::glyph(char c) const {
  int code = static_cast<unsigned char>(c);
  if (code < 32 || code > 126) code = '?';
  return glyphs[code - 32];
}

int FontStrike::text_width(std::string_view text) const {
  int w = 0;
  for (char c : text) w += glyph(c).advance;
  return w;
}

const FontStrike& font_strike(FontFace face, int px) {
  const FontStrike* best = nullptr;
  for (std::size_t i = 0; i < detail::kFontStrikeCount; ++i) {
    const auto& s = detail::kFontStrikes[i];
    if (s.face != static_cast<int>(face)) continue;
    if (!best || std::abs(s.px - px) < std::abs(best->px - px)) best = &s;
  }
  return *best;
}

}  // namespace chartforge
