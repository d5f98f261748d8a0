#!/usr/bin/env python3
"""Rasterizes DejaVu faces into 1-bit glyph tables for src/font_data.cpp.

Usage: gen_font_data.py > src/font_data.cpp
"""
from PIL import Image, ImageDraw, ImageFont

FACES = [
    ("monospace", "/usr/share/fonts/truetype/dejavu/DejaVuSansMono.ttf"),
    ("serif", "/usr/share/fonts/truetype/dejavu/DejaVuSerif.ttf"),
    ("sans", "/usr/share/fonts/truetype/dejavu/DejaVuSans.ttf"),
    ("heavy_sans", "/usr/share/fonts/truetype/dejavu/DejaVuSans-Bold.ttf"),
]
PIXEL_SIZES = [10, 12, 14, 17, 20]
FIRST, LAST = 32, 126


def main():
    out = []
    out.append("// Generated by scripts/gen_font_data.py from the DejaVu fonts")
    out.append("// (Bitstream Vera / DejaVu license). Do not edit by hand.")
    out.append("#include \"chartforge/font.hpp\"\n")
    out.append("namespace chartforge::detail {\n")
    strikes = []
    for face_index, (name, path) in enumerate(FACES):
        for px in PIXEL_SIZES:
            font = ImageFont.truetype(path, px)
            ascent, descent = font.getmetrics()
            height = ascent + descent
            bits = []
            glyphs = []
            for code in range(FIRST, LAST + 1):
                ch = chr(code)
                advance = int(round(font.getlength(ch)))
                left, _, right, _ = font.getbbox(ch)
                width = max(advance, right, 1)
                img = Image.new("L", (width, height), 0)
                ImageDraw.Draw(img).text((0, 0), ch, font=font, fill=255)
                offset = len(bits)
                for y in range(height):
                    for x in range(width):
                        bits.append(1 if img.getpixel((x, y)) >= 128 else 0)
                glyphs.append((offset, width, advance))
            packed = []
            for i in range(0, len(bits), 8):
                byte = 0
                for j, b in enumerate(bits[i:i + 8]):
                    byte |= b << j
                packed.append(byte)
            tag = f"{name}_{px}"
            out.append(f"constexpr unsigned char k_{tag}_bits[] = {{")
            for i in range(0, len(packed), 24):
                out.append("    " + ",".join(str(b) for b in packed[i:i + 24]) + ",")
            out.append("};")
            out.append(f"constexpr GlyphInfo k_{tag}_glyphs[] = {{")
            for g in glyphs:
                out.append(f"    {{{g[0]}, {g[1]}, {g[2]}}},")
            out.append("};")
            strikes.append((face_index, px, height, ascent, tag))
    out.append("\nconst FontStrike kFontStrikes[] = {")
    for face_index, px, height, ascent, tag in strikes:
        out.append(f"    {{{face_index}, {px}, {height}, {ascent}, k_{tag}_bits, k_{tag}_glyphs}},")
    out.append("};")
    out.append(f"const std::size_t kFontStrikeCount = {len(strikes)};")
    out.append("\n}  // namespace chartforge::detail")
    print("\n".join(out))


if __name__ == "__main__":
    main()
