#pragma once

#include <cstdint>

#include "ocrforge/image.hpp"

namespace ocrforge {

struct GlyphBitmap {
    AlphaMask bitmap;       // ink coverage, 0 or 255
    std::uint32_t advance;  // pen advance in px at the requested scale
    std::uint32_t ascent;   // px above the baseline
    std::uint32_t descent;  // px below the baseline
};

// Deterministic glyph provider: equal inputs yield equal bitmaps.
// Implementations are immutable after construction and shareable across
// threads.
class GlyphSource {
public:
    virtual ~GlyphSource() = default;

    virtual GlyphBitmap render(char32_t codepoint, std::uint32_t scale) const = 0;

    virtual std::uint32_t cell_width(std::uint32_t scale) const = 0;
    virtual std::uint32_t line_height(std::uint32_t scale) const = 0;
    virtual std::uint32_t ascent(std::uint32_t scale) const = 0;
    virtual std::uint32_t descent(std::uint32_t scale) const = 0;

    virtual bool covers(char32_t codepoint) const = 0;
};

// Embedded fixed 8x16 monospace face: printable ASCII plus Latin-1 accented
// letters. Codepoints outside coverage render as a hollow box (they still
// advance, so any script flows through layout and metrics). Scaling is
// integer nearest-neighbor magnification.
const GlyphSource& builtin_font();

} // namespace ocrforge
