#ifndef MIDI_PIXEL_FONT_HPP
#define MIDI_PIXEL_FONT_HPP

#include <array>
#include <cstdint>
#include <optional>

namespace midi::pixel {

/// Fixed-width 5x7 bitmap font covering A-Z, 0-9, space and basic
/// punctuation (. , : ; - / ^ ( ) ' _ #). Row bit 4 is the leftmost column.
struct glyph {
    std::array<uint8_t, 7> rows;
};

/// Returns the glyph for an (uppercased) character, nullopt if unsupported.
std::optional<glyph> font_glyph(char c);

inline constexpr int glyph_rows = 7;
inline constexpr int glyph_cols = 5;
/// Horizontal advance in glyph cells: 5 columns + 1 gap.
inline constexpr int glyph_advance = 6;

}  // namespace midi::pixel

#endif
