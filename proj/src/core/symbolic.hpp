#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace oilu {

// The ten OILU glyphs: a vertical bar, a square, four corner orientations
// and four cup orientations. Orientation indices advance by one
// counterclockwise quarter turn per step.
enum class GlyphKind : std::uint8_t { Bar, Square, Corner, Cup };

enum class CornerPos : std::uint8_t { BottomLeft, BottomRight, TopRight, TopLeft };
enum class CupOpening : std::uint8_t { Up, Left, Down, Right };

struct Glyph {
    GlyphKind kind = GlyphKind::Bar;
    std::uint8_t orient = 0;  // CornerPos/CupOpening index; 0 for Bar and Square

    static Glyph bar() { return {GlyphKind::Bar, 0}; }
    static Glyph square() { return {GlyphKind::Square, 0}; }
    static Glyph corner(CornerPos p) { return {GlyphKind::Corner, static_cast<std::uint8_t>(p)}; }
    static Glyph cup(CupOpening o) { return {GlyphKind::Cup, static_cast<std::uint8_t>(o)}; }

    bool operator==(const Glyph&) const = default;
};

// Axis-aligned stroke shape on a square cell: which of the four sides are
// drawn, plus the vertical center bar.
struct SideSet {
    bool top = false;
    bool bottom = false;
    bool left = false;
    bool right = false;
    bool center_bar = false;

    bool operator==(const SideSet&) const = default;
};

Glyph glyph_of_digit(int digit);
int digit_of_glyph(const Glyph& g);

// k may be any integer and is reduced mod 4; Bar and Square are fixed points.
Glyph rotate_glyph(const Glyph& g, int quarter_turns);
int rotate_digit(int digit, int quarter_turns);

// nullopt marks an extra shape, i.e. not one of the ten OILU glyphs.
std::optional<Glyph> classify_side_set(const SideSet& s);

// Strokes drawn on a display cell. Inverse of classify_side_set on glyphs.
SideSet sides_of_glyph(const Glyph& g);

int stroke_count(const Glyph& g);
std::string to_string(const Glyph& g);
const std::array<Glyph, 10>& all_glyphs();

}  // namespace oilu
