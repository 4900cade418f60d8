#include "core/symbolic.hpp"

#include "core/error.hpp"

namespace oilu {
namespace {

int mod4(int k) {
    return ((k % 4) + 4) % 4;
}

}  // namespace

Glyph glyph_of_digit(int digit) {
    switch (digit) {
        case 0: return Glyph::square();
        case 1: return Glyph::bar();
        case 2:
        case 4:
        case 6:
        case 8: return Glyph::corner(static_cast<CornerPos>((digit - 2) / 2));
        case 3:
        case 5:
        case 7:
        case 9: return Glyph::cup(static_cast<CupOpening>((digit - 3) / 2));
        default:
            throw Error(Errc::invalid_argument,
                        "digit out of range: " + std::to_string(digit));
    }
}

int digit_of_glyph(const Glyph& g) {
    switch (g.kind) {
        case GlyphKind::Square: return 0;
        case GlyphKind::Bar: return 1;
        case GlyphKind::Corner: return 2 + 2 * (g.orient % 4);
        case GlyphKind::Cup: return 3 + 2 * (g.orient % 4);
    }
    throw Error(Errc::invalid_argument, "corrupt glyph");
}

Glyph rotate_glyph(const Glyph& g, int quarter_turns) {
    if (g.kind == GlyphKind::Bar || g.kind == GlyphKind::Square) return g;
    Glyph out = g;
    out.orient = static_cast<std::uint8_t>((g.orient + mod4(quarter_turns)) % 4);
    return out;
}

int rotate_digit(int digit, int quarter_turns) {
    return digit_of_glyph(rotate_glyph(glyph_of_digit(digit), quarter_turns));
}

std::optional<Glyph> classify_side_set(const SideSet& s) {
    if (s.center_bar) {
        if (s.top || s.bottom || s.left || s.right) return std::nullopt;
        return Glyph::bar();
    }
    const int n = int(s.top) + int(s.bottom) + int(s.left) + int(s.right);
    switch (n) {
        case 4: return Glyph::square();
        case 3:
            if (!s.top) return Glyph::cup(CupOpening::Up);
            if (!s.left) return Glyph::cup(CupOpening::Left);
            if (!s.bottom) return Glyph::cup(CupOpening::Down);
            return Glyph::cup(CupOpening::Right);
        case 2:
            if (s.bottom && s.left) return Glyph::corner(CornerPos::BottomLeft);
            if (s.bottom && s.right) return Glyph::corner(CornerPos::BottomRight);
            if (s.top && s.right) return Glyph::corner(CornerPos::TopRight);
            if (s.top && s.left) return Glyph::corner(CornerPos::TopLeft);
            return std::nullopt;  // opposite pair
        case 1:
            // A lone vertical side reads as the bar; a lone horizontal does not.
            if (s.left || s.right) return Glyph::bar();
            return std::nullopt;
        default: return std::nullopt;
    }
}

SideSet sides_of_glyph(const Glyph& g) {
    SideSet s;
    switch (g.kind) {
        case GlyphKind::Bar:
            s.center_bar = true;
            break;
        case GlyphKind::Square:
            s.top = s.bottom = s.left = s.right = true;
            break;
        case GlyphKind::Corner:
            switch (static_cast<CornerPos>(g.orient % 4)) {
                case CornerPos::BottomLeft: s.bottom = s.left = true; break;
                case CornerPos::BottomRight: s.bottom = s.right = true; break;
                case CornerPos::TopRight: s.top = s.right = true; break;
                case CornerPos::TopLeft: s.top = s.left = true; break;
            }
            break;
        case GlyphKind::Cup:
            s.top = s.bottom = s.left = s.right = true;
            switch (static_cast<CupOpening>(g.orient % 4)) {
                case CupOpening::Up: s.top = false; break;
                case CupOpening::Left: s.left = false; break;
                case CupOpening::Down: s.bottom = false; break;
                case CupOpening::Right: s.right = false; break;
            }
            break;
    }
    return s;
}

int stroke_count(const Glyph& g) {
    switch (g.kind) {
        case GlyphKind::Bar: return 1;
        case GlyphKind::Corner: return 2;
        case GlyphKind::Cup: return 3;
        case GlyphKind::Square: return 4;
    }
    return 0;
}

std::string to_string(const Glyph& g) {
    static const char* corner_names[] = {"corner-bl", "corner-br", "corner-tr", "corner-tl"};
    static const char* cup_names[] = {"cup-up", "cup-left", "cup-down", "cup-right"};
    switch (g.kind) {
        case GlyphKind::Bar: return "bar";
        case GlyphKind::Square: return "square";
        case GlyphKind::Corner: return corner_names[g.orient % 4];
        case GlyphKind::Cup: return cup_names[g.orient % 4];
    }
    return "?";
}

const std::array<Glyph, 10>& all_glyphs() {
    static const std::array<Glyph, 10> glyphs = [] {
        std::array<Glyph, 10> out{};
        for (int d = 0; d < 10; ++d) out[static_cast<std::size_t>(d)] = glyph_of_digit(d);
        return out;
    }();
    return glyphs;
}

}  // namespace oilu
