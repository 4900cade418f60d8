#include "core/sevenseg.hpp"

#include <array>
#include <bit>
#include <cctype>

#include "core/error.hpp"

namespace oilu {
namespace {

constexpr std::array<SegMask, 16> kSegments = {
    SEG_A | SEG_B | SEG_C | SEG_D | SEG_E | SEG_F,          // 0
    SEG_B | SEG_C,                                          // 1
    SEG_A | SEG_B | SEG_G | SEG_E | SEG_D,                  // 2
    SEG_A | SEG_B | SEG_G | SEG_C | SEG_D,                  // 3
    SEG_F | SEG_G | SEG_B | SEG_C,                          // 4
    SEG_A | SEG_F | SEG_G | SEG_C | SEG_D,                  // 5
    SEG_A | SEG_F | SEG_G | SEG_E | SEG_C | SEG_D,          // 6
    SEG_A | SEG_B | SEG_C,                                  // 7
    SEG_A | SEG_B | SEG_C | SEG_D | SEG_E | SEG_F | SEG_G,  // 8
    SEG_A | SEG_B | SEG_C | SEG_D | SEG_F | SEG_G,          // 9
    SEG_A | SEG_B | SEG_C | SEG_E | SEG_F | SEG_G,          // A
    SEG_C | SEG_D | SEG_E | SEG_F | SEG_G,                  // b
    SEG_A | SEG_D | SEG_E | SEG_F,                          // C
    SEG_B | SEG_C | SEG_D | SEG_E | SEG_G,                  // d
    SEG_A | SEG_D | SEG_E | SEG_F | SEG_G,                  // E
    SEG_A | SEG_E | SEG_F | SEG_G,                          // F
};

void check_value(int value) {
    if (value < 0 || value > 15)
        throw Error(Errc::invalid_argument,
                    "digit value out of range: " + std::to_string(value));
}

void check_base(int base) {
    if (base != 10 && base != 16)
        throw Error(Errc::invalid_argument,
                    "base must be 10 or 16, got " + std::to_string(base));
}

void check_digit_in_base(int value, int base) {
    check_base(base);
    check_value(value);
    if (value >= base)
        throw Error(Errc::invalid_argument,
                    "digit value " + std::to_string(value) + " not valid in base " +
                        std::to_string(base));
}

std::optional<int> classify_digit(const SideSet& s) {
    if (auto g = classify_side_set(s)) return digit_of_glyph(*g);
    return std::nullopt;
}

std::vector<SplitPair> build_table(SplitStrategy s, int base) {
    struct Raw {
        std::optional<int> upper, lower;
        bool clean() const { return upper && lower; }
        bool operator==(const Raw&) const = default;
    };
    std::vector<Raw> raw(static_cast<std::size_t>(base));
    for (int d = 0; d < base; ++d) {
        auto [u, l] = raw_halves(d, s);
        raw[static_cast<std::size_t>(d)] = {classify_digit(u), classify_digit(l)};
    }

    std::vector<SplitPair> out(static_cast<std::size_t>(base));
    for (int d = 0; d < base; ++d) {
        const Raw& r = raw[static_cast<std::size_t>(d)];
        int duplicates = 0;
        if (r.clean())
            for (const Raw& other : raw)
                if (other.clean() && other == r) ++duplicates;
        const bool fallback = !r.clean() || duplicates > 1;
        if (fallback) {
            auto [u, l] = raw_halves(d, SplitStrategy::A);
            auto du = classify_digit(u), dl = classify_digit(l);
            if (!du || !dl)
                throw Error(Errc::invalid_argument, "strategy a produced an extra shape");
            out[static_cast<std::size_t>(d)] = {*du, *dl, true};
        } else {
            out[static_cast<std::size_t>(d)] = {*r.upper, *r.lower, false};
        }
    }

    for (int d = 0; d < base; ++d)
        for (int e = d + 1; e < base; ++e)
            if (out[static_cast<std::size_t>(d)].upper == out[static_cast<std::size_t>(e)].upper &&
                out[static_cast<std::size_t>(d)].lower == out[static_cast<std::size_t>(e)].lower)
                throw Error(Errc::invalid_argument, "split table not injective");
    return out;
}

}  // namespace

SegMask segments_of(int value) {
    check_value(value);
    return kSegments[static_cast<std::size_t>(value)];
}

int segment_count(int value) {
    return std::popcount(static_cast<unsigned>(segments_of(value)));
}

char strategy_letter(SplitStrategy s) {
    switch (s) {
        case SplitStrategy::A: return 'a';
        case SplitStrategy::B: return 'b';
        case SplitStrategy::C: return 'c';
    }
    return '?';
}

std::optional<SplitStrategy> strategy_from_letter(char c) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
        case 'a': return SplitStrategy::A;
        case 'b': return SplitStrategy::B;
        case 'c': return SplitStrategy::C;
        default: return std::nullopt;
    }
}

int digit_value(char c, int base) {
    int v = -1;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    return (v >= 0 && v < base) ? v : -1;
}

char digit_letter(int value) {
    check_value(value);
    return "0123456789ABCDEF"[value];
}

std::pair<SideSet, SideSet> raw_halves(int value, SplitStrategy s) {
    const SegMask m = segments_of(value);
    SideSet upper, lower;
    upper.top = m & SEG_A;
    upper.left = m & SEG_F;
    upper.right = m & SEG_B;
    lower.left = m & SEG_E;
    lower.right = m & SEG_C;
    lower.bottom = m & SEG_D;
    if (m & SEG_G) {
        if (s != SplitStrategy::C) upper.bottom = true;
        if (s != SplitStrategy::B) lower.top = true;
    }
    return {upper, lower};
}

SplitPair split_digit(int value, SplitStrategy s) {
    check_value(value);
    return split_table(s, 16)[static_cast<std::size_t>(value)];
}

const std::vector<SplitPair>& split_table(SplitStrategy s, int base) {
    check_base(base);
    static const std::array<std::vector<SplitPair>, 6> tables = [] {
        std::array<std::vector<SplitPair>, 6> t;
        int i = 0;
        for (SplitStrategy strat : {SplitStrategy::A, SplitStrategy::B, SplitStrategy::C})
            for (int b : {10, 16}) t[static_cast<std::size_t>(i++)] = build_table(strat, b);
        return t;
    }();
    const int index = static_cast<int>(s) * 2 + (base == 16 ? 1 : 0);
    return tables[static_cast<std::size_t>(index)];
}

std::optional<int> join_pair(int upper, int lower, SplitStrategy s, int base) {
    check_base(base);
    const auto& table = split_table(s, base);
    for (int d = 0; d < base; ++d) {
        const SplitPair& p = table[static_cast<std::size_t>(d)];
        if (p.upper == upper && p.lower == lower) return d;
    }
    return std::nullopt;
}

OiluNumber split_number(std::string_view text, SplitStrategy s, int base) {
    check_base(base);
    if (text.empty()) throw Error(Errc::empty_input, "empty digit string");
    std::string out;
    out.reserve(text.size() * 2);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const int v = digit_value(text[i], base);
        if (v < 0)
            throw Error(Errc::invalid_character,
                        std::string("invalid base-") + std::to_string(base) + " digit '" +
                            text[i] + "' at position " + std::to_string(i),
                        static_cast<long>(i));
        const SplitPair p = split_table(s, base)[static_cast<std::size_t>(v)];
        out.push_back(static_cast<char>('0' + p.upper));
        out.push_back(static_cast<char>('0' + p.lower));
    }
    return OiluNumber{std::move(out)};
}

std::string merge_number(const OiluNumber& n, SplitStrategy s, int base) {
    check_base(base);
    if (n.size() % 2 != 0)
        throw Error(Errc::odd_length,
                    "cannot pair " + std::to_string(n.size()) + " digits");
    std::string out;
    out.reserve(n.size() / 2);
    for (std::size_t i = 0; i < n.size(); i += 2) {
        const auto d = join_pair(n.digit(i), n.digit(i + 1), s, base);
        if (!d)
            throw Error(Errc::unknown_pair,
                        "pair (" + std::to_string(n.digit(i)) + "," +
                            std::to_string(n.digit(i + 1)) + ") at position " +
                            std::to_string(i) + " is not in the split table",
                        static_cast<long>(i));
        out.push_back(digit_letter(*d));
    }
    return out;
}

}  // namespace oilu
