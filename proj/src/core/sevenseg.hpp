#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "core/numbers.hpp"
#include "core/symbolic.hpp"

namespace oilu {

// Seven-segment cells: a=top, b=upper-right, c=lower-right, d=bottom,
// e=lower-left, f=upper-left, g=middle.
enum Segment : std::uint8_t {
    SEG_A = 1u << 0,
    SEG_B = 1u << 1,
    SEG_C = 1u << 2,
    SEG_D = 1u << 3,
    SEG_E = 1u << 4,
    SEG_F = 1u << 5,
    SEG_G = 1u << 6,
};

using SegMask = std::uint8_t;

// Where the middle segment g goes when a digit is cut in two.
enum class SplitStrategy : std::uint8_t {
    A,  // g shared by both halves
    B,  // g belongs to the upper half
    C,  // g belongs to the lower half
};

struct SplitPair {
    int upper = 0;
    int lower = 0;
    bool replaced = false;  // the strategy-a pair was substituted

    bool operator==(const SplitPair&) const = default;
};

SegMask segments_of(int value);  // value in [0,15]
int segment_count(int value);

char strategy_letter(SplitStrategy s);
std::optional<SplitStrategy> strategy_from_letter(char c);

int digit_value(char c, int base);  // -1 when c is not a digit of `base`
char digit_letter(int value);      // '0'..'9', 'A'..'F'

// Upper and lower half shapes of a digit cell before classification.
std::pair<SideSet, SideSet> raw_halves(int value, SplitStrategy s);

// Classified halves, with the strategy-a fallback applied when a half is an
// extra shape or the raw pair collides with another digit's raw pair.
// Identical across bases for values 0..9, so no base parameter is needed.
SplitPair split_digit(int value, SplitStrategy s);

const std::vector<SplitPair>& split_table(SplitStrategy s, int base);

// Inverse lookup; nullopt when the pair is not in the table's image.
std::optional<int> join_pair(int upper, int lower, SplitStrategy s, int base);

OiluNumber split_number(std::string_view text, SplitStrategy s, int base);
std::string merge_number(const OiluNumber& n, SplitStrategy s, int base);

}  // namespace oilu
