#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace oilu {

// A nonempty stack of OILU digits; index 0 is the outermost symbol. Leading
// zeros are meaningful: "007" and "7" are different symbol stacks.
struct OiluNumber {
    std::string digits;  // chars '0'..'9'

    std::size_t size() const { return digits.size(); }
    int digit(std::size_t i) const { return digits[i] - '0'; }

    bool operator==(const OiluNumber&) const = default;
};

// Orbit of a number under the four quarter-turn facets.
struct FacetSet {
    OiluNumber base;
    std::vector<OiluNumber> members;  // rotation order, duplicates collapsed
};

struct CanonicalForm {
    OiluNumber number;
    int rotation;  // smallest k with facet(input, k) == number
};

OiluNumber parse_number(std::string_view text);
std::string format_number(const OiluNumber& n);

// The value read after k counterclockwise quarter turns of the whole stack.
OiluNumber facet(const OiluNumber& n, int quarter_turns);
FacetSet related_set(const OiluNumber& n);

// Lexicographically smallest facet; constant on each rotation orbit.
CanonicalForm canonical(const OiluNumber& n);

// Stroke count of the OILU rendering versus segment count of the
// seven-segment rendering of the same text.
int display_energy(const OiluNumber& n);
int sevenseg_energy(std::string_view text);  // accepts hex digits as well

}  // namespace oilu
