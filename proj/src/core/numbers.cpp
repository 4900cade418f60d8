#include "core/numbers.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/sevenseg.hpp"
#include "core/symbolic.hpp"

namespace oilu {

OiluNumber parse_number(std::string_view text) {
    if (text.empty()) throw Error(Errc::empty_input, "empty digit string");
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw Error(Errc::invalid_character,
                        std::string("invalid OILU digit '") + text[i] +
                            "' at position " + std::to_string(i),
                        static_cast<long>(i));
    }
    return OiluNumber{std::string(text)};
}

std::string format_number(const OiluNumber& n) {
    return n.digits;
}

OiluNumber facet(const OiluNumber& n, int quarter_turns) {
    OiluNumber out = n;
    for (auto& c : out.digits)
        c = static_cast<char>('0' + rotate_digit(c - '0', quarter_turns));
    return out;
}

FacetSet related_set(const OiluNumber& n) {
    FacetSet set{n, {}};
    for (int k = 0; k < 4; ++k) {
        OiluNumber f = facet(n, k);
        if (std::find(set.members.begin(), set.members.end(), f) == set.members.end())
            set.members.push_back(std::move(f));
    }
    return set;
}

CanonicalForm canonical(const OiluNumber& n) {
    CanonicalForm best{facet(n, 0), 0};
    for (int k = 1; k < 4; ++k) {
        OiluNumber f = facet(n, k);
        if (f.digits < best.number.digits) best = {std::move(f), k};
    }
    return best;
}

int display_energy(const OiluNumber& n) {
    int total = 0;
    for (std::size_t i = 0; i < n.size(); ++i)
        total += stroke_count(glyph_of_digit(n.digit(i)));
    return total;
}

int sevenseg_energy(std::string_view text) {
    if (text.empty()) throw Error(Errc::empty_input, "empty digit string");
    int total = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const int value = digit_value(text[i], 16);
        if (value < 0)
            throw Error(Errc::invalid_character,
                        std::string("invalid digit '") + text[i] +
                            "' at position " + std::to_string(i),
                        static_cast<long>(i));
        total += segment_count(value);
    }
    return total;
}

}  // namespace oilu
