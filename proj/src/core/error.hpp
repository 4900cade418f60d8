#pragma once

#include <stdexcept>
#include <string>

namespace oilu {

enum class Errc {
    invalid_argument,
    empty_input,
    invalid_character,
    unknown_pair,
    odd_length,
    step_domain,
    max_length_exceeded,
    size_too_small,
    bad_image,
    unreadable_level,
    bad_rule,
    io,
};

inline const char* errc_name(Errc code) {
    switch (code) {
        case Errc::invalid_argument: return "invalid_argument";
        case Errc::empty_input: return "empty_input";
        case Errc::invalid_character: return "invalid_character";
        case Errc::unknown_pair: return "unknown_pair";
        case Errc::odd_length: return "odd_length";
        case Errc::step_domain: return "step_domain";
        case Errc::max_length_exceeded: return "max_length_exceeded";
        case Errc::size_too_small: return "size_too_small";
        case Errc::bad_image: return "bad_image";
        case Errc::unreadable_level: return "unreadable_level";
        case Errc::bad_rule: return "bad_rule";
        case Errc::io: return "io";
    }
    return "unknown";
}

// Domain error. `detail` carries a character position, marker level or
// series iteration when one exists, -1 otherwise.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, long detail = -1)
        : std::runtime_error(message), code_(code), detail_(detail) {}

    Errc code() const { return code_; }
    long detail() const { return detail_; }

private:
    Errc code_;
    long detail_;
};

}  // namespace oilu
