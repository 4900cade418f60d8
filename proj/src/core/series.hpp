#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/error.hpp"
#include "core/sevenseg.hpp"

namespace oilu {

struct Step {
    enum class Kind { Split, Merge, Facet };

    Kind kind = Kind::Split;
    SplitStrategy strategy = SplitStrategy::A;  // Split/Merge
    int quarter_turns = 0;                      // Facet

    bool operator==(const Step&) const = default;
};

std::string to_string(const Step& step);

// Cyclic program driving the generator, e.g. "split:a,facet:1".
struct NavRule {
    std::vector<Step> steps;

    static NavRule parse(std::string_view text);
};

struct SeriesConfig {
    std::string seed;
    int base = 10;
    NavRule rule;
    int iterations = 1;
    std::size_t max_length = 4096;  // guard against runaway doubling
};

struct SeriesStop {
    enum class Reason { StepError, MaxLength };

    Reason reason = Reason::StepError;
    int iteration = 0;  // 0-based index of the step that stopped the run
    Errc code = Errc::step_domain;
    long position = -1;
    std::string message;
};

struct SeriesResult {
    std::vector<std::string> values;  // values[0] is the seed
    std::optional<SeriesStop> stop;
};

std::string apply_step(std::string_view text, const Step& step, int base);

// Deterministic: runs the rule cyclically for `iterations` steps, stopping
// early (with the partial series kept) when a step leaves its domain or the
// next value would exceed max_length.
SeriesResult generate(const SeriesConfig& config);

}  // namespace oilu
