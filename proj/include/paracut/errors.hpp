#pragma once

#include <stdexcept>
#include <string>

namespace paracut {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: graph files, images, CLI rationals, invariant violations
// in caller-supplied data.  `line` is 1-based when known, 0 otherwise.
struct ParseError : Error {
    explicit ParseError(const std::string& what, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
          line(line_no) {}
    int line = 0;
};

// The instance admits no feasible solution: seeds collapse source into sink,
// no finite cut exists, or the feasible family is empty.
struct InfeasibleError : Error {
    using Error::Error;
};

// A ratio objective was evaluated on a set whose denominator is zero.
struct UndefinedRatioError : Error {
    using Error::Error;
};

}  // namespace paracut
