#pragma once

#include <stdexcept>
#include <string>

namespace miortho {

// Bad user input: parameter ranges, duplicate or out-of-range index sets,
// malformed flags. The CLI maps these to exit code 2.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct out_of_range_index : validation_error {
    using validation_error::validation_error;
};

struct duplicate_index : validation_error {
    using validation_error::validation_error;
};

// Internal exactness failures. These never fire on valid input unless a
// formula was transcribed wrongly; the CLI maps them to exit code 3.
struct non_exact_division : std::logic_error {
    using std::logic_error::logic_error;
};

struct exponent_mismatch : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace miortho
