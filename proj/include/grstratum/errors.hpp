#pragma once

#include <stdexcept>
#include <string>

namespace grst {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Two distinct corners where one divides the other.
struct AntichainViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A matrix order compared two distinct exponents equal on every row.
struct OrderTieError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoWeightFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TruncationTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModeViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SubstitutionNonterminating : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalInvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace grst
