#pragma once

#include <stdexcept>
#include <string>

namespace liftinglab {

// Malformed input (bad arity, bad truth table, unsatisfied precondition).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a documented size cap. CLI maps this to exit code 2.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax error while parsing an ANF expression. `position` is a byte offset
// into the source text. CLI maps this to exit code 1.
struct ParseError : InputError {
    ParseError(const std::string& msg, std::size_t position)
        : InputError(msg + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

}  // namespace liftinglab
