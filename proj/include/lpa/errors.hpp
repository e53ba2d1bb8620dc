#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpa {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed files/expressions, unknown identifiers,
// violated preconditions. The CLI maps these to exit code 1.
struct InputError : Error {
    using Error::Error;
};

// Syntax error in a graph file or element expression, with position.
struct ParseError : InputError {
    ParseError(std::string msg, std::size_t line, std::size_t column)
        : InputError(msg + " at line " + std::to_string(line) + ", column " +
                     std::to_string(column)),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

// A bounded search ran out of budget. Exit code 2.
struct BoundExceeded : Error {
    BoundExceeded(std::string msg, std::size_t frontier_size)
        : Error(msg + " (frontier size " + std::to_string(frontier_size) + ")"),
          frontier_size(frontier_size) {}
    std::size_t frontier_size;
};

// A cross-check that must hold by theorem failed; indicates a bug. Exit code 3.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace lpa
