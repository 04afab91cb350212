#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace numbrix {

// Input outside an operation's domain: out-of-bounds cells, length
// mismatches, malformed clue sets, unsupported symmetries.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The board has no Hamiltonian circuit.
class NoCircuitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No nonempty non-defining clue set exists on the board.
class NoSuchSetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The clue cannot appear in any solution.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The requested exhaustive work exceeds what this build will attempt.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace numbrix

namespace numbrix {

// A search was stopped through its stop token before finishing.
class Cancelled : public std::runtime_error {
public:
    Cancelled() : std::runtime_error("search cancelled") {}
};

}  // namespace numbrix
