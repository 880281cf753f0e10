#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twinblocks {

/// Precondition violation by the caller: out-of-range vertex, wrong graph
/// class for an algorithm, oracle budget exceeded.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A structural property that the theory guarantees did not hold
/// (chordality of the relation graph, acyclic block forest, block overlap).
/// Always indicates a bug upstream of the throwing call.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace twinblocks
