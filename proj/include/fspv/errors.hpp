#pragma once

#include <stdexcept>
#include <string>

namespace fspv {

// Base for all toolchain errors. Subclasses exist so callers can tell
// "the input is wrong" from "the run blew a limit"; the what() text is
// the user-facing message.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class SyntaxError : public Error {
public:
    SyntaxError(int line, int column, const std::string& msg)
        : Error("syntax error at " + std::to_string(line) + ":" +
                std::to_string(column) + ": " + msg),
          line(line), column(column) {}

    int line;
    int column;
};

// Name resolution: unknown/duplicate names, empty ranges.
class ResolveError : public Error {
public:
    using Error::Error;
};

// Expression evaluation: unbound names, division by zero, type misuse.
class EvalError : public Error {
public:
    using Error::Error;
};

// LTS construction: index out of range, state caps, nondeterministic
// property completion, cyclic process references.
class CompileError : public Error {
public:
    using Error::Error;
};

class StateLimitExceeded : public CompileError {
public:
    StateLimitExceeded(std::size_t cap, std::size_t frontier)
        : CompileError("state limit of " + std::to_string(cap) +
                       " exceeded; partial frontier holds " +
                       std::to_string(frontier) + " unexplored states"),
          cap(cap), frontier(frontier) {}

    std::size_t cap;
    std::size_t frontier;
};

// Composition: conflicting relabels, unknown composition targets.
class ComposeError : public Error {
public:
    using Error::Error;
};

// Gaia schema parsing and translation.
class GaiaError : public Error {
public:
    using Error::Error;
};

}  // namespace fspv
