#pragma once

#include <stdexcept>
#include <string>

namespace vkf {

// Input that cannot be parsed (DIMACS, JSON, files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition was violated by the caller.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed; signals a construction bug.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

// A point configuration consulted by exact geometry was not generic.
struct DegeneracyError : PreconditionError {
    explicit DegeneracyError(const std::string& msg) : PreconditionError(msg) {}
};

} // namespace vkf
