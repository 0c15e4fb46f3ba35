#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hl2 {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments to a generator or operation (n*d odd, p out of range, ...).
struct InvalidParams : Error {
    using Error::Error;
};

// Retry budget of a randomized generator exhausted.
struct GenerationFailed : Error {
    using Error::Error;
};

// Edge-list text that violates the format; carries the 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("parse error at line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// An operation was asked for a graph with no edges.
struct EmptyGraph : Error {
    using Error::Error;
};

// A construction would exceed the caller's vertex budget.
struct BudgetExceeded : Error {
    std::int64_t predicted_vertices;
    BudgetExceeded(std::int64_t predicted, std::int64_t budget)
        : Error("predicted " + std::to_string(predicted) + " vertices exceeds budget " +
                std::to_string(budget)),
          predicted_vertices(predicted) {}
};

// Dense solve requested above the dense cutoff.
struct TooLarge : Error {
    using Error::Error;
};

// Iterative solver or propagator failed to reach its tolerance.
struct ConvergenceFailure : Error {
    using Error::Error;
};

// State vector norm off by more than the allowed drift.
struct NotNormalized : Error {
    using Error::Error;
};

// Spectrum prediction rule applied to a non-regular graph.
struct NotRegular : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NotPSD : Error {
    using Error::Error;
};

}  // namespace hl2
