#pragma once

#include <stdexcept>
#include <string>

namespace unitons {

// Intermediate polynomial degree exceeded the configured cap; signals
// pathological input rather than looping.
struct DegreeCapExceeded : std::runtime_error {
    explicit DegreeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Randomized construction kept drawing degenerate data after bounded retries.
struct RetryExhausted : std::runtime_error {
    explicit RetryExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Numeric evaluation hit a point of the discrete bad set (frame drops rank).
struct EvaluationRankDrop : std::runtime_error {
    explicit EvaluationRankDrop(const std::string& what) : std::runtime_error(what) {}
};

// Numeric result failed its tolerance contract; message carries the residual.
struct ToleranceFailure : std::runtime_error {
    explicit ToleranceFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace unitons
