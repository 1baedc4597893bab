#pragma once

#include <stdexcept>
#include <string>

namespace ifk {

// Caller handed us something that violates a precondition or format.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// A numerically degenerate configuration that the algorithm refuses to
// paper over (repeated eigenvalues, exhausted ray re-jitter budget, ...).
class NumericalDegeneracy : public std::runtime_error {
public:
    explicit NumericalDegeneracy(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a configured size cap.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ifk
