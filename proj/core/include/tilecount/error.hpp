#pragma once

#include <stdexcept>
#include <string>

namespace tilecount {

enum class ErrorKind {
    InvalidArgument,
    NumericalDegeneracy,
    AmbiguousClustering,
    SymmetryViolation,
    TraversalIncomplete,
    OrbitMismatch,
    MissingGraph,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers (the CLI in
/// particular) which failure class occurred.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace tilecount
