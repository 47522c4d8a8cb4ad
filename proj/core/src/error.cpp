#include "tilecount/error.hpp"

namespace tilecount {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NumericalDegeneracy: return "NumericalDegeneracy";
        case ErrorKind::AmbiguousClustering: return "AmbiguousClustering";
        case ErrorKind::SymmetryViolation: return "SymmetryViolation";
        case ErrorKind::TraversalIncomplete: return "TraversalIncomplete";
        case ErrorKind::OrbitMismatch: return "OrbitMismatch";
        case ErrorKind::MissingGraph: return "MissingGraph";
    }
    return "Unknown";
}

}  // namespace tilecount
