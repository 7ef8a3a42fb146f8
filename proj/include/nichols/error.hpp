#pragma once

#include <stdexcept>
#include <string>

namespace nichols {

enum class ErrorKind {
    MalformedInput,
    InvalidCocycle,
    UnsupportedCommutator,
    Unsupported,
    Precondition,
    NotFiniteCartan,
    Classification,
    UnsupportedFolding,
    NoSymplecticRootSystem,
    InvariantViolation,
    Resource,
    NumericIntegrity,
    CrossOracle,
    InconsistentCohomology,
    UnknownId,
    Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace nichols
