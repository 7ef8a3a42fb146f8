#include "nichols/error.hpp"

namespace nichols {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedInput: return "malformed input";
        case ErrorKind::InvalidCocycle: return "invalid cocycle";
        case ErrorKind::UnsupportedCommutator: return "unsupported commutator";
        case ErrorKind::Unsupported: return "unsupported";
        case ErrorKind::Precondition: return "precondition failed";
        case ErrorKind::NotFiniteCartan: return "not of finite Cartan type";
        case ErrorKind::Classification: return "classification error";
        case ErrorKind::UnsupportedFolding: return "unsupported folding pattern";
        case ErrorKind::NoSymplecticRootSystem: return "no symplectic root system";
        case ErrorKind::InvariantViolation: return "invariant violation";
        case ErrorKind::Resource: return "resource limit";
        case ErrorKind::NumericIntegrity: return "numeric integrity";
        case ErrorKind::CrossOracle: return "cross-oracle mismatch";
        case ErrorKind::InconsistentCohomology: return "inconsistent cohomology data";
        case ErrorKind::UnknownId: return "unknown id";
        case ErrorKind::Internal: return "internal consistency";
    }
    return "error";
}

}  // namespace nichols
