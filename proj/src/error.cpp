#include "torsion/error.hpp"

namespace torsion {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NonOdd: return "NonOdd";
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::OddTermPresent: return "OddTermPresent";
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::NonAcyclicRep: return "NonAcyclicRep";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::UnsupportedKnot: return "UnsupportedKnot";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    }
    return "Unknown";
}

} // namespace torsion
