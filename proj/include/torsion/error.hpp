#pragma once

#include <stdexcept>
#include <string>

namespace torsion {

enum class ErrorKind {
    NonOdd,                // p or q even
    NonCoprime,            // gcd(p, q) > 1
    NonPositive,           // p < 1 or q < 3
    InexactDivision,       // polynomial division left a remainder
    OddTermPresent,        // even-part reindexing hit an odd-degree term
    InvalidPair,           // (a, b) is not an admissible odd pair
    NonAcyclicRep,         // representation class fails the acyclicity test
    DegenerateDenominator, // 1 + cos(2pqk*pi/N) vanished at working precision
    PrecisionExhausted,    // certified rounding failed up to the precision cap
    UnsupportedKnot,       // operation defined for the trefoil only
    SizeMismatch,          // two sets that must have equal cardinality do not
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace torsion
