#pragma once

#include "torsion/int_poly.hpp"

namespace torsion::tabulated {

// Externally tabulated coefficient lists for (p, q) = (1, 5), n = -1 and
// n = +1, kept verbatim for informational comparison by the verify command
// and the acceptance suite. These tabulations have degrees 10 and 12 and do
// NOT match what the construction yields (degrees 8 and 10 by the degree
// formula); the comparison outcome is reported, never asserted.
inline IntPoly sigma_2_5_neg1() {
    return IntPoly::from_coeffs(
        {1, -60, 820, -4608, 12192, -14856, 2336, 5952, -2880, 384, 64});
}

inline IntPoly sigma_2_5_pos1() {
    return IntPoly::from_coeffs({1, -90, 1880, -16632, 273408, -172824, 197424, -57888, -72000,
                                 61056, -16064, 384, 256});
}

} // namespace torsion::tabulated
