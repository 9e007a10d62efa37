#pragma once

#include "torsion/int_poly.hpp"

namespace torsion {

// Chebyshev polynomial of the first kind, T_n(cos t) = cos(n t), extended to
// negative indices by T_{-n} = T_n. Computed by the defining three-term
// recurrence T_{n+1} = 2x T_n - T_{n-1}.
IntPoly cheb_t(long n);

// Exact polynomial quotient numerator / divisor over the integers. Throws
// Error(InexactDivision) if the remainder is nonzero or any elimination step
// would need a fractional coefficient.
IntPoly exact_divide(const IntPoly& numerator, const IntPoly& divisor);

// Reindexes a polynomial in x with only even-degree terms as a polynomial in
// u = x^2: coefficient of u^j is the coefficient of x^{2j}. Throws
// Error(OddTermPresent) if any odd-degree coefficient is nonzero.
IntPoly even_part_as_poly(const IntPoly& p);

} // namespace torsion
