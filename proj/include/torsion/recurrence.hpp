#pragma once

#include "torsion/real_poly.hpp"
#include "torsion/surgery.hpp"
#include "torsion/torsion_polynomial.hpp"

namespace torsion {

// Outcome of checking the factorwise three-term relation
//   Y_{(n+1,a,b)} = D Y_{(n,a,b)} - Y_{(n-1,a,b)}
// over a range of surgery coefficients. passed iff max_residual stayed
// below the 2^{-32} certification threshold at some precision up to the
// adaptive cap.
struct RecurrenceReport {
    long p = 0;
    long q = 0;
    long a = 0;
    long b = 0;
    long n_lo = 0;
    long n_hi = 0;
    BigFloat max_residual{64};
    long precision_bits_used = 0;
    bool passed = false;
};

// D(t) = 2 T_{2pq}(sqrt(t) / (2 sqrt(C))). Since T_{2pq} is even this is a
// genuine polynomial in t, of degree pq: coefficient j equals
// 2 c_{2j} (4C)^{-j} where c_{2j} are the even-degree coefficients of
// T_{2pq}. The n field of params is irrelevant here.
RealPoly d_poly(const SurgeryParams& params, long a, long b, long precision_bits);

// Checks the relation at every interior n of [n_lo, n_hi], building all
// three Y factors directly. Adaptively raises precision until the residual
// certifies or the cap is reached; failures are reported, never thrown.
RecurrenceReport verify_three_term(long p, long q, long a, long b, long n_lo, long n_hi,
                                   long precision_bits);

// sigma computed by iterating the three-term relation factorwise from
// Y_0 = 1 and a directly built Y_{-1} (or Y_{+1} when n < 0), then
// certified exactly as in sigma(). Must agree with the direct construction.
SigmaResult sigma_by_recurrence(const SurgeryParams& params, long precision_bits);

// The exact integer backbone of the relation:
//   2 T_{2pq} X_n = X_{n+1} + X_{n-1},
// checked with no floating point at all.
bool x_three_term_exact(long p, long q, long n);

} // namespace torsion
