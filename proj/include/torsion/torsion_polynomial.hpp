#pragma once

#include "torsion/int_poly.hpp"
#include "torsion/real_poly.hpp"
#include "torsion/surgery.hpp"

#include <functional>
#include <vector>

namespace torsion {

enum class SigmaMethod { construction, oracle, recurrence };

const char* to_string(SigmaMethod method);

// A torsion polynomial with certified integer coefficients, in the variable
// t. The constant term is +-1 by the defining normalization; the rounding
// residual is the largest distance of any floating-point coefficient from
// its rounded integer at the confirming precision and is below 2^{-32} by
// construction.
struct SigmaResult {
    SurgeryParams params;
    IntPoly sigma;
    int degree = 0;
    mpz_class constant_term;
    BigFloat rounding_residual{64};
    SigmaMethod method = SigmaMethod::construction;
    long precision_bits_used = 0;
};

// X_n(x) = +-(T_{N+1}(x) - T_{N-1}(x)) / (2(x^2 - 1)), sign + for n > 0 and
// - for n < 0, with X_0 = 1. Even, of degree N - 1, with leading coefficient
// +-2^{N-1}; the division is exact over the integers.
IntPoly x_poly(const SurgeryParams& params);

// Y_{(n,a,b)}(t): X_n with x^2 replaced by t / (4 C_{(2p,q,a,b)}), i.e.
// coefficient j of t^j is x_{2j} (4C)^{-j} where x_{2j} are the even-degree
// coefficients of X_n. Degree (N-1)/2; equals 1 for n = 0.
RealPoly y_factor(const SurgeryParams& params, long a, long b, long precision_bits);

// sigma_{(2p,q,n)}(t) = prod over admissible odd pairs (a,b) of Y_{(n,a,b)},
// with coefficients certified and rounded to exact integers. n = 0 yields
// the constant 1.
SigmaResult sigma(const SurgeryParams& params, long precision_bits);

// Independent route to the same polynomial: each factor is expanded from
// its roots 4C cos^2(pk pi/N), k = 1 .. (N-1)/2, by balanced binary
// products, then scaled by +-2^{N-1} / (4C)^{(N-1)/2}. Shares no polynomial
// machinery with the construction route (no Chebyshev recurrence, no exact
// division), so agreement of the two is strong evidence for both.
SigmaResult sigma_oracle(const SurgeryParams& params, long precision_bits);

// constant_term == (-1)^{n p (q-1) / 2}
bool check_normalization(const SigmaResult& result);

// degree == (N - 1) p (q - 1) / 4
bool check_degree(const SigmaResult& result);

// The half-torsion-normalized trefoil polynomial, computed by the exact
// integer three-term recurrence
//   s_{n+1} = (t^3 - 6t^2 + 9t - 2) s_n - s_{n-1}
// seeded with s_0 = 1 and s_{-1} = -t^2 + 3t - 1 (backward form for n < -1).
IntPoly johnson_sigma_bar(long n);

// Same, guarded: throws Error(UnsupportedKnot) unless (p, q) = (1, 3).
IntPoly johnson_sigma_bar(const SurgeryParams& params);

// sigma_bar(t) == sigma(t/2) as exact polynomials, i.e. coefficient i of
// sigma equals 2^i times coefficient i of sigma_bar.
bool trefoil_bridge_holds(const IntPoly& sigma_bar, const IntPoly& sigma_poly);

// Shared certified-rounding driver. Evaluates build(P) at increasing
// precisions, starting from start_precision and doubling up to
// precision_cap, until the rounded integer polynomial has residual below
// 2^{-32} at two consecutive levels with identical rounding. Throws
// Error(PrecisionExhausted) naming the worst coefficient otherwise.
struct Certified {
    IntPoly poly;
    BigFloat residual{64};
    long precision_bits_used = 0;
};

Certified certify_integer_round(const std::function<RealPoly(long)>& build, long start_precision,
                                long precision_cap = 4096);

// Packs a certified polynomial (or, for n = 0, the trivial constant 1) into
// a SigmaResult. Shared by the three computation routes.
SigmaResult make_sigma_result(const SurgeryParams& params, Certified cert, SigmaMethod method);
SigmaResult trivial_sigma_result(const SurgeryParams& params, long precision_bits,
                                 SigmaMethod method);

// Newton-polishes approximate roots against an exact integer polynomial at
// a precision derived from the coefficient sizes. Returns the polished
// roots sorted ascending plus the largest total displacement; a correct
// polynomial moves each approximation by no more than its own error.
struct RootCheck {
    std::vector<BigFloat> roots;
    BigFloat max_step{64};
};

RootCheck polish_roots(const IntPoly& poly, const std::vector<BigFloat>& approximations);

} // namespace torsion
