#pragma once

#include "torsion/bigfloat.hpp"

#include <tuple>
#include <vector>

namespace torsion {

// Parameters of 1/n surgery on the (2p, q) torus knot. The resulting
// homology sphere has fundamental-group order data governed by
// N = |2pqn + 1|; n = 0 gives back S^3 (N = 1).
struct SurgeryParams {
    long p = 0; // half the even torus-knot parameter, p >= 1 and odd
    long q = 0; // odd torus-knot parameter, q >= 3, coprime to p
    long n = 0; // surgery coefficient 1/n, any integer
    long N = 0; // |2pqn + 1|
};

// Conjugacy class of an irreducible SU(2) representation of the surgered
// manifold's fundamental group, indexed by the rotation numbers of the three
// generators' images.
struct RepClass {
    long a = 0; // 0 < a < 2p
    long b = 0; // 0 < b < q, a == b (mod 2)
    long k = 0; // 0 < k < N, k == n*a (mod 2)

    friend bool operator==(const RepClass& l, const RepClass& r) {
        return l.a == r.a && l.b == r.b && l.k == r.k;
    }
    friend bool operator<(const RepClass& l, const RepClass& r) {
        return std::tie(l.a, l.b, l.k) < std::tie(r.a, r.b, r.k);
    }
};

// Traces of the images of the two torus-knot generators and the meridian.
struct TraceTriple {
    BigFloat trace_x{64}; // 2 cos(a pi / 2p)
    BigFloat trace_y{64}; // 2 cos(b pi / q)
    BigFloat trace_m{64}; // 2 cos(k pi / N)
    long precision_bits = 0;
};

// Checks p >= 1 odd, q >= 3 odd, gcd(p, q) = 1 and fills in N.
// Throws Error(NonPositive), Error(NonOdd) or Error(NonCoprime).
SurgeryParams validate_params(long p, long q, long n);

// True when the representation class exists for these parameters and has
// acyclic twisted chain complex: indices in range, a, b both odd and
// k == n (mod 2).
bool is_acyclic(const SurgeryParams& params, const RepClass& rep);

// All representation classes with acyclic complexes, sorted
// lexicographically by (a, b, k). Empty for n = 0.
std::vector<RepClass> enumerate_acyclic(const SurgeryParams& params);

// The full family, including classes whose complexes are not acyclic:
// 0 < a < 2p, 0 < b < q, a == b (mod 2), 0 < k < N, k == n*a (mod 2).
std::vector<RepClass> enumerate_all(const SurgeryParams& params);

// Number of admissible odd pairs (a, b): p(q-1)/2.
long count_ab_pairs(const SurgeryParams& params);

// The admissible odd pairs themselves, sorted lexicographically.
std::vector<std::pair<long, long>> admissible_pairs(const SurgeryParams& params);

// Generator traces for one representation class at the given precision.
TraceTriple trace_triple(const SurgeryParams& params, const RepClass& rep, long precision_bits);

} // namespace torsion
