#pragma once

#include "torsion/bigfloat.hpp"
#include "torsion/surgery.hpp"

#include <vector>

namespace torsion {

// C_{(2p,q,a,b)} = (1 - cos(a pi / 2p)) (1 - cos(b pi / q)) for an
// admissible odd pair. Strictly positive.
struct CConstant {
    long a = 0;
    long b = 0;
    BigFloat value{64};
    long precision_bits = 0;
};

CConstant c_constant(const SurgeryParams& params, long a, long b, long precision_bits);

// Torsion of the surgered manifold at one acyclic representation class:
//   tau = 1 / (2 (1 - cos(a pi / 2p)) (1 - cos(b pi / q)) (1 + cos(2pqk pi / N))).
// Throws Error(NonAcyclicRep) for classes outside the acyclic family and
// Error(DegenerateDenominator) if the last factor vanishes at working
// precision (which the admissibility constraints rule out).
BigFloat torsion_value(const SurgeryParams& params, const RepClass& rep, long precision_bits);

struct TorsionRow {
    RepClass rep;
    BigFloat tau;
    BigFloat inv_tau;
};

// One row per acyclic class, sorted lexicographically by (a, b, k).
struct TorsionTable {
    SurgeryParams params;
    std::vector<TorsionRow> rows;
    long precision_bits = 0;
};

TorsionTable torsion_table(const SurgeryParams& params, long precision_bits);

// The multiset { 1/tau } over all acyclic classes, sorted ascending. These
// are exactly the roots of the torsion polynomial.
std::vector<BigFloat> inverse_torsion_multiset(const SurgeryParams& params, long precision_bits);

// Certifies the angle-set identity behind the cos^2 reduction of the
// torsion denominators: the multiset
//   setA = { cos(2pqk pi / N) : 0 < k < N, k == n (mod 2) }
// equals
//   setB = { cos(2pk pi / N)  : 0 < k < N/2 }.
// Both sets have (N-1)/2 elements; Error(SizeMismatch) otherwise.
// max_discrepancy is the largest elementwise difference after sorting and
// must come out below 2^{-(precision_bits-20)}.
struct AngleSetReport {
    std::vector<BigFloat> set_a;
    std::vector<BigFloat> set_b;
    BigFloat max_discrepancy{64};
    long precision_bits = 0;
};

AngleSetReport lemma44_check(const SurgeryParams& params, long precision_bits);

} // namespace torsion
