#include "torsion/torsion_values.hpp"

#include "torsion/error.hpp"

#include <algorithm>
#include <string>

namespace torsion {

namespace {

void require_admissible_pair(const SurgeryParams& params, long a, long b) {
    if (a <= 0 || a >= 2 * params.p || b <= 0 || b >= params.q || a % 2 != 1 || b % 2 != 1) {
        throw Error(ErrorKind::InvalidPair,
                    "(" + std::to_string(a) + ", " + std::to_string(b) +
                        ") is not an admissible odd pair for p=" + std::to_string(params.p) +
                        ", q=" + std::to_string(params.q));
    }
}

// 2 (1 - cos(a pi/2p)) (1 - cos(b pi/q)) (1 + cos(2pqk pi/N)), the exact
// reciprocal of the torsion value.
BigFloat torsion_denominator(const SurgeryParams& params, const RepClass& rep, long work) {
    BigFloat one = BigFloat::of(1, work);
    BigFloat f1 = one - BigFloat::cos_pi_ratio(rep.a, 2 * params.p, work);
    BigFloat f2 = one - BigFloat::cos_pi_ratio(rep.b, params.q, work);
    long long m = static_cast<long long>(2) * params.p * params.q * rep.k;
    BigFloat f3 = one + BigFloat::cos_pi_ratio(m, params.N, work);
    if (f3 <= BigFloat::two_pow(-(work - 32), work)) {
        throw Error(ErrorKind::DegenerateDenominator,
                    "1 + cos(2pqk*pi/N) vanished at working precision for k=" +
                        std::to_string(rep.k));
    }
    return BigFloat::of(2, work) * f1 * f2 * f3;
}

} // namespace

CConstant c_constant(const SurgeryParams& params, long a, long b, long precision_bits) {
    require_admissible_pair(params, a, b);
    long work = precision_bits + 32;
    BigFloat one = BigFloat::of(1, work);
    BigFloat f1 = one - BigFloat::cos_pi_ratio(a, 2 * params.p, work);
    BigFloat f2 = one - BigFloat::cos_pi_ratio(b, params.q, work);
    CConstant out{a, b, (f1 * f2).round_to(precision_bits), precision_bits};
    return out;
}

BigFloat torsion_value(const SurgeryParams& params, const RepClass& rep, long precision_bits) {
    if (!is_acyclic(params, rep)) {
        throw Error(ErrorKind::NonAcyclicRep,
                    "(" + std::to_string(rep.a) + ", " + std::to_string(rep.b) + ", " +
                        std::to_string(rep.k) + ") has non-acyclic twisted complex");
    }
    long work = precision_bits + 32;
    return torsion_denominator(params, rep, work).reciprocal().round_to(precision_bits);
}

TorsionTable torsion_table(const SurgeryParams& params, long precision_bits) {
    TorsionTable table;
    table.params = params;
    table.precision_bits = precision_bits;
    long work = precision_bits + 32;
    for (const RepClass& rep : enumerate_acyclic(params)) {
        BigFloat denom = torsion_denominator(params, rep, work);
        table.rows.push_back(TorsionRow{
            rep,
            denom.reciprocal().round_to(precision_bits),
            denom.round_to(precision_bits),
        });
    }
    return table;
}

std::vector<BigFloat> inverse_torsion_multiset(const SurgeryParams& params, long precision_bits) {
    std::vector<BigFloat> out;
    long work = precision_bits + 32;
    for (const RepClass& rep : enumerate_acyclic(params)) {
        out.push_back(torsion_denominator(params, rep, work).round_to(precision_bits));
    }
    std::sort(out.begin(), out.end());
    return out;
}

AngleSetReport lemma44_check(const SurgeryParams& params, long precision_bits) {
    AngleSetReport report;
    report.precision_bits = precision_bits;
    long work = precision_bits + 32;
    long k_par = ((params.n % 2) + 2) % 2;
    for (long k = 1; k < params.N; ++k) {
        if (k % 2 != k_par) continue;
        long long m = static_cast<long long>(2) * params.p * params.q * k;
        report.set_a.push_back(BigFloat::cos_pi_ratio(m, params.N, work).round_to(precision_bits));
    }
    for (long k = 1; 2 * k < params.N; ++k) {
        report.set_b.push_back(
            BigFloat::cos_pi_ratio(2 * params.p * k, params.N, work).round_to(precision_bits));
    }
    if (report.set_a.size() != report.set_b.size()) {
        throw Error(ErrorKind::SizeMismatch,
                    "angle sets have sizes " + std::to_string(report.set_a.size()) + " and " +
                        std::to_string(report.set_b.size()));
    }
    std::sort(report.set_a.begin(), report.set_a.end());
    std::sort(report.set_b.begin(), report.set_b.end());
    BigFloat worst(precision_bits);
    for (size_t i = 0; i < report.set_a.size(); ++i) {
        BigFloat d = (report.set_a[i] - report.set_b[i]).abs();
        if (d > worst) worst = d;
    }
    report.max_discrepancy = worst;
    return report;
}

} // namespace torsion
