#include "torsion/recurrence.hpp"

#include "torsion/chebyshev.hpp"
#include "torsion/torsion_values.hpp"

#include <algorithm>
#include <utility>

namespace torsion {

RealPoly d_poly(const SurgeryParams& params, long a, long b, long precision_bits) {
    long work = precision_bits + 32;
    BigFloat c = c_constant(params, a, b, work).value; // validates the pair
    IntPoly even = even_part_as_poly(cheb_t(2 * params.p * params.q));
    BigFloat inv_4c = (BigFloat::of(4, work) * c).reciprocal();
    std::vector<BigFloat> coeffs;
    coeffs.reserve(static_cast<size_t>(even.degree()) + 1);
    BigFloat power = BigFloat::of(2, work);
    for (int j = 0; j <= even.degree(); ++j) {
        coeffs.push_back(power.mul(even.coeff(j)));
        power *= inv_4c;
    }
    return RealPoly::from_coeffs(std::move(coeffs), precision_bits);
}

RecurrenceReport verify_three_term(long p, long q, long a, long b, long n_lo, long n_hi,
                                   long precision_bits) {
    RecurrenceReport report;
    report.p = p;
    report.q = q;
    report.a = a;
    report.b = b;
    report.n_lo = n_lo;
    report.n_hi = n_hi;

    const BigFloat threshold = BigFloat::two_pow(-32, 64);
    const long cap = 4096;
    long work = std::max(precision_bits, 64L);
    for (;;) {
        BigFloat worst(work);
        for (long n = n_lo + 1; n < n_hi; ++n) {
            SurgeryParams mid = validate_params(p, q, n);
            SurgeryParams below = validate_params(p, q, n - 1);
            SurgeryParams above = validate_params(p, q, n + 1);
            RealPoly lhs = y_factor(above, a, b, work);
            RealPoly rhs =
                d_poly(mid, a, b, work) * y_factor(mid, a, b, work) - y_factor(below, a, b, work);
            BigFloat residual = (lhs - rhs).max_abs_coeff();
            if (residual > worst) worst = residual;
        }
        report.max_residual = worst;
        report.precision_bits_used = work;
        if (worst < threshold) {
            report.passed = true;
            return report;
        }
        if (work >= cap) {
            report.passed = false;
            return report;
        }
        work = std::min(2 * work, cap);
    }
}

namespace {

RealPoly y_by_recurrence(const SurgeryParams& params, long a, long b, long precision_bits) {
    if (params.n == 0) return RealPoly::one(precision_bits);
    RealPoly d = d_poly(params, a, b, precision_bits);
    if (params.n > 0) {
        RealPoly prev = y_factor(validate_params(params.p, params.q, -1), a, b, precision_bits);
        RealPoly cur = RealPoly::one(precision_bits);
        for (long m = 0; m < params.n; ++m) {
            RealPoly next = d * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    RealPoly up = y_factor(validate_params(params.p, params.q, 1), a, b, precision_bits);
    RealPoly cur = RealPoly::one(precision_bits);
    for (long m = 0; m > params.n; --m) {
        RealPoly down = d * cur - up;
        up = std::move(cur);
        cur = std::move(down);
    }
    return cur;
}

} // namespace

SigmaResult sigma_by_recurrence(const SurgeryParams& params, long precision_bits) {
    if (params.n == 0) return trivial_sigma_result(params, precision_bits, SigmaMethod::recurrence);
    Certified cert = certify_integer_round(
        [&](long p) {
            RealPoly product = RealPoly::one(p);
            for (const auto& [a, b] : admissible_pairs(params)) {
                product = product * y_by_recurrence(params, a, b, p);
            }
            return product;
        },
        precision_bits);
    return make_sigma_result(params, std::move(cert), SigmaMethod::recurrence);
}

bool x_three_term_exact(long p, long q, long n) {
    auto x_at = [&](long m) { return x_poly(validate_params(p, q, m)); };
    IntPoly lhs = cheb_t(2 * p * q).scaled(2) * x_at(n);
    return lhs == x_at(n + 1) + x_at(n - 1);
}

} // namespace torsion
