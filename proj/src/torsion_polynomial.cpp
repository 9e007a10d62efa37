#include "torsion/torsion_polynomial.hpp"

#include "torsion/chebyshev.hpp"
#include "torsion/error.hpp"
#include "torsion/torsion_values.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace torsion {

const char* to_string(SigmaMethod method) {
    switch (method) {
    case SigmaMethod::construction: return "construction";
    case SigmaMethod::oracle: return "oracle";
    case SigmaMethod::recurrence: return "recurrence";
    }
    return "unknown";
}

IntPoly x_poly(const SurgeryParams& params) {
    if (params.n == 0) return IntPoly::one();
    IntPoly numerator = cheb_t(params.N + 1) - cheb_t(params.N - 1);
    IntPoly divisor = IntPoly::from_coeffs({-2, 0, 2}); // 2(x^2 - 1)
    IntPoly quotient = exact_divide(numerator, divisor);
    return params.n > 0 ? quotient : -quotient;
}

RealPoly y_factor(const SurgeryParams& params, long a, long b, long precision_bits) {
    long work = precision_bits + 32;
    BigFloat c = c_constant(params, a, b, work).value; // validates the pair
    if (params.n == 0) return RealPoly::one(precision_bits);

    IntPoly even = even_part_as_poly(x_poly(params));
    BigFloat inv_4c = (BigFloat::of(4, work) * c).reciprocal();
    std::vector<BigFloat> coeffs;
    coeffs.reserve(static_cast<size_t>(even.degree()) + 1);
    BigFloat power = BigFloat::of(1, work);
    for (int j = 0; j <= even.degree(); ++j) {
        coeffs.push_back(power.mul(even.coeff(j)));
        power *= inv_4c;
    }
    return RealPoly::from_coeffs(std::move(coeffs), precision_bits);
}

SigmaResult trivial_sigma_result(const SurgeryParams& params, long precision_bits,
                                 SigmaMethod method) {
    SigmaResult out;
    out.params = params;
    out.sigma = IntPoly::one();
    out.degree = 0;
    out.constant_term = 1;
    out.rounding_residual = BigFloat(precision_bits);
    out.method = method;
    out.precision_bits_used = precision_bits;
    return out;
}

SigmaResult make_sigma_result(const SurgeryParams& params, Certified cert, SigmaMethod method) {
    SigmaResult out;
    out.params = params;
    out.degree = cert.poly.degree();
    out.constant_term = cert.poly.coeff(0);
    out.sigma = std::move(cert.poly);
    out.rounding_residual = std::move(cert.residual);
    out.method = method;
    out.precision_bits_used = cert.precision_bits_used;
    return out;
}

namespace {

RealPoly product_of_y_factors(const SurgeryParams& params, long precision_bits) {
    RealPoly product = RealPoly::one(precision_bits);
    for (const auto& [a, b] : admissible_pairs(params)) {
        product = product * y_factor(params, a, b, precision_bits);
    }
    return product;
}

RealPoly poly_from_roots(const std::vector<BigFloat>& roots, size_t lo, size_t hi, long prec) {
    if (hi == lo) return RealPoly::one(prec);
    if (hi - lo == 1) {
        return RealPoly::from_coeffs({-roots[lo], BigFloat::of(1, prec)}, prec);
    }
    size_t mid = lo + (hi - lo) / 2;
    return poly_from_roots(roots, lo, mid, prec) * poly_from_roots(roots, mid, hi, prec);
}

RealPoly product_of_root_expansions(const SurgeryParams& params, long precision_bits) {
    long work = precision_bits + 32;
    long half = (params.N - 1) / 2;
    mpz_class lead = 1;
    lead <<= static_cast<unsigned long>(params.N - 1);
    if (params.n < 0) lead = -lead;

    RealPoly product = RealPoly::one(precision_bits);
    for (const auto& [a, b] : admissible_pairs(params)) {
        BigFloat four_c = BigFloat::of(4, work) * c_constant(params, a, b, work).value;
        std::vector<BigFloat> roots;
        roots.reserve(static_cast<size_t>(half));
        for (long k = 1; k <= half; ++k) {
            BigFloat z = BigFloat::cos_pi_ratio(params.p * k, params.N, work);
            roots.push_back(four_c * z * z);
        }
        RealPoly monic = poly_from_roots(roots, 0, roots.size(), work);
        BigFloat scale = BigFloat::of(lead, work);
        BigFloat inv_4c = four_c.reciprocal();
        for (long j = 0; j < half; ++j) scale *= inv_4c;
        product = product * monic.scaled(scale);
    }
    return product;
}

} // namespace

SigmaResult sigma(const SurgeryParams& params, long precision_bits) {
    if (params.n == 0) return trivial_sigma_result(params, precision_bits, SigmaMethod::construction);
    Certified cert = certify_integer_round(
        [&](long p) { return product_of_y_factors(params, p); }, precision_bits);
    return make_sigma_result(params, std::move(cert), SigmaMethod::construction);
}

SigmaResult sigma_oracle(const SurgeryParams& params, long precision_bits) {
    if (params.n == 0) return trivial_sigma_result(params, precision_bits, SigmaMethod::oracle);
    Certified cert = certify_integer_round(
        [&](long p) { return product_of_root_expansions(params, p); }, precision_bits);
    return make_sigma_result(params, std::move(cert), SigmaMethod::oracle);
}

bool check_normalization(const SigmaResult& result) {
    long long e =
        static_cast<long long>(result.params.n) * result.params.p * (result.params.q - 1) / 2;
    mpz_class expected = (e % 2 != 0) ? -1 : 1;
    return result.constant_term == expected;
}

bool check_degree(const SigmaResult& result) {
    long long expected = static_cast<long long>(result.params.N - 1) * result.params.p *
                         (result.params.q - 1) / 4;
    return result.degree == expected;
}

IntPoly johnson_sigma_bar(long n) {
    const IntPoly d = IntPoly::from_coeffs({-2, 9, -6, 1});
    IntPoly s0 = IntPoly::one();
    if (n == 0) return s0;
    IntPoly sm1 = IntPoly::from_coeffs({-1, 3, -1});
    if (n > 0) {
        IntPoly prev = std::move(sm1); // s_{m-1}
        IntPoly cur = std::move(s0);   // s_m
        for (long m = 0; m < n; ++m) {
            IntPoly next = d * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    IntPoly up = std::move(s0);   // s_{m+1}
    IntPoly cur = std::move(sm1); // s_m, starting at m = -1
    for (long m = -1; m > n; --m) {
        IntPoly down = d * cur - up;
        up = std::move(cur);
        cur = std::move(down);
    }
    return cur;
}

IntPoly johnson_sigma_bar(const SurgeryParams& params) {
    if (params.p != 1 || params.q != 3) {
        throw Error(ErrorKind::UnsupportedKnot,
                    "the half-normalized polynomial is defined for (p, q) = (1, 3) only, got (" +
                        std::to_string(params.p) + ", " + std::to_string(params.q) + ")");
    }
    return johnson_sigma_bar(params.n);
}

bool trefoil_bridge_holds(const IntPoly& sigma_bar, const IntPoly& sigma_poly) {
    if (sigma_bar.degree() != sigma_poly.degree()) return false;
    mpz_class power = 1;
    for (int i = 0; i <= sigma_bar.degree(); ++i) {
        if (sigma_poly.coeff(i) != sigma_bar.coeff(i) * power) return false;
        power *= 2;
    }
    return true;
}

Certified certify_integer_round(const std::function<RealPoly(long)>& build, long start_precision,
                                long precision_cap) {
    const BigFloat threshold = BigFloat::two_pow(-32, 64);
    long p = std::max(start_precision, 64L);
    if (precision_cap < p) precision_cap = p;

    auto fail = [](const RealPoly::Rounded& r, long at_bits) -> Error {
        return Error(ErrorKind::PrecisionExhausted,
                     "coefficient of t^" + std::to_string(r.worst_index) + " stayed " +
                         r.residual.str(8) + " away from the nearest integer at " +
                         std::to_string(at_bits) + " bits");
    };

    for (;;) {
        RealPoly first = build(p);
        RealPoly::Rounded r1 = first.round_to_int();
        if (r1.residual < threshold) {
            long confirm = 2 * p; // the confirming level may exceed the cap
            RealPoly second = build(confirm);
            RealPoly::Rounded r2 = second.round_to_int();
            if (r2.residual < threshold && r2.poly == r1.poly) {
                return Certified{std::move(r2.poly), std::move(r2.residual), confirm};
            }
            if (p >= precision_cap) throw fail(r2, confirm);
        } else if (p >= precision_cap) {
            throw fail(r1, p);
        }
        p = std::min(2 * p, precision_cap);
    }
}

RootCheck polish_roots(const IntPoly& poly, const std::vector<BigFloat>& approximations) {
    long coeff_bits = 1;
    for (const auto& c : poly.coeffs()) {
        coeff_bits = std::max(coeff_bits,
                              static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)));
    }
    long degree = std::max(poly.degree(), 1);
    // Horner at a point of modulus < 16 loses at most coeff_bits + 4*degree
    // bits to cancellation; the margin keeps the Newton steps meaningful
    // well below the comparison tolerances used by callers.
    long p = coeff_bits + 4 * degree + 288;
    IntPoly deriv = poly.derivative();

    RootCheck out;
    out.max_step = BigFloat(p);
    out.roots.reserve(approximations.size());
    for (const BigFloat& start : approximations) {
        BigFloat z = start.round_to(p);
        BigFloat moved(p);
        for (int iter = 0; iter < 2; ++iter) {
            BigFloat dv = eval_big(deriv, z);
            if (dv.is_zero()) break;
            BigFloat step = eval_big(poly, z) / dv;
            z -= step;
            moved += step.abs();
        }
        if (moved > out.max_step) out.max_step = moved;
        out.roots.push_back(std::move(z));
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

} // namespace torsion
