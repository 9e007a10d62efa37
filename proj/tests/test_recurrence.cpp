#include "torsion/recurrence.hpp"

#include "torsion/surgery.hpp"
#include "torsion/torsion_polynomial.hpp"

#include <doctest.h>

#include <vector>

using namespace torsion;

namespace {

BigFloat tol(long exp2) { return BigFloat::two_pow(exp2, 64); }

} // namespace

TEST_CASE("recurrence multiplier for the trefoil pair, exact coefficients") {
    RealPoly d = d_poly(validate_params(1, 3, 1), 1, 1, 128);
    const std::vector<long> expected = {-2, 18, -24, 8};
    REQUIRE(d.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i)
        CHECK((d.coeff(i) - BigFloat::of(expected[i], 64)).abs() < tol(-100));
}

TEST_CASE("recurrence multiplier degree and constant term across pairs") {
    for (auto [p, q] : {std::pair<long, long>{1, 3}, {1, 5}, {1, 7}, {3, 5}}) {
        SurgeryParams s = validate_params(p, q, 1);
        for (auto [a, b] : admissible_pairs(s)) {
            RealPoly d = d_poly(s, a, b, 128);
            CHECK(d.degree() == p * q);
            // 2 T_{2pq}(0) = 2 (-1)^{pq} = -2 since pq is odd; no inexact
            // operation touches the constant coefficient.
            CHECK(d.coeff(0) == BigFloat::of(-2, 64));
        }
    }
}

TEST_CASE("three-term relation verifies on sample ranges") {
    struct Case {
        long p, q, a, b, lo, hi;
    };
    for (Case c : {Case{1, 3, 1, 1, -1, 1}, Case{1, 3, 1, 1, 1, 3}, Case{1, 5, 1, 3, -2, 2},
                   Case{3, 5, 1, 1, -1, 1}}) {
        RecurrenceReport rep = verify_three_term(c.p, c.q, c.a, c.b, c.lo, c.hi, 128);
        CHECK(rep.passed);
        CHECK(rep.max_residual < tol(-32));
        CHECK(rep.p == c.p);
        CHECK(rep.q == c.q);
        CHECK(rep.a == c.a);
        CHECK(rep.b == c.b);
        CHECK(rep.n_lo == c.lo);
        CHECK(rep.n_hi == c.hi);
        CHECK(rep.precision_bits_used >= 64);
    }
}

TEST_CASE("integer backbone of the relation, no floating point") {
    for (auto [p, q] : {std::pair<long, long>{1, 3}, {1, 5}, {1, 7}, {3, 5}, {3, 7}}) {
        for (long n = -4; n <= 4; ++n) CHECK(x_three_term_exact(p, q, n));
    }
}

TEST_CASE("iterated recurrence reproduces the direct construction") {
    struct Case {
        long p, q, n;
    };
    for (Case c : {Case{1, 3, 1}, Case{1, 3, -3}, Case{1, 5, 1}, Case{3, 5, -1}}) {
        SurgeryParams s = validate_params(c.p, c.q, c.n);
        SigmaResult by_rec = sigma_by_recurrence(s, 192);
        SigmaResult direct = sigma(s, 192);
        CHECK(by_rec.sigma == direct.sigma);
        CHECK(by_rec.method == SigmaMethod::recurrence);
        CHECK(by_rec.degree == direct.degree);
    }
    SigmaResult trivial = sigma_by_recurrence(validate_params(1, 3, 0), 128);
    CHECK(trivial.sigma == IntPoly::one());
    CHECK(trivial.method == SigmaMethod::recurrence);
}
