#include "torsion/int_poly.hpp"

#include <doctest.h>

#include <random>

using torsion::IntPoly;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_degree, long coeff_bound) {
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    std::uniform_int_distribution<long> coeff_dist(-coeff_bound, coeff_bound);
    int d = deg_dist(rng);
    std::vector<mpz_class> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(coeff_dist(rng));
    return IntPoly::from_coeffs(std::move(c));
}

} // namespace

TEST_CASE("zero polynomial normalization") {
    IntPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(IntPoly::from_coeffs({0, 0, 0}).is_zero());
    CHECK(IntPoly::constant(0).is_zero());
    CHECK(IntPoly::from_coeffs({1, 2, 0}).degree() == 1);
    CHECK(IntPoly::one().degree() == 0);
    CHECK(IntPoly::x().degree() == 1);
}

TEST_CASE("coefficient access outside range is zero") {
    IntPoly p = IntPoly::from_coeffs({3, 0, -5});
    CHECK(p.coeff(0) == 3);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == -5);
    CHECK(p.coeff(3) == 0);
    CHECK(p.coeff(-1) == 0);
    CHECK(p.leading() == -5);
}

TEST_CASE("arithmetic on small fixed polynomials") {
    IntPoly a = IntPoly::from_coeffs({1, 2});  // 2x + 1
    IntPoly b = IntPoly::from_coeffs({-1, 2}); // 2x - 1
    CHECK(a + b == IntPoly::from_coeffs({0, 4}));
    CHECK(a - b == IntPoly::constant(2));
    CHECK(a * b == IntPoly::from_coeffs({-1, 0, 4})); // 4x^2 - 1
    CHECK(-a == IntPoly::from_coeffs({-1, -2}));
    CHECK(a.scaled(3) == IntPoly::from_coeffs({3, 6}));
    CHECK((a - a).is_zero());
}

TEST_CASE("degree of a product adds") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        IntPoly a = random_poly(rng, 6, 9);
        IntPoly b = random_poly(rng, 6, 9);
        if (a.is_zero() || b.is_zero()) {
            CHECK((a * b).is_zero());
        } else {
            CHECK((a * b).degree() == a.degree() + b.degree());
        }
    }
}

TEST_CASE("multiplication distributes over addition") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        IntPoly a = random_poly(rng, 5, 20);
        IntPoly b = random_poly(rng, 5, 20);
        IntPoly c = random_poly(rng, 5, 20);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("evaluation matches expanded arithmetic") {
    IntPoly p = IntPoly::from_coeffs({-1, 0, 3, 2}); // 2x^3 + 3x^2 - 1
    CHECK(p.eval(0) == -1);
    CHECK(p.eval(1) == 4);
    CHECK(p.eval(-2) == -5);
    CHECK(p.eval(10) == 2299);

    std::mt19937 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        IntPoly a = random_poly(rng, 5, 50);
        IntPoly b = random_poly(rng, 5, 50);
        mpz_class x = trial - 12;
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
}

TEST_CASE("derivative satisfies the product rule") {
    IntPoly p = IntPoly::from_coeffs({5, 0, 1});   // x^2 + 5
    CHECK(p.derivative() == IntPoly::from_coeffs({0, 2}));
    CHECK(IntPoly::constant(9).derivative().is_zero());

    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        IntPoly a = random_poly(rng, 5, 20);
        IntPoly b = random_poly(rng, 5, 20);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}
