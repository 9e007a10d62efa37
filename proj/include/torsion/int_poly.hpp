#pragma once

#include <gmpxx.h>

#include <vector>

namespace torsion {

// Dense univariate polynomial with exact integer coefficients, stored in
// ascending degree order: coeff(i) multiplies x^i. The representation is
// normalized after every operation (no trailing zero coefficients), so the
// zero polynomial is the empty vector and reports degree() == -1.
class IntPoly {
public:
    IntPoly() = default; // zero polynomial

    static IntPoly constant(mpz_class c);
    static IntPoly one() { return constant(1); }
    static IntPoly x();
    static IntPoly from_coeffs(std::vector<mpz_class> ascending);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpz_class& coeff(int i) const;
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    mpz_class eval(const mpz_class& point) const;
    IntPoly derivative() const;
    IntPoly scaled(const mpz_class& factor) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

private:
    void trim();
    std::vector<mpz_class> c_;
};

} // namespace torsion
