#pragma once

#include "torsion/bigfloat.hpp"
#include "torsion/int_poly.hpp"

#include <vector>

namespace torsion {

// Dense univariate polynomial with BigFloat coefficients, ascending degree
// order. Every coefficient of a RealPoly carries the same working precision;
// operations on two polynomials produce results at the larger of the two.
// Degree here is formal (size of the coefficient vector), since deciding
// whether a floating-point leading coefficient "is zero" is not this
// class's business.
class RealPoly {
public:
    explicit RealPoly(long precision_bits); // zero polynomial
    static RealPoly one(long precision_bits);
    static RealPoly constant(const BigFloat& value);
    static RealPoly from_coeffs(std::vector<BigFloat> ascending, long precision_bits);
    static RealPoly lift(const IntPoly& p, long precision_bits);

    long precision() const { return prec_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigFloat& coeff(size_t i) const { return c_[i]; }
    size_t size() const { return c_.size(); }

    BigFloat eval(const BigFloat& point) const;
    BigFloat max_abs_coeff() const;

    // Nearest integer polynomial together with the largest distance from any
    // coefficient to its rounded value, and where that worst case occurred.
    struct Rounded {
        IntPoly poly;
        BigFloat residual;
        int worst_index;
    };
    Rounded round_to_int() const;

    friend RealPoly operator+(const RealPoly& a, const RealPoly& b);
    friend RealPoly operator-(const RealPoly& a, const RealPoly& b);
    friend RealPoly operator*(const RealPoly& a, const RealPoly& b);
    RealPoly scaled(const BigFloat& factor) const;

private:
    std::vector<BigFloat> c_;
    long prec_;
};

// Horner evaluation of an integer polynomial at a BigFloat point, carried
// out at the point's precision.
BigFloat eval_big(const IntPoly& p, const BigFloat& point);

} // namespace torsion
