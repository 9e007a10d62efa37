#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace torsion {

// Arbitrary-precision real number: a value-semantics wrapper over mpfr_t.
// Every value carries its own working precision in bits; binary operations
// produce a result at the larger of the two operand precisions, rounded to
// nearest. There is no default constructor on purpose: precision is always
// an explicit choice of the caller.
class BigFloat {
public:
    explicit BigFloat(long precision_bits); // zero at the given precision
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat of(long value, long precision_bits);
    static BigFloat of(const mpz_class& value, long precision_bits);
    static BigFloat two_pow(long exponent, long precision_bits); // exact 2^exponent
    static BigFloat pi(long precision_bits);
    static BigFloat sqrt_of(unsigned long value, long precision_bits);

    // cos(num*pi/den), den > 0. The angle is reduced exactly as integers
    // modulo 2*den before any floating-point step, so arbitrarily large
    // multiples of pi cost no accuracy. Arguments whose reduced fraction has
    // denominator 1, 2, or 3 yield the exact values 0, +-1/2, +-1.
    static BigFloat cos_pi_ratio(long long num, long long den, long precision_bits);

    long precision() const;
    int sign() const; // -1, 0, +1
    bool is_zero() const { return sign() == 0; }

    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat reciprocal() const;
    BigFloat mul(const mpz_class& m) const;
    BigFloat round_to(long precision_bits) const;

    mpz_class round_nearest() const;          // nearest integer
    BigFloat distance_to_nearest_int() const; // |*this - round_nearest()|
    double to_double() const;
    std::string str(int significant_digits) const;

    int cmp(const BigFloat& other) const;

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) != 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
    BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
    BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
    BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

} // namespace torsion
