#include "torsion/bigfloat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace torsion {

namespace {

long clamp_prec(long precision_bits) {
    return std::max(precision_bits, static_cast<long>(MPFR_PREC_MIN));
}

} // namespace

BigFloat::BigFloat(long precision_bits) {
    mpfr_init2(v_, clamp_prec(precision_bits));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
}

BigFloat BigFloat::of(long value, long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_si(r.v_, value, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(const mpz_class& value, long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_z(r.v_, value.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::two_pow(long exponent, long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_si_2exp(r.v_, 1, exponent, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt_of(unsigned long value, long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_sqrt_ui(r.v_, value, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cos_pi_ratio(long long num, long long den, long precision_bits) {
    if (den <= 0) throw std::invalid_argument("cos_pi_ratio: denominator must be positive");
    long long r = num % (2 * den);
    if (r < 0) r += 2 * den;
    long long g = std::gcd(r, den); // r == 0 gives g = den, hence u/v = 0/1
    long long u = r / g;
    long long v = den / g;

    BigFloat out(clamp_prec(precision_bits));
    // Angles that are quarter or sixth turns have exactly representable
    // cosines; return those without touching the transcendental path.
    if (v == 1) {
        mpfr_set_si(out.v_, (u % 2 == 0) ? 1 : -1, MPFR_RNDN);
        return out;
    }
    if (v == 2) {
        mpfr_set_zero(out.v_, 1);
        return out;
    }
    if (v == 3) {
        int s = (u == 1 || u == 5) ? 1 : -1;
        mpfr_set_si_2exp(out.v_, s, -1, MPFR_RNDN);
        return out;
    }

    long work = clamp_prec(precision_bits) + 64;
    mpfr_t t;
    mpfr_init2(t, work);
    mpfr_const_pi(t, MPFR_RNDN);
    mpfr_mul_si(t, t, static_cast<long>(u), MPFR_RNDN);
    mpfr_div_si(t, t, static_cast<long>(v), MPFR_RNDN);
    mpfr_cos(t, t, MPFR_RNDN);
    mpfr_set(out.v_, t, MPFR_RNDN);
    mpfr_clear(t);
    return out;
}

long BigFloat::precision() const {
    return mpfr_get_prec(v_);
}

int BigFloat::sign() const {
    int s = mpfr_sgn(v_);
    return (s > 0) - (s < 0);
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::reciprocal() const {
    BigFloat r(precision());
    mpfr_ui_div(r.v_, 1, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::mul(const mpz_class& m) const {
    BigFloat r(precision());
    mpfr_mul_z(r.v_, v_, m.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::round_to(long precision_bits) const {
    BigFloat r(precision_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

mpz_class BigFloat::round_nearest() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

BigFloat BigFloat::distance_to_nearest_int() const {
    mpz_class z = round_nearest();
    BigFloat r(precision());
    mpfr_sub_z(r.v_, v_, z.get_mpz_t(), MPFR_RNDN);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

double BigFloat::to_double() const {
    return mpfr_get_d(v_, MPFR_RNDN);
}

std::string BigFloat::str(int significant_digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", significant_digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

int BigFloat::cmp(const BigFloat& other) const {
    return mpfr_cmp(v_, other.v_);
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

} // namespace torsion
