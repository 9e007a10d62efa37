#include "torsion/real_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace torsion {

RealPoly::RealPoly(long precision_bits) : prec_(precision_bits) {}

RealPoly RealPoly::one(long precision_bits) {
    RealPoly p(precision_bits);
    p.c_.push_back(BigFloat::of(1, precision_bits));
    return p;
}

RealPoly RealPoly::constant(const BigFloat& value) {
    RealPoly p(value.precision());
    p.c_.push_back(value);
    return p;
}

RealPoly RealPoly::from_coeffs(std::vector<BigFloat> ascending, long precision_bits) {
    RealPoly p(precision_bits);
    p.c_.reserve(ascending.size());
    for (auto& c : ascending) p.c_.push_back(c.round_to(precision_bits));
    return p;
}

RealPoly RealPoly::lift(const IntPoly& p, long precision_bits) {
    RealPoly out(precision_bits);
    out.c_.reserve(static_cast<size_t>(p.degree() + 1));
    for (int i = 0; i <= p.degree(); ++i) out.c_.push_back(BigFloat::of(p.coeff(i), precision_bits));
    return out;
}

BigFloat RealPoly::eval(const BigFloat& point) const {
    BigFloat acc(std::max(prec_, point.precision()));
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * point + c_[i];
    }
    return acc;
}

BigFloat RealPoly::max_abs_coeff() const {
    BigFloat m(prec_);
    for (const auto& c : c_) {
        BigFloat a = c.abs();
        if (a > m) m = a;
    }
    return m;
}

RealPoly::Rounded RealPoly::round_to_int() const {
    std::vector<mpz_class> ints;
    ints.reserve(c_.size());
    BigFloat worst(prec_);
    int worst_index = 0;
    for (size_t i = 0; i < c_.size(); ++i) {
        ints.push_back(c_[i].round_nearest());
        BigFloat d = c_[i].distance_to_nearest_int();
        if (d > worst) {
            worst = d;
            worst_index = static_cast<int>(i);
        }
    }
    return {IntPoly::from_coeffs(std::move(ints)), worst, worst_index};
}

RealPoly operator+(const RealPoly& a, const RealPoly& b) {
    long prec = std::max(a.prec_, b.prec_);
    RealPoly r(prec);
    size_t n = std::max(a.c_.size(), b.c_.size());
    r.c_.reserve(n);
    BigFloat zero(prec);
    for (size_t i = 0; i < n; ++i) {
        const BigFloat& x = i < a.c_.size() ? a.c_[i] : zero;
        const BigFloat& y = i < b.c_.size() ? b.c_[i] : zero;
        r.c_.push_back((x + y).round_to(prec));
    }
    return r;
}

RealPoly operator-(const RealPoly& a, const RealPoly& b) {
    long prec = std::max(a.prec_, b.prec_);
    RealPoly r(prec);
    size_t n = std::max(a.c_.size(), b.c_.size());
    r.c_.reserve(n);
    BigFloat zero(prec);
    for (size_t i = 0; i < n; ++i) {
        const BigFloat& x = i < a.c_.size() ? a.c_[i] : zero;
        const BigFloat& y = i < b.c_.size() ? b.c_[i] : zero;
        r.c_.push_back((x - y).round_to(prec));
    }
    return r;
}

RealPoly operator*(const RealPoly& a, const RealPoly& b) {
    long prec = std::max(a.prec_, b.prec_);
    RealPoly r(prec);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigFloat(prec));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        for (size_t j = 0; j < b.c_.size(); ++j) {
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    for (auto& c : r.c_) c = c.round_to(prec);
    return r;
}

RealPoly RealPoly::scaled(const BigFloat& factor) const {
    RealPoly r(prec_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back((c * factor).round_to(prec_));
    return r;
}

BigFloat eval_big(const IntPoly& p, const BigFloat& point) {
    BigFloat acc(point.precision());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * point;
        BigFloat term = BigFloat::of(p.coeff(i), point.precision());
        acc += term;
    }
    return acc;
}

} // namespace torsion
