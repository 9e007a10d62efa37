#include "torsion/int_poly.hpp"

#include <stdexcept>

namespace torsion {

namespace {
const mpz_class kZero = 0;
}

IntPoly IntPoly::constant(mpz_class c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::x() {
    IntPoly p;
    p.c_ = {0, 1};
    return p;
}

IntPoly IntPoly::from_coeffs(std::vector<mpz_class> ascending) {
    IntPoly p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const mpz_class& IntPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return c_.back();
}

mpz_class IntPoly::eval(const mpz_class& point) const {
    mpz_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * point + c_[i];
    }
    return acc;
}

IntPoly IntPoly::derivative() const {
    IntPoly d;
    if (c_.size() <= 1) return d;
    d.c_.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        d.c_.push_back(c_[i] * static_cast<long>(i));
    }
    d.trim();
    return d;
}

IntPoly IntPoly::scaled(const mpz_class& factor) const {
    IntPoly r;
    if (factor == 0) return r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * factor);
    return r;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), kZero);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), kZero);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a) {
    return a.scaled(-1);
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.resize(a.c_.size() + b.c_.size() - 1, kZero);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        for (size_t j = 0; j < b.c_.size(); ++j) {
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

} // namespace torsion
