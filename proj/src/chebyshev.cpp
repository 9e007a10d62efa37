#include "torsion/chebyshev.hpp"

#include "torsion/error.hpp"

#include <cstdlib>
#include <string>
#include <utility>

namespace torsion {

IntPoly cheb_t(long n) {
    n = std::labs(n);
    IntPoly prev = IntPoly::one();
    if (n == 0) return prev;
    IntPoly cur = IntPoly::x();
    const IntPoly two_x = IntPoly::from_coeffs({0, 2});
    for (long i = 1; i < n; ++i) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly exact_divide(const IntPoly& numerator, const IntPoly& divisor) {
    if (divisor.is_zero()) {
        throw Error(ErrorKind::InexactDivision, "division by the zero polynomial");
    }
    if (numerator.is_zero()) return IntPoly();
    if (numerator.degree() < divisor.degree()) {
        throw Error(ErrorKind::InexactDivision, "numerator degree below divisor degree");
    }

    std::vector<mpz_class> rem = numerator.coeffs();
    const mpz_class& lead = divisor.leading();
    int dd = divisor.degree();
    int qd = numerator.degree() - dd;
    std::vector<mpz_class> quo(static_cast<size_t>(qd) + 1, mpz_class(0));

    for (int k = qd; k >= 0; --k) {
        mpz_class& head = rem[static_cast<size_t>(k + dd)];
        if (head == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), head.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) {
            throw Error(ErrorKind::InexactDivision,
                        "coefficient of x^" + std::to_string(k + dd) +
                            " is not divisible by the leading coefficient " + lead.get_str());
        }
        quo[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= dd; ++i) {
            rem[static_cast<size_t>(k + i)] -= q * divisor.coeff(i);
        }
    }
    for (size_t i = 0; i < rem.size(); ++i) {
        if (rem[i] != 0) {
            throw Error(ErrorKind::InexactDivision,
                        "nonzero remainder term at x^" + std::to_string(i));
        }
    }
    return IntPoly::from_coeffs(std::move(quo));
}

IntPoly even_part_as_poly(const IntPoly& p) {
    std::vector<mpz_class> out;
    out.reserve(static_cast<size_t>(p.degree() / 2 + 1));
    for (int i = 0; i <= p.degree(); ++i) {
        if (i % 2 == 1) {
            if (p.coeff(i) != 0) {
                throw Error(ErrorKind::OddTermPresent,
                            "nonzero coefficient at odd degree x^" + std::to_string(i));
            }
            continue;
        }
        out.push_back(p.coeff(i));
    }
    return IntPoly::from_coeffs(std::move(out));
}

} // namespace torsion
