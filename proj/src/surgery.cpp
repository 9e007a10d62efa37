#include "torsion/surgery.hpp"

#include "torsion/error.hpp"

#include <numeric>
#include <string>

namespace torsion {

SurgeryParams validate_params(long p, long q, long n) {
    if (p < 1) throw Error(ErrorKind::NonPositive, "p must be >= 1, got " + std::to_string(p));
    if (q < 3) throw Error(ErrorKind::NonPositive, "q must be >= 3, got " + std::to_string(q));
    if (p % 2 == 0) throw Error(ErrorKind::NonOdd, "p must be odd, got " + std::to_string(p));
    if (q % 2 == 0) throw Error(ErrorKind::NonOdd, "q must be odd, got " + std::to_string(q));
    if (std::gcd(p, q) != 1) {
        throw Error(ErrorKind::NonCoprime,
                    "p and q must be coprime, got gcd(" + std::to_string(p) + ", " +
                        std::to_string(q) + ") = " + std::to_string(std::gcd(p, q)));
    }
    __int128 big = static_cast<__int128>(2) * p * q * n + 1;
    if (big < 0) big = -big;
    if (big > (static_cast<__int128>(1) << 62)) {
        throw Error(ErrorKind::NonPositive, "surgery parameters overflow the supported range");
    }
    SurgeryParams out;
    out.p = p;
    out.q = q;
    out.n = n;
    out.N = static_cast<long>(big);
    return out;
}

bool is_acyclic(const SurgeryParams& params, const RepClass& rep) {
    bool in_range = rep.a > 0 && rep.a < 2 * params.p && rep.b > 0 && rep.b < params.q &&
                    rep.k > 0 && rep.k < params.N;
    return in_range && rep.a % 2 == 1 && rep.b % 2 == 1 && ((rep.k - params.n) % 2 == 0);
}

std::vector<RepClass> enumerate_acyclic(const SurgeryParams& params) {
    std::vector<RepClass> out;
    long k_par = ((params.n % 2) + 2) % 2;
    for (long a = 1; a < 2 * params.p; a += 2) {
        for (long b = 1; b < params.q; b += 2) {
            for (long k = 1; k < params.N; ++k) {
                if (k % 2 == k_par) out.push_back({a, b, k});
            }
        }
    }
    return out;
}

std::vector<RepClass> enumerate_all(const SurgeryParams& params) {
    std::vector<RepClass> out;
    for (long a = 1; a < 2 * params.p; ++a) {
        for (long b = 1; b < params.q; ++b) {
            if ((a - b) % 2 != 0) continue;
            long k_par = (((params.n * a) % 2) + 2) % 2;
            for (long k = 1; k < params.N; ++k) {
                if (k % 2 == k_par) out.push_back({a, b, k});
            }
        }
    }
    return out;
}

long count_ab_pairs(const SurgeryParams& params) {
    return params.p * (params.q - 1) / 2;
}

std::vector<std::pair<long, long>> admissible_pairs(const SurgeryParams& params) {
    std::vector<std::pair<long, long>> out;
    out.reserve(static_cast<size_t>(count_ab_pairs(params)));
    for (long a = 1; a < 2 * params.p; a += 2) {
        for (long b = 1; b < params.q; b += 2) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

TraceTriple trace_triple(const SurgeryParams& params, const RepClass& rep, long precision_bits) {
    bool in_family = rep.a > 0 && rep.a < 2 * params.p && rep.b > 0 && rep.b < params.q &&
                     (rep.a - rep.b) % 2 == 0 && rep.k > 0 && rep.k < params.N &&
                     ((rep.k - params.n * rep.a) % 2) == 0;
    if (!in_family) {
        throw Error(ErrorKind::InvalidPair,
                    "(" + std::to_string(rep.a) + ", " + std::to_string(rep.b) + ", " +
                        std::to_string(rep.k) + ") is not a representation class for these parameters");
    }
    BigFloat two = BigFloat::of(2, precision_bits);
    TraceTriple t{
        two * BigFloat::cos_pi_ratio(rep.a, 2 * params.p, precision_bits),
        two * BigFloat::cos_pi_ratio(rep.b, params.q, precision_bits),
        two * BigFloat::cos_pi_ratio(rep.k, params.N, precision_bits),
        precision_bits,
    };
    return t;
}

} // namespace torsion
