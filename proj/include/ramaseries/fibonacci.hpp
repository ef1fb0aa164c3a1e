#pragma once

#include <array>
#include <cstdlib>
#include <utility>

#include "ramaseries/integers.hpp"

namespace ramaseries {

namespace detail {

inline constexpr long kFibIndexCap = 1000000;

// Fast doubling: returns (F_n, F_{n+1}) for n >= 0 in O(log n) big-int
// multiplications, walking the bits of n from the top.
inline std::pair<BigInt, BigInt> fib_pair(unsigned long n) {
    if (n == 0) return {BigInt(0), BigInt(1)};
    std::pair<BigInt, BigInt> p = fib_pair(n >> 1);
    const BigInt& a = p.first;   // F_m
    const BigInt& b = p.second;  // F_{m+1}
    BigInt c = a * (2 * b - a);  // F_{2m}
    BigInt d = a * a + b * b;    // F_{2m+1}
    if (n & 1) return {d, c + d};
    return {std::move(c), std::move(d)};
}

} // namespace detail

// Exact Fibonacci number, any integer index within the practical cap.
// F_{-n} = (-1)^{n-1} F_n.
inline BigInt fib(long n) {
    if (std::labs(n) > detail::kFibIndexCap)
        throw DomainError("fib: |n| exceeds index cap 10^6");
    if (n >= 0) return detail::fib_pair(static_cast<unsigned long>(n)).first;
    long m = -n;
    BigInt f = detail::fib_pair(static_cast<unsigned long>(m)).first;
    return (m % 2 == 1) ? f : -f;
}

// Exact Lucas number via L_n = 2 F_{n+1} - F_n; L_{-n} = (-1)^n L_n.
inline BigInt lucas(long n) {
    if (std::labs(n) > detail::kFibIndexCap)
        throw DomainError("lucas: |n| exceeds index cap 10^6");
    long m = n >= 0 ? n : -n;
    auto [f, f1] = detail::fib_pair(static_cast<unsigned long>(m));
    BigInt l = 2 * f1 - f;
    if (n < 0 && m % 2 == 1) l = -l;
    return l;
}

// Golden section alpha = (1+sqrt5)/2 and its conjugate beta = (1-sqrt5)/2.
struct GoldenPair {
    BigReal alpha;
    BigReal beta;
};

inline GoldenPair golden(const PrecisionContext& ctx) {
    BigReal s5 = sqrt(BigReal(5, ctx));
    BigReal half(BigRational(1, 2), ctx);
    return {(BigReal(1, ctx) + s5) * half, (BigReal(1, ctx) - s5) * half};
}

// Exact residuals of the classical quadratic identities:
//   L_n^2 - 5 F_n^2 - 4(-1)^n,
//   5 F_n^2 - L_{2n} - 2(-1)^{n+1},
//   L_n^2 - L_{2n} - 2(-1)^n,
//   L_n - F_{2n}/F_n          (n != 0; division is exact).
inline std::array<BigInt, 4> check_basic_identities(long n) {
    BigInt Fn = fib(n), Ln = lucas(n), L2n = lucas(2 * n);
    int sgn = (n % 2 == 0) ? 1 : -1;
    std::array<BigInt, 4> r = {
        Ln * Ln - 5 * Fn * Fn - 4 * sgn,
        5 * Fn * Fn - L2n + 2 * sgn,
        Ln * Ln - L2n - 2 * sgn,
        BigInt(0),
    };
    if (n != 0) {
        BigInt F2n = fib(2 * n);
        BigInt q;
        mpz_divexact(q.get_mpz_t(), F2n.get_mpz_t(), Fn.get_mpz_t());
        r[3] = Ln - q;
    }
    return r;
}

// Residuals of the four Hoggatt identities
//   F_{p+q} - F_p a^q - b^p F_q,      F_{p+q} - F_p b^q - a^p F_q,
//   L_{p+q} - L_p a^q + b^p F_q s5,   L_{p+q} - L_p b^q - a^p F_q s5,
// evaluated numerically (alpha, beta are irrational).
inline std::array<BigReal, 4> hoggatt(long p, long q, const PrecisionContext& ctx) {
    auto [a, b] = golden(ctx);
    BigReal s5 = a - b;
    auto rpow = [&](const BigReal& base, long e) {
        BigReal v = pow_ui(abs(base), static_cast<unsigned long>(std::labs(e)));
        if (base.is_negative() && (std::labs(e) % 2 == 1)) v = -v;
        if (e < 0) v = BigReal(1, ctx) / v;
        return v;
    };
    BigReal aq = rpow(a, q), bq = rpow(b, q), ap = rpow(a, p), bp = rpow(b, p);
    BigReal Fp(fib(p), ctx), Fq(fib(q), ctx), Fpq(fib(p + q), ctx);
    BigReal Lp(lucas(p), ctx), Lpq(lucas(p + q), ctx);
    return {
        Fpq - Fp * aq - bp * Fq,
        Fpq - Fp * bq - ap * Fq,
        Lpq - Lp * aq + bp * Fq * s5,
        Lpq - Lp * bq - ap * Fq * s5,
    };
}

// Signed power of alpha/beta for closed-form evaluators (negative exponents
// permitted; beta^e handled through beta = -1/alpha to avoid cancellation).
inline BigReal golden_pow(const BigReal& base, long e, const PrecisionContext& ctx) {
    if (e == 0) return BigReal(1, ctx);
    BigReal v = pow_ui(abs(base), static_cast<unsigned long>(std::labs(e)));
    if (base.is_negative() && (std::labs(e) % 2 == 1)) v = -v;
    if (e < 0) return BigReal(1, ctx) / v;
    return v;
}

} // namespace ramaseries
