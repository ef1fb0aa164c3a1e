#pragma once

#include <vector>

#include "ramaseries/bernoulli.hpp"
#include "ramaseries/complex.hpp"
#include "ramaseries/fibonacci.hpp"

namespace ramaseries {

// Inverse hyperbolic arctangent through its logarithmic representation
//   arctanh(z) = (1/2) ln((1+z)/(1-z)),   |z| < 1.
inline BigReal arctanh(const BigReal& z) {
    PrecisionContext ctx(std::max<long>(PrecisionContext::kMinPrecBits,
                                        z.precision() - PrecisionContext::kDefaultGuardBits));
    BigReal one = BigReal(1, ctx);
    if (!(abs(z) < one)) throw DomainError("arctanh: |z| must be < 1");
    return mul_2si(ln((one + z) / (one - z)), -1);
}

inline BigReal arctan(const BigReal& x) { return atan(x); }

namespace detail {

// Alternating-series acceleration (Cohen / Rodriguez Villegas / Zagier,
// algorithm 1). For eta(s) the summand 1/(k+1)^s is a moment sequence of a
// positive measure on [0,1], so the truncation error after n rounds is
// bounded by 2 / d_n with d_n = ((3+sqrt8)^n + (3-sqrt8)^n)/2 > 5.82^n / 2.
// The Chebyshev weights are carried as exact rationals; only the summand and
// the accumulator round.
inline BigReal eta_accelerated(unsigned s, const PrecisionContext& ctx) {
    const long wp = ctx.work_prec();
    const int n = static_cast<int>((wp + 16) / 2.543) + 4;
    BigInt d0 = 1, d1 = 3; // d_k = 6 d_{k-1} - d_{k-2}
    for (int i = 1; i < n; ++i) {
        BigInt next = 6 * d1 - d0;
        d0 = d1;
        d1 = next;
    }
    const BigInt& d = d1;
    BigRational b(-1);
    BigRational c(-d);
    BigReal acc(0, ctx);
    for (int k = 0; k < n; ++k) {
        c = b - c;
        BigReal ak = BigReal(1, ctx) / pow_ui(BigReal(k + 1, ctx), s);
        acc += BigReal(c, ctx) * ak;
        BigRational f(BigInt(2) * (k + n) * (k - n), BigInt(2 * k + 1) * (k + 1));
        f.canonicalize();
        b *= f;
    }
    return acc / BigReal(d, ctx);
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace detail

// Dirichlet eta at positive integers; eta(1) = ln 2, eta(n >= 2) by
// accelerated alternating summation.
inline BigReal eta(long n, const PrecisionContext& ctx) {
    if (n <= 0) throw DomainError("eta: argument must be >= 1");
    if (n == 1) return const_ln2(ctx);
    return detail::eta_accelerated(static_cast<unsigned>(n), ctx);
}

// Riemann zeta at integers >= 2. Even arguments use the exact Bernoulli
// formula zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!); odd arguments
// come from eta(n) / (1 - 2^{1-n}).
inline BigReal zeta(long n, const PrecisionContext& ctx) {
    if (n <= 1) throw DomainError("zeta: argument must be >= 2");
    if (n % 2 == 0) {
        unsigned m = static_cast<unsigned>(n / 2);
        BigReal two_pi = mul_2si(const_pi(ctx), 1);
        BigReal num = BigReal(bernoulli_number(2 * m), ctx) * pow_ui(two_pi, 2 * m);
        BigReal val = num / BigReal(2 * detail::factorial(2 * m), ctx);
        return (m % 2 == 0) ? -val : val;
    }
    BigReal scale = BigReal(1, ctx) - mul_2si(BigReal(1, ctx), static_cast<long>(1 - n));
    return eta(n, ctx) / scale;
}

namespace detail {

// zeta at any integer argument, for the unit-circle polylog expansion:
// zeta(0) = -1/2, zeta(-2k) = 0, zeta(-(2k-1)) = -B_{2k}/(2k).
inline BigReal zeta_any_integer(long k, const PrecisionContext& ctx) {
    if (k >= 2) return zeta(k, ctx);
    if (k == 1) throw DomainError("zeta_any_integer: pole at 1");
    if (k == 0) return BigReal(BigRational(-1, 2), ctx);
    long j = -k;
    if (j % 2 == 0) return BigReal(0, ctx);
    return BigReal(-bernoulli_number(static_cast<unsigned>(j + 1)) / BigRational(j + 1), ctx);
}

} // namespace detail

// Polylogarithm Li_n(z) = sum z^k / k^n for real z on [-1, 1].
inline BigReal polylog(long n, const BigReal& z, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("polylog: order must be >= 1");
    BigReal one(1, ctx);
    BigReal az = abs(z);
    if (az > one) throw DomainError("polylog: |z| must be <= 1");
    if (az == one) {
        if (z.sign() > 0) {
            if (n == 1) throw DivergenceError("polylog: Li_1(1) diverges");
            return zeta(n, ctx);
        }
        if (n == 1) return -const_ln2(ctx);
        return -eta(n, ctx);
    }
    if (z.is_zero()) return BigReal(0, ctx);
    if (n == 1) return -ln(one - z);
    // defining series; geometric tail with ratio |z|
    BigReal acc(0, ctx);
    BigReal zp(1, ctx);
    BigReal tail_factor = az / (one - az);
    BigReal eps = mul_2si(az, -(ctx.work_prec() + 8)); // relative to leading term
    long k = 1;
    const long cap = 64L * ctx.work_prec() + 64;
    for (; k <= cap; ++k) {
        zp *= z;
        acc += zp / pow_ui(BigReal(k, ctx), static_cast<unsigned long>(n));
        BigReal bound = abs(zp) * tail_factor; // >= |sum of omitted terms| up to k^n >= 1
        if (bound < eps) break;
    }
    if (k > cap) throw Error("polylog: series did not converge (|z| too close to 1)");
    return acc;
}

// Polylogarithm for complex z strictly inside the unit disk, summed
// componentwise (no complex logarithm is ever taken).
inline BigComplex polylog(long n, const BigComplex& z, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("polylog: order must be >= 1");
    BigReal one(1, ctx);
    BigReal az = z.abs();
    if (!(az < one)) throw DomainError("polylog(complex): |z| must be < 1");
    if (z.is_zero()) return BigComplex(ctx);
    BigComplex acc(ctx);
    BigComplex zp(BigReal(1, ctx), BigReal(0, ctx));
    BigReal tail_factor = az / (one - az);
    BigReal eps = mul_2si(az, -(ctx.work_prec() + 8));
    long k = 1;
    const long cap = 64L * ctx.work_prec() + 64;
    for (; k <= cap; ++k) {
        zp = zp * z;
        BigReal kn = pow_ui(BigReal(k, ctx), static_cast<unsigned long>(n));
        acc = acc + zp / kn;
        BigReal bound = pow_ui(az, static_cast<unsigned long>(k)) * tail_factor;
        if (bound < eps) break;
    }
    if (k > cap) throw Error("polylog(complex): series did not converge");
    return acc;
}

namespace detail {

struct ClausenPair {
    BigReal cos_series; // sum cos(kx)/k^n
    BigReal sin_series; // sum sin(kx)/k^n
};

// Li_n(e^{i t}) for 0 < t <= pi via the ascending expansion
//   Li_n(e^z) = z^{n-1}/(n-1)! (H_{n-1} - ln(-z)) + sum_{m != n-1} zeta(n-m) z^m / m!
// at z = i t, where ln(-i t) = ln t - i pi/2. zeta at non-positive integers
// reduces to Bernoulli numbers, so the terms eventually decay geometrically
// with ratio t / (2 pi) <= 1/2.
inline ClausenPair li_unit_circle_small(long n, const BigReal& t, const PrecisionContext& ctx) {
    const long wp = ctx.work_prec();
    BigReal re(0, ctx), im(0, ctx);
    BigReal p(1, ctx); // t^m / m!
    BigReal eps = mul_2si(BigReal(1, ctx), -(wp + 16));
    int consecutive_small = 0;
    const long cap = 8 * wp + 64;
    for (long m = 0; m <= cap; ++m) {
        if (m > 0) p = p * t / BigReal(m, ctx);
        if (m != n - 1) {
            BigReal zv = zeta_any_integer(n - m, ctx);
            if (!zv.is_zero()) {
                BigReal term = zv * p;
                switch (m % 4) {
                    case 0: re += term; break;
                    case 1: im += term; break;
                    case 2: re -= term; break;
                    case 3: im -= term; break;
                }
                if (m > n) {
                    if (abs(term) < eps) {
                        if (++consecutive_small >= 4) break;
                    } else {
                        consecutive_small = 0;
                    }
                }
            }
        }
    }
    // m = n-1 term: (i t)^{n-1}/(n-1)! * (H_{n-1} - ln t + i pi/2)
    BigReal h(0, ctx);
    for (long j = 1; j < n; ++j) h += BigReal(1, ctx) / BigReal(j, ctx);
    BigReal coeff = pow_ui(t, static_cast<unsigned long>(n - 1)) / BigReal(factorial(static_cast<unsigned long>(n - 1)), ctx);
    BigReal a = (h - ln(t)) * coeff;
    BigReal b = mul_2si(const_pi(ctx), -1) * coeff;
    switch ((n - 1) % 4) {
        case 0: re += a; im += b; break;
        case 1: re -= b; im += a; break;
        case 2: re -= a; im -= b; break;
        case 3: re += b; im -= a; break;
    }
    // Re Li_n(e^{it}) is the cos series, Im the sin series, for either parity.
    return {re, im};
}

// cos/sin series of order n at any x in (0, 2pi): reflect to t <= pi
// (cos series is even about pi, sin series odd).
inline ClausenPair clausen_series_pair(long n, const BigReal& x, const PrecisionContext& ctx) {
    if (n < 2) throw DomainError("clausen_series_pair: order must be >= 2");
    BigReal two_pi = mul_2si(const_pi(ctx), 1);
    if (!(x > 0L) || !(x < two_pi)) throw DomainError("clausen: x must lie in (0, 2*pi)");
    BigReal pi_v = const_pi(ctx);
    bool reflected = x > pi_v;
    BigReal t = reflected ? two_pi - x : x;
    ClausenPair p = li_unit_circle_small(n, t, ctx);
    // li_unit_circle_small returns Re, Im of Li_n(e^{it}); Re is the cos
    // series, Im the sin series, independent of parity.
    BigReal cosv = p.cos_series;
    BigReal sinv = p.sin_series;
    if (reflected) sinv = -sinv;
    return {cosv, sinv};
}

} // namespace detail

// Clausen function Cl_n: the sin series for even n, the cos series for odd n.
// Cl_1(x) = -ln(2 sin(x/2)).
inline BigReal clausen_cl(long n, const BigReal& x, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("clausen_cl: order must be >= 1");
    BigReal two_pi = mul_2si(const_pi(ctx), 1);
    if (!(x > 0L) || !(x < two_pi)) throw DomainError("clausen_cl: x must lie in (0, 2*pi)");
    if (n == 1) return -ln(mul_2si(sin(mul_2si(x, -1)), 1));
    auto p = detail::clausen_series_pair(n, x, ctx);
    return (n % 2 == 0) ? p.sin_series : p.cos_series;
}

// Glaisher companion Gl_n: the cos series for even n, the sin series for odd
// n. Termwise summation for n = 1 diverges; Gl_1 is exposed only through the
// Bernoulli closed form (pi - x)/2.
inline BigReal clausen_gl(long n, const BigReal& x, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("clausen_gl: order must be >= 1");
    BigReal two_pi = mul_2si(const_pi(ctx), 1);
    if (!(x > 0L) || !(x < two_pi)) throw DomainError("clausen_gl: x must lie in (0, 2*pi)");
    if (n == 1) return mul_2si(const_pi(ctx) - x, -1);
    auto p = detail::clausen_series_pair(n, x, ctx);
    return (n % 2 == 0) ? p.cos_series : p.sin_series;
}

// Gl_n(x) = (-1)^{1+floor(n/2)} 2^{n-1} pi^n B_n(x / 2pi) / n!.
inline BigReal gl_bernoulli(long n, const BigReal& x, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("gl_bernoulli: order must be >= 1");
    BigReal two_pi = mul_2si(const_pi(ctx), 1);
    if (!(x > 0L) || !(x < two_pi)) throw DomainError("gl_bernoulli: x must lie in (0, 2*pi)");
    BigReal u = x / two_pi;
    BigReal bp = bernoulli_poly(static_cast<unsigned>(n), u, ctx);
    BigReal val = mul_2si(pow_ui(const_pi(ctx), static_cast<unsigned long>(n)), n - 1) * bp /
                  BigReal(detail::factorial(static_cast<unsigned long>(n)), ctx);
    return ((1 + n / 2) % 2 == 0) ? val : -val;
}

// Named closed-form polylogarithm values at golden-section arguments.
enum class SpecialValueId {
    LI2_MINUS1,
    LI2_MINUS_ALPHA,
    LI2_MINUS_BETA,
    LI2_BETA_SQ,
    LI2_HALF,
    LI3_HALF,
    LI3_INV_ALPHA_SQ,
    CAMPBELL_ALPHA3,
};

inline BigReal special_value(SpecialValueId id, const PrecisionContext& ctx) {
    BigReal pi_v = const_pi(ctx);
    BigReal pi2 = pi_v * pi_v;
    BigReal la = ln(golden(ctx).alpha);
    BigReal l2 = const_ln2(ctx);
    switch (id) {
        case SpecialValueId::LI2_MINUS1:
            return -pi2 / BigReal(12, ctx);
        case SpecialValueId::LI2_MINUS_ALPHA:
            return -pi2 / BigReal(10, ctx) - la * la;
        case SpecialValueId::LI2_MINUS_BETA:
            return pi2 / BigReal(10, ctx) - la * la;
        case SpecialValueId::LI2_BETA_SQ:
            return pi2 / BigReal(15, ctx) - la * la;
        case SpecialValueId::LI2_HALF:
            return mul_2si(zeta(2, ctx) - l2 * l2, -1);
        case SpecialValueId::LI3_HALF:
            return BigReal(BigRational(7, 8), ctx) * zeta(3, ctx) - mul_2si(l2 * zeta(2, ctx), -1) +
                   l2 * l2 * l2 / BigReal(6, ctx);
        case SpecialValueId::LI3_INV_ALPHA_SQ:
            return BigReal(BigRational(4, 5), ctx) * zeta(3, ctx) +
                   BigReal(BigRational(2, 3), ctx) * la * la * la -
                   BigReal(BigRational(2, 15), ctx) * pi2 * la;
        case SpecialValueId::CAMPBELL_ALPHA3:
            return pi2 / BigReal(12, ctx) - BigReal(BigRational(3, 2), ctx) * la * la;
    }
    throw DomainError("special_value: unknown id");
}

} // namespace ramaseries
