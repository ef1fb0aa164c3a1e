#pragma once

#include "ramaseries/special.hpp"

namespace ramaseries {

namespace detail {

// Four-term Maclaurin fallback for tiny |z| (the printed closed form divides
// by z and would cancel catastrophically): sum_{k=1..4} z^{2k} / kernel.
// Truncation error is below |z|^10.
template <typename T>
T f_maclaurin4(const T& z, long p, const PrecisionContext& ctx) {
    T acc(ctx);
    T z2 = z * z;
    T zp = z2;
    for (long k = 1; k <= 4; ++k) {
        BigInt kern = (2 * BigInt(k) - 1) * ipow(BigInt(2 * k), static_cast<unsigned long>(p)) *
                      (2 * BigInt(k) + 1);
        acc = acc + zp / BigReal(kern, ctx);
        zp = zp * z2;
    }
    return acc;
}

inline BigReal f_small_threshold(const PrecisionContext& ctx) {
    return BigReal("1e-3", ctx);
}

// arctanh by its Maclaurin series (complex path; the logarithmic form would
// need a complex log).
inline BigComplex arctanh_series(const BigComplex& z, const PrecisionContext& ctx) {
    BigReal az = z.abs();
    if (!(az < BigReal(1, ctx))) throw DomainError("arctanh(complex): |z| must be < 1");
    BigComplex acc(ctx);
    BigComplex zp = z;
    BigComplex z2 = z * z;
    BigReal az2 = az * az;
    BigReal tail_factor = az2 / (BigReal(1, ctx) - az2);
    BigReal eps = mul_2si(az, -(ctx.work_prec() + 8));
    const long cap = 64L * ctx.work_prec() + 64;
    for (long k = 1; k <= cap; ++k) {
        acc = acc + zp / BigReal(2 * k - 1, ctx);
        BigReal bound = zp.abs() * tail_factor;
        zp = zp * z2;
        if (bound < eps) return acc;
    }
    throw Error("arctanh(complex): series did not converge");
}

} // namespace detail

// Closed form of F(z, p) = sum_{k>=1} z^{2k} / ((2k-1)(2k)^p(2k+1)) for
// real |z| < 1:
//   p even: (1/2)[ (z - 1/z) arctanh z + 1 - sum_{j=1}^{p/2} 2^{-(2j-1)} Li_{2j}(z^2) ]
//   p odd:  (1/2)[ (z + 1/z) arctanh z - 1 + ln(1 - z^2)
//                  - sum_{j=1}^{(p-1)/2} 2^{-2j} Li_{2j+1}(z^2) ]
// F(0, p) = 0 (removable singularity); |z| < 1e-3 routes through a 4-term
// Maclaurin fallback.
inline BigReal f_closed(const BigReal& z, long p, const PrecisionContext& ctx) {
    if (p < 0) throw DomainError("f_closed: p must be >= 0");
    if (z.is_zero()) return BigReal(0, ctx);
    BigReal az = abs(z);
    if (!(az < BigReal(1, ctx)))
        throw DomainError("f_closed: |z| must be < 1 (use f_at_one / f_at_i / trig forms)");
    if (az < detail::f_small_threshold(ctx)) return detail::f_maclaurin4(z, p, ctx);
    BigReal one(1, ctx);
    BigReal z2 = z * z;
    BigReal at = arctanh(z);
    if (p % 2 == 0) {
        BigReal acc = (z - one / z) * at + one;
        for (long j = 1; j <= p / 2; ++j)
            acc -= mul_2si(polylog(2 * j, z2, ctx), -(2 * j - 1));
        return mul_2si(acc, -1);
    }
    BigReal acc = (z + one / z) * at - one + ln(one - z2);
    for (long j = 1; j <= (p - 1) / 2; ++j)
        acc -= mul_2si(polylog(2 * j + 1, z2, ctx), -2 * j);
    return mul_2si(acc, -1);
}

// Complex variant for |z| < 1; ln(1 - z^2) = -Li_1(z^2) and arctanh are
// summed as power series so no complex logarithm or branch choice is needed.
inline BigComplex f_closed(const BigComplex& z, long p, const PrecisionContext& ctx) {
    if (p < 0) throw DomainError("f_closed: p must be >= 0");
    if (z.is_zero()) return BigComplex(ctx);
    BigReal az = z.abs();
    if (!(az < BigReal(1, ctx))) throw DomainError("f_closed(complex): |z| must be < 1");
    if (az < detail::f_small_threshold(ctx)) return detail::f_maclaurin4(z, p, ctx);
    BigReal one(1, ctx);
    BigComplex cone(one, BigReal(0, ctx));
    BigComplex z2 = z * z;
    BigComplex at = detail::arctanh_series(z, ctx);
    BigReal half(BigRational(1, 2), ctx);
    if (p % 2 == 0) {
        BigComplex acc = (z - cone / z) * at + cone;
        for (long j = 1; j <= p / 2; ++j)
            acc = acc - polylog(2 * j, z2, ctx) * mul_2si(one, -(2 * j - 1));
        return acc * half;
    }
    BigComplex acc = (z + cone / z) * at - cone - polylog(1, z2, ctx);
    for (long j = 1; j <= (p - 1) / 2; ++j)
        acc = acc - polylog(2 * j + 1, z2, ctx) * mul_2si(one, -2 * j);
    return acc * half;
}

// Closed form of G(z, p) = sum_{k>=1} z^k / ((2k-1) k^p (2k+1)), 0 < z < 1,
// the single-expression restatement of the theorem:
//   -Li_p(z) - sum_{j=1}^{ceil(p/2)-1} 2^{2j} Li_{p-2j}(z)
//   + 2^{p-2} (1 + (-1)^{p-1}/z) sqrt(z) ln((1+sqrt z)/(1-sqrt z)) + 2^{p-1}(-1)^p.
// The -Li_p term belongs to the partial-fraction route and only exists for
// p >= 1; at p = 0 the series telescopes directly and the term is dropped.
inline BigReal g_closed(const BigReal& z, long p, const PrecisionContext& ctx) {
    if (p < 0) throw DomainError("g_closed: p must be >= 0");
    if (!(z > 0L) || !(z < 1L)) throw DomainError("g_closed: need 0 < z < 1");
    BigReal one(1, ctx);
    BigReal sz = sqrt(z);
    BigReal lnq = ln((one + sz) / (one - sz));
    int sign_pm1 = (p % 2 == 0) ? -1 : 1; // (-1)^(p-1)
    BigReal acc = mul_2si((one + BigReal(sign_pm1, ctx) / z) * sz * lnq, p - 2);
    acc += mul_2si(BigReal((p % 2 == 0) ? 1 : -1, ctx), p - 1); // 2^{p-1} (-1)^p
    if (p >= 1) {
        acc -= polylog(p, z, ctx);
        for (long j = 1; j <= (p + 1) / 2 - 1; ++j)
            acc -= mul_2si(polylog(p - 2 * j, z, ctx), 2 * j);
    }
    return acc;
}

// F(1, p) = sum 1/((2k-1)(2k)^p(2k+1)) in zeta terms.
inline BigReal f_at_one(long p, const PrecisionContext& ctx) {
    if (p < 0) throw DomainError("f_at_one: p must be >= 0");
    BigReal half(BigRational(1, 2), ctx);
    if (p % 2 == 0) {
        BigReal acc = half;
        for (long j = 1; j <= p / 2; ++j) acc -= mul_2si(zeta(2 * j, ctx), -2 * j);
        return acc;
    }
    BigReal acc = const_ln2(ctx) - half;
    for (long j = 1; j <= (p - 1) / 2; ++j) acc -= mul_2si(zeta(2 * j + 1, ctx), -(2 * j + 1));
    return acc;
}

// F(i, p) = sum (-1)^k/((2k-1)(2k)^p(2k+1)). Evaluates both the eta form and
// the zeta-only restatement and insists they agree.
inline BigReal f_at_i(long p, const PrecisionContext& ctx) {
    if (p < 0) throw DomainError("f_at_i: p must be >= 0");
    BigReal half(BigRational(1, 2), ctx);
    BigReal eta_form(ctx), zeta_form(ctx);
    if (p % 2 == 0) {
        BigReal base = half - mul_2si(const_pi(ctx), -2);
        eta_form = base;
        zeta_form = base;
        for (long j = 1; j <= p / 2; ++j) {
            eta_form += mul_2si(eta(2 * j, ctx), -2 * j);
            BigReal zj = zeta(2 * j, ctx);
            zeta_form += mul_2si(zj, -2 * j) - mul_2si(zj, -(4 * j - 1));
        }
    } else {
        BigReal base = mul_2si(const_ln2(ctx), -1) - half;
        eta_form = base;
        zeta_form = base;
        for (long j = 1; j <= (p - 1) / 2; ++j) {
            eta_form += mul_2si(eta(2 * j + 1, ctx), -(2 * j + 1));
            BigReal zj = zeta(2 * j + 1, ctx);
            zeta_form += mul_2si(zj, -(2 * j + 1)) - mul_2si(zj, -(4 * j + 1));
        }
    }
    BigReal tol = mul_2si(BigReal(1, ctx), -(ctx.prec_bits() - 12));
    if (abs(eta_form - zeta_form) > tol)
        throw Error("f_at_i: eta and zeta forms disagree beyond tolerance");
    return eta_form;
}

// sum cos(kx)/((2k-1)(2k)^p(2k+1)) closed form, 0 < x < 2 pi.
inline BigReal trig_cos_closed(const BigReal& x, long p, const PrecisionContext& ctx) {
    if (p < 0) throw DomainError("trig_cos_closed: p must be >= 0");
    BigReal two_pi = mul_2si(const_pi(ctx), 1);
    if (!(x > 0L) || !(x < two_pi)) throw DomainError("trig_cos_closed: x must lie in (0, 2*pi)");
    BigReal half(BigRational(1, 2), ctx);
    if (p % 2 == 0) {
        BigReal acc = half - mul_2si(const_pi(ctx) * sin(mul_2si(x, -1)), -2);
        for (long j = 1; j <= p / 2; ++j)
            acc -= mul_2si(clausen_gl(2 * j, x, ctx), -2 * j);
        return acc;
    }
    BigReal acc = -half - mul_2si(cos(mul_2si(x, -1)) * ln(tan(mul_2si(x, -2))), -1) +
                  mul_2si(ln(mul_2si(sin(mul_2si(x, -1)), 1)), -1);
    for (long j = 1; j <= (p - 1) / 2; ++j)
        acc -= mul_2si(clausen_cl(2 * j + 1, x, ctx), -(2 * j + 1));
    return acc;
}

// sum sin(kx)/((2k-1)(2k)^p(2k+1)) closed form, 0 < x < 2 pi.
inline BigReal trig_sin_closed(const BigReal& x, long p, const PrecisionContext& ctx) {
    if (p < 0) throw DomainError("trig_sin_closed: p must be >= 0");
    BigReal two_pi = mul_2si(const_pi(ctx), 1);
    if (!(x > 0L) || !(x < two_pi)) throw DomainError("trig_sin_closed: x must lie in (0, 2*pi)");
    if (p % 2 == 0) {
        BigReal acc = -mul_2si(sin(mul_2si(x, -1)) * ln(tan(mul_2si(x, -2))), -1);
        for (long j = 1; j <= p / 2; ++j)
            acc -= mul_2si(clausen_cl(2 * j, x, ctx), -2 * j);
        return acc;
    }
    BigReal acc = mul_2si(const_pi(ctx) * cos(mul_2si(x, -1)), -2) -
                  mul_2si(const_pi(ctx) - x, -2);
    for (long j = 1; j <= (p - 1) / 2; ++j)
        acc -= mul_2si(clausen_gl(2 * j + 1, x, ctx), -(2 * j + 1));
    return acc;
}

enum class TrigBernoulliKind { CosEven, SinOdd };

// Bernoulli-polynomial restatement: CosEven evaluates the cos series at
// exponent 2p, SinOdd the sin series at exponent 2p+1.
inline BigReal trig_bernoulli_closed(const BigReal& x, long p, TrigBernoulliKind kind,
                                     const PrecisionContext& ctx) {
    if (p < 0) throw DomainError("trig_bernoulli_closed: p must be >= 0");
    BigReal two_pi = mul_2si(const_pi(ctx), 1);
    if (!(x > 0L) || !(x < two_pi))
        throw DomainError("trig_bernoulli_closed: x must lie in (0, 2*pi)");
    BigReal u = x / two_pi;
    BigReal pi_v = const_pi(ctx);
    BigReal half(BigRational(1, 2), ctx);
    if (kind == TrigBernoulliKind::CosEven) {
        BigReal acc = half - mul_2si(pi_v * sin(mul_2si(x, -1)), -2);
        for (long j = 1; j <= p; ++j) {
            BigReal term = pow_ui(pi_v, static_cast<unsigned long>(2 * j)) *
                           bernoulli_poly(static_cast<unsigned>(2 * j), u, ctx) /
                           BigReal(detail::factorial(static_cast<unsigned long>(2 * j)), ctx);
            acc -= mul_2si((j % 2 == 1) ? term : -term, -1);
        }
        return acc;
    }
    BigReal acc = mul_2si(pi_v * cos(mul_2si(x, -1)), -2) - mul_2si(pi_v - x, -2);
    for (long j = 1; j <= p; ++j) {
        BigReal term = pow_ui(pi_v, static_cast<unsigned long>(2 * j + 1)) *
                       bernoulli_poly(static_cast<unsigned>(2 * j + 1), u, ctx) /
                       BigReal(detail::factorial(static_cast<unsigned long>(2 * j + 1)), ctx);
        acc -= mul_2si((j % 2 == 1) ? term : -term, -1);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Catalog right-hand sides beyond the basic operations above. Each function
// evaluates one printed closed form exactly as printed (suspected typos are
// surfaced by verification, never edited here).

namespace rhs {

// sum (-1)^{k-1} / ((4k-1)(4k)^{2p+1}(4k+1))
inline BigReal mod4_cos(long p, const PrecisionContext& ctx) {
    BigReal s2 = sqrt(BigReal(2, ctx));
    BigReal acc = BigReal(BigRational(1, 2), ctx) +
                  mul_2si(s2 * ln(s2 - BigReal(1, ctx)), -2) - mul_2si(const_ln2(ctx), -2);
    BigReal corr(0, ctx);
    for (long j = 1; j <= p; ++j) {
        BigReal f = BigReal(1, ctx) - mul_2si(BigReal(1, ctx), -2 * j);
        corr += mul_2si(f * zeta(2 * j + 1, ctx), -4 * j);
    }
    return acc - mul_2si(corr, -2);
}

// sum (-1)^{k-1} / ((4k-3)(4k-2)^{2p+1}(4k-1))
inline BigReal mod4_sin(long p, const PrecisionContext& ctx) {
    BigReal s2 = sqrt(BigReal(2, ctx));
    BigReal acc = mul_2si(const_pi(ctx) * (s2 - BigReal(1, ctx)), -3);
    for (long j = 1; j <= p; ++j) {
        BigReal term = pow_ui(const_pi(ctx), static_cast<unsigned long>(2 * j + 1)) *
                       BigReal(bernoulli_poly(static_cast<unsigned>(2 * j + 1), BigRational(1, 4)), ctx) /
                       BigReal(detail::factorial(static_cast<unsigned long>(2 * j + 1)), ctx);
        acc -= mul_2si((j % 2 == 1) ? term : -term, -1);
    }
    return acc;
}

// mod-6 combination with all three sums starting at k = 1
inline BigReal mod6_a(long p, const PrecisionContext& ctx) {
    BigReal acc = BigReal(BigRational(1, 3), ctx) * mul_2si(BigReal(1, ctx), -(2 * p + 2)) +
                  BigReal(BigRational(1, 15), ctx) * mul_2si(BigReal(1, ctx), -(4 * p + 3)) -
                  BigReal(BigRational(1, 2), ctx) +
                  BigReal(BigRational(3, 8), ctx) * ln(BigReal(3, ctx));
    BigReal corr(0, ctx);
    for (long j = 1; j <= p; ++j) {
        BigReal f = BigReal(1, ctx) - BigReal(1, ctx) / pow_ui(BigReal(3, ctx), static_cast<unsigned long>(2 * j));
        corr += mul_2si(f * zeta(2 * j + 1, ctx), -2 * j);
    }
    return acc + mul_2si(corr, -2);
}

// mod-6 difference with both sums starting at k = 0
inline BigReal mod6_b(long p, const PrecisionContext& ctx) {
    BigReal s3 = sqrt(BigReal(3, ctx));
    BigReal acc = s3 * const_pi(ctx) / BigReal(36, ctx);
    BigReal corr(0, ctx);
    for (long j = 1; j <= p; ++j) {
        BigReal term = pow_ui(const_pi(ctx), static_cast<unsigned long>(2 * j + 1)) *
                       BigReal(bernoulli_poly(static_cast<unsigned>(2 * j + 1), BigRational(1, 3)), ctx) /
                       BigReal(detail::factorial(static_cast<unsigned long>(2 * j + 1)), ctx);
        corr += (j % 2 == 1) ? term : -term;
    }
    return acc - s3 / BigReal(3, ctx) * corr;
}

// sum 5^k F_n^{2k} / (L_n^{2k}(2k-1)(2k)(2k+1)), n positive even
inline BigReal fl_even(long n, const PrecisionContext& ctx) {
    BigReal la = ln(golden(ctx).alpha);
    BigReal ratio = BigReal(lucas(2 * n), ctx) / BigReal(fib(2 * n), ctx);
    return const_ln2(ctx) - ln(BigReal(lucas(n), ctx)) +
           BigReal(n, ctx) / sqrt(BigReal(5, ctx)) * ratio * la -
           BigReal(BigRational(1, 2), ctx);
}

// sum L_n^{2k} / (F_n^{2k} 5^k (2k-1)(2k)(2k+1)), n odd
inline BigReal fl_odd(long n, const PrecisionContext& ctx) {
    BigReal la = ln(golden(ctx).alpha);
    BigReal ratio = BigReal(lucas(2 * n), ctx) / BigReal(fib(2 * n), ctx);
    return const_ln2(ctx) - mul_2si(ln(BigReal(5, ctx)), -1) - ln(BigReal(fib(n), ctx)) +
           BigReal(n, ctx) / sqrt(BigReal(5, ctx)) * ratio * la -
           BigReal(BigRational(1, 2), ctx);
}

// Weighted Lucas / Fibonacci series over L_r^{2k}, r even, s any integer.
inline BigReal fl_weighted(long r, long s, bool lucas_weight, const PrecisionContext& ctx) {
    auto [a, b] = golden(ctx);
    BigReal s5 = a - b;
    BigReal Lr(lucas(r), ctx), Ls(lucas(s), ctx), Fs(fib(s), ctx);
    BigReal Lrs(lucas(r + s), ctx), Frs(fib(r + s), ctx);
    BigReal ar = golden_pow(a, r, ctx), br = golden_pow(b, r, ctx);
    BigReal one(1, ctx);
    BigReal t1 = ln((br * Lr + one) / (ar * Lr + one));
    BigReal Lr2 = Lr * Lr;
    BigReal t2 = ln((mul_2si(Lr2, 1) + one) / pow_ui(Lr, 4));
    BigReal t3 = ln(((Lr + ar) / (Lr + br)) * golden_pow(a, 2 * r, ctx));
    BigReal t4 = ln(mul_2si(Lr2, 1) + one);
    BigReal edge = (Lr2 - one) / mul_2si(Lr, 3);
    if (lucas_weight) {
        return mul_2si(Fs * s5 * t1, -2) + mul_2si(Ls * t2, -2) - mul_2si(Ls, -1) +
               mul_2si(Lr2 * Fs * s5 * t3, -3) + mul_2si(Lr2 * Ls * t4, -3) -
               edge * Frs * s5 * t3 - edge * Lrs * t4;
    }
    return mul_2si(Ls / s5 * t1, -2) + mul_2si(Fs * t2, -2) - mul_2si(Fs, -1) +
           mul_2si(Lr2 * Ls / s5 * t3, -3) + mul_2si(Lr2 * Fs * t4, -3) -
           edge * Lrs / s5 * t3 - edge * Frs * t4;
}

// sum L_{2k+s} or F_{2k+s} over 4^k (2k-1)(2k)(2k+1), s any integer.
inline BigReal fl_shift(long s, bool lucas_weight, const PrecisionContext& ctx) {
    BigReal la = ln(golden(ctx).alpha);
    BigReal l5 = ln(BigReal(5, ctx));
    BigReal c516(BigRational(5, 16), ctx);
    if (lucas_weight) {
        BigReal Ls(lucas(s), ctx), Ls1(lucas(s + 1), ctx);
        BigReal Fsm1(fib(s - 1), ctx), Fs(fib(s), ctx);
        return -Ls * const_ln2(ctx) + c516 * Ls1 * l5 +
               mul_2si(sqrt(BigReal(5, ctx)) * (BigReal(15, ctx) * Fsm1 - Fs) * la, -3) -
               mul_2si(Ls, -1);
    }
    BigReal Fs(fib(s), ctx), Fs1(fib(s + 1), ctx);
    BigReal Lsm1(lucas(s - 1), ctx), Ls(lucas(s), ctx);
    return -Fs * const_ln2(ctx) + c516 * Fs1 * l5 +
           (BigReal(15, ctx) * Lsm1 - Ls) / mul_2si(sqrt(BigReal(5, ctx)), 3) * la -
           mul_2si(Fs, -1);
}

// The seven golden-power series evaluations.
inline BigReal alpha_series(int which, const PrecisionContext& ctx) {
    auto [a, b] = golden(ctx);
    BigReal la = ln(a);
    BigReal pi2 = const_pi(ctx) * const_pi(ctx);
    BigReal half(BigRational(1, 2), ctx);
    BigReal sa = sqrt(a);
    BigReal ath = arctanh(BigReal(1, ctx) / sa);
    switch (which) {
        case 1: // 1/2 - (3/4) ln a
            return half - BigReal(BigRational(3, 4), ctx) * la;
        case 2: // ((3 sqrt5 / 2) ln a - ln a - 1)/2
            return mul_2si(BigReal(BigRational(3, 2), ctx) * sqrt(BigReal(5, ctx)) * la - la -
                               BigReal(1, ctx), -1);
        case 3: // 1/2 - pi^2/60 - (3/4) ln a + (1/4) ln^2 a
            return half - pi2 / BigReal(60, ctx) - BigReal(BigRational(3, 4), ctx) * la +
                   mul_2si(la * la, -2);
        case 4: // 1/2 - arctanh(1/sqrt a) / (2 a sqrt a)
            return half - ath / mul_2si(a * sa, 1);
        case 5: // (a sqrt a / 2) arctanh(1/sqrt a) - 1/2 - ln a
            return mul_2si(a * sa * ath, -1) - half - la;
        case 6: // 1/2 - pi^2/40 - arctanh(1/sqrt a)/(2 a sqrt a) + (1/4) ln^2 a
            return half - pi2 / BigReal(40, ctx) - ath / mul_2si(a * sa, 1) + mul_2si(la * la, -2);
        case 7: // (pi^2/60 + 1 + 3/(4 a^3)) ln a - ln^3 a / 12 - zeta(3)/10 - 1/2
            return (pi2 / BigReal(60, ctx) + BigReal(1, ctx) +
                    BigReal(3, ctx) / mul_2si(pow_ui(a, 3), 2)) * la -
                   la * la * la / BigReal(12, ctx) - zeta(3, ctx) / BigReal(10, ctx) - half;
    }
    throw DomainError("alpha_series: which must be 1..7");
}

// Two-term dilogarithm closed forms (the right sides of the six relations);
// kind 23 and 24 take the even/odd parameter r.
inline BigReal dilog_two(int which, long r, const PrecisionContext& ctx) {
    auto [a, b] = golden(ctx);
    BigReal la = ln(a);
    BigReal l2 = const_ln2(ctx);
    BigReal l5 = ln(BigReal(5, ctx));
    BigReal pi2 = const_pi(ctx) * const_pi(ctx);
    switch (which) {
        case 21:
            return pi2 / BigReal(12, ctx) + mul_2si(la * la, 1) - l2 * l2;
        case 22:
            return pi2 / BigReal(12, ctx) + BigReal(6, ctx) * la * la - mul_2si(l2 * l2, 1) +
                   mul_2si(l2 * l5, 1) - l5 * l5 -
                   polylog(2, BigReal(BigRational(-1, 4), ctx), ctx);
        case 23: {
            if (r < 0 || r % 2 != 0) throw ParamDomainError("dilog_two(23): r must be even, >= 0");
            BigReal lr = ln(BigReal(lucas(r), ctx));
            return pi2 / BigReal(6, ctx) + BigReal(r * r, ctx) * la * la - lr * lr;
        }
        case 24: {
            if (r < 1 || r % 2 != 1) throw ParamDomainError("dilog_two(24): r must be odd, >= 1");
            BigReal lf = ln(BigReal(fib(r), ctx));
            return pi2 / BigReal(6, ctx) + BigReal(r * r, ctx) * la * la - mul_2si(l5 * l5, -2) -
                   l5 * lf - lf * lf;
        }
        case 25:
            return pi2 / BigReal(6, ctx) + mul_2si(la * la, 1) - mul_2si(l5 * l5, -1) +
                   mul_2si(l2 * l5, 1) - mul_2si(l2 * l2, 2) -
                   polylog(2, BigReal(BigRational(1, 5), ctx), ctx);
        case 26:
            return la * la - mul_2si(l5 * l5, -2) + ln(BigReal(3, ctx)) * l5 -
                   ln(BigReal(3, ctx)) * ln(BigReal(3, ctx)) +
                   BigReal(BigRational(3, 2), ctx) * polylog(2, BigReal(BigRational(1, 5), ctx), ctx) -
                   mul_2si(polylog(2, BigReal(BigRational(1, 25), ctx), ctx), -1);
    }
    throw DomainError("dilog_two: which must be 21..26");
}

// Ramanujan-type Lucas series (the five closed forms; 33 takes even r >= 0).
inline BigReal lucas_ramanujan(int which, long r, const PrecisionContext& ctx) {
    auto [a, b] = golden(ctx);
    BigReal la = ln(a);
    BigReal l2 = const_ln2(ctx);
    BigReal l5 = ln(BigReal(5, ctx));
    BigReal pi2 = const_pi(ctx) * const_pi(ctx);
    BigReal one(1, ctx);
    BigReal half(BigRational(1, 2), ctx);
    switch (which) {
        case 31: {
            BigReal sa2 = sqrt(mul_2si(a, 1));            // sqrt(2 a)
            BigReal t1 = arctanh(sqrt(mul_2si(a, -1)));   // arctanh sqrt(a/2)
            BigReal t2 = atan(sqrt(one / mul_2si(a, 1))); // arctan sqrt(1/(2a))
            return one - pi2 / BigReal(48, ctx) + mul_2si(l2 * l2, -2) - mul_2si(la * la, -1) -
                   t1 / mul_2si(a * a * sa2, 1) -
                   pow_ui(a, 2) * sqrt(a) / mul_2si(sqrt(BigReal(2, ctx)), 1) * t2;
        }
        case 32: {
            BigReal s5a = sqrt(BigReal(5, ctx) * a);
            BigReal t1 = arctanh(a * sqrt(a) / sqrt(BigReal(5, ctx)));
            BigReal t2 = atan(one / (a * s5a));
            return one - pi2 / BigReal(48, ctx) + mul_2si(l2 * l2, -1) -
                   BigReal(BigRational(3, 2), ctx) * la * la - mul_2si(l2 * l5, -1) +
                   mul_2si(l5 * l5, -2) +
                   mul_2si(polylog(2, BigReal(BigRational(-1, 4), ctx), ctx), -2) -
                   t1 / (pow_ui(a, 3) * s5a) - pow_ui(a, 3) * sqrt(a) / sqrt(BigReal(5, ctx)) * t2;
        }
        case 33: {
            if (r < 0 || r % 2 != 0) throw ParamDomainError("lucas_ramanujan(33): r must be even");
            BigReal Lr(lucas(r), ctx);
            BigReal lr = ln(Lr);
            BigReal a3r = golden_pow(a, 3 * r, ctx);
            BigReal ar = golden_pow(a, r, ctx);
            return one - pi2 / BigReal(24, ctx) - mul_2si(BigReal(r * r, ctx) * la * la, -2) +
                   mul_2si(lr * lr, -2) -
                   mul_2si(sqrt(one / (a3r * Lr)) * arctanh(sqrt(ar / Lr)), -1) -
                   mul_2si(sqrt(a3r / Lr) * arctanh(sqrt(one / (ar * Lr))), -1);
        }
        case 34: {
            BigReal s5 = sqrt(BigReal(5, ctx));
            BigReal ss5 = sqrt(s5);
            BigReal t1 = arctanh(sqrt(a / s5));
            BigReal t2 = arctanh(sqrt(one / (s5 * a)));
            return one - pi2 / BigReal(24, ctx) + mul_2si(l5 * l5, -4) - mul_2si(la * la, -2) -
                   mul_2si((t1 / (a * sqrt(a)) + a * sqrt(a) * t2) / ss5, -1);
        }
        case 35:
            return one - pi2 / BigReal(24, ctx) - mul_2si(la * la, -1) -
                   BigReal(BigRational(9, 8), ctx) * sqrt(BigReal(5, ctx)) * la +
                   BigReal(BigRational(5, 16), ctx) * l5 + mul_2si(l5 * l5, -3) -
                   mul_2si(l2 * l5, -1) + l2 * l2 +
                   mul_2si(polylog(2, BigReal(BigRational(1, 5), ctx), ctx), -2);
    }
    throw DomainError("lucas_ramanujan: which must be 31..35");
}

// Theorem on sum (F_p^k L_{qk} + F_q^k L_{pk}) / (F_{p+q}^k (2k-1)(2k)^2(2k+1)),
// p, q even — transcribed exactly as printed (including the minus signs on the
// two log products, which verification flags).
inline BigReal ram61(long p, long q, const PrecisionContext& ctx) {
    if (p % 2 != 0 || q % 2 != 0 || p <= 0 || q <= 0)
        throw ParamDomainError("ram61: p and q must be positive even integers");
    auto [a, b] = golden(ctx);
    BigReal Fp(fib(p), ctx), Fq(fib(q), ctx), Fpq(fib(p + q), ctx);
    BigReal aq = golden_pow(a, q, ctx), bp = golden_pow(b, p, ctx);
    BigReal ap = golden_pow(a, p, ctx), bq = golden_pow(b, q, ctx);
    BigReal one(1, ctx);
    BigReal x1 = Fp / Fpq * aq, x2 = Fq / Fpq * bp;
    BigReal x3 = Fq / Fpq * ap, x4 = Fp / Fpq * bq;
    for (const BigReal* x : {&x1, &x2, &x3, &x4})
        if (!(x->sign() > 0) || !(*x < one))
            throw ParamDomainError("ram61: radicand outside (0,1) for these p, q");
    BigReal pi2 = const_pi(ctx) * const_pi(ctx);
    BigReal acc = BigReal(2, ctx) - pi2 / BigReal(12, ctx);
    acc -= mul_2si(ln(x1) * ln(x2), -2);
    acc -= mul_2si(ln(x3) * ln(x4), -2);
    acc -= mul_2si(Fq * bp / sqrt(Fpq * Fp * aq) * arctanh(sqrt(x1)), -1);
    acc -= mul_2si(Fp * aq / sqrt(Fpq * Fq * bp) * arctanh(sqrt(x2)), -1);
    acc -= mul_2si(Fp * bq / sqrt(Fpq * Fq * ap) * arctanh(sqrt(x3)), -1);
    acc -= mul_2si(Fq * ap / sqrt(Fpq * Fp * bq) * arctanh(sqrt(x4)), -1);
    return acc;
}

// m-th derivative closed form for sum C(2k,m) z^{2k} / ((2k-1)(2k)(2k+1)).
inline BigReal binom_lemma(const BigReal& z, long m, const PrecisionContext& ctx) {
    if (m < 2) throw ParamDomainError("binom_lemma: m must be >= 2");
    BigReal az = abs(z);
    if (!(az > 0L) || !(az < BigReal(1, ctx)))
        throw DomainError("binom_lemma: need 0 < |z| < 1");
    BigReal one(1, ctx);
    BigReal zp = z / (one + z), zm = z / (one - z);
    int sm = (m % 2 == 0) ? 1 : -1; // (-1)^m
    BigReal acc(0, ctx);
    for (long j = 0; j < m; ++j) {
        BigReal t = BigReal(-sm, ctx) * pow_ui(zp, static_cast<unsigned long>(m - j)) +
                    BigReal((j % 2 == 0) ? 1 : -1, ctx) * pow_ui(zm, static_cast<unsigned long>(m - j));
        acc += t / BigReal(m - j, ctx);
    }
    acc = acc / mul_2si(z, 2);
    acc += (BigReal(-sm, ctx) * (one + mul_2si(z, -1)) * pow_ui(zp, static_cast<unsigned long>(m)) -
            (one - mul_2si(z, -1)) * pow_ui(zm, static_cast<unsigned long>(m))) /
           mul_2si(BigReal(m, ctx), 1);
    acc += (BigReal(sm, ctx) * (one + z) * pow_ui(zp, static_cast<unsigned long>(m)) +
            (one - z) * pow_ui(zm, static_cast<unsigned long>(m))) /
           mul_2si(BigReal(m - 1, ctx), 2);
    acc += BigReal(sm, ctx) / mul_2si(z, 2) * ln((one + z) / (one - z));
    return acc;
}

// z = 1/sqrt5 specialization of the binomial lemma.
inline BigReal binom_s5a(long m, const PrecisionContext& ctx) {
    if (m < 2) throw ParamDomainError("binom_s5a: m must be >= 2");
    BigReal la = ln(golden(ctx).alpha);
    BigReal acc(0, ctx);
    BigReal c54(BigRational(5, 4), ctx);
    for (long j = 0; j <= (m - 1) / 2; ++j)
        acc += c54 * BigReal(fib(m - 2 * j), ctx) / BigReal(m - 2 * j, ctx) *
               mul_2si(BigReal(1, ctx), -(m - 2 * j));
    for (long j = 1; j <= (m - 1) - (m - 1) / 2; ++j) // ceil((m-1)/2)
        acc -= c54 * BigReal(fib(m - 2 * j + 1), ctx) / BigReal(m - 2 * j + 1, ctx) *
               mul_2si(BigReal(1, ctx), -(m - 2 * j + 1));
    acc -= BigReal(lucas(m), ctx) / BigReal(m, ctx) * mul_2si(BigReal(1, ctx), -(m + 1));
    acc += BigReal(fib(m), ctx) / BigReal(m, ctx) * mul_2si(BigReal(1, ctx), -(m + 2));
    acc += BigReal(fib(m - 1), ctx) / BigReal(m - 1, ctx) * mul_2si(BigReal(1, ctx), -(m + 1));
    BigReal logterm = mul_2si(sqrt(BigReal(5, ctx)) * la, -1);
    return (m % 2 == 0) ? acc + logterm : acc - logterm;
}

// z = 2/sqrt5 specialization.
inline BigReal binom_s5b(long m, const PrecisionContext& ctx) {
    if (m < 2) throw ParamDomainError("binom_s5b: m must be >= 2");
    BigReal la = ln(golden(ctx).alpha);
    BigReal acc(0, ctx);
    BigReal c58(BigRational(5, 8), ctx);
    for (long j = 0; j <= (m - 1) / 2; ++j)
        acc += c58 * BigReal(fib(3 * (m - 2 * j)), ctx) / BigReal(m - 2 * j, ctx) *
               mul_2si(BigReal(1, ctx), m - 2 * j);
    for (long j = 1; j <= (m - 1) - (m - 1) / 2; ++j)
        acc -= c58 * BigReal(fib(3 * (m - 2 * j + 1)), ctx) / BigReal(m - 2 * j + 1, ctx) *
               mul_2si(BigReal(1, ctx), m - 2 * j + 1);
    acc -= BigReal(lucas(3 * m), ctx) / BigReal(m, ctx) * mul_2si(BigReal(1, ctx), m - 1);
    acc += BigReal(fib(3 * m), ctx) / BigReal(m, ctx) * mul_2si(BigReal(1, ctx), m - 1);
    acc += BigReal(fib(3 * (m - 1)), ctx) / BigReal(m - 1, ctx) * mul_2si(BigReal(1, ctx), m - 2);
    BigReal logterm = BigReal(3, ctx) * sqrt(BigReal(5, ctx)) * la / BigReal(4, ctx);
    return (m % 2 == 0) ? acc + logterm : acc - logterm;
}

// z = sqrt5/3 specialization, transcribed as printed (verification reports
// its discrepancy).
inline BigReal binom_b59(long m, const PrecisionContext& ctx) {
    if (m < 2) throw ParamDomainError("binom_b59: m must be >= 2");
    BigReal s5 = sqrt(BigReal(5, ctx));
    auto A = [&](long mm, long j) -> BigReal {
        bool me = (mm % 2 == 0), je = (j % 2 == 0);
        long d = mm - j;
        if (me && !je)
            return -sqrt(pow_ui(BigReal(5, ctx), static_cast<unsigned long>(d))) *
                   BigReal(lucas(2 * d), ctx) * mul_2si(BigReal(1, ctx), -d);
        if (!me && je)
            return sqrt(pow_ui(BigReal(5, ctx), static_cast<unsigned long>(d))) *
                   BigReal(lucas(2 * d), ctx) * mul_2si(BigReal(1, ctx), -d);
        if (me && je)
            return sqrt(pow_ui(BigReal(5, ctx), static_cast<unsigned long>(d + 1))) *
                   BigReal(fib(2 * d), ctx) * mul_2si(BigReal(1, ctx), -d);
        return -sqrt(pow_ui(BigReal(5, ctx), static_cast<unsigned long>(d + 1))) *
               BigReal(fib(2 * d), ctx) * mul_2si(BigReal(1, ctx), -d);
    };
    BigReal acc(0, ctx);
    for (long j = 0; j < m; ++j) acc += A(m, j) / BigReal(m - j, ctx);
    acc = BigReal(3, ctx) / (mul_2si(s5, 2)) * acc;
    BigReal mid(0, ctx), last(0, ctx);
    if (m % 2 == 0) {
        BigReal p5 = pow_ui(BigReal(5, ctx), static_cast<unsigned long>(m / 2));
        mid = p5 * (-BigReal(BigRational(5, 2), ctx) * BigReal(lucas(2 * m), ctx) +
                    BigReal(lucas(2 * m - 1), ctx));
        last = p5 * BigReal(lucas(2 * m - 2), ctx);
    } else {
        BigReal p5 = pow_ui(BigReal(5, ctx), static_cast<unsigned long>((m + 1) / 2));
        mid = p5 * (-BigReal(BigRational(5, 2), ctx) * BigReal(fib(2 * m), ctx) +
                    BigReal(fib(2 * m - 1), ctx));
        last = p5 * BigReal(fib(2 * m - 2), ctx);
    }
    acc += mid / BigReal(m, ctx) * mul_2si(BigReal(1, ctx), -(m + 1));
    acc += last / (BigReal(3 * (m - 1), ctx)) * mul_2si(BigReal(1, ctx), -(m + 1));
    return acc;
}

// The two F_n-binomial closed forms (z = F_n sqrt5 / L_n, n even; binomial
// lower index 2m or 2m+1).
inline BigReal binom_fl_even(long n, long m, const PrecisionContext& ctx) {
    if (n <= 0 || n % 2 != 0) throw ParamDomainError("binom_fl_even: n must be positive even");
    if (m < 1) throw ParamDomainError("binom_fl_even: m must be >= 1");
    BigReal Fn(fib(n), ctx), Ln(lucas(n), ctx);
    BigReal la = ln(golden(ctx).alpha);
    BigReal s5 = sqrt(BigReal(5, ctx));
    BigReal acc(0, ctx);
    auto p5 = [&](long e) { return pow_ui(BigReal(5, ctx), static_cast<unsigned long>(e)); };
    auto fpow = [&](long e) { return pow_ui(Fn, static_cast<unsigned long>(e)); };
    for (long j = 0; j <= m - 1; ++j) {
        long e = 2 * m - 2 * j;
        acc += Ln / mul_2si(Fn, 2) * p5(m - j) / BigReal(e, ctx) * fpow(e) *
               mul_2si(BigReal(fib(n * e), ctx), -e);
    }
    for (long j = 1; j <= m; ++j) {
        long e = 2 * m - 2 * j + 1;
        acc -= Ln / mul_2si(Fn, 2) * p5(m - j) / BigReal(e, ctx) * fpow(e) *
               mul_2si(BigReal(lucas(n * e), ctx), -e);
    }
    acc -= p5(m) / BigReal(m, ctx) * fpow(2 * m) * mul_2si(BigReal(lucas(2 * n * m), ctx), -(2 * m + 2));
    acc += p5(m + 1) / BigReal(m, ctx) * fpow(2 * m + 1) *
           mul_2si(BigReal(fib(2 * n * m), ctx), -(2 * m + 3)) / Ln;
    acc += p5(m) / BigReal(2 * m - 1, ctx) * fpow(2 * m) *
           mul_2si(BigReal(lucas(n * (2 * m - 1)), ctx), -(2 * m + 1)) / Ln;
    acc += BigReal(n, ctx) * Ln / (mul_2si(Fn, 1) * s5) * la;
    return acc;
}

inline BigReal binom_fl_odd(long n, long m, const PrecisionContext& ctx) {
    if (n <= 0 || n % 2 != 0) throw ParamDomainError("binom_fl_odd: n must be positive even");
    if (m < 1) throw ParamDomainError("binom_fl_odd: m must be >= 1");
    BigReal Fn(fib(n), ctx), Ln(lucas(n), ctx);
    BigReal la = ln(golden(ctx).alpha);
    BigReal s5 = sqrt(BigReal(5, ctx));
    BigReal acc(0, ctx);
    auto p5 = [&](long e) { return pow_ui(BigReal(5, ctx), static_cast<unsigned long>(e)); };
    auto fpow = [&](long e) { return pow_ui(Fn, static_cast<unsigned long>(e)); };
    for (long j = 0; j <= m; ++j) {
        long e = 2 * m - 2 * j + 1;
        acc += Ln / mul_2si(Fn, 2) * p5(m - j) / BigReal(e, ctx) * fpow(e) *
               mul_2si(BigReal(lucas(n * e), ctx), -e);
    }
    for (long j = 1; j <= m; ++j) {
        long e = 2 * m - 2 * j + 2;
        acc -= Ln / mul_2si(Fn, 2) * p5(m - j + 1) / BigReal(e, ctx) * fpow(e) *
               mul_2si(BigReal(fib(n * e), ctx), -e);
    }
    acc -= p5(m + 1) / BigReal(2 * m + 1, ctx) * fpow(2 * m + 1) *
           mul_2si(BigReal(fib(n * (2 * m + 1)), ctx), -(2 * m + 2));
    acc += p5(m + 1) / BigReal(2 * m + 1, ctx) * fpow(2 * m + 2) *
           mul_2si(BigReal(lucas(n * (2 * m + 1)), ctx), -(2 * m + 3)) / Ln;
    acc += p5(m + 1) / BigReal(m, ctx) * fpow(2 * m + 1) *
           mul_2si(BigReal(fib(2 * m * n), ctx), -(2 * m + 3)) / Ln;
    acc -= BigReal(n, ctx) * Ln / (mul_2si(Fn, 1) * s5) * la;
    return acc;
}

// m-th derivative closed form for sum C(2k,m) z^{2k} / ((2k-1) k^2 (2k+1)).
inline BigReal binom_k2(const BigReal& z, long m, const PrecisionContext& ctx) {
    if (m < 2) throw ParamDomainError("binom_k2: m must be >= 2");
    BigReal az = abs(z);
    if (!(az > 0L) || !(az < BigReal(1, ctx))) throw DomainError("binom_k2: need 0 < |z| < 1");
    BigReal one(1, ctx);
    BigReal zp = z / (one + z), zm = z / (one - z);
    int sm = (m % 2 == 0) ? 1 : -1; // (-1)^m
    BigReal acc = mul_2si(BigReal(-sm, ctx) / BigReal(m, ctx) * ln(one - z * z), 1);
    acc += BigReal(sm, ctx) / z * ln((one - z) / (one + z));
    acc += (BigReal(sm, ctx) * (one + z) * pow_ui(zp, static_cast<unsigned long>(m)) +
            (one - z) * pow_ui(zm, static_cast<unsigned long>(m))) /
           BigReal(m - 1, ctx);
    acc -= (BigReal(sm, ctx) * z * pow_ui(zp, static_cast<unsigned long>(m)) -
            z * pow_ui(zm, static_cast<unsigned long>(m))) /
           BigReal(m, ctx);
    BigReal inner(0, ctx);
    for (long j = 1; j <= m - 1; ++j)
        inner += (BigReal(sm, ctx) * pow_ui(zp, static_cast<unsigned long>(m - j)) +
                  BigReal((j % 2 == 0) ? 1 : -1, ctx) * pow_ui(zm, static_cast<unsigned long>(m - j))) /
                 BigReal(m - j, ctx);
    acc += mul_2si(inner, 1) / BigReal(m, ctx);
    for (long j = 0; j <= m - 1; ++j)
        acc += (BigReal(sm, ctx) * pow_ui(zp, static_cast<unsigned long>(m - j)) -
                BigReal((j % 2 == 0) ? 1 : -1, ctx) * pow_ui(zm, static_cast<unsigned long>(m - j))) /
               (BigReal(m - j, ctx) * z);
    return acc;
}

// z = 1/sqrt5 specialization of binom_k2.
inline BigReal binom_k2_s5(long m, const PrecisionContext& ctx) {
    if (m < 2) throw ParamDomainError("binom_k2_s5: m must be >= 2");
    BigReal la = ln(golden(ctx).alpha);
    int sm = (m % 2 == 0) ? 1 : -1;
    BigReal acc = mul_2si(BigReal(sm, ctx) / BigReal(m, ctx) * ln(BigReal(BigRational(5, 4), ctx)), 1);
    acc -= BigReal(sm, ctx) * mul_2si(sqrt(BigReal(5, ctx)), 1) * la;
    acc += BigReal(fib(m - 1), ctx) / BigReal(m - 1, ctx) * mul_2si(BigReal(1, ctx), -(m - 1));
    acc += BigReal(fib(m), ctx) / BigReal(m, ctx) * mul_2si(BigReal(1, ctx), -m);
    BigReal lsum(0, ctx);
    for (long j = 1; j <= (m - 1) / 2; ++j)
        lsum += BigReal(lucas(m - 2 * j), ctx) / BigReal(m - 2 * j, ctx) *
                mul_2si(BigReal(1, ctx), -(m - 2 * j));
    for (long j = 1; j <= (m - 1) - (m - 1) / 2; ++j)
        lsum -= BigReal(lucas(m - 2 * j + 1), ctx) / BigReal(m - 2 * j + 1, ctx) *
                mul_2si(BigReal(1, ctx), -(m - 2 * j + 1));
    acc += mul_2si(lsum, 1) / BigReal(m, ctx);
    for (long j = 0; j <= (m - 1) / 2; ++j)
        acc -= BigReal(5, ctx) * BigReal(fib(m - 2 * j), ctx) / BigReal(m - 2 * j, ctx) *
               mul_2si(BigReal(1, ctx), -(m - 2 * j));
    for (long j = 1; j <= (m - 1) - (m - 1) / 2; ++j)
        acc += BigReal(5, ctx) * BigReal(fib(m - 2 * j + 1), ctx) / BigReal(m - 2 * j + 1, ctx) *
               mul_2si(BigReal(1, ctx), -(m - 2 * j + 1));
    return acc;
}

} // namespace rhs

} // namespace ramaseries
