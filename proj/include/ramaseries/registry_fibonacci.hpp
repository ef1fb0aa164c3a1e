#pragma once

#include <memory>

#include "ramaseries/catalog.hpp"

namespace ramaseries {

namespace reg {

// sum (x^k + y^k)/k^2 — the generic two-term dilogarithm left side.
inline TermGenerator power_pair_over_k2(const BigReal& x, const BigReal& y,
                                        const PrecisionContext& ctx, std::string what) {
    BigReal xv = x, yv = y;
    return TermGenerator{[ctx, xv, yv](long k) {
                             auto uk = static_cast<unsigned long>(k);
                             return (pow_ui(xv, uk) + pow_ui(yv, uk)) / BigReal(BigInt(k) * k, ctx);
                         },
                         std::move(what)};
}

// Reflection-formula argument pair (a, 1-a) built from the Hoggatt
// decompositions; throws ParamDomainError when either log argument would be
// non-positive for these p, q.
inline std::pair<BigReal, BigReal> refl_args(int which, long p, long q,
                                             const PrecisionContext& ctx) {
    if (p < 1 || q < 1 || p > 30 || q > 30)
        throw ParamDomainError("reflection identities: require 1 <= p, q <= 30");
    auto [al, be] = golden(ctx);
    BigReal s5 = al - be;
    BigReal Fp(fib(p), ctx), Fq(fib(q), ctx), Fpq(fib(p + q), ctx);
    BigReal Lp(lucas(p), ctx), Lpq(lucas(p + q), ctx);
    BigReal a(ctx), b(ctx);
    switch (which) {
        case 1:
            a = Fp / Fpq * golden_pow(al, q, ctx);
            b = Fq / Fpq * golden_pow(be, p, ctx);
            break;
        case 2:
            a = Fq / Fpq * golden_pow(al, p, ctx);
            b = Fp / Fpq * golden_pow(be, q, ctx);
            break;
        case 3:
            a = Lp / Lpq * golden_pow(al, q, ctx);
            b = -(Fq * s5 / Lpq) * golden_pow(be, p, ctx);
            break;
        case 4:
            a = Lp / Lpq * golden_pow(be, q, ctx);
            b = Fq * s5 / Lpq * golden_pow(al, p, ctx);
            break;
        default:
            throw ParamDomainError("reflection identities: which must be 1..4");
    }
    BigReal one(1, ctx);
    if (!(a > 0L) || !(a < one) || !(b > 0L) || !(b < one))
        throw ParamDomainError("reflection arguments leave (0,1) for these p, q");
    return {a, b};
}

// ---------------------------------------------------------------------------
// Group 3: dilogarithm values and two-term identities at the golden section.

inline void add_golden_dilog(std::vector<IdentityFamily>& fams) {
    // Li2(-1): alternating bound
    fams.push_back(IdentityFamily{
        .id = "SPECIAL.LI2.1",
        .source = "dilogarithm at -1",
        .status = TrustStatus::MustPass,
        .params_doc = "",
        .defaults = {},
        .lhs = [](const Params&, const PrecisionContext& ctx) {
            return TermGenerator{[ctx](long k) {
                                     BigReal t = BigReal(1, ctx) / BigReal(BigInt(k) * k, ctx);
                                     return (k % 2 == 0) ? t : -t;
                                 },
                                 "sum (-1)^k/k^2"};
        },
        .tail = [](const Params&, const PrecisionContext&) { return TailStrategy::alternating(); },
        .rhs = [](const Params&, const PrecisionContext& ctx) {
            return special_value(SpecialValueId::LI2_MINUS1, ctx);
        },
        .default_width = "1e-12",
    });
    // Li2(-alpha) lies outside the unit disk, so the entry checks the
    // equivalent two-term rearrangement
    //   Li2(a/2) + Li2(b/2) - Li2(-b) = Li2(-a) + pi^2/12 - ln(1-a/2) ln(1-b/2),
    // whose left side is a plain geometric sum.
    fams.push_back(IdentityFamily{
        .id = "SPECIAL.LI2.2",
        .source = "dilogarithm at -alpha via the two-term identity",
        .status = TrustStatus::MustPass,
        .params_doc = "",
        .defaults = {},
        .lhs = [](const Params&, const PrecisionContext& ctx) {
            auto [al, be] = golden(ctx);
            BigReal x1 = mul_2si(al, -1), x2 = mul_2si(be, -1), x3 = -be;
            return TermGenerator{[ctx, x1, x2, x3](long k) {
                                     auto uk = static_cast<unsigned long>(k);
                                     return (pow_ui(x1, uk) + pow_ui(x2, uk) - pow_ui(x3, uk)) /
                                            BigReal(BigInt(k) * k, ctx);
                                 },
                                 "sum ((a/2)^k + (b/2)^k - (-b)^k)/k^2"};
        },
        .tail = [](const Params&, const PrecisionContext& ctx) {
            return TailStrategy::geometric(BigReal("0.83", ctx));
        },
        .rhs = [](const Params&, const PrecisionContext& ctx) {
            auto [al, be] = golden(ctx);
            BigReal one(1, ctx);
            return special_value(SpecialValueId::LI2_MINUS_ALPHA, ctx) +
                   const_pi(ctx) * const_pi(ctx) / BigReal(12, ctx) -
                   ln(one - mul_2si(al, -1)) * ln(one - mul_2si(be, -1));
        },
    });
    struct SimpleLi {
        const char* id;
        const char* what;
        SpecialValueId sv;
        long order;  // polylog order
        int base;    // 1: 1/alpha, 2: 1/alpha^2
    };
    for (const SimpleLi& s : {SimpleLi{"SPECIAL.LI2.3", "dilogarithm at 1/alpha",
                                       SpecialValueId::LI2_MINUS_BETA, 2, 1},
                              SimpleLi{"SPECIAL.LI2.4", "dilogarithm at 1/alpha^2",
                                       SpecialValueId::LI2_BETA_SQ, 2, 2},
                              SimpleLi{"SPECIAL.LI3.ALPHA", "trilogarithm at 1/alpha^2",
                                       SpecialValueId::LI3_INV_ALPHA_SQ, 3, 2}}) {
        fams.push_back(IdentityFamily{
            .id = s.id,
            .source = s.what,
            .status = TrustStatus::MustPass,
            .params_doc = "",
            .defaults = {},
            .lhs = [s](const Params&, const PrecisionContext& ctx) {
                BigReal base = BigReal(1, ctx) / golden(ctx).alpha;
                if (s.base == 2) base = base * base;
                long n = s.order;
                return TermGenerator{[ctx, base, n](long k) {
                                         return pow_ui(base, static_cast<unsigned long>(k)) /
                                                pow_ui(BigReal(k, ctx), static_cast<unsigned long>(n));
                                     },
                                     std::string("defining series for ") + s.what};
            },
            .tail = [s](const Params&, const PrecisionContext& ctx) {
                BigReal base = BigReal(1, ctx) / golden(ctx).alpha;
                if (s.base == 2) base = base * base;
                return TailStrategy::geometric(base);
            },
            .rhs = [s](const Params&, const PrecisionContext& ctx) {
                return special_value(s.sv, ctx);
            },
        });
    }
    // Campbell's two-term difference: odd powers survive, so reindex over
    // j with term 2 q^(2j-1)/(2j-1)^2, q = 1/alpha^3.
    fams.push_back(IdentityFamily{
        .id = "SPECIAL.CAMPBELL",
        .source = "two-term dilogarithm difference at alpha^-3 and beta^3",
        .status = TrustStatus::MustPass,
        .params_doc = "",
        .defaults = {},
        .lhs = [](const Params&, const PrecisionContext& ctx) {
            BigReal q = BigReal(1, ctx) / pow_ui(golden(ctx).alpha, 3);
            return TermGenerator{[ctx, q](long j) {
                                     long m = 2 * j - 1;
                                     return mul_2si(pow_ui(q, static_cast<unsigned long>(m)), 1) /
                                            BigReal(BigInt(m) * m, ctx);
                                 },
                                 "odd terms of Li2(1/a^3) - Li2(b^3)"};
        },
        .tail = [](const Params&, const PrecisionContext& ctx) {
            BigReal q = BigReal(1, ctx) / pow_ui(golden(ctx).alpha, 3);
            return TailStrategy::geometric(q * q);
        },
        .rhs = [](const Params&, const PrecisionContext& ctx) {
            return special_value(SpecialValueId::CAMPBELL_ALPHA3, ctx);
        },
    });
    // the seven golden-power series
    for (int i = 1; i <= 7; ++i) {
        fams.push_back(IdentityFamily{
            .id = "ALPHA." + num_str(i),
            .source = "golden-power specializations of the closed forms",
            .status = TrustStatus::MustPass,
            .params_doc = "",
            .defaults = {},
            .lhs = [i](const Params&, const PrecisionContext& ctx) {
                // entries 1-3 and 7 use 1/alpha^2k; 4-6 use 1/alpha^k
                bool squared = (i <= 3 || i == 7);
                long p = 0;
                if (i == 2 || i == 5) p = 1;
                if (i == 3 || i == 6) p = 2;
                if (i == 7) p = 3;
                BigReal base = BigReal(1, ctx) / golden(ctx).alpha;
                if (squared) base = base * base;
                return TermGenerator{[ctx, base, p](long k) {
                                         return pow_ui(base, static_cast<unsigned long>(k)) /
                                                BigReal(kern312_z(k, p), ctx);
                                     },
                                     "golden-power series " + num_str(i)};
            },
            .tail = [i](const Params&, const PrecisionContext& ctx) {
                BigReal base = BigReal(1, ctx) / golden(ctx).alpha;
                if (i <= 3 || i == 7) base = base * base;
                return TailStrategy::geometric(base);
            },
            .rhs = [i](const Params&, const PrecisionContext& ctx) {
                return rhs::alpha_series(i, ctx);
            },
        });
    }
    // the six two-term relations (23 and 24 take the even/odd parameter r)
    struct TwoTerm {
        int which;
        std::vector<Params> defaults;
        const char* doc;
    };
    for (const TwoTerm& t :
         {TwoTerm{21, {}, ""}, TwoTerm{22, {}, ""},
          TwoTerm{23, {pset({{"r", "2"}})}, "r: even integer >= 0"},
          TwoTerm{24, {pset({{"r", "1"}})}, "r: odd integer >= 1"},
          TwoTerm{25, {}, ""}, TwoTerm{26, {}, ""}}) {
        fams.push_back(IdentityFamily{
            .id = "DILOG.TWO." + num_str(t.which),
            .source = "two-term dilogarithm relation at golden-section arguments",
            .status = TrustStatus::MustPass,
            .params_doc = t.doc,
            .defaults = t.defaults,
            .lhs = [t](const Params& ps, const PrecisionContext& ctx) {
                auto [al, be] = golden(ctx);
                BigReal x(ctx), y(ctx);
                switch (t.which) {
                    case 21: x = mul_2si(al, -1); y = mul_2si(be, -1); break;
                    case 22:
                        x = pow_ui(al, 3) / BigReal(5, ctx);
                        y = pow_ui(be, 3) / BigReal(5, ctx);
                        break;
                    case 23: {
                        long r = param_long(ps, "r");
                        if (r < 0 || r % 2 != 0 || r > 40)
                            throw ParamDomainError("DILOG.TWO.23: r must be even in 0..40");
                        BigReal Lr(lucas(r), ctx);
                        x = golden_pow(al, r, ctx) / Lr;
                        y = golden_pow(be, r, ctx) / Lr;
                        break;
                    }
                    case 24: {
                        long r = param_long(ps, "r");
                        if (r < 1 || r % 2 != 1 || r > 39)
                            throw ParamDomainError("DILOG.TWO.24: r must be odd in 1..39");
                        BigReal d = sqrt(BigReal(5, ctx)) * BigReal(fib(r), ctx);
                        x = golden_pow(al, r, ctx) / d;
                        y = -golden_pow(be, r, ctx) / d;
                        break;
                    }
                    case 25: x = mul_2si(al * al, -2); y = mul_2si(be * be, -2); break;
                    default: x = al / BigReal(3, ctx); y = be / BigReal(3, ctx); break;
                }
                return power_pair_over_k2(x, y, ctx, "two-term dilogarithm series " + num_str(t.which));
            },
            .tail = [t](const Params& ps, const PrecisionContext& ctx) {
                auto [al, be] = golden(ctx);
                switch (t.which) {
                    case 21: return TailStrategy::geometric(with_margin(mul_2si(al, -1), "1.01", ctx));
                    case 22:
                        return TailStrategy::geometric(
                            with_margin(pow_ui(al, 3) / BigReal(5, ctx), "1.01", ctx));
                    case 23: {
                        long r = param_long(ps, "r");
                        return TailStrategy::geometric(golden_pow(al, r, ctx) / BigReal(lucas(r), ctx));
                    }
                    case 24: {
                        long r = param_long(ps, "r");
                        return TailStrategy::geometric(golden_pow(al, r, ctx) /
                                                       (sqrt(BigReal(5, ctx)) * BigReal(fib(r), ctx)));
                    }
                    case 25: return TailStrategy::geometric(mul_2si(al * al, -2));
                    default:
                        return TailStrategy::geometric(with_margin(al / BigReal(3, ctx), "1.01", ctx));
                }
            },
            .rhs = [t](const Params& ps, const PrecisionContext& ctx) {
                long r = 0;
                if (t.which == 23 || t.which == 24) r = param_long(ps, "r");
                return rhs::dilog_two(t.which, r, ctx);
            },
        });
    }
    // reflection-formula identities with Hoggatt decompositions
    struct Refl {
        int which;
        std::vector<Params> defaults;
    };
    auto pq = [](long p, long q) { return pset({{"p", num_str(p)}, {"q", num_str(q)}}); };
    for (const Refl& r : {Refl{1, {pq(2, 2), pq(2, 4)}},
                          Refl{2, {pq(1, 2), pq(2, 2), pq(2, 4), pq(3, 2)}},
                          Refl{3, {pq(1, 2), pq(3, 2)}},
                          Refl{4, {pq(1, 2), pq(2, 2), pq(2, 4), pq(3, 2)}}}) {
        fams.push_back(IdentityFamily{
            .id = "DILOG.REFL." + num_str(r.which),
            .source = "dilogarithm reflection formula on a Hoggatt split of unity",
            .status = TrustStatus::MustPass,
            .params_doc = "p, q: positive integers within the identity's positivity domain",
            .defaults = r.defaults,
            .lhs = [r](const Params& ps, const PrecisionContext& ctx) {
                auto [a, b] = refl_args(r.which, param_long(ps, "p"), param_long(ps, "q"), ctx);
                return power_pair_over_k2(a, b, ctx, "reflection pair series " + num_str(r.which));
            },
            .tail = [r](const Params& ps, const PrecisionContext& ctx) {
                auto [a, b] = refl_args(r.which, param_long(ps, "p"), param_long(ps, "q"), ctx);
                return TailStrategy::geometric(a > b ? a : b);
            },
            .rhs = [r](const Params& ps, const PrecisionContext& ctx) {
                auto [a, b] = refl_args(r.which, param_long(ps, "p"), param_long(ps, "q"), ctx);
                return const_pi(ctx) * const_pi(ctx) / BigReal(6, ctx) - ln(a) * ln(b);
            },
        });
    }
    // Lucas/Fibonacci restatements of the six two-term relations, summed with
    // exact integer numerators.
    struct Restate {
        int idx;
        int rhs_which;
        std::vector<Params> defaults;
        const char* doc;
    };
    for (const Restate& rs : {Restate{1, 21, {}, ""},
                              Restate{2, 22, {}, ""},
                              Restate{3, 23, {pset({{"r", "2"}}), pset({{"r", "4"}})}, "r: even >= 0"},
                              Restate{4, 24, {pset({{"r", "1"}}), pset({{"r", "3"}})}, "r: odd >= 1"},
                              Restate{5, 25, {}, ""},
                              Restate{6, 26, {}, ""}}) {
        fams.push_back(IdentityFamily{
            .id = "LUCAS.RESTATE." + num_str(rs.idx),
            .source = "Lucas-number series restatement of a two-term dilogarithm relation",
            .status = TrustStatus::MustPass,
            .params_doc = rs.doc,
            .defaults = rs.defaults,
            .lhs = [rs](const Params& ps, const PrecisionContext& ctx) {
                switch (rs.idx) {
                    case 1:
                        return TermGenerator{[ctx](long k) {
                                                 BigInt den = (BigInt(1) << k) * k * k;
                                                 return BigReal(lucas(k), ctx) / BigReal(den, ctx);
                                             },
                                             "sum L_k/(2^k k^2)"};
                    case 2:
                        return TermGenerator{[ctx](long k) {
                                                 BigInt den = ipow(BigInt(5), static_cast<unsigned long>(k)) * k * k;
                                                 return BigReal(lucas(3 * k), ctx) / BigReal(den, ctx);
                                             },
                                             "sum L_3k/(5^k k^2)"};
                    case 3: {
                        long r = param_long(ps, "r");
                        if (r < 0 || r % 2 != 0 || r > 10)
                            throw ParamDomainError("LUCAS.RESTATE.3: r must be even in 0..10");
                        return TermGenerator{[ctx, r](long k) {
                                                 BigInt den = ipow(BigInt(lucas(r)),
                                                                   static_cast<unsigned long>(k)) * k * k;
                                                 return BigReal(lucas(r * k), ctx) / BigReal(den, ctx);
                                             },
                                             "sum L_rk/(L_r^k k^2)"};
                    }
                    case 4: {
                        long r = param_long(ps, "r");
                        if (r < 1 || r % 2 != 1 || r > 9)
                            throw ParamDomainError("LUCAS.RESTATE.4: r must be odd in 1..9");
                        return TermGenerator{
                            [ctx, r](long k) {
                                BigInt Fr = fib(r);
                                BigInt d1 = ipow(Fr, static_cast<unsigned long>(2 * k)) *
                                            ipow(BigInt(5), static_cast<unsigned long>(k)) *
                                            (4 * BigInt(k) * k);
                                BigInt d2 = ipow(Fr, static_cast<unsigned long>(2 * k - 1)) *
                                            ipow(BigInt(5), static_cast<unsigned long>(k - 1)) *
                                            (BigInt(2 * k - 1) * (2 * k - 1));
                                return BigReal(lucas(2 * r * k), ctx) / BigReal(d1, ctx) +
                                       BigReal(fib(r * (2 * k - 1)), ctx) / BigReal(d2, ctx);
                            },
                            "odd-parameter restatement pair"};
                    }
                    case 5:
                        return TermGenerator{[ctx](long k) {
                                                 BigInt den = (BigInt(1) << (2 * k)) * k * k;
                                                 return BigReal(lucas(2 * k), ctx) / BigReal(den, ctx);
                                             },
                                             "sum L_2k/(4^k k^2)"};
                    default:
                        return TermGenerator{[ctx](long k) {
                                                 BigInt den = ipow(BigInt(3), static_cast<unsigned long>(k)) * k * k;
                                                 return BigReal(lucas(k), ctx) / BigReal(den, ctx);
                                             },
                                             "sum L_k/(3^k k^2)"};
                }
            },
            .tail = [rs](const Params& ps, const PrecisionContext& ctx) {
                BigReal al = golden(ctx).alpha;
                switch (rs.idx) {
                    case 1: return TailStrategy::geometric(with_margin(mul_2si(al, -1), "1.005", ctx));
                    case 2:
                        return TailStrategy::geometric(
                            with_margin(pow_ui(al, 3) / BigReal(5, ctx), "1.005", ctx));
                    case 3: {
                        long r = param_long(ps, "r");
                        return TailStrategy::geometric(with_margin(
                            golden_pow(al, r, ctx) / BigReal(lucas(r), ctx), "1.005", ctx));
                    }
                    case 4: {
                        long r = param_long(ps, "r");
                        BigReal base = golden_pow(al, 2 * r, ctx) /
                                       (BigReal(5, ctx) * BigReal(BigInt(fib(r)) * fib(r), ctx));
                        return TailStrategy::geometric(with_margin(base, "1.01", ctx));
                    }
                    case 5: return TailStrategy::geometric(with_margin(mul_2si(al * al, -2), "1.005", ctx));
                    default:
                        return TailStrategy::geometric(with_margin(al / BigReal(3, ctx), "1.005", ctx));
                }
            },
            .rhs = [rs](const Params& ps, const PrecisionContext& ctx) {
                long r = 0;
                if (rs.idx == 3 || rs.idx == 4) r = param_long(ps, "r");
                return rhs::dilog_two(rs.rhs_which, r, ctx);
            },
        });
    }
}

// ---------------------------------------------------------------------------
// Group 4: Fibonacci/Lucas weighted series.

inline void add_fibonacci_series(std::vector<IdentityFamily>& fams) {
    {
        std::vector<Params> fe, fo;
        for (long n : {2, 4, 6, 8}) fe.push_back(pset({{"n", num_str(n)}}));
        for (long n : {1, 3, 5}) fo.push_back(pset({{"n", num_str(n)}}));
        fams.push_back(IdentityFamily{
            .id = "FL.EVEN",
            .source = "z = sqrt5 F_n / L_n in the p = 1 closed form, n even",
            .status = TrustStatus::MustPass,
            .params_doc = "n: positive even integer",
            .defaults = fe,
            .lhs = [](const Params& ps, const PrecisionContext& ctx) {
                long n = param_long(ps, "n");
                if (n <= 0 || n % 2 != 0 || n > 40)
                    throw ParamDomainError("FL.EVEN: n must be positive even, <= 40");
                BigRational q(5 * BigInt(fib(n)) * fib(n), BigInt(lucas(n)) * lucas(n));
                q.canonicalize();
                BigReal qr(q, ctx);
                return TermGenerator{[ctx, qr](long k) {
                                         return pow_ui(qr, static_cast<unsigned long>(k)) /
                                                BigReal(kern312_z(k, 1), ctx);
                                     },
                                     "sum (5 F_n^2/L_n^2)^k / ((2k-1)(2k)(2k+1))"};
            },
            .tail = [](const Params& ps, const PrecisionContext& ctx) {
                long n = param_long(ps, "n");
                BigRational q(5 * BigInt(fib(n)) * fib(n), BigInt(lucas(n)) * lucas(n));
                q.canonicalize();
                return TailStrategy::geometric(BigReal(q, ctx));
            },
            .rhs = [](const Params& ps, const PrecisionContext& ctx) {
                return rhs::fl_even(param_long(ps, "n"), ctx);
            },
        });
        fams.push_back(IdentityFamily{
            .id = "FL.ODD",
            .source = "z = L_n / (sqrt5 F_n) in the p = 1 closed form, n odd",
            .status = TrustStatus::MustPass,
            .params_doc = "n: odd integer >= 1",
            .defaults = fo,
            .lhs = [](const Params& ps, const PrecisionContext& ctx) {
                long n = param_long(ps, "n");
                if (n < 1 || n % 2 != 1 || n > 39)
                    throw ParamDomainError("FL.ODD: n must be odd in 1..39");
                BigRational q(BigInt(lucas(n)) * lucas(n), 5 * BigInt(fib(n)) * fib(n));
                q.canonicalize();
                BigReal qr(q, ctx);
                return TermGenerator{[ctx, qr](long k) {
                                         return pow_ui(qr, static_cast<unsigned long>(k)) /
                                                BigReal(kern312_z(k, 1), ctx);
                                     },
                                     "sum (L_n^2/(5 F_n^2))^k / ((2k-1)(2k)(2k+1))"};
            },
            .tail = [](const Params& ps, const PrecisionContext& ctx) {
                long n = param_long(ps, "n");
                BigRational q(BigInt(lucas(n)) * lucas(n), 5 * BigInt(fib(n)) * fib(n));
                q.canonicalize();
                return TailStrategy::geometric(BigReal(q, ctx));
            },
            .rhs = [](const Params& ps, const PrecisionContext& ctx) {
                return rhs::fl_odd(param_long(ps, "n"), ctx);
            },
        });
    }
    // weighted series over L_r^{2k} (r even) and the alpha/2 shifts
    for (bool lucas_weight : {true, false}) {
        std::vector<Params> defaults;
        for (auto [r, s] : {std::pair<long, long>{2, 0}, {2, 1}, {2, 3}, {4, 1}})
            defaults.push_back(pset({{"r", num_str(r)}, {"s", num_str(s)}}));
        fams.push_back(IdentityFamily{
            .id = lucas_weight ? "FL.WEIGHTED.L" : "FL.WEIGHTED.F",
            .source = "z = alpha^r/L_r and beta^r/L_r combined by the Binet forms",
            .status = TrustStatus::MustPass,
            .params_doc = "r: positive even integer; s: integer shift (|s| <= 30)",
            .defaults = defaults,
            .lhs = [lucas_weight](const Params& ps, const PrecisionContext& ctx) {
                long r = param_long(ps, "r"), s = param_long(ps, "s");
                if (r < 2 || r % 2 != 0 || r > 8 || std::labs(s) > 30)
                    throw ParamDomainError("FL.WEIGHTED: require even r in 2..8, |s| <= 30");
                return TermGenerator{[ctx, r, s, lucas_weight](long k) {
                                         BigInt num = lucas_weight ? lucas(2 * r * k + s)
                                                                   : fib(2 * r * k + s);
                                         BigInt den = ipow(BigInt(lucas(r)),
                                                           static_cast<unsigned long>(2 * k)) *
                                                      kern312_z(k, 1);
                                         return BigReal(num, ctx) / BigReal(den, ctx);
                                     },
                                     "weighted recurrence series over L_r^(2k)"};
            },
            .tail = [](const Params& ps, const PrecisionContext& ctx) {
                long r = param_long(ps, "r");
                BigReal Lr(lucas(r), ctx);
                BigReal base = golden_pow(golden(ctx).alpha, 2 * r, ctx) / (Lr * Lr);
                return TailStrategy::geometric(with_margin(base, "1.005", ctx));
            },
            .rhs = [lucas_weight](const Params& ps, const PrecisionContext& ctx) {
                return rhs::fl_weighted(param_long(ps, "r"), param_long(ps, "s"), lucas_weight, ctx);
            },
        });
    }
    for (bool lucas_weight : {true, false}) {
        std::vector<Params> defaults;
        for (long s : {0, 1, 2, -1}) defaults.push_back(pset({{"s", num_str(s)}}));
        fams.push_back(IdentityFamily{
            .id = lucas_weight ? "FL.SHIFT.L" : "FL.SHIFT.F",
            .source = "z = alpha/2 and beta/2 combined by the Binet forms",
            .status = TrustStatus::MustPass,
            .params_doc = "s: integer shift (|s| <= 30)",
            .defaults = defaults,
            .lhs = [lucas_weight](const Params& ps, const PrecisionContext& ctx) {
                long s = param_long(ps, "s");
                if (std::labs(s) > 30) throw ParamDomainError("FL.SHIFT: |s| <= 30");
                return TermGenerator{[ctx, s, lucas_weight](long k) {
                                         BigInt num = lucas_weight ? lucas(2 * k + s) : fib(2 * k + s);
                                         BigInt den = (BigInt(1) << (2 * k)) * kern312_z(k, 1);
                                         return BigReal(num, ctx) / BigReal(den, ctx);
                                     },
                                     "shifted recurrence series over 4^k"};
            },
            .tail = [](const Params&, const PrecisionContext& ctx) {
                BigReal al = golden(ctx).alpha;
                return TailStrategy::geometric(with_margin(mul_2si(al * al, -2), "1.005", ctx));
            },
            .rhs = [lucas_weight](const Params& ps, const PrecisionContext& ctx) {
                return rhs::fl_shift(param_long(ps, "s"), lucas_weight, ctx);
            },
        });
    }
    // combined Fibonacci-Lucas dilogarithm sums
    auto pq = [](long p, long q) { return pset({{"p", num_str(p)}, {"q", num_str(q)}}); };
    fams.push_back(IdentityFamily{
        .id = "FIBLUC.ID1",
        .source = "paired reflection identities as one Fibonacci-Lucas series (p, q even)",
        .status = TrustStatus::MustPass,
        .params_doc = "p, q: positive even integers",
        .defaults = {pq(2, 2), pq(2, 4), pq(4, 4)},
        .lhs = [](const Params& ps, const PrecisionContext& ctx) {
            long p = param_long(ps, "p"), q = param_long(ps, "q");
            if (p < 2 || q < 2 || p % 2 != 0 || q % 2 != 0 || p > 10 || q > 10)
                throw ParamDomainError("FIBLUC.ID1: p, q must be positive even, <= 10");
            return TermGenerator{[ctx, p, q](long k) {
                                     auto uk = static_cast<unsigned long>(k);
                                     BigInt num = ipow(BigInt(fib(p)), uk) * lucas(q * k) +
                                                  ipow(BigInt(fib(q)), uk) * lucas(p * k);
                                     BigInt den = ipow(BigInt(fib(p + q)), uk) * k * k;
                                     return BigReal(num, ctx) / BigReal(den, ctx);
                                 },
                                 "sum (F_p^k L_qk + F_q^k L_pk)/(F_{p+q}^k k^2)"};
        },
        .tail = [](const Params& ps, const PrecisionContext& ctx) {
            long p = param_long(ps, "p"), q = param_long(ps, "q");
            BigReal al = golden(ctx).alpha;
            BigReal b1 = BigReal(fib(p), ctx) * golden_pow(al, q, ctx);
            BigReal b2 = BigReal(fib(q), ctx) * golden_pow(al, p, ctx);
            BigReal base = (b1 > b2 ? b1 : b2) / BigReal(fib(p + q), ctx);
            return TailStrategy::geometric(with_margin(base, "1.005", ctx));
        },
        .rhs = [](const Params& ps, const PrecisionContext& ctx) {
            long p = param_long(ps, "p"), q = param_long(ps, "q");
            auto [a1, b1] = refl_args(1, p, q, ctx);
            auto [a2, b2] = refl_args(2, p, q, ctx);
            return const_pi(ctx) * const_pi(ctx) / BigReal(3, ctx) - ln(a1) * ln(b1) -
                   ln(a2) * ln(b2);
        },
    });
    fams.push_back(IdentityFamily{
        .id = "FIBLUC.ID2",
        .source = "paired reflection identities as Lucas series (p odd, q even)",
        .status = TrustStatus::MustPass,
        .params_doc = "p: odd positive; q: even positive",
        .defaults = {pq(1, 2), pq(3, 2)},
        .lhs = [](const Params& ps, const PrecisionContext& ctx) {
            long p = param_long(ps, "p"), q = param_long(ps, "q");
            if (p < 1 || p % 2 != 1 || q < 2 || q % 2 != 0 || p > 9 || q > 10)
                throw ParamDomainError("FIBLUC.ID2: need odd p in 1..9, even q in 2..10");
            return TermGenerator{
                [ctx, p, q](long m) {
                    auto um = static_cast<unsigned long>(m);
                    BigInt n1 = ipow(BigInt(lucas(p)), um) * lucas(m * q);
                    BigInt n2 = ipow(BigInt(5), static_cast<unsigned long>((m + 1) / 2)) *
                                ipow(BigInt(fib(q)), um) *
                                (m % 2 == 0 ? lucas(m * p) : fib(m * p));
                    BigInt den = ipow(BigInt(lucas(p + q)), um) * m * m;
                    return (BigReal(n1, ctx) + BigReal(n2, ctx)) / BigReal(den, ctx);
                },
                "three-series Lucas combination over L_{p+q}^m"};
        },
        .tail = [](const Params& ps, const PrecisionContext& ctx) {
            long p = param_long(ps, "p"), q = param_long(ps, "q");
            BigReal al = golden(ctx).alpha;
            BigReal b1 = BigReal(lucas(p), ctx) * golden_pow(al, q, ctx);
            BigReal b2 = sqrt(BigReal(5, ctx)) * BigReal(fib(q), ctx) * golden_pow(al, p, ctx);
            BigReal base = (b1 > b2 ? b1 : b2) / BigReal(lucas(p + q), ctx);
            return TailStrategy::geometric(with_margin(base, "1.005", ctx));
        },
        .rhs = [](const Params& ps, const PrecisionContext& ctx) {
            long p = param_long(ps, "p"), q = param_long(ps, "q");
            auto [a3, b3] = refl_args(3, p, q, ctx);
            auto [a4, b4] = refl_args(4, p, q, ctx);
            return const_pi(ctx) * const_pi(ctx) / BigReal(3, ctx) - ln(a3) * ln(b3) -
                   ln(a4) * ln(b4);
        },
    });
    // the two printed specializations
    fams.push_back(IdentityFamily{
        .id = "FIBLUC.SPECIAL.1",
        .source = "p = q = 2 specialization of the paired reflection series",
        .status = TrustStatus::MustPass,
        .params_doc = "",
        .defaults = {},
        .lhs = [](const Params&, const PrecisionContext& ctx) {
            return TermGenerator{[ctx](long k) {
                                     BigInt den = ipow(BigInt(3), static_cast<unsigned long>(k)) * k * k;
                                     return BigReal(lucas(2 * k), ctx) / BigReal(den, ctx);
                                 },
                                 "sum L_2k/(3^k k^2)"};
        },
        .tail = [](const Params&, const PrecisionContext& ctx) {
            BigReal al = golden(ctx).alpha;
            return TailStrategy::geometric(with_margin(al * al / BigReal(3, ctx), "1.005", ctx));
        },
        .rhs = [](const Params&, const PrecisionContext& ctx) {
            BigReal la = ln(golden(ctx).alpha);
            BigReal l3 = ln(BigReal(3, ctx));
            return const_pi(ctx) * const_pi(ctx) / BigReal(6, ctx) + mul_2si(la * la, 2) - l3 * l3;
        },
    });
    fams.push_back(IdentityFamily{
        .id = "FIBLUC.SPECIAL.2",
        .source = "p = 1, q = 2 specialization of the Lucas-series combination",
        .status = TrustStatus::MustPass,
        .params_doc = "",
        .defaults = {},
        .lhs = [](const Params&, const PrecisionContext& ctx) {
            return TermGenerator{
                [ctx](long m) {
                    BigInt n1 = lucas(2 * m);
                    BigInt n2 = ipow(BigInt(5), static_cast<unsigned long>((m + 1) / 2)) *
                                (m % 2 == 0 ? lucas(m) : fib(m));
                    BigInt den = (BigInt(1) << (2 * m)) * m * m;
                    return (BigReal(n1, ctx) + BigReal(n2, ctx)) / BigReal(den, ctx);
                },
                "sum (L_2m + 5^ceil(m/2) w_m)/(4^m m^2)"};
        },
        .tail = [](const Params&, const PrecisionContext& ctx) {
            BigReal base = sqrt(BigReal(5, ctx)) * golden(ctx).alpha / BigReal(4, ctx);
            return TailStrategy::geometric(with_margin(base, "1.01", ctx));
        },
        .rhs = [](const Params&, const PrecisionContext& ctx) {
            BigReal la = ln(golden(ctx).alpha);
            BigReal l2 = const_ln2(ctx), l5 = ln(BigReal(5, ctx));
            return const_pi(ctx) * const_pi(ctx) / BigReal(3, ctx) + mul_2si(la * la, 2) +
                   mul_2si(l2 * l5, 1) - mul_2si(l2 * l2, 3);
        },
    });
    // Ramanujan-type Lucas series
    struct Ram {
        int which;
        std::vector<Params> defaults;
        const char* doc;
    };
    for (const Ram& rm : {Ram{31, {}, ""}, Ram{32, {}, ""},
                          Ram{33, {pset({{"r", "0"}}), pset({{"r", "2"}}), pset({{"r", "4"}})},
                              "r: even integer >= 0"},
                          Ram{34, {}, ""}, Ram{35, {}, ""}}) {
        fams.push_back(IdentityFamily{
            .id = "RAM." + num_str(rm.which),
            .source = "Ramanujan-type Lucas series with arctanh/arctan closed form",
            .status = TrustStatus::MustPass,
            .params_doc = rm.doc,
            .defaults = rm.defaults,
            .lhs = [rm](const Params& ps, const PrecisionContext& ctx) {
                switch (rm.which) {
                    case 31:
                        return TermGenerator{[ctx](long k) {
                                                 BigInt den = (BigInt(1) << (k + 2)) * kern_g_z(k, 2);
                                                 return BigReal(lucas(k), ctx) / BigReal(den, ctx);
                                             },
                                             "sum L_k/(2^(k+2)(2k-1)k^2(2k+1))"};
                    case 32:
                        return TermGenerator{[ctx](long k) {
                                                 BigInt den = ipow(BigInt(5), static_cast<unsigned long>(k)) *
                                                              kern312_z(k, 2);
                                                 return BigReal(lucas(3 * k), ctx) / BigReal(den, ctx);
                                             },
                                             "sum L_3k/(5^k(2k-1)(2k)^2(2k+1))"};
                    case 33: {
                        long r = param_long(ps, "r");
                        if (r < 0 || r % 2 != 0 || r > 10)
                            throw ParamDomainError("RAM.33: r must be even in 0..10");
                        return TermGenerator{[ctx, r](long k) {
                                                 BigInt den = ipow(BigInt(lucas(r)),
                                                                   static_cast<unsigned long>(k)) *
                                                              kern312_z(k, 2);
                                                 return BigReal(lucas(r * k), ctx) / BigReal(den, ctx);
                                             },
                                             "sum L_rk/(L_r^k(2k-1)(2k)^2(2k+1))"};
                    }
                    case 34:
                        return TermGenerator{
                            [ctx](long k) {
                                BigInt d1 = ipow(BigInt(5), static_cast<unsigned long>(k)) *
                                            (16 * BigInt(k) * k - 1) * (16 * BigInt(k) * k);
                                BigInt d2 = ipow(BigInt(5), static_cast<unsigned long>(k - 1)) *
                                            (4 * BigInt(k) - 3) * (4 * BigInt(k) - 1) *
                                            ((4 * BigInt(k) - 2) * (4 * BigInt(k) - 2));
                                return BigReal(lucas(2 * k), ctx) / BigReal(d1, ctx) +
                                       BigReal(fib(2 * k - 1), ctx) / BigReal(d2, ctx);
                            },
                            "mod-4 Lucas/Fibonacci pair over 5^k"};
                    default:
                        return TermGenerator{[ctx](long k) {
                                                 BigInt den = (BigInt(1) << (2 * k + 2)) * kern_g_z(k, 2);
                                                 return BigReal(lucas(2 * k), ctx) / BigReal(den, ctx);
                                             },
                                             "sum L_2k/(4^(k+1)(2k-1)k^2(2k+1))"};
                }
            },
            .tail = [rm](const Params& ps, const PrecisionContext& ctx) {
                BigReal al = golden(ctx).alpha;
                switch (rm.which) {
                    case 31: return TailStrategy::geometric(with_margin(mul_2si(al, -1), "1.005", ctx));
                    case 32:
                        return TailStrategy::geometric(
                            with_margin(pow_ui(al, 3) / BigReal(5, ctx), "1.005", ctx));
                    case 33: {
                        long r = param_long(ps, "r");
                        return TailStrategy::geometric(with_margin(
                            golden_pow(al, r, ctx) / BigReal(lucas(r), ctx), "1.005", ctx));
                    }
                    case 34:
                        return TailStrategy::geometric(
                            with_margin(al * al / BigReal(5, ctx), "1.01", ctx));
                    default:
                        return TailStrategy::geometric(with_margin(mul_2si(al * al, -2), "1.005", ctx));
                }
            },
            .rhs = [rm](const Params& ps, const PrecisionContext& ctx) {
                long r = rm.which == 33 ? param_long(ps, "r") : 0;
                return rhs::lucas_ramanujan(rm.which, r, ctx);
            },
        });
    }
    fams.push_back(IdentityFamily{
        .id = "RAM61",
        .source = "even-parameter Ramanujan-type theorem, kept verbatim",
        .status = TrustStatus::AsPrinted,
        .params_doc = "p, q: positive even integers with all radicands positive",
        .defaults = {pq(2, 2), pq(2, 4), pq(4, 4)},
        .lhs = [](const Params& ps, const PrecisionContext& ctx) {
            long p = param_long(ps, "p"), q = param_long(ps, "q");
            if (p < 2 || q < 2 || p % 2 != 0 || q % 2 != 0 || p > 10 || q > 10)
                throw ParamDomainError("RAM61: p, q must be positive even, <= 10");
            return TermGenerator{[ctx, p, q](long k) {
                                     auto uk = static_cast<unsigned long>(k);
                                     BigInt num = ipow(BigInt(fib(p)), uk) * lucas(q * k) +
                                                  ipow(BigInt(fib(q)), uk) * lucas(p * k);
                                     BigInt den = ipow(BigInt(fib(p + q)), uk) * kern312_z(k, 2);
                                     return BigReal(num, ctx) / BigReal(den, ctx);
                                 },
                                 "sum (F_p^k L_qk + F_q^k L_pk)/(F_{p+q}^k (2k-1)(2k)^2(2k+1))"};
        },
        .tail = [](const Params& ps, const PrecisionContext& ctx) {
            long p = param_long(ps, "p"), q = param_long(ps, "q");
            BigReal al = golden(ctx).alpha;
            BigReal b1 = BigReal(fib(p), ctx) * golden_pow(al, q, ctx);
            BigReal b2 = BigReal(fib(q), ctx) * golden_pow(al, p, ctx);
            BigReal base = (b1 > b2 ? b1 : b2) / BigReal(fib(p + q), ctx);
            return TailStrategy::geometric(with_margin(base, "1.005", ctx));
        },
        .rhs = [](const Params& ps, const PrecisionContext& ctx) {
            return rhs::ram61(param_long(ps, "p"), param_long(ps, "q"), ctx);
        },
    });
}

// ---------------------------------------------------------------------------
// Group 5: binomial-coefficient series.

inline void add_binomial(std::vector<IdentityFamily>& fams) {
    auto mz = [](long m, const char* z) {
        return pset({{"m", num_str(m)}, {"z", z}});
    };
    fams.push_back(IdentityFamily{
        .id = "BINOM.LEMMA",
        .source = "m-th derivative of the p = 1 closed form",
        .status = TrustStatus::MustPass,
        .params_doc = "m: integer >= 2; z: real with 0 < |z| < 1 (token 1/sqrt5 allowed)",
        .defaults = {mz(2, "0.3"), mz(3, "0.3"), mz(4, "0.3"),
                     mz(2, "1/sqrt5"), mz(3, "1/sqrt5"), mz(4, "1/sqrt5")},
        .lhs = [](const Params& ps, const PrecisionContext& ctx) {
            long m = param_long(ps, "m");
            if (m < 2 || m > 12) throw ParamDomainError("BINOM.LEMMA: m must be in 2..12");
            BigReal z = param_real(ps, "z", ctx);
            if (!(abs(z) > 0L) || !(abs(z) < BigReal(1, ctx)))
                throw ParamDomainError("BINOM.LEMMA: need 0 < |z| < 1");
            return TermGenerator{[ctx, z, m](long k) {
                                     BigReal c(binomial(static_cast<unsigned long>(2 * k),
                                                        static_cast<unsigned long>(m)),
                                               ctx);
                                     return c * pow_ui(z, static_cast<unsigned long>(2 * k)) /
                                            BigReal(kern312_z(k, 1), ctx);
                                 },
                                 "sum C(2k,m) z^2k/((2k-1)(2k)(2k+1))"};
        },
        .tail = [](const Params& ps, const PrecisionContext& ctx) {
            BigReal z = param_real(ps, "z", ctx);
            return binom_geometric(z * z, param_long(ps, "m"), ctx);
        },
        .rhs = [](const Params& ps, const PrecisionContext& ctx) {
            return rhs::binom_lemma(param_real(ps, "z", ctx), param_long(ps, "m"), ctx);
        },
    });
    struct Surd {
        const char* id;
        TrustStatus status;
        BigRational z2;
        std::function<BigReal(long, const PrecisionContext&)> rhs;
        const char* src;
    };
    std::vector<Surd> surds = {
        {"BINOM.S5A", TrustStatus::MustPass, BigRational(1, 5),
         [](long m, const PrecisionContext& c) { return rhs::binom_s5a(m, c); },
         "binomial series at z = 1/sqrt5 in Fibonacci terms"},
        {"BINOM.S5B", TrustStatus::MustPass, BigRational(4, 5),
         [](long m, const PrecisionContext& c) { return rhs::binom_s5b(m, c); },
         "binomial series at z = 2/sqrt5 in Fibonacci terms"},
        {"BINOM.B59", TrustStatus::AsPrinted, BigRational(5, 9),
         [](long m, const PrecisionContext& c) { return rhs::binom_b59(m, c); },
         "binomial series at z = sqrt5/3, kept verbatim"},
    };
    for (const Surd& s : surds) {
        std::vector<Params> defaults;
        for (long m : {2, 3, 4, 5}) defaults.push_back(pset({{"m", num_str(m)}}));
        fams.push_back(IdentityFamily{
            .id = s.id,
            .source = s.src,
            .status = s.status,
            .params_doc = "m: integer >= 2",
            .defaults = defaults,
            .lhs = [s](const Params& ps, const PrecisionContext& ctx) {
                long m = param_long(ps, "m");
                if (m < 2 || m > 12) throw ParamDomainError("binomial surd: m must be in 2..12");
                BigReal z2(s.z2, ctx);
                return TermGenerator{
                    [ctx, z2, m](long k) {
                        BigReal c(binomial(static_cast<unsigned long>(2 * k),
                                           static_cast<unsigned long>(m)),
                                  ctx);
                        return c * pow_ui(z2, static_cast<unsigned long>(k)) /
                               BigReal(kern312_z(k, 1), ctx);
                    },
                    "binomial surd series"};
            },
            .tail = [s](const Params& ps, const PrecisionContext& ctx) {
                return binom_geometric(BigReal(s.z2, ctx), param_long(ps, "m"), ctx);
            },
            .rhs = [s](const Params& ps, const PrecisionContext& ctx) {
                return s.rhs(param_long(ps, "m"), ctx);
            },
        });
    }
    for (bool even_index : {true, false}) {
        std::vector<Params> defaults;
        for (long n : {2, 4})
            for (long m : {1, 2})
                defaults.push_back(pset({{"n", num_str(n)}, {"m", num_str(m)}}));
        fams.push_back(IdentityFamily{
            .id = even_index ? "BINOM.FL.E" : "BINOM.FL.O",
            .source = "binomial series at z = sqrt5 F_n/L_n by parity of the binomial index",
            .status = TrustStatus::MustPass,
            .params_doc = "n: positive even integer; m: integer >= 1",
            .defaults = defaults,
            .lhs = [even_index](const Params& ps, const PrecisionContext& ctx) {
                long n = param_long(ps, "n"), m = param_long(ps, "m");
                if (n <= 0 || n % 2 != 0 || n > 10 || m < 1 || m > 6)
                    throw ParamDomainError("BINOM.FL: need even n in 2..10, m in 1..6");
                long M = even_index ? 2 * m : 2 * m + 1;
                BigRational q(5 * BigInt(fib(n)) * fib(n), BigInt(lucas(n)) * lucas(n));
                q.canonicalize();
                BigReal qr(q, ctx);
                return TermGenerator{
                    [ctx, qr, M](long k) {
                        BigReal c(binomial(static_cast<unsigned long>(2 * k),
                                           static_cast<unsigned long>(M)),
                                  ctx);
                        return c * pow_ui(qr, static_cast<unsigned long>(k)) /
                               BigReal(kern312_z(k, 1), ctx);
                    },
                    "Fibonacci binomial series"};
            },
            .tail = [even_index](const Params& ps, const PrecisionContext& ctx) {
                long n = param_long(ps, "n"), m = param_long(ps, "m");
                long M = even_index ? 2 * m : 2 * m + 1;
                BigRational q(5 * BigInt(fib(n)) * fib(n), BigInt(lucas(n)) * lucas(n));
                q.canonicalize();
                return binom_geometric(BigReal(q, ctx), M, ctx);
            },
            .rhs = [even_index](const Params& ps, const PrecisionContext& ctx) {
                long n = param_long(ps, "n"), m = param_long(ps, "m");
                return even_index ? rhs::binom_fl_even(n, m, ctx) : rhs::binom_fl_odd(n, m, ctx);
            },
        });
    }
    fams.push_back(IdentityFamily{
        .id = "BINOM.K2",
        .source = "m-th derivative of the p = 2 closed form",
        .status = TrustStatus::MustPass,
        .params_doc = "m: integer >= 2; z: real with 0 < |z| < 1",
        .defaults = {mz(2, "0.3"), mz(3, "0.3"), mz(4, "0.3"), mz(2, "1/sqrt5")},
        .lhs = [](const Params& ps, const PrecisionContext& ctx) {
            long m = param_long(ps, "m");
            if (m < 2 || m > 12) throw ParamDomainError("BINOM.K2: m must be in 2..12");
            BigReal z = param_real(ps, "z", ctx);
            if (!(abs(z) > 0L) || !(abs(z) < BigReal(1, ctx)))
                throw ParamDomainError("BINOM.K2: need 0 < |z| < 1");
            return TermGenerator{[ctx, z, m](long k) {
                                     BigReal c(binomial(static_cast<unsigned long>(2 * k),
                                                        static_cast<unsigned long>(m)),
                                               ctx);
                                     return c * pow_ui(z, static_cast<unsigned long>(2 * k)) /
                                            BigReal(kern_g_z(k, 2), ctx);
                                 },
                                 "sum C(2k,m) z^2k/((2k-1)k^2(2k+1))"};
        },
        .tail = [](const Params& ps, const PrecisionContext& ctx) {
            BigReal z = param_real(ps, "z", ctx);
            return binom_geometric(z * z, param_long(ps, "m"), ctx);
        },
        .rhs = [](const Params& ps, const PrecisionContext& ctx) {
            return rhs::binom_k2(param_real(ps, "z", ctx), param_long(ps, "m"), ctx);
        },
    });
    {
        std::vector<Params> defaults;
        for (long m : {2, 3, 4, 5}) defaults.push_back(pset({{"m", num_str(m)}}));
        fams.push_back(IdentityFamily{
            .id = "BINOM.K2.S5",
            .source = "z = 1/sqrt5 in the k^2 binomial series",
            .status = TrustStatus::MustPass,
            .params_doc = "m: integer >= 2",
            .defaults = defaults,
            .lhs = [](const Params& ps, const PrecisionContext& ctx) {
                long m = param_long(ps, "m");
                if (m < 2 || m > 12) throw ParamDomainError("BINOM.K2.S5: m must be in 2..12");
                return TermGenerator{
                    [ctx, m](long k) {
                        auto uk = static_cast<unsigned long>(k);
                        BigInt num = binomial(static_cast<unsigned long>(2 * k),
                                              static_cast<unsigned long>(m));
                        BigInt den = ipow(BigInt(5), uk) * kern_g_z(k, 2);
                        return BigReal(num, ctx) / BigReal(den, ctx);
                    },
                    "sum C(2k,m)/(5^k (2k-1)k^2(2k+1))"};
            },
            .tail = [](const Params& ps, const PrecisionContext& ctx) {
                return binom_geometric(BigReal(BigRational(1, 5), ctx), param_long(ps, "m"), ctx);
            },
            .rhs = [](const Params& ps, const PrecisionContext& ctx) {
                return rhs::binom_k2_s5(param_long(ps, "m"), ctx);
            },
        });
    }
}

// ---------------------------------------------------------------------------
// Group 6: telescoping constants and the partial-fraction self-check.

inline void add_infrastructure(std::vector<IdentityFamily>& fams) {
    for (int i = 1; i <= 3; ++i) {
        fams.push_back(IdentityFamily{
            .id = "TELE." + num_str(i),
            .source = "telescoping constants behind the direct unit-argument evaluation",
            .status = TrustStatus::MustPass,
            .params_doc = "",
            .defaults = {},
            .lhs = [i](const Params&, const PrecisionContext& ctx) {
                return telescoping_constants(ctx)[static_cast<size_t>(i - 1)].lhs;
            },
            .tail = [i](const Params&, const PrecisionContext& ctx) {
                return telescoping_constants(ctx)[static_cast<size_t>(i - 1)].tail;
            },
            .rhs = [i](const Params&, const PrecisionContext& ctx) {
                return telescoping_constants(ctx)[static_cast<size_t>(i - 1)].rhs(ctx);
            },
            .default_width = (i == 1) ? "1e-12" : "1e-6",
        });
    }
    {
        std::vector<Params> defaults;
        for (long p : {1, 2, 3, 5}) defaults.push_back(pset({{"p", num_str(p)}}));
        fams.push_back(IdentityFamily{
            .id = "PAFRAC",
            .source = "partial-fraction decomposition of 1/((2k-1)k^p(2k+1))",
            .status = TrustStatus::MustPass,
            .params_doc = "p: integer >= 1",
            .defaults = defaults,
            .lhs = [](const Params& ps, const PrecisionContext& ctx) {
                long p = param_long(ps, "p");
                if (p < 1 || p > 16) throw ParamDomainError("PAFRAC: p must be in 1..16");
                auto pf = std::make_shared<PartialFraction>(partial_fraction(p));
                return TermGenerator{[ctx, pf](long k) {
                                         BigRational diff =
                                             pf->direct_at(BigInt(k)) - pf->eval_at(BigInt(k));
                                         return BigReal(diff, ctx);
                                     },
                                     "direct minus decomposed summand (identically zero)"};
            },
            .tail = [](const Params&, const PrecisionContext& ctx) {
                return TailStrategy::geometric(BigReal(BigRational(1, 2), ctx));
            },
            .rhs = [](const Params&, const PrecisionContext& ctx) { return BigReal(0, ctx); },
            .default_max_terms = 64,
        });
    }
}

} // namespace reg

} // namespace ramaseries
