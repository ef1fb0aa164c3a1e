#pragma once

#include <memory>

#include "ramaseries/catalog.hpp"

// The identity registry: every series identity the library verifies, binding
// a brute-force term generator and tail certificate to a closed-form
// evaluator. Trust statuses: printed forms that survive verification are
// MUST_PASS; the two that do not (the even-parameter Ramanujan-type theorem
// and the third binomial specialization) stay AS_PRINTED and report their
// residuals.

namespace ramaseries {

namespace reg {

// (2k-1) (2k)^p (2k+1) as an exact integer.
inline BigInt kern312_z(long k, long p) {
    return (4 * BigInt(k) * k - 1) * ipow(BigInt(2 * k), static_cast<unsigned long>(p));
}

// (2k-1) k^p (2k+1)
inline BigInt kern_g_z(long k, long p) {
    return (4 * BigInt(k) * k - 1) * ipow(BigInt(k), static_cast<unsigned long>(p));
}

inline BigReal inv_z(const BigInt& den, const PrecisionContext& ctx) {
    return BigReal(1, ctx) / BigReal(den, ctx);
}

// c = 2^-p / 3 and s = p + 2 certify |term| <= 1/((2k-1)(2k)^p(2k+1)) since
// (2k-1)(2k+1) >= 3k^2.
inline TailStrategy integral_for_kernel(long p, const PrecisionContext& ctx) {
    return TailStrategy::integral(BigReal(p + 2, ctx),
                                  mul_2si(BigReal(BigRational(1, 3), ctx), -p));
}

// Geometric ratio for binomial-weighted series C(2k,M) z^{2k}: the growth
// factor (2k+1)(2k+2)/((2k+2-M)(2k+1-M)) decreases in k, so its value at n0
// bounds every later step. n0 is escalated until the declared ratio clears 1.
inline TailStrategy binom_geometric(const BigReal& z2, long M, const PrecisionContext& ctx) {
    long n0 = std::max<long>(16, 2 * M);
    BigReal cap("0.995", ctx);
    for (;;) {
        BigReal g = BigReal((2 * n0 + 1) * (2 * n0 + 2), ctx) /
                    BigReal((2 * n0 + 2 - M) * (2 * n0 + 1 - M), ctx);
        BigReal r = z2 * g * BigReal("1.01", ctx);
        if (r < cap) return TailStrategy::geometric(r, n0);
        n0 *= 2;
        if (n0 > 500000) throw ParamDomainError("binomial series converges too slowly to certify");
    }
}

inline BigReal with_margin(const BigReal& base, const char* margin, const PrecisionContext& ctx) {
    BigReal r = base * BigReal(margin, ctx);
    if (!(r < BigReal(1, ctx)))
        throw ParamDomainError("geometric ratio reaches 1 for these parameters");
    return r;
}

inline Params pset(std::initializer_list<std::pair<const char*, std::string>> kv) {
    Params p;
    for (auto& [k, v] : kv) p[k] = v;
    return p;
}

inline std::string num_str(long v) { return std::to_string(v); }

// ---------------------------------------------------------------------------
// Group 1: Ramanujan's constants and the z = 1, z = i tables.

inline void add_ramanujan(std::vector<IdentityFamily>& fams) {
    fams.push_back(IdentityFamily{
        .id = "RAMA.PHI2",
        .source = "Ramanujan, Lost Notebook I: 2 ln 2 = phi(2)",
        .status = TrustStatus::MustPass,
        .params_doc = "",
        .defaults = {},
        .lhs = [](const Params&, const PrecisionContext& ctx) {
            return TermGenerator{[ctx](long k) { return inv_z(kern312_z(k, 1), ctx); },
                                 "sum 1/((2k-1)(2k)(2k+1))"};
        },
        .tail = [](const Params&, const PrecisionContext& ctx) {
            return TailStrategy::integral(BigReal(3, ctx), BigReal(BigRational(1, 6), ctx));
        },
        .rhs = [](const Params&, const PrecisionContext& ctx) {
            return const_ln2(ctx) - BigReal(BigRational(1, 2), ctx);
        },
        .default_width = "1e-6",
    });
    fams.push_back(IdentityFamily{
        .id = "RAMA.PHI4",
        .source = "Ramanujan, Lost Notebook I: (3/2) ln 2 = phi(4)",
        .status = TrustStatus::MustPass,
        .params_doc = "",
        .defaults = {},
        .lhs = [](const Params&, const PrecisionContext& ctx) {
            return TermGenerator{[ctx](long k) {
                                     BigInt den = 4 * BigInt(k) * (16 * BigInt(k) * k - 1);
                                     return BigReal(2, ctx) / BigReal(den, ctx);
                                 },
                                 "sum 2/((4k-1)(4k)(4k+1))"};
        },
        .tail = [](const Params&, const PrecisionContext& ctx) {
            return TailStrategy::integral(BigReal(3, ctx), BigReal(BigRational(1, 30), ctx));
        },
        .rhs = [](const Params&, const PrecisionContext& ctx) {
            return BigReal(BigRational(3, 2), ctx) * const_ln2(ctx) - BigReal(1, ctx);
        },
        .default_width = "1e-6",
    });
    fams.push_back(IdentityFamily{
        .id = "RAMA.PHI2ALT",
        .source = "Ramanujan, Lost Notebook I: ln 2 = phi~(2)",
        .status = TrustStatus::MustPass,
        .params_doc = "",
        .defaults = {},
        .lhs = [](const Params&, const PrecisionContext& ctx) {
            return TermGenerator{[ctx](long k) {
                                     BigReal t = inv_z(kern312_z(k, 1), ctx);
                                     return (k % 2 == 0) ? t : -t;
                                 },
                                 "sum (-1)^k/((2k-1)(2k)(2k+1))"};
        },
        .tail = [](const Params&, const PrecisionContext&) { return TailStrategy::alternating(); },
        .rhs = [](const Params&, const PrecisionContext& ctx) {
            return mul_2si(const_ln2(ctx) - BigReal(1, ctx), -1);
        },
        .default_width = "1e-12",
    });
    fams.push_back(IdentityFamily{
        .id = "RAMA.PHI3ALT",
        .source = "Ramanujan, Lost Notebook I: (4/3) ln 2 = phi~(3)",
        .status = TrustStatus::MustPass,
        .params_doc = "",
        .defaults = {},
        .lhs = [](const Params&, const PrecisionContext& ctx) {
            return TermGenerator{[ctx](long k) {
                                     BigInt den = 3 * BigInt(k) * (9 * BigInt(k) * k - 1);
                                     BigReal t = inv_z(den, ctx);
                                     return (k % 2 == 0) ? t : -t;
                                 },
                                 "sum (-1)^k/((3k-1)(3k)(3k+1))"};
        },
        .tail = [](const Params&, const PrecisionContext&) { return TailStrategy::alternating(); },
        .rhs = [](const Params&, const PrecisionContext& ctx) {
            return BigReal(BigRational(2, 3), ctx) * const_ln2(ctx) -
                   BigReal(BigRational(1, 2), ctx);
        },
        .default_width = "1e-12",
    });
}

inline void add_unit_tables(std::vector<IdentityFamily>& fams) {
    for (long p = 0; p <= 6; ++p) {
        fams.push_back(IdentityFamily{
            .id = "COR1." + num_str(p),
            .source = "limit z -> 1 of the main closed form (zeta table)",
            .status = TrustStatus::MustPass,
            .params_doc = "",
            .defaults = {},
            .lhs = [p](const Params&, const PrecisionContext& ctx) {
                return TermGenerator{[ctx, p](long k) { return inv_z(kern312_z(k, p), ctx); },
                                     "sum 1/((2k-1)(2k)^" + num_str(p) + "(2k+1))"};
            },
            .tail = [p](const Params&, const PrecisionContext& ctx) {
                return integral_for_kernel(p, ctx);
            },
            .rhs = [p](const Params&, const PrecisionContext& ctx) { return f_at_one(p, ctx); },
            .default_width = "1e-6",
        });
        fams.push_back(IdentityFamily{
            .id = "COR2." + num_str(p),
            .source = "limit z -> i of the main closed form (eta table)",
            .status = TrustStatus::MustPass,
            .params_doc = "",
            .defaults = {},
            .lhs = [p](const Params&, const PrecisionContext& ctx) {
                return TermGenerator{[ctx, p](long k) {
                                         BigReal t = inv_z(kern312_z(k, p), ctx);
                                         return (k % 2 == 0) ? t : -t;
                                     },
                                     "sum (-1)^k/((2k-1)(2k)^" + num_str(p) + "(2k+1))"};
            },
            .tail = [](const Params&, const PrecisionContext&) {
                return TailStrategy::alternating();
            },
            .rhs = [p](const Params&, const PrecisionContext& ctx) { return f_at_i(p, ctx); },
            .default_width = "1e-12",
        });
    }
    // the six printed particular cases: p = 1, 2, 3 at z = 1 and z = i
    struct Particular {
        int idx;
        long p;
        bool alternating;
        std::function<BigReal(const PrecisionContext&)> rhs;
    };
    std::vector<Particular> parts = {
        {1, 1, false,
         [](const PrecisionContext& c) { return const_ln2(c) - BigReal(BigRational(1, 2), c); }},
        {2, 1, true,
         [](const PrecisionContext& c) { return mul_2si(const_ln2(c) - BigReal(1, c), -1); }},
        {3, 2, false,
         [](const PrecisionContext& c) {
             return BigReal(BigRational(1, 2), c) - const_pi(c) * const_pi(c) / BigReal(24, c);
         }},
        {4, 2, true,
         [](const PrecisionContext& c) {
             return BigReal(BigRational(1, 2), c) - mul_2si(const_pi(c), -2) +
                    const_pi(c) * const_pi(c) / BigReal(48, c);
         }},
        {5, 3, false,
         [](const PrecisionContext& c) {
             return const_ln2(c) - BigReal(BigRational(1, 2), c) - mul_2si(zeta(3, c), -3);
         }},
        {6, 3, true,
         [](const PrecisionContext& c) {
             return mul_2si(const_ln2(c) - BigReal(1, c), -1) +
                    BigReal(BigRational(3, 32), c) * zeta(3, c);
         }},
    };
    for (const auto& pc : parts) {
        fams.push_back(IdentityFamily{
            .id = "PARTICULAR." + num_str(pc.idx),
            .source = "printed particular case of the zeta/eta tables",
            .status = TrustStatus::MustPass,
            .params_doc = "",
            .defaults = {},
            .lhs = [pc](const Params&, const PrecisionContext& ctx) {
                long p = pc.p;
                bool alt = pc.alternating;
                return TermGenerator{[ctx, p, alt](long k) {
                                         BigReal t = inv_z(kern312_z(k, p), ctx);
                                         return (alt && k % 2 == 1) ? -t : t;
                                     },
                                     "printed particular case " + num_str(pc.idx)};
            },
            .tail = [pc](const Params&, const PrecisionContext& ctx) {
                if (pc.alternating) return TailStrategy::alternating();
                return integral_for_kernel(pc.p, ctx);
            },
            .rhs = [pc](const Params&, const PrecisionContext& ctx) { return pc.rhs(ctx); },
            .default_width = pc.alternating ? "1e-12" : "1e-6",
        });
    }
    // z = 1/sqrt2: the three half-power series
    for (int i = 1; i <= 3; ++i) {
        fams.push_back(IdentityFamily{
            .id = "COR3." + num_str(i),
            .source = "z = 1/sqrt2 specialization of the main closed form",
            .status = TrustStatus::MustPass,
            .params_doc = "",
            .defaults = {},
            .lhs = [i](const Params&, const PrecisionContext& ctx) {
                long p = i;
                return TermGenerator{[ctx, p](long k) {
                                         BigInt den = (BigInt(1) << (k + p)) * kern_g_z(k, p);
                                         return inv_z(den, ctx);
                                     },
                                     "sum 1/(2^(k+" + num_str(i) + ")(2k-1)k^" + num_str(i) +
                                         "(2k+1))"};
            },
            .tail = [](const Params&, const PrecisionContext& ctx) {
                return TailStrategy::geometric(BigReal(BigRational(1, 2), ctx));
            },
            .rhs = [i](const Params&, const PrecisionContext& ctx) {
                BigReal s2 = sqrt(BigReal(2, ctx));
                BigReal lq = ln(BigReal(1, ctx) + s2);
                BigReal l2 = const_ln2(ctx);
                BigReal half(BigRational(1, 2), ctx);
                BigReal pi2 = const_pi(ctx) * const_pi(ctx);
                switch (i) {
                    case 1: return BigReal(3, ctx) / mul_2si(s2, 1) * lq - mul_2si(l2 + BigReal(1, ctx), -1);
                    case 2: return half + mul_2si(l2 * l2, -3) - pi2 / BigReal(48, ctx) - lq / mul_2si(s2, 1);
                    default:
                        return BigReal(3, ctx) / mul_2si(s2, 1) * lq + pi2 * l2 / BigReal(96, ctx) -
                               mul_2si(l2 + BigReal(1, ctx), -1) - l2 * l2 * l2 / BigReal(48, ctx) -
                               BigReal(BigRational(7, 64), ctx) * zeta(3, ctx);
                }
            },
        });
    }
    // z in {1/sqrt5, 2/sqrt5, sqrt5/3} in the p = 1 specialization
    struct Surd {
        int idx;
        BigRational z2; // z^2 exactly
        std::function<BigReal(const PrecisionContext&)> rhs;
    };
    std::vector<Surd> surds = {
        {1, BigRational(1, 5),
         [](const PrecisionContext& c) {
             return mul_2si(ln(BigReal(BigRational(4, 5), c)), -1) +
                    BigReal(3, c) / sqrt(BigReal(5, c)) * ln(golden(c).alpha) -
                    BigReal(BigRational(1, 2), c);
         }},
        {2, BigRational(4, 5),
         [](const PrecisionContext& c) {
             return -mul_2si(ln(BigReal(5, c)), -1) +
                    BigReal(27, c) / (mul_2si(sqrt(BigReal(5, c)), 2)) * ln(golden(c).alpha) -
                    BigReal(BigRational(1, 2), c);
         }},
        {3, BigRational(5, 9),
         [](const PrecisionContext& c) {
             return ln(BigReal(BigRational(2, 3), c)) +
                    BigReal(14, c) / (BigReal(3, c) * sqrt(BigReal(5, c))) * ln(golden(c).alpha) -
                    BigReal(BigRational(1, 2), c);
         }},
    };
    for (const auto& s : surds) {
        fams.push_back(IdentityFamily{
            .id = "SQRT5." + num_str(s.idx),
            .source = "golden-ratio surd specializations of the p = 1 closed form",
            .status = TrustStatus::MustPass,
            .params_doc = "",
            .defaults = {},
            .lhs = [s](const Params&, const PrecisionContext& ctx) {
                BigReal z2(s.z2, ctx);
                return TermGenerator{[ctx, z2](long k) {
                                         return pow_ui(z2, static_cast<unsigned long>(k)) /
                                                BigReal(kern312_z(k, 1), ctx);
                                     },
                                     "surd-square series " + num_str(s.idx)};
            },
            .tail = [s](const Params&, const PrecisionContext& ctx) {
                return TailStrategy::geometric(BigReal(s.z2, ctx));
            },
            .rhs = [s](const Params&, const PrecisionContext& ctx) { return s.rhs(ctx); },
        });
    }
}

// ---------------------------------------------------------------------------
// Group 2: trigonometric series (Clausen and Bernoulli closed forms), the
// mod-4 and mod-6 rearrangements.

inline std::shared_ptr<std::vector<BigReal>> trig_table(bool use_sin, long num, long den,
                                                        const PrecisionContext& ctx) {
    auto tab = std::make_shared<std::vector<BigReal>>();
    BigReal x = const_pi(ctx) * BigReal(num, ctx) / BigReal(den, ctx);
    for (long i = 0; i < 2 * den; ++i) {
        BigReal arg = x * BigReal(i, ctx);
        tab->push_back(use_sin ? sin(arg) : cos(arg));
    }
    return tab;
}

inline void validate_trig_params(long num, long den, long p) {
    if (den < 1 || den > 64 || num < 1 || num >= 2 * den)
        throw ParamDomainError("trig series: require x = pi*num/den in (0, 2*pi)");
    if (p < 0 || p > 8) throw ParamDomainError("trig series: p must be in 0..8");
}

inline void add_trig(std::vector<IdentityFamily>& fams) {
    for (bool is_sin : {false, true}) {
        std::vector<Params> defaults;
        for (auto [n, d] : {std::pair<long, long>{1, 3}, {1, 2}, {2, 3}})
            for (long p = 0; p <= 3; ++p)
                defaults.push_back(pset({{"num", num_str(n)}, {"den", num_str(d)}, {"p", num_str(p)}}));
        fams.push_back(IdentityFamily{
            .id = is_sin ? "TRIG.SIN" : "TRIG.COS",
            .source = "Clausen-function closed form of the trigonometric series",
            .status = TrustStatus::MustPass,
            .params_doc = "num,den: x = pi*num/den in (0,2pi); p: exponent 0..8",
            .defaults = defaults,
            .lhs = [is_sin](const Params& ps, const PrecisionContext& ctx) {
                long num = param_long(ps, "num"), den = param_long(ps, "den"), p = param_long(ps, "p");
                validate_trig_params(num, den, p);
                auto tab = trig_table(is_sin, num, den, ctx);
                long period = 2 * den;
                return TermGenerator{[ctx, tab, period, p](long k) {
                                         return (*tab)[static_cast<size_t>(k % period)] /
                                                BigReal(kern312_z(k, p), ctx);
                                     },
                                     std::string("sum ") + (is_sin ? "sin" : "cos") +
                                         "(k pi " + num_str(num) + "/" + num_str(den) +
                                         ")/((2k-1)(2k)^" + num_str(p) + "(2k+1))"};
            },
            .tail = [](const Params& ps, const PrecisionContext& ctx) {
                return integral_for_kernel(param_long(ps, "p"), ctx);
            },
            .rhs = [is_sin](const Params& ps, const PrecisionContext& ctx) {
                long num = param_long(ps, "num"), den = param_long(ps, "den"), p = param_long(ps, "p");
                validate_trig_params(num, den, p);
                BigReal x = const_pi(ctx) * BigReal(num, ctx) / BigReal(den, ctx);
                return is_sin ? trig_sin_closed(x, p, ctx) : trig_cos_closed(x, p, ctx);
            },
            .default_width = "1e-6",
        });
    }
    {
        std::vector<Params> defaults;
        for (auto [n, d] : {std::pair<long, long>{1, 2}, {2, 3}, {1, 1}})
            for (long p = 1; p <= 2; ++p)
                for (const char* kind : {"cos", "sin"})
                    defaults.push_back(pset({{"num", num_str(n)},
                                             {"den", num_str(d)},
                                             {"p", num_str(p)},
                                             {"kind", kind}}));
        fams.push_back(IdentityFamily{
            .id = "TRIG.BERN",
            .source = "Bernoulli-polynomial closed form of the trigonometric series",
            .status = TrustStatus::MustPass,
            .params_doc = "num,den: x = pi*num/den; p >= 0; kind: cos (exp 2p) or sin (exp 2p+1)",
            .defaults = defaults,
            .lhs = [](const Params& ps, const PrecisionContext& ctx) {
                long num = param_long(ps, "num"), den = param_long(ps, "den"), p = param_long(ps, "p");
                validate_trig_params(num, den, p);
                bool is_sin = ps.at("kind") == "sin";
                long e = is_sin ? 2 * p + 1 : 2 * p;
                auto tab = trig_table(is_sin, num, den, ctx);
                long period = 2 * den;
                return TermGenerator{[ctx, tab, period, e](long k) {
                                         return (*tab)[static_cast<size_t>(k % period)] /
                                                BigReal(kern312_z(k, e), ctx);
                                     },
                                     "Bernoulli-form trig series"};
            },
            .tail = [](const Params& ps, const PrecisionContext& ctx) {
                long p = param_long(ps, "p");
                long e = ps.at("kind") == "sin" ? 2 * p + 1 : 2 * p;
                return integral_for_kernel(e, ctx);
            },
            .rhs = [](const Params& ps, const PrecisionContext& ctx) {
                long num = param_long(ps, "num"), den = param_long(ps, "den"), p = param_long(ps, "p");
                validate_trig_params(num, den, p);
                if (ps.at("kind") != "sin" && ps.at("kind") != "cos")
                    throw ParamDomainError("TRIG.BERN: kind must be cos or sin");
                BigReal x = const_pi(ctx) * BigReal(num, ctx) / BigReal(den, ctx);
                return trig_bernoulli_closed(x, p,
                                             ps.at("kind") == "sin" ? TrigBernoulliKind::SinOdd
                                                                    : TrigBernoulliKind::CosEven,
                                             ctx);
            },
            .default_width = "1e-6",
        });
    }
    // mod-4 rearrangements at x = pi/2
    {
        std::vector<Params> defaults;
        for (long p = 0; p <= 2; ++p) defaults.push_back(pset({{"p", num_str(p)}}));
        fams.push_back(IdentityFamily{
            .id = "MOD4.A",
            .source = "alternating mod-4 series from the cos form at x = pi/2",
            .status = TrustStatus::MustPass,
            .params_doc = "p: non-negative integer",
            .defaults = defaults,
            .lhs = [](const Params& ps, const PrecisionContext& ctx) {
                long p = param_long(ps, "p");
                if (p < 0 || p > 8) throw ParamDomainError("MOD4.A: p must be in 0..8");
                return TermGenerator{
                    [ctx, p](long k) {
                        BigInt den = (16 * BigInt(k) * k - 1) *
                                     ipow(BigInt(4 * k), static_cast<unsigned long>(2 * p + 1));
                        BigReal t = inv_z(den, ctx);
                        return (k % 2 == 1) ? t : -t;
                    },
                    "sum (-1)^(k-1)/((4k-1)(4k)^(2p+1)(4k+1))"};
            },
            .tail = [](const Params&, const PrecisionContext&) { return TailStrategy::alternating(); },
            .rhs = [](const Params& ps, const PrecisionContext& ctx) {
                return rhs::mod4_cos(param_long(ps, "p"), ctx);
            },
            .default_width = "1e-12",
        });
        fams.push_back(IdentityFamily{
            .id = "MOD4.B",
            .source = "alternating mod-4 series from the sin form at x = pi/2",
            .status = TrustStatus::MustPass,
            .params_doc = "p: non-negative integer",
            .defaults = defaults,
            .lhs = [](const Params& ps, const PrecisionContext& ctx) {
                long p = param_long(ps, "p");
                if (p < 0 || p > 8) throw ParamDomainError("MOD4.B: p must be in 0..8");
                return TermGenerator{
                    [ctx, p](long k) {
                        BigInt den = (4 * BigInt(k) - 3) * (4 * BigInt(k) - 1) *
                                     ipow(BigInt(4 * k - 2), static_cast<unsigned long>(2 * p + 1));
                        BigReal t = inv_z(den, ctx);
                        return (k % 2 == 1) ? t : -t;
                    },
                    "sum (-1)^(k-1)/((4k-3)(4k-2)^(2p+1)(4k-1))"};
            },
            .tail = [](const Params&, const PrecisionContext&) { return TailStrategy::alternating(); },
            .rhs = [](const Params& ps, const PrecisionContext& ctx) {
                return rhs::mod4_sin(param_long(ps, "p"), ctx);
            },
            .default_width = "1e-12",
        });
    }
    // mod-6 rearrangements at x = 2pi/3
    {
        std::vector<Params> defaults;
        for (long p = 0; p <= 2; ++p) defaults.push_back(pset({{"p", num_str(p)}}));
        fams.push_back(IdentityFamily{
            .id = "MOD6.A",
            .source = "mod-6 combination from the cos form at x = 2pi/3",
            .status = TrustStatus::MustPass,
            .params_doc = "p: non-negative integer",
            .defaults = defaults,
            .lhs = [](const Params& ps, const PrecisionContext& ctx) {
                long p = param_long(ps, "p");
                if (p < 0 || p > 8) throw ParamDomainError("MOD6.A: p must be in 0..8");
                long q = 2 * p + 1;
                return TermGenerator{
                    [ctx, q](long k) {
                        BigInt d1 = (36 * BigInt(k) * k - 1) *
                                    ipow(BigInt(6 * k), static_cast<unsigned long>(q));
                        BigInt d2 = (6 * BigInt(k) + 1) * (6 * BigInt(k) + 3) *
                                    ipow(BigInt(6 * k + 2), static_cast<unsigned long>(q));
                        BigInt d3 = (6 * BigInt(k) + 3) * (6 * BigInt(k) + 5) *
                                    ipow(BigInt(6 * k + 4), static_cast<unsigned long>(q));
                        return inv_z(d1, ctx) - mul_2si(inv_z(d2, ctx) + inv_z(d3, ctx), -1);
                    },
                    "mod-6 three-series combination"};
            },
            .tail = [](const Params& ps, const PrecisionContext& ctx) {
                long q = 2 * param_long(ps, "p") + 1;
                BigReal c = BigReal(BigRational(1, 16), ctx) /
                            pow_ui(BigReal(6, ctx), static_cast<unsigned long>(q));
                return TailStrategy::integral(BigReal(q + 2, ctx), c);
            },
            .rhs = [](const Params& ps, const PrecisionContext& ctx) {
                return rhs::mod6_a(param_long(ps, "p"), ctx);
            },
            .default_width = "1e-6",
        });
        fams.push_back(IdentityFamily{
            .id = "MOD6.B",
            .source = "mod-6 difference from the sin form at x = 2pi/3",
            .status = TrustStatus::MustPass,
            .params_doc = "p: non-negative integer",
            .defaults = defaults,
            .lhs = [](const Params& ps, const PrecisionContext& ctx) {
                long p = param_long(ps, "p");
                if (p < 0 || p > 8) throw ParamDomainError("MOD6.B: p must be in 0..8");
                long q = 2 * p + 1;
                return TermGenerator{
                    [ctx, q](long k) {
                        long j = k - 1; // both printed sums start at k = 0
                        BigInt d2 = (6 * BigInt(j) + 1) * (6 * BigInt(j) + 3) *
                                    ipow(BigInt(6 * j + 2), static_cast<unsigned long>(q));
                        BigInt d3 = (6 * BigInt(j) + 3) * (6 * BigInt(j) + 5) *
                                    ipow(BigInt(6 * j + 4), static_cast<unsigned long>(q));
                        return inv_z(d2, ctx) - inv_z(d3, ctx);
                    },
                    "mod-6 two-series difference"};
            },
            .tail = [](const Params& ps, const PrecisionContext& ctx) {
                long q = 2 * param_long(ps, "p") + 1;
                BigReal c = BigReal(BigRational(1, 3), ctx) /
                            pow_ui(BigReal(2, ctx), static_cast<unsigned long>(q));
                return TailStrategy::integral(BigReal(q + 2, ctx), c);
            },
            .rhs = [](const Params& ps, const PrecisionContext& ctx) {
                return rhs::mod6_b(param_long(ps, "p"), ctx);
            },
            .default_width = "1e-6",
        });
    }
}

} // namespace reg

} // namespace ramaseries

#include "ramaseries/registry_fibonacci.hpp"

namespace ramaseries {

// The full catalog, built once.
inline const std::vector<IdentityFamily>& default_catalog() {
    static const std::vector<IdentityFamily> fams = [] {
        std::vector<IdentityFamily> f;
        reg::add_ramanujan(f);
        reg::add_unit_tables(f);
        reg::add_trig(f);
        reg::add_golden_dilog(f);
        reg::add_fibonacci_series(f);
        reg::add_binomial(f);
        reg::add_infrastructure(f);
        return f;
    }();
    return fams;
}

} // namespace ramaseries
