#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ramaseries/bracket.hpp"
#include "ramaseries/integers.hpp"

namespace ramaseries {

// Pure map k -> k-th term of a series (k starts at 1). Must be deterministic;
// the oracle may evaluate any index more than once.
struct TermGenerator {
    std::function<BigReal(long)> term;
    std::string description;
};

// Rigorous bound on the omitted remainder of a truncated series. The
// hypothesis of each strategy is spot-verified on sampled indices during
// summation (the first 16 past start_index plus periodic probes, 64 total).
class TailStrategy {
public:
    enum class Kind { Geometric, AlternatingLeibniz, IntegralMonotone };

    // |term(k+1)| <= ratio * |term(k)| for all k >= start_index, ratio < 1.
    static TailStrategy geometric(BigReal ratio, long start_index = 1) {
        TailStrategy t(Kind::Geometric);
        if (!(ratio.sign() > 0) || !(ratio < 1L))
            throw DomainError("TailStrategy::geometric: need 0 < ratio < 1");
        t.ratio_ = std::move(ratio);
        t.start_index_ = start_index;
        return t;
    }

    // Alternating signs with |term| eventually monotone decreasing; remainder
    // after N terms is bounded by |term(N+1)|.
    static TailStrategy alternating(long start_index = 1) {
        TailStrategy t(Kind::AlternatingLeibniz);
        t.start_index_ = start_index;
        return t;
    }

    // |term(k)| <= c / k^s for k >= start_index with s > 1; remainder after N
    // is bounded by the integral c * N^{1-s} / (s-1).
    static TailStrategy integral(BigReal exponent_s, BigReal constant_c, long start_index = 1) {
        TailStrategy t(Kind::IntegralMonotone);
        if (!(exponent_s > 1L)) throw DomainError("TailStrategy::integral: need s > 1");
        if (exponent_s > 64L) throw DomainError("TailStrategy::integral: s unreasonably large");
        t.exponent_s_ = std::move(exponent_s);
        t.constant_c_ = std::move(constant_c);
        t.start_index_ = start_index;
        return t;
    }

    Kind kind() const { return kind_; }
    long start_index() const { return start_index_; }
    const BigReal& ratio() const { return *ratio_; }
    const BigReal& exponent_s() const { return *exponent_s_; }
    const BigReal& constant_c() const { return *constant_c_; }

    std::string name() const {
        switch (kind_) {
            case Kind::Geometric: return "geometric";
            case Kind::AlternatingLeibniz: return "alternating";
            case Kind::IntegralMonotone: return "integral";
        }
        return "?";
    }

private:
    explicit TailStrategy(Kind k) : kind_(k) {}

    Kind kind_;
    long start_index_ = 1;
    std::optional<BigReal> ratio_;
    std::optional<BigReal> exponent_s_;
    std::optional<BigReal> constant_c_;
};

struct SeriesBracket {
    Bracket bracket;
    long terms_used;
    TailStrategy strategy;
    bool width_met; // false means max_terms was exhausted before target_width
};

namespace detail {

// Per-term rounding allowance: generators promise faithful evaluation within
// a few ulp, so each term is inflated outward by 2^-(prec-4) relatively
// before entering the directed accumulators.
inline void accumulate_outward(BigReal& lo, BigReal& hi, const BigReal& t) {
    BigReal margin = mul_2si(abs(t), -(t.precision() - 4));
    lo = rnd::add(lo, rnd::sub(t, margin, MPFR_RNDD), MPFR_RNDD);
    hi = rnd::add(hi, rnd::add(t, margin, MPFR_RNDU), MPFR_RNDU);
}

inline BigReal integral_tail(const TailStrategy& s, long n, const PrecisionContext& ctx) {
    // c * N^{1-s} / (s-1), rounded up
    BigReal N(n, ctx);
    BigReal sm1 = rnd::sub(s.exponent_s(), BigReal(1, ctx), MPFR_RNDD);
    BigReal npow = exp(ln(N) * (BigReal(1, ctx) - s.exponent_s())); // N^{1-s}
    BigReal margin = mul_2si(abs(npow), -(npow.precision() - 6));
    npow = rnd::add(npow, margin, MPFR_RNDU);
    return rnd::div(rnd::mul(s.constant_c(), npow, MPFR_RNDU), sm1, MPFR_RNDU);
}

} // namespace detail

// Brute-force certified summation. Accumulates lo/hi with outward rounding,
// spot-verifies the tail hypothesis, and stops as soon as the enclosure
// (including the tail bound) is narrower than target_width. When max_terms
// runs out first the bracket is still valid but width_met is false.
inline SeriesBracket sum_bracket(const TermGenerator& gen, const TailStrategy& tail,
                                 const BigReal& target_width, long max_terms,
                                 const PrecisionContext& ctx) {
    if (max_terms < 1) throw DomainError("sum_bracket: max_terms must be >= 1");
    const long n0 = tail.start_index();
    BigReal lo(0, ctx), hi(0, ctx);
    BigReal prev_abs(0, ctx);
    int prev_sign = 0;
    bool have_prev = false;
    long spot_period = 1024; // plus every index in [n0, n0+16]
    long checks = 0;

    auto spot_check = [&](long k, const BigReal& t, const BigReal& prev) {
        ++checks;
        switch (tail.kind()) {
            case TailStrategy::Kind::Geometric: {
                if (k <= n0) return;
                BigReal bound = rnd::mul(abs(prev), tail.ratio(), MPFR_RNDU);
                BigReal slack = mul_2si(abs(prev), -(prev.precision() - 6));
                if (abs(t) > rnd::add(bound, slack, MPFR_RNDU))
                    throw StrategyMismatchError(
                        "geometric hypothesis violated at k=" + std::to_string(k) +
                        " for " + gen.description);
                break;
            }
            case TailStrategy::Kind::AlternatingLeibniz: {
                if (k <= n0) return;
                if (!t.is_zero() && prev_sign != 0 && t.sign() == prev_sign)
                    throw StrategyMismatchError(
                        "alternation violated at k=" + std::to_string(k) + " for " + gen.description);
                BigReal slack = mul_2si(abs(prev), -(prev.precision() - 6));
                if (abs(t) > rnd::add(abs(prev), slack, MPFR_RNDU))
                    throw StrategyMismatchError(
                        "monotone decrease violated at k=" + std::to_string(k) + " for " +
                        gen.description);
                break;
            }
            case TailStrategy::Kind::IntegralMonotone: {
                if (k < n0) return;
                // |t| <= c / k^s  (with a small rounding slack)
                BigReal kpow = exp(ln(BigReal(k, ctx)) * tail.exponent_s());
                BigReal bound = rnd::div(tail.constant_c(), kpow, MPFR_RNDU);
                BigReal slack = mul_2si(abs(bound), -(bound.precision() - 8));
                if (abs(t) > rnd::add(bound, slack, MPFR_RNDU))
                    throw StrategyMismatchError(
                        "integral bound violated at k=" + std::to_string(k) + " for " +
                        gen.description);
                break;
            }
        }
    };

    auto tail_bound = [&](long n, const BigReal& last_abs) -> BigReal {
        switch (tail.kind()) {
            case TailStrategy::Kind::Geometric: {
                BigReal one(1, ctx);
                BigReal num = rnd::mul(last_abs, tail.ratio(), MPFR_RNDU);
                BigReal den = rnd::sub(one, tail.ratio(), MPFR_RNDD);
                return rnd::div(num, den, MPFR_RNDU);
            }
            case TailStrategy::Kind::AlternatingLeibniz: {
                BigReal next = gen.term(n + 1);
                BigReal margin = mul_2si(abs(next), -(next.precision() - 4));
                return rnd::add(abs(next), margin, MPFR_RNDU);
            }
            case TailStrategy::Kind::IntegralMonotone:
                return detail::integral_tail(tail, n, ctx);
        }
        throw Error("sum_bracket: unreachable");
    };

    long k = 1;
    for (; k <= max_terms; ++k) {
        BigReal t = gen.term(k);
        if (have_prev && (k <= n0 + 16 || k % spot_period == 0)) spot_check(k, t, prev_abs);
        detail::accumulate_outward(lo, hi, t);
        prev_sign = t.sign();
        prev_abs = abs(t);
        have_prev = true;

        bool at_checkpoint = (k % 64 == 0) || k == max_terms;
        if (at_checkpoint && k >= n0) {
            BigReal tb = tail_bound(k, prev_abs);
            BigReal w = rnd::add(rnd::sub(hi, lo, MPFR_RNDU), mul_2si(tb, 1), MPFR_RNDU);
            if (w <= target_width || k == max_terms) {
                Bracket b(rnd::sub(lo, tb, MPFR_RNDD), rnd::add(hi, tb, MPFR_RNDU));
                return SeriesBracket{b, k, tail, w <= target_width};
            }
        }
    }
    // not reached; the k == max_terms checkpoint above always returns
    throw Error("sum_bracket: unreachable");
}

// ---------------------------------------------------------------------------
// Partial fractions for 1/((2k-1) k^p (2k+1)), p >= 1:
//   -1/k^p  +  sum_{j=0}^{p-2} 2^j((-1)^j - 1) / k^{p-1-j}
//           +  2^{p-1} ( (-1)^{p-1}/(2k+1) + 1/(2k-1) ).
// Exact rational data; reproduces the left side for every k.
struct PartialFraction {
    long p;
    std::vector<BigRational> power_coeff; // coefficient of 1/k^(p - j), j = 0 .. p-1
    BigRational edge_coeff;               // 2^(p-1), multiplies both edge terms
    int plus_sign;                        // sign of the 1/(2k+1) edge term: (-1)^(p-1)

    BigRational eval_at(const BigInt& k) const {
        BigRational acc(0);
        for (long j = 0; j < static_cast<long>(power_coeff.size()); ++j) {
            if (power_coeff[j] == 0) continue;
            BigRational kp(ipow(k, static_cast<unsigned long>(p - j)));
            acc += power_coeff[j] / kp;
        }
        BigRational e1(plus_sign, 1);
        e1 /= BigRational(2 * k + 1);
        BigRational e2(1);
        e2 /= BigRational(2 * k - 1);
        acc += edge_coeff * (e1 + e2);
        return acc;
    }

    BigRational direct_at(const BigInt& k) const {
        BigRational r(1);
        r /= BigRational((2 * k - 1) * ipow(k, static_cast<unsigned long>(p)) * (2 * k + 1));
        return r;
    }
};

inline PartialFraction partial_fraction(long p) {
    if (p < 1)
        throw DomainError("partial_fraction: p = 0 is unsupported (telescoping handles it)");
    PartialFraction pf;
    pf.p = p;
    pf.power_coeff.assign(static_cast<size_t>(p), BigRational(0));
    pf.power_coeff[0] = BigRational(-1); // -1/k^p
    for (long j = 0; j <= p - 2; ++j) {
        // 2^j ((-1)^j - 1) / k^{p-1-j}: zero for even j, -2^{j+1} for odd j
        if (j % 2 == 1) {
            // exponent p-1-j means index (p - (p-1-j)) = j+1 in power_coeff
            pf.power_coeff[static_cast<size_t>(j + 1)] = BigRational(-(BigInt(1) << (j + 1)));
        }
    }
    pf.edge_coeff = BigRational(BigInt(1) << (p - 1));
    pf.plus_sign = (p % 2 == 1) ? 1 : -1;
    return pf;
}

// ---------------------------------------------------------------------------
// The telescoping constants used by the direct evaluation of F(1,p)/F(i,p):
//   sum (-1)^k / ((2k-1)(2k+1))   = (2 - pi)/4
//   sum (-1)^k k / ((2k-1)(2k+1)) = -1/4
//   sum 1 / (k (2k+1))            = 2 - 2 ln 2
struct TelescopingConstant {
    std::string description;
    TermGenerator lhs;
    TailStrategy tail;
    std::function<BigReal(const PrecisionContext&)> rhs;
};

inline std::vector<TelescopingConstant> telescoping_constants(const PrecisionContext& ctx) {
    std::vector<TelescopingConstant> out;
    out.push_back({"sum (-1)^k/((2k-1)(2k+1))",
                   {[ctx](long k) {
                        BigReal d((2 * BigInt(k) - 1) * (2 * BigInt(k) + 1), ctx);
                        BigReal t = BigReal(1, ctx) / d;
                        return (k % 2 == 0) ? t : -t;
                    },
                    "alternating odd-product telescoper"},
                   TailStrategy::alternating(),
                   [](const PrecisionContext& c) {
                       return (BigReal(2, c) - const_pi(c)) / BigReal(4, c);
                   }});
    out.push_back({"sum (-1)^k k/((2k-1)(2k+1))",
                   {[ctx](long k) {
                        BigReal d((2 * BigInt(k) - 1) * (2 * BigInt(k) + 1), ctx);
                        BigReal t = BigReal(k, ctx) / d;
                        return (k % 2 == 0) ? t : -t;
                    },
                    "alternating weighted telescoper"},
                   TailStrategy::alternating(),
                   [](const PrecisionContext& c) { return BigReal(BigRational(-1, 4), c); }});
    out.push_back({"sum 1/(k(2k+1))",
                   {[ctx](long k) {
                        BigReal d(BigInt(k) * (2 * BigInt(k) + 1), ctx);
                        return BigReal(1, ctx) / d;
                    },
                    "harmonic-shift telescoper"},
                   TailStrategy::integral(BigReal(2, ctx), BigReal(BigRational(1, 2), ctx)),
                   [](const PrecisionContext& c) {
                       return BigReal(2, c) - mul_2si(const_ln2(c), 1);
                   }});
    return out;
}

} // namespace ramaseries
