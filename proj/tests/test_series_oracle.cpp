#include <catch_amalgamated.hpp>

#include "ramaseries/series.hpp"

using namespace ramaseries;

namespace {

const PrecisionContext ctx(256);

TermGenerator geometric_halves() {
    return {[](long k) {
                BigReal t(1, ctx);
                return mul_2si(t, -k);
            },
            "sum 2^-k"};
}

TermGenerator leibniz_ln2() {
    return {[](long k) {
                BigReal t = BigReal(1, ctx) / BigReal(k, ctx);
                return (k % 2 == 1) ? t : -t;
            },
            "sum (-1)^(k+1)/k"};
}

TermGenerator rama_terms() {
    return {[](long k) {
                BigInt den = (4 * BigInt(k) * k - 1) * (2 * k);
                return BigReal(1, ctx) / BigReal(den, ctx);
            },
            "sum 1/((2k-1)(2k)(2k+1))"};
}

} // namespace

TEST_CASE("geometric series brackets 1") {
    auto sb = sum_bracket(geometric_halves(), TailStrategy::geometric(BigReal(BigRational(1, 2), ctx)),
                          BigReal("1e-40", ctx), 2000, ctx);
    CHECK(sb.width_met);
    CHECK(sb.terms_used < 250);
    CHECK(sb.bracket.contains(BigReal(1, ctx)));
    CHECK(sb.bracket.width() < BigReal("1e-40", ctx));
}

TEST_CASE("Leibniz series brackets ln 2") {
    auto sb = sum_bracket(leibniz_ln2(), TailStrategy::alternating(), BigReal("1e-6", ctx),
                          2000000, ctx);
    CHECK(sb.width_met);
    CHECK(sb.bracket.contains(const_ln2(ctx)));
}

TEST_CASE("integral-tail series brackets ln 2 - 1/2") {
    auto sb = sum_bracket(rama_terms(),
                          TailStrategy::integral(BigReal(3, ctx), BigReal(BigRational(1, 6), ctx)),
                          BigReal("1e-6", ctx), 2000000, ctx);
    CHECK(sb.width_met);
    CHECK(sb.bracket.contains(const_ln2(ctx) - BigReal(BigRational(1, 2), ctx)));
}

TEST_CASE("max_terms exhaustion is flagged, bracket stays valid") {
    auto sb = sum_bracket(rama_terms(),
                          TailStrategy::integral(BigReal(3, ctx), BigReal(BigRational(1, 6), ctx)),
                          BigReal("1e-40", ctx), 100, ctx);
    CHECK_FALSE(sb.width_met);
    CHECK(sb.terms_used == 100);
    CHECK(sb.bracket.contains(const_ln2(ctx) - BigReal(BigRational(1, 2), ctx)));
}

TEST_CASE("hypothesis spot checks reject wrong strategies") {
    // claiming ratio 0.4 for a series that decays by exactly 0.5
    CHECK_THROWS_AS(sum_bracket(geometric_halves(), TailStrategy::geometric(BigReal("0.4", ctx)),
                                BigReal("1e-40", ctx), 2000, ctx),
                    StrategyMismatchError);
    // claiming alternation for an all-positive series
    CHECK_THROWS_AS(sum_bracket(geometric_halves(), TailStrategy::alternating(),
                                BigReal("1e-40", ctx), 2000, ctx),
                    StrategyMismatchError);
    // claiming |term| <= (1/100)/k^3 for the Ramanujan kernel (c too small)
    CHECK_THROWS_AS(sum_bracket(rama_terms(),
                                TailStrategy::integral(BigReal(3, ctx), BigReal(BigRational(1, 100), ctx)),
                                BigReal("1e-6", ctx), 2000000, ctx),
                    StrategyMismatchError);
}

TEST_CASE("refinement soundness: larger caps overlap") {
    BigReal unreachable("1e-60", ctx);
    SeriesBracket prev = sum_bracket(leibniz_ln2(), TailStrategy::alternating(), unreachable, 100, ctx);
    for (long cap : {200L, 400L, 800L, 1600L}) {
        SeriesBracket next =
            sum_bracket(leibniz_ln2(), TailStrategy::alternating(), unreachable, cap, ctx);
        CHECK(next.bracket.intersects(prev.bracket));
        CHECK(next.bracket.width() < prev.bracket.width());
        prev = next;
    }
    prev = sum_bracket(rama_terms(),
                       TailStrategy::integral(BigReal(3, ctx), BigReal(BigRational(1, 6), ctx)),
                       unreachable, 100, ctx);
    for (long cap : {200L, 400L, 800L}) {
        SeriesBracket next = sum_bracket(
            rama_terms(), TailStrategy::integral(BigReal(3, ctx), BigReal(BigRational(1, 6), ctx)),
            unreachable, cap, ctx);
        CHECK(next.bracket.intersects(prev.bracket));
        prev = next;
    }
}

TEST_CASE("strategy agreement: geometric and integral certificates overlap") {
    // sum z^2k/((2k-1)(2k)(2k+1)) at z = 0.5
    TermGenerator g{[](long k) {
                        BigReal num = mul_2si(BigReal(1, ctx), -2 * k); // 0.25^k
                        return num / BigReal((4 * BigInt(k) * k - 1) * (2 * k), ctx);
                    },
                    "sum 4^-k/((2k-1)(2k)(2k+1))"};
    auto a = sum_bracket(g, TailStrategy::geometric(BigReal(BigRational(1, 4), ctx)),
                         BigReal("1e-30", ctx), 100000, ctx);
    auto b = sum_bracket(g, TailStrategy::integral(BigReal(3, ctx), BigReal(BigRational(1, 24), ctx)),
                         BigReal("1e-8", ctx), 100000, ctx);
    CHECK(a.width_met);
    CHECK(b.width_met);
    CHECK(a.bracket.intersects(b.bracket));
}

TEST_CASE("partial fractions reproduce the summand exactly") {
    CHECK_THROWS_AS(partial_fraction(0), DomainError);
    // p = 1 at k = 1: -1 + 1/3 + 1 = 1/3
    auto pf1 = partial_fraction(1);
    CHECK(pf1.eval_at(1) == BigRational(1, 3));
    CHECK(pf1.direct_at(1) == BigRational(1, 3));
    for (long p = 1; p <= 7; ++p) {
        auto pf = partial_fraction(p);
        for (long k = 1; k <= 20; ++k) CHECK(pf.eval_at(k) == pf.direct_at(k));
        for (long k : {37L, 50L}) CHECK(pf.eval_at(k) == pf.direct_at(k));
    }
}

TEST_CASE("decomposed and direct partial sums agree over 1e5 terms") {
    auto pf = partial_fraction(2);
    BigReal direct(0, ctx), decomposed(0, ctx);
    for (long k = 1; k <= 100000; ++k) {
        direct += BigReal(pf.direct_at(k), ctx);
        decomposed += BigReal(pf.eval_at(k), ctx);
    }
    CHECK(abs(direct - decomposed) < mul_2si(BigReal(1, ctx), -(ctx.prec_bits() - 24)));
}

TEST_CASE("telescoping constants verify") {
    for (const auto& tc : telescoping_constants(ctx)) {
        auto sb = sum_bracket(tc.lhs, tc.tail, BigReal("1e-6", ctx), 2000000, ctx);
        INFO(tc.description);
        CHECK(sb.width_met);
        CHECK(sb.bracket.contains(tc.rhs(ctx)));
    }
    // pure telescoping: sum 1/((2k-1)(2k+1)) = 1/2, partial sums (1 - 1/(2N+1))/2
    TermGenerator g{[](long k) { return BigReal(1, ctx) / BigReal(4 * BigInt(k) * k - 1, ctx); },
                    "sum 1/((2k-1)(2k+1))"};
    auto sb = sum_bracket(g, TailStrategy::integral(BigReal(2, ctx), BigReal(BigRational(1, 3), ctx)),
                          BigReal("1e-5", ctx), 2000000, ctx);
    CHECK(sb.bracket.contains(BigReal(BigRational(1, 2), ctx)));
}
