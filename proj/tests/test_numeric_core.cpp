#include <catch_amalgamated.hpp>

#include <random>

#include "ramaseries/bracket.hpp"
#include "ramaseries/complex.hpp"
#include "ramaseries/integers.hpp"

using namespace ramaseries;

TEST_CASE("context construction and bounds") {
    CHECK(make_context(256).prec_bits() == 256);
    CHECK(make_context(64).prec_bits() == 64);
    CHECK_THROWS_AS(make_context(32), DomainError);
    CHECK_THROWS_AS(make_context(8192), DomainError);
    CHECK(make_context(256).work_prec() == 256 + 64);
}

TEST_CASE("elementary identities") {
    PrecisionContext ctx(256);
    CHECK(ln(BigReal(1, ctx)).is_zero());
    CHECK(sqrt(BigReal(4, ctx)) == BigReal(2, ctx));
    CHECK_THROWS_AS(ln(BigReal(-1, ctx)), DomainError);
    CHECK_THROWS_AS(ln(BigReal(0, ctx)), DomainError);
    CHECK_THROWS_AS(BigReal(1, ctx) / BigReal(0, ctx), DomainError);
}

namespace {

// Independent arctan oracle: truncated Maclaurin sum with its geometric tail
// bound, used to certify pi by Machin's formula without trusting mpfr.
struct AtanOracle {
    BigReal value;
    BigReal tail;
};

AtanOracle atan_series(const BigRational& x, long terms, const PrecisionContext& ctx) {
    BigReal acc(0, ctx);
    BigReal xr(x, ctx);
    BigReal x2 = xr * xr;
    BigReal p = xr;
    for (long j = 0; j < terms; ++j) {
        BigReal t = p / BigReal(2 * j + 1, ctx);
        acc += (j % 2 == 0) ? t : -t;
        p *= x2;
    }
    // alternating series: |tail| <= next term
    BigReal tail = p / BigReal(2 * terms + 1, ctx);
    return {acc, tail};
}

} // namespace

TEST_CASE("pi cross-validated against a Machin arctan-series oracle") {
    PrecisionContext ctx(256);
    auto a5 = atan_series(BigRational(1, 5), 240, ctx);    // (1/25)^240 ~ 1e-335
    auto a239 = atan_series(BigRational(1, 239), 80, ctx); // far below target
    BigReal machin = BigReal(16, ctx) * a5.value - BigReal(4, ctx) * a239.value;
    BigReal budget = BigReal(16, ctx) * a5.tail + BigReal(4, ctx) * a239.tail +
                     BigReal("1e-70", ctx);
    CHECK(abs(const_pi(ctx) - machin) < budget);
    // sin-free check: 4 atan(1) agrees with const_pi
    CHECK(abs(mul_2si(atan(BigReal(1, ctx)), 2) - const_pi(ctx)) < BigReal("1e-70", ctx));
    CHECK(to_decimal(const_pi(ctx), 15).rfind("3.14159265358979", 0) == 0);
}

TEST_CASE("determinism: repeated evaluation is bit-identical") {
    PrecisionContext ctx(256);
    BigReal a = ln(BigReal(7, ctx)) * sqrt(BigReal(3, ctx)) / const_pi(ctx);
    BigReal b = ln(BigReal(7, ctx)) * sqrt(BigReal(3, ctx)) / const_pi(ctx);
    CHECK(a == b);
    CHECK(to_decimal(a, 80) == to_decimal(b, 80));
}

TEST_CASE("exp(ln(x)) round trip on a log-spaced grid") {
    PrecisionContext ctx(256);
    BigReal tol = mul_2si(BigReal(1, ctx), -(ctx.prec_bits() - 8));
    for (int j = 0; j <= 20; ++j) {
        // x = 10^(-3 + 6 j / 20)
        BigReal e = BigReal(-3, ctx) + BigReal(6 * j, ctx) / BigReal(20, ctx);
        BigReal x = exp(e * ln(BigReal(10, ctx)));
        CHECK(abs(exp(ln(x)) - x) < tol * x);
    }
}

TEST_CASE("decimal serialization round trip at nominal precision") {
    PrecisionContext ctx(256);
    for (const char* lit : {"0.1", "-3.25", "1e-40", "123456.789"}) {
        BigReal x(lit, ctx);
        // round to the nominal precision, serialize, parse back
        BigReal xq = BigReal::with_prec(ctx.prec_bits());
        mpfr_set(xq.raw(), x.raw(), MPFR_RNDN);
        std::string s = to_decimal(xq, ctx);
        BigReal back(s, ctx);
        BigReal backq = BigReal::with_prec(ctx.prec_bits());
        mpfr_set(backq.raw(), back.raw(), MPFR_RNDN);
        CHECK(mpfr_cmp(backq.raw(), xq.raw()) == 0);
    }
    CHECK(to_decimal(BigReal(0, ctx), ctx) == "0");
}

TEST_CASE("bracket basics") {
    PrecisionContext ctx(256);
    Bracket b(BigReal(1, ctx), BigReal(2, ctx));
    CHECK(b.contains(BigReal("1.5", ctx)));
    CHECK_FALSE(b.contains(BigReal("2.5", ctx)));
    CHECK(Bracket::exact(BigReal(0, ctx)).width().is_zero());
    Bracket sum = combine(b, Bracket(BigReal(3, ctx), BigReal(4, ctx)), BracketOp::Add);
    CHECK(sum.lo() == BigReal(4, ctx));
    CHECK(sum.hi() == BigReal(6, ctx));
    CHECK_THROWS_AS(Bracket(BigReal(2, ctx), BigReal(1, ctx)), DomainError);
}

TEST_CASE("bracket combination preserves containment (random pairs)") {
    PrecisionContext ctx(64); // coarse precision makes rounding visible
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-100.0, 100.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        double a1 = dist(rng), a2 = dist(rng);
        if (a2 < a1) std::swap(a1, a2);
        double b1 = dist(rng), b2 = dist(rng);
        if (b2 < b1) std::swap(b1, b2);
        double ax = a1 + unit(rng) * (a2 - a1);
        double bx = b1 + unit(rng) * (b2 - b1);
        auto R = [&](double v) {
            BigReal r(ctx);
            mpfr_set_d(r.raw(), v, MPFR_RNDN);
            return r;
        };
        Bracket A(R(a1), R(a2)), B(R(b1), R(b2));
        // doubles are dyadic, so sum and product are exact at work precision
        PrecisionContext wide(256);
        BigReal sum = BigReal(ctx);
        mpfr_set_d(sum.raw(), 0.0, MPFR_RNDN);
        {
            BigReal xa = R(ax), xb = R(bx);
            Bracket S = Bracket::add(A, B);
            BigReal exact = BigReal::with_prec(wide.work_prec());
            mpfr_add(exact.raw(), xa.raw(), xb.raw(), MPFR_RNDN);
            CHECK(S.contains(exact));
            Bracket P = Bracket::mul(A, B);
            BigReal prod = BigReal::with_prec(wide.work_prec());
            mpfr_mul(prod.raw(), xa.raw(), xb.raw(), MPFR_RNDN);
            CHECK(P.contains(prod));
        }
    }
}

TEST_CASE("complex arithmetic is componentwise-consistent") {
    PrecisionContext ctx(256);
    BigComplex a(BigReal("1.5", ctx), BigReal("-0.25", ctx));
    BigComplex b(BigReal("2.0", ctx), BigReal("0.75", ctx));
    BigComplex s = a + b;
    CHECK(s.re == a.re + b.re);
    CHECK(s.im == a.im + b.im);
    BigComplex p = a * b;
    CHECK(p.re == a.re * b.re - a.im * b.im);
    CHECK(p.im == a.re * b.im + a.im * b.re);
    BigComplex q = p / b;
    CHECK(abs(q.re - a.re) < BigReal("1e-70", ctx));
    CHECK(abs(q.im - a.im) < BigReal("1e-70", ctx));
}
