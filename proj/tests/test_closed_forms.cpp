#include <catch_amalgamated.hpp>

#include "ramaseries/closed_forms.hpp"
#include "ramaseries/series.hpp"

using namespace ramaseries;

namespace {

const PrecisionContext ctx(256);

BigReal tol(const char* s) { return BigReal(s, ctx); }

// the three dedicated low-order closed forms, written out independently
BigReal spec_p1(const BigReal& z) {
    BigReal one(1, ctx);
    return mul_2si(ln(one - z * z), -1) + mul_2si((z + one / z) * arctanh(z), -1) -
           BigReal(BigRational(1, 2), ctx);
}

BigReal spec_p2(const BigReal& z) {
    BigReal one(1, ctx);
    return -mul_2si(polylog(2, z * z, ctx), -2) -
           mul_2si(((one - z * z) / (z * z)) * z * arctanh(z), -1) + BigReal(BigRational(1, 2), ctx);
}

BigReal spec_p3(const BigReal& z) {
    BigReal one(1, ctx);
    BigReal a = -(one - z) * (one - z) / z * ln(one - z);
    BigReal b = (one + z) * (one + z) / z * ln(one + z);
    return mul_2si(a + b, -2) - mul_2si(polylog(3, z * z, ctx), -3) - BigReal(BigRational(1, 2), ctx);
}

} // namespace

TEST_CASE("domain handling") {
    CHECK(f_closed(BigReal(0, ctx), 4, ctx).is_zero());
    CHECK_THROWS_AS(f_closed(BigReal(1, ctx), 2, ctx), DomainError);
    CHECK_THROWS_AS(f_closed(BigReal("1.25", ctx), 0, ctx), DomainError);
    CHECK_THROWS_AS(g_closed(BigReal(0, ctx), 2, ctx), DomainError);
    CHECK_THROWS_AS(g_closed(BigReal(1, ctx), 2, ctx), DomainError);
}

TEST_CASE("printed half-power value at z = 1/sqrt2, p = 1") {
    BigReal s2 = sqrt(BigReal(2, ctx));
    BigReal expected = BigReal(3, ctx) / mul_2si(s2, 1) * ln(BigReal(1, ctx) + s2) -
                       mul_2si(const_ln2(ctx) + BigReal(1, ctx), -1);
    CHECK(abs(f_closed(BigReal(1, ctx) / s2, 1, ctx) - expected) < tol("1e-70"));
}

TEST_CASE("low-order specializations match the parity-split form") {
    BigReal eps = mul_2si(BigReal(1, ctx), -(ctx.prec_bits() - 16));
    for (const char* zs : {"0.37", "0.81", "-0.5", "0.1"}) {
        BigReal z(zs, ctx);
        CHECK(abs(f_closed(z, 1, ctx) - spec_p1(z)) < eps);
        CHECK(abs(f_closed(z, 2, ctx) - spec_p2(z)) < eps);
        CHECK(abs(f_closed(z, 3, ctx) - spec_p3(z)) < eps);
    }
    // the series is even in z
    CHECK(abs(f_closed(BigReal("-0.5", ctx), 2, ctx) - f_closed(BigReal("0.5", ctx), 2, ctx)) <
          tol("1e-70"));
}

TEST_CASE("parity completeness at p = 0 and p = 1") {
    BigReal z("0.6", ctx);
    BigReal one(1, ctx);
    BigReal p0 = mul_2si((z - one / z) * arctanh(z) + one, -1);
    CHECK(abs(f_closed(z, 0, ctx) - p0) < tol("1e-75"));
    CHECK(abs(f_closed(z, 1, ctx) - spec_p1(z)) < tol("1e-75"));
}

TEST_CASE("oracle containment at a sample grid point") {
    BigReal z("0.3", ctx);
    long p = 2;
    TermGenerator g{[=](long k) {
                        BigInt kern = (4 * BigInt(k) * k - 1) *
                                      ipow(BigInt(2 * k), static_cast<unsigned long>(p));
                        return pow_ui(z, static_cast<unsigned long>(2 * k)) / BigReal(kern, ctx);
                    },
                    "main series"};
    auto sb = sum_bracket(g, TailStrategy::geometric(z * z), BigReal("1e-40", ctx), 100000, ctx);
    CHECK(sb.width_met);
    CHECK(sb.bracket.contains(f_closed(z, p, ctx)));
}

TEST_CASE("small-z asymptotics") {
    for (const char* zs : {"1e-3", "5e-4", "1e-4"}) {
        BigReal z(zs, ctx);
        BigReal z4 = pow_ui(z, 4);
        for (long p = 0; p <= 4; ++p) {
            BigReal lead = z * z / BigReal(3 * (1L << p), ctx);
            CHECK(abs(f_closed(z, p, ctx) - lead) < z4);
        }
    }
}

TEST_CASE("complex evaluation at a purely imaginary point") {
    // F(iy, 2) = (1/2)(-(y + 1/y) arctan y + 1 - Li2(-y^2)/2)
    BigReal y("0.4", ctx);
    BigComplex z(BigReal(0, ctx), y);
    BigComplex v = f_closed(z, 2, ctx);
    BigReal one(1, ctx);
    BigReal expected =
        mul_2si(-(y + one / y) * arctan(y) + one - mul_2si(polylog(2, -(y * y), ctx), -1), -1);
    CHECK(abs(v.re - expected) < tol("1e-60"));
    CHECK(abs(v.im) < tol("1e-60"));
    // and for odd p the imaginary part carries the series value: F(iy,1) real part
    BigComplex v1 = f_closed(z, 1, ctx);
    // series check: sum (iy)^2k/kern = sum (-y^2)^k/kern is real
    CHECK(abs(v1.im) < tol("1e-60"));
    BigReal acc(0, ctx);
    BigReal w = -(y * y);
    for (long k = 1; k <= 300; ++k) {
        acc += pow_ui(w, static_cast<unsigned long>(k)) /
               BigReal((4 * BigInt(k) * k - 1) * (2 * k), ctx);
    }
    CHECK(abs(v1.re - acc) < tol("1e-60"));
}

TEST_CASE("equivalent single-expression form") {
    CHECK(abs(g_closed(BigReal("0.25", ctx), 0, ctx) - f_closed(BigReal("0.5", ctx), 0, ctx)) <
          tol("1e-70"));
    CHECK(abs(g_closed(BigReal("0.5", ctx), 2, ctx) -
              mul_2si(f_closed(BigReal(1, ctx) / sqrt(BigReal(2, ctx)), 2, ctx), 2)) < tol("1e-70"));
    // oracle containment for G(0.5, 1)
    BigReal z("0.5", ctx);
    TermGenerator g{[=](long k) {
                        BigInt kern = (4 * BigInt(k) * k - 1) * k;
                        return pow_ui(z, static_cast<unsigned long>(k)) / BigReal(kern, ctx);
                    },
                    "single-power series"};
    auto sb = sum_bracket(g, TailStrategy::geometric(z), BigReal("1e-40", ctx), 100000, ctx);
    CHECK(sb.bracket.contains(g_closed(z, 1, ctx)));
}

TEST_CASE("cross-form equivalence on the grid") {
    BigReal eps = mul_2si(BigReal(1, ctx), -(ctx.prec_bits() - 16));
    for (const char* zs : {"0.04", "0.25", "0.49"}) {
        BigReal z(zs, ctx);
        for (long p = 0; p <= 5; ++p) {
            BigReal lhs = g_closed(z, p, ctx);
            BigReal rhs = mul_2si(f_closed(sqrt(z), p, ctx), p);
            CHECK(abs(lhs - rhs) < eps);
        }
    }
}

TEST_CASE("unit-argument tables") {
    CHECK(abs(f_at_one(1, ctx) - (const_ln2(ctx) - BigReal(BigRational(1, 2), ctx))) < tol("1e-70"));
    BigReal pi2 = const_pi(ctx) * const_pi(ctx);
    CHECK(abs(f_at_one(2, ctx) - (BigReal(BigRational(1, 2), ctx) - pi2 / BigReal(24, ctx))) <
          tol("1e-70"));
    CHECK(abs(f_at_i(3, ctx) - (mul_2si(const_ln2(ctx) - BigReal(1, ctx), -1) +
                                BigReal(BigRational(3, 32), ctx) * zeta(3, ctx))) < tol("1e-70"));
    CHECK(abs(f_at_one(0, ctx) - BigReal(BigRational(1, 2), ctx)) < tol("1e-75"));
    CHECK_THROWS_AS(f_at_one(-1, ctx), DomainError);
}

TEST_CASE("limit consistency toward z = 1") {
    CHECK(abs(f_closed(BigReal("0.999999", ctx), 1, ctx) - f_at_one(1, ctx)) < tol("1e-4"));
}

TEST_CASE("trigonometric closed forms") {
    BigReal pi_v = const_pi(ctx);
    // x = pi, p = 0: every sine term vanishes and the closed form does too
    CHECK(abs(trig_sin_closed(pi_v, 0, ctx)) < tol("1e-70"));
    // the intermediate value feeding the mod-4 theorem
    BigReal s2 = sqrt(BigReal(2, ctx));
    BigReal expected = -BigReal(BigRational(1, 2), ctx) -
                       mul_2si(s2 * ln(s2 - BigReal(1, ctx)), -2) + mul_2si(const_ln2(ctx), -2);
    CHECK(abs(trig_cos_closed(mul_2si(pi_v, -1), 1, ctx) - expected) < tol("1e-70"));
    // oracle containment at x = 2pi/3, p = 3
    BigReal x = mul_2si(pi_v, 1) / BigReal(3, ctx);
    TermGenerator g{[=](long k) {
                        BigInt kern = (4 * BigInt(k) * k - 1) * ipow(BigInt(2 * k), 3);
                        return cos(BigReal(k, ctx) * x) / BigReal(kern, ctx);
                    },
                    "cos series p=3"};
    auto sb = sum_bracket(g,
                          TailStrategy::integral(BigReal(5, ctx), BigReal(BigRational(1, 24), ctx)),
                          BigReal("1e-6", ctx), 2000000, ctx);
    CHECK(sb.bracket.contains(trig_cos_closed(x, 3, ctx)));
    CHECK_THROWS_AS(trig_cos_closed(BigReal(0, ctx), 1, ctx), DomainError);
    CHECK_THROWS_AS(trig_sin_closed(BigReal(7, ctx), 1, ctx), DomainError);
}

TEST_CASE("Bernoulli trig form agrees with the Clausen form") {
    BigReal pi_v = const_pi(ctx);
    BigReal eps = mul_2si(BigReal(1, ctx), -(ctx.prec_bits() - 12));
    CHECK(abs(trig_bernoulli_closed(pi_v, 1, TrigBernoulliKind::CosEven, ctx) -
              trig_cos_closed(pi_v, 2, ctx)) < eps);
    CHECK(abs(trig_bernoulli_closed(mul_2si(pi_v, -1), 1, TrigBernoulliKind::SinOdd, ctx) -
              trig_sin_closed(mul_2si(pi_v, -1), 3, ctx)) < eps);
    // p = 0 sin-odd at x = pi/2 equals (pi/8)(sqrt2 - 1)
    BigReal s2 = sqrt(BigReal(2, ctx));
    CHECK(abs(trig_bernoulli_closed(mul_2si(pi_v, -1), 0, TrigBernoulliKind::SinOdd, ctx) -
              mul_2si(pi_v * (s2 - BigReal(1, ctx)), -3)) < tol("1e-70"));
}
