#include <catch_amalgamated.hpp>

#include "ramaseries/bernoulli.hpp"

using namespace ramaseries;

TEST_CASE("rationals stay normalized") {
    BigRational q(6, 4);
    q.canonicalize();
    CHECK(q.get_num() == 3);
    CHECK(q.get_den() == 2);
    CHECK(rpow(BigRational(-2, 4), 3) == BigRational(-1, 8));
}

TEST_CASE("binomial and integer powers") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 7) == 0);
    CHECK(ipow(BigInt(3), 5) == 243);
}

TEST_CASE("first Bernoulli numbers") {
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == BigRational(-1, 2));
    CHECK(bernoulli_number(2) == BigRational(1, 6));
    CHECK(bernoulli_number(3) == 0);
    CHECK(bernoulli_number(4) == BigRational(-1, 30));
    CHECK(bernoulli_number(12) == BigRational(-691, 2730));
}

TEST_CASE("Bernoulli polynomial values") {
    // B_1(x) = x - 1/2
    CHECK(bernoulli_poly(1, BigRational(0)) == BigRational(-1, 2));
    CHECK(bernoulli_poly(1, BigRational(1, 2)) == 0);
    // B_3(1/4) = 3/64
    CHECK(bernoulli_poly(3, BigRational(1, 4)) == BigRational(3, 64));
    for (unsigned n = 0; n <= 16; ++n) CHECK(bernoulli_poly(n, BigRational(0)) == bernoulli_number(n));
}

TEST_CASE("generating function oracle: sum B_k t^k/k! = t/(e^t - 1)") {
    PrecisionContext ctx(256);
    BigReal t(BigRational(1, 4), ctx);
    BigReal acc(0, ctx);
    BigReal tp(1, ctx);
    BigRational fact(1);
    for (unsigned k = 0; k <= 60; ++k) {
        if (k > 0) {
            fact *= BigRational(k);
            tp *= t;
        }
        BigRational bk = bernoulli_number(k);
        if (bk != 0) acc += BigReal(bk / fact, ctx) * tp;
    }
    BigReal target = t / (exp(t) - BigReal(1, ctx));
    // truncation at k = 60 for t = 1/4 is far below 1e-60
    CHECK(abs(acc - target) < BigReal("1e-60", ctx));
}

TEST_CASE("difference identity B_n(x+1) - B_n(x) = n x^(n-1)") {
    BigRational x(3, 7);
    for (unsigned n = 1; n <= 12; ++n) {
        BigRational lhs = bernoulli_poly(n, x + 1) - bernoulli_poly(n, x);
        BigRational rhs = BigRational(n) * rpow(x, n - 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("real-argument polynomial matches exact rational path") {
    PrecisionContext ctx(256);
    BigReal x(BigRational(2, 9), ctx);
    for (unsigned n : {2u, 5u, 8u}) {
        BigReal a = bernoulli_poly(n, x, ctx);
        BigReal b(bernoulli_poly(n, BigRational(2, 9)), ctx);
        CHECK(abs(a - b) < BigReal("1e-70", ctx));
    }
}
