#pragma once

#include <gmpxx.h>

#include "ramaseries/real.hpp"

namespace ramaseries {

// Exact integer and rational scalars. GMP's canonicalization keeps every
// mpq_class in lowest terms with a positive denominator, which is exactly the
// BigRational invariant this library relies on.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigRational rpow(const BigRational& base, unsigned long e) {
    BigRational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

inline BigReal to_real(const BigInt& z, const PrecisionContext& ctx) { return BigReal(z, ctx); }
inline BigReal to_real(const BigRational& q, const PrecisionContext& ctx) { return BigReal(q, ctx); }

} // namespace ramaseries
