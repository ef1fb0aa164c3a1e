#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "ramaseries/context.hpp"
#include "ramaseries/errors.hpp"

namespace ramaseries {

// Arbitrary-precision real number backed by MPFR. Values are immutable in
// spirit: every operation returns a fresh value, nothing mutates in place
// outside this file. Each elementary operation is correctly rounded at the
// working precision, which keeps the per-operation relative error well under
// the 4-ulp budget the rest of the library assumes.
//
// Rounding contract: public operators round to nearest. The rnd:: helpers
// below take an explicit MPFR rounding mode and exist for bracket endpoints
// and certified tail bounds.
class BigReal {
public:
    explicit BigReal(const PrecisionContext& ctx) { init(ctx.work_prec()); mpfr_set_zero(v_, 1); }

    BigReal(long value, const PrecisionContext& ctx) {
        init(ctx.work_prec());
        mpfr_set_si(v_, value, MPFR_RNDN);
    }

    BigReal(const mpz_class& value, const PrecisionContext& ctx) {
        init(ctx.work_prec());
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }

    BigReal(const mpq_class& value, const PrecisionContext& ctx) {
        init(ctx.work_prec());
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }

    // gmpxx expression templates materialize through these.
    template <typename U>
    BigReal(const __gmp_expr<mpz_t, U>& e, const PrecisionContext& ctx)
        : BigReal(mpz_class(e), ctx) {}
    template <typename U>
    BigReal(const __gmp_expr<mpq_t, U>& e, const PrecisionContext& ctx)
        : BigReal(mpq_class(e), ctx) {}

    // Decimal string, e.g. "0.25", "1e-40".
    BigReal(const std::string& decimal, const PrecisionContext& ctx) {
        init(ctx.work_prec());
        if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
            throw DomainError("BigReal: unparsable decimal literal '" + decimal + "'");
    }

    BigReal(const BigReal& other) {
        init(mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }

    BigReal(BigReal&& other) noexcept {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_swap(v_, other.v_);
    }

    BigReal& operator=(const BigReal& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigReal& operator=(BigReal&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }

    ~BigReal() { mpfr_clear(v_); }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }
    long precision() const { return mpfr_get_prec(v_); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend BigReal operator+(const BigReal& a, const BigReal& b) { return binary(mpfr_add, a, b); }
    friend BigReal operator-(const BigReal& a, const BigReal& b) { return binary(mpfr_sub, a, b); }
    friend BigReal operator*(const BigReal& a, const BigReal& b) { return binary(mpfr_mul, a, b); }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        if (b.is_zero()) throw DomainError("BigReal: division by zero");
        return binary(mpfr_div, a, b);
    }
    friend BigReal operator-(const BigReal& a) {
        BigReal r = like(a);
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    BigReal& operator+=(const BigReal& b) { *this = *this + b; return *this; }
    BigReal& operator-=(const BigReal& b) { *this = *this - b; return *this; }
    BigReal& operator*=(const BigReal& b) { *this = *this * b; return *this; }
    BigReal& operator/=(const BigReal& b) { *this = *this / b; return *this; }

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }

    // Fresh value carrying the same working precision as `model`.
    static BigReal like(const BigReal& model) { return BigReal(Raw{}, mpfr_get_prec(model.v_)); }
    static BigReal with_prec(long prec) { return BigReal(Raw{}, prec); }

private:
    struct Raw {};
    BigReal(Raw, long prec) { init(prec); mpfr_set_zero(v_, 1); }

    void init(long prec) { mpfr_init2(v_, prec); }

    template <typename Fn>
    static BigReal binary(Fn fn, const BigReal& a, const BigReal& b) {
        BigReal r = BigReal(Raw{}, std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;

    friend BigReal abs(const BigReal&);
    friend BigReal sqrt(const BigReal&);
    friend BigReal exp(const BigReal&);
    friend BigReal ln(const BigReal&);
    friend BigReal atan(const BigReal&);
    friend BigReal sin(const BigReal&);
    friend BigReal cos(const BigReal&);
    friend BigReal tan(const BigReal&);
    friend BigReal pow_ui(const BigReal&, unsigned long);
    friend BigReal mul_2si(const BigReal&, long);
};

inline BigReal abs(const BigReal& a) {
    BigReal r = BigReal::like(a);
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}

inline BigReal sqrt(const BigReal& a) {
    if (a.sign() < 0) throw DomainError("sqrt: negative argument");
    BigReal r = BigReal::like(a);
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

inline BigReal exp(const BigReal& a) {
    BigReal r = BigReal::like(a);
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
}

// Natural log. Every logarithm in this artifact has a positive real argument
// by construction; anything else is a caller bug, so it throws.
inline BigReal ln(const BigReal& a) {
    if (a.sign() <= 0) throw DomainError("ln: argument must be a positive real");
    BigReal r = BigReal::like(a);
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
}

inline BigReal atan(const BigReal& a) {
    BigReal r = BigReal::like(a);
    mpfr_atan(r.v_, a.v_, MPFR_RNDN);
    return r;
}

inline BigReal sin(const BigReal& a) {
    BigReal r = BigReal::like(a);
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
}

inline BigReal cos(const BigReal& a) {
    BigReal r = BigReal::like(a);
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
}

inline BigReal tan(const BigReal& a) {
    BigReal r = BigReal::like(a);
    mpfr_tan(r.v_, a.v_, MPFR_RNDN);
    return r;
}

inline BigReal pow_ui(const BigReal& a, unsigned long e) {
    BigReal r = BigReal::like(a);
    mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
    return r;
}

// Exact scaling by 2^k.
inline BigReal mul_2si(const BigReal& a, long k) {
    BigReal r = BigReal::like(a);
    mpfr_mul_2si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
}

inline BigReal const_pi(const PrecisionContext& ctx) {
    BigReal r = BigReal::with_prec(ctx.work_prec());
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

inline BigReal const_ln2(const PrecisionContext& ctx) {
    BigReal r = BigReal::with_prec(ctx.work_prec());
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

// Directed-rounding helpers for interval endpoints and tail bounds.
namespace rnd {

inline BigReal add(const BigReal& a, const BigReal& b, mpfr_rnd_t mode) {
    BigReal r = BigReal::with_prec(std::max(a.precision(), b.precision()));
    mpfr_add(r.raw(), a.raw(), b.raw(), mode);
    return r;
}

inline BigReal sub(const BigReal& a, const BigReal& b, mpfr_rnd_t mode) {
    BigReal r = BigReal::with_prec(std::max(a.precision(), b.precision()));
    mpfr_sub(r.raw(), a.raw(), b.raw(), mode);
    return r;
}

inline BigReal mul(const BigReal& a, const BigReal& b, mpfr_rnd_t mode) {
    BigReal r = BigReal::with_prec(std::max(a.precision(), b.precision()));
    mpfr_mul(r.raw(), a.raw(), b.raw(), mode);
    return r;
}

inline BigReal div(const BigReal& a, const BigReal& b, mpfr_rnd_t mode) {
    if (b.is_zero()) throw DomainError("rnd::div: division by zero");
    BigReal r = BigReal::with_prec(std::max(a.precision(), b.precision()));
    mpfr_div(r.raw(), a.raw(), b.raw(), mode);
    return r;
}

} // namespace rnd

// Decimal serialization with `digits` significant digits in the form
// d.ddd...e±xx (sign included for negatives). Values rounded to the nominal
// context precision round-trip exactly through these strings.
inline std::string to_decimal(const BigReal& x, long digits) {
    if (digits < 2) digits = 2;
    if (x.is_zero()) return "0";
    mpfr_exp_t exp10 = 0;
    char* s = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), x.raw(), MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // mpfr_get_str mantissa is 0.ddd * 10^exp10; convert to d.ddd e(exp10-1)
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp10) - 1);
    return out;
}

inline std::string to_decimal(const BigReal& x, const PrecisionContext& ctx) {
    return to_decimal(x, ctx.decimal_digits());
}

inline BigReal from_decimal(const std::string& s, const PrecisionContext& ctx) {
    return BigReal(s, ctx);
}

} // namespace ramaseries
