#pragma once

#include "ramaseries/real.hpp"

namespace ramaseries {

// Closed interval [lo, hi] certified to contain an exact quantity. All
// combining operations round lo downward and hi upward, so containment is
// preserved: a in A and b in B implies a+b in add(A, B), etc.
class Bracket {
public:
    Bracket(BigReal lo, BigReal hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw DomainError("Bracket: lo > hi");
    }

    static Bracket exact(const BigReal& x) { return Bracket(x, x); }

    const BigReal& lo() const { return lo_; }
    const BigReal& hi() const { return hi_; }

    BigReal width() const { return rnd::sub(hi_, lo_, MPFR_RNDU); }

    bool contains(const BigReal& x) const { return lo_ <= x && x <= hi_; }

    bool intersects(const Bracket& other) const {
        return !(hi_ < other.lo_ || other.hi_ < lo_);
    }

    // Distance from x to the interval; zero when contained.
    BigReal distance_to(const BigReal& x) const {
        if (contains(x)) return BigReal(0, PrecisionContext(
            std::max<long>(PrecisionContext::kMinPrecBits, x.precision() - PrecisionContext::kDefaultGuardBits)));
        if (x < lo_) return rnd::sub(lo_, x, MPFR_RNDU);
        return rnd::sub(x, hi_, MPFR_RNDU);
    }

    static Bracket add(const Bracket& a, const Bracket& b) {
        return Bracket(rnd::add(a.lo_, b.lo_, MPFR_RNDD), rnd::add(a.hi_, b.hi_, MPFR_RNDU));
    }

    static Bracket sub(const Bracket& a, const Bracket& b) {
        return Bracket(rnd::sub(a.lo_, b.hi_, MPFR_RNDD), rnd::sub(a.hi_, b.lo_, MPFR_RNDU));
    }

    static Bracket neg(const Bracket& a) { return Bracket(-a.hi_, -a.lo_); }

    // Scale by a point value (sign-aware).
    static Bracket scale(const Bracket& a, const BigReal& s) {
        if (s.sign() >= 0)
            return Bracket(rnd::mul(a.lo_, s, MPFR_RNDD), rnd::mul(a.hi_, s, MPFR_RNDU));
        return Bracket(rnd::mul(a.hi_, s, MPFR_RNDD), rnd::mul(a.lo_, s, MPFR_RNDU));
    }

    // Full interval product.
    static Bracket mul(const Bracket& a, const Bracket& b) {
        BigReal c1 = rnd::mul(a.lo_, b.lo_, MPFR_RNDD);
        BigReal c2 = rnd::mul(a.lo_, b.hi_, MPFR_RNDD);
        BigReal c3 = rnd::mul(a.hi_, b.lo_, MPFR_RNDD);
        BigReal c4 = rnd::mul(a.hi_, b.hi_, MPFR_RNDD);
        BigReal lo = c1;
        for (const BigReal* c : {&c2, &c3, &c4})
            if (*c < lo) lo = *c;
        BigReal d1 = rnd::mul(a.lo_, b.lo_, MPFR_RNDU);
        BigReal d2 = rnd::mul(a.lo_, b.hi_, MPFR_RNDU);
        BigReal d3 = rnd::mul(a.hi_, b.lo_, MPFR_RNDU);
        BigReal d4 = rnd::mul(a.hi_, b.hi_, MPFR_RNDU);
        BigReal hi = d1;
        for (const BigReal* d : {&d2, &d3, &d4})
            if (*d > hi) hi = *d;
        return Bracket(std::move(lo), std::move(hi));
    }

    // Widen outward by a nonnegative margin.
    static Bracket widen(const Bracket& a, const BigReal& margin) {
        if (margin.sign() < 0) throw DomainError("Bracket::widen: negative margin");
        return Bracket(rnd::sub(a.lo_, margin, MPFR_RNDD), rnd::add(a.hi_, margin, MPFR_RNDU));
    }

private:
    BigReal lo_;
    BigReal hi_;
};

enum class BracketOp { Add, Sub, Mul };

inline Bracket combine(const Bracket& a, const Bracket& b, BracketOp op) {
    switch (op) {
        case BracketOp::Add: return Bracket::add(a, b);
        case BracketOp::Sub: return Bracket::sub(a, b);
        case BracketOp::Mul: return Bracket::mul(a, b);
    }
    throw Error("combine: unreachable");
}

} // namespace ramaseries
