#pragma once

#include <mpfr.h>

#include "ramaseries/errors.hpp"

namespace ramaseries {

// Shared precision configuration. All values created under the same context
// are computed at prec_bits + guard_bits mantissa bits; results are quoted
// and serialized at prec_bits. The context is immutable, so it can be shared
// freely between threads.
class PrecisionContext {
public:
    static constexpr long kMinPrecBits = 64;
    static constexpr long kMaxPrecBits = 4096;
    static constexpr long kMinGuardBits = 32;
    static constexpr long kDefaultPrecBits = 256;
    static constexpr long kDefaultGuardBits = 64;

    explicit PrecisionContext(long prec_bits = kDefaultPrecBits,
                              long guard_bits = kDefaultGuardBits)
        : prec_bits_(prec_bits), guard_bits_(guard_bits) {
        if (prec_bits_ < kMinPrecBits)
            throw DomainError("PrecisionContext: prec_bits must be >= 64");
        if (prec_bits_ > kMaxPrecBits)
            throw DomainError("PrecisionContext: prec_bits above supported maximum 4096");
        if (guard_bits_ < kMinGuardBits)
            throw DomainError("PrecisionContext: guard_bits must be >= 32");
    }

    long prec_bits() const { return prec_bits_; }
    long guard_bits() const { return guard_bits_; }
    // Working mantissa size used for every intermediate operation.
    long work_prec() const { return prec_bits_ + guard_bits_; }
    // Significant decimal digits used when serializing values.
    long decimal_digits() const { return prec_bits_ / 3; }

    friend bool operator==(const PrecisionContext& a, const PrecisionContext& b) {
        return a.prec_bits_ == b.prec_bits_ && a.guard_bits_ == b.guard_bits_;
    }

private:
    long prec_bits_;
    long guard_bits_;
};

inline PrecisionContext make_context(long prec_bits) { return PrecisionContext(prec_bits); }

} // namespace ramaseries
