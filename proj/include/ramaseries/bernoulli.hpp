#pragma once

#include <mutex>
#include <vector>

#include "ramaseries/integers.hpp"

namespace ramaseries {

namespace detail {

// Grow-on-demand table of Bernoulli numbers (generating-function convention,
// B_1 = -1/2) computed by the standard recurrence
//   sum_{k=0..m} C(m+1, k) B_k = 0.
// Shared across threads behind a mutex; entries never change once written.
class BernoulliTable {
public:
    static BernoulliTable& instance() {
        static BernoulliTable t;
        return t;
    }

    BigRational get(unsigned n) {
        std::lock_guard<std::mutex> lock(mu_);
        while (table_.size() <= n) extend();
        return table_[n];
    }

private:
    BernoulliTable() {
        table_.reserve(80);
        table_.emplace_back(1);                 // B_0
        table_.emplace_back(BigRational(-1, 2)); // B_1
        while (table_.size() <= 64) extend();   // warm cache for the common range
    }

    void extend() {
        unsigned m = static_cast<unsigned>(table_.size());
        if (m % 2 == 1 && m > 1) {
            table_.emplace_back(0);
            return;
        }
        BigRational acc(0);
        for (unsigned k = 0; k < m; ++k) {
            if (table_[k] == 0) continue;
            acc += BigRational(binomial(m + 1, k)) * table_[k];
        }
        acc /= BigRational(BigInt(m) + 1);
        table_.push_back(-acc);
    }

    std::mutex mu_;
    std::vector<BigRational> table_;
};

} // namespace detail

inline BigRational bernoulli_number(unsigned n) {
    return detail::BernoulliTable::instance().get(n);
}

// B_n(x) = sum_{k=0..n} C(n,k) B_k x^{n-k}, exact over rationals.
inline BigRational bernoulli_poly(unsigned n, const BigRational& x) {
    BigRational acc(0);
    BigRational xpow(1);
    // accumulate from k = n down to 0 so x powers build up incrementally
    for (unsigned k = n + 1; k-- > 0;) {
        BigRational bk = bernoulli_number(k);
        if (bk != 0) acc += BigRational(binomial(n, k)) * bk * xpow;
        xpow *= x;
    }
    return acc;
}

inline BigReal bernoulli_poly(unsigned n, const BigReal& x, const PrecisionContext& ctx) {
    BigReal acc(0, ctx);
    BigReal xpow(1, ctx);
    for (unsigned k = n + 1; k-- > 0;) {
        BigRational bk = bernoulli_number(k);
        if (bk != 0) acc += BigReal(BigRational(binomial(n, k)) * bk, ctx) * xpow;
        xpow *= x;
    }
    return acc;
}

} // namespace ramaseries
