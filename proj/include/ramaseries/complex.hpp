#pragma once

#include "ramaseries/real.hpp"

namespace ramaseries {

// Rectangular complex value. Arithmetic is componentwise-consistent with
// BigReal; there is deliberately no complex logarithm here (every identity in
// this library reduces |z| = 1 arguments to real cosine/sine series).
struct BigComplex {
    BigReal re;
    BigReal im;

    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(const BigReal& r, const PrecisionContext& ctx) : re(r), im(BigReal(0, ctx)) {}
    explicit BigComplex(const PrecisionContext& ctx) : re(ctx), im(ctx) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigComplex& a, const BigReal& s) {
        return {a.re * s, a.im * s};
    }
    friend BigComplex operator/(const BigComplex& a, const BigReal& s) {
        return {a.re / s, a.im / s};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal d = b.re * b.re + b.im * b.im;
        if (d.is_zero()) throw DomainError("BigComplex: division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re == b.re && a.im == b.im;
    }

    BigReal abs2() const { return re * re + im * im; }
    BigReal abs() const { return sqrt(abs2()); }
};

} // namespace ramaseries
