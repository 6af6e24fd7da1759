#pragma once

#include "harmoniter/bigrational.hpp"

#include <string>

namespace harmoniter {

// A nonzero p-adic number p^v * u where the unit u is known modulo
// p^precision. Every result carries the precision it is actually certified
// to; an addition whose leading digits cancel below the known precision
// throws PrecisionLoss instead of guessing. Valuations produced without an
// exception are therefore exact.
class PAdicFixed {
public:
    // q != 0; the unit is carried to `digits` p-adic digits.
    static PAdicFixed from_rational(const BigRational& q, unsigned long p, unsigned digits);
    static PAdicFixed from_integer(unsigned long k, unsigned long p, unsigned digits);

    // Rebuild from serialized parts; validates that unit is a unit mod p^precision.
    static PAdicFixed restore(unsigned long p, long valuation, const BigInt& unit, unsigned precision);

    unsigned long prime() const { return prime_; }
    long valuation() const { return valuation_; }
    unsigned precision() const { return precision_; }
    const BigInt& unit() const { return unit_; }
    long absolute_precision() const { return valuation_ + static_cast<long>(precision_); }

    PAdicFixed inverse() const;

    friend PAdicFixed operator*(const PAdicFixed& a, const PAdicFixed& b);
    friend PAdicFixed operator+(const PAdicFixed& a, const PAdicFixed& b);

    friend bool operator==(const PAdicFixed&, const PAdicFixed&) = default;

    std::string to_string() const;

private:
    PAdicFixed(unsigned long p, long v, BigInt u, unsigned precision)
        : prime_(p), valuation_(v), unit_(std::move(u)), precision_(precision) {}

    unsigned long prime_ = 2;
    long valuation_ = 0;
    BigInt unit_;
    unsigned precision_ = 0;
};

// p^e as a big integer.
BigInt prime_power(unsigned long p, unsigned long e);

}  // namespace harmoniter
