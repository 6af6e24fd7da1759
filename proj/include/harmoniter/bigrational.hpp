#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace harmoniter {

using BigInt = mpz_class;

// Arbitrary-precision rational kept in canonical form after every
// operation: gcd(|num|, den) == 1, den > 0, zero is 0/1.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value);  // NOLINT(google-explicit-constructor)
    explicit BigRational(const BigInt& value);
    BigRational(const BigInt& num, const BigInt& den);
    BigRational(long num, long den);

    // Strict "num/den" or "n" (optional leading '-'); den must be nonzero.
    static BigRational parse(std::string_view text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    const mpz_class& num_ref() const { return value_.get_num(); }
    const mpz_class& den_ref() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // Total bits held by numerator and denominator.
    std::size_t bit_size() const;

    double to_double() const { return value_.get_d(); }
    long double to_long_double() const;

    // "num/den", integers included ("5/1").
    std::string to_string() const;

    BigRational reciprocal() const;

    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a);

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit BigRational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_{0};
};

BigRational rat_add(const BigRational& a, const BigRational& b);

}  // namespace harmoniter
