#pragma once

#include "harmoniter/bigrational.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <variant>

namespace harmoniter {

// The valuation of zero. Kept as its own type so it cannot be mistaken for
// an ordinary exponent.
struct NegInfinity {
    friend bool operator==(NegInfinity, NegInfinity) = default;
};

class PAdicValuation {
public:
    PAdicValuation(unsigned long prime, long exponent) : prime_(prime), value_(exponent) {}
    PAdicValuation(unsigned long prime, NegInfinity) : prime_(prime), value_(NegInfinity{}) {}

    unsigned long prime() const { return prime_; }
    bool is_neg_infinity() const { return std::holds_alternative<NegInfinity>(value_); }

    // Empty for the valuation of zero.
    std::optional<long> finite() const;

    // Throws DomainError for the valuation of zero.
    long exponent() const;

    std::string to_string() const;

    friend bool operator==(const PAdicValuation&, const PAdicValuation&) = default;

private:
    unsigned long prime_;
    std::variant<long, NegInfinity> value_;
};

bool is_prime(unsigned long n);

// Throws NotPrime unless p is prime.
void require_prime(unsigned long p);

// Number of times p divides z (z != 0); strips the factor from z in place.
unsigned long strip_factor(BigInt& z, unsigned long p);

// Exponent of p in a nonzero integer.
unsigned long integer_valuation(const BigInt& z, unsigned long p);

// nu_p(q): r with q = p^r * a'/b', a' and b' coprime to p.
PAdicValuation valuation(const BigRational& q, unsigned long p);

// Valuation of the reduced denominator of q, i.e. max(0, -nu_p(q)); 0 for q = 0.
unsigned long denominator_valuation(const BigRational& q, unsigned long p);

// When min nu_p(x_i) is attained by exactly one term the sum has exactly that
// valuation; returns it. Returns nullopt on a tie (no claim).
// Throws EmptyInput, NotPrime, or DomainError if a term is zero.
std::optional<long> valuation_of_sum_via_min(std::span<const BigRational> terms, unsigned long p);

}  // namespace harmoniter
