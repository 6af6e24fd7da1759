#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace harmoniter {

// Sieve of Eratosthenes: all primes p <= n, ascending.
std::vector<unsigned long> primes_up_to(unsigned long n);

// Smallest prime in the half-open interval (lo, hi], if any.
std::optional<unsigned long> smallest_prime_in(unsigned long lo, unsigned long hi);

}  // namespace harmoniter
