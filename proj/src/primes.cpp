#include "harmoniter/primes.hpp"

namespace harmoniter {

std::vector<unsigned long> primes_up_to(unsigned long n) {
    std::vector<unsigned long> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (unsigned long i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (unsigned long m = i * i; m <= n; m += i) composite[m] = true;
    }
    return out;
}

std::optional<unsigned long> smallest_prime_in(unsigned long lo, unsigned long hi) {
    for (unsigned long p : primes_up_to(hi)) {
        if (p > lo) return p;
    }
    return std::nullopt;
}

}  // namespace harmoniter
