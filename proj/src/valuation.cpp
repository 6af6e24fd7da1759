#include "harmoniter/valuation.hpp"

#include "harmoniter/errors.hpp"

#include <limits>

namespace harmoniter {

std::optional<long> PAdicValuation::finite() const {
    if (const auto* v = std::get_if<long>(&value_)) return *v;
    return std::nullopt;
}

long PAdicValuation::exponent() const {
    if (const auto* v = std::get_if<long>(&value_)) return *v;
    throw DomainError("valuation of zero is -infinity");
}

std::string PAdicValuation::to_string() const {
    if (is_neg_infinity()) return "-inf";
    return std::to_string(std::get<long>(value_));
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (unsigned long d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

void require_prime(unsigned long p) {
    if (!is_prime(p)) throw NotPrime(p);
}

unsigned long strip_factor(BigInt& z, unsigned long p) {
    // Repeated exact division by p; mpz_remove does this without factoring.
    const BigInt prime(p);
    return mpz_remove(z.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t());
}

unsigned long integer_valuation(const BigInt& z, unsigned long p) {
    if (z == 0) throw DomainError("integer valuation of zero");
    BigInt copy = z;
    return strip_factor(copy, p);
}

PAdicValuation valuation(const BigRational& q, unsigned long p) {
    require_prime(p);
    if (q.is_zero()) return PAdicValuation(p, NegInfinity{});
    const auto up = static_cast<long>(integer_valuation(q.num_ref(), p));
    const auto down = static_cast<long>(integer_valuation(q.den_ref(), p));
    return PAdicValuation(p, up - down);
}

unsigned long denominator_valuation(const BigRational& q, unsigned long p) {
    require_prime(p);
    return integer_valuation(q.den_ref(), p);
}

std::optional<long> valuation_of_sum_via_min(std::span<const BigRational> terms, unsigned long p) {
    require_prime(p);
    if (terms.empty()) throw EmptyInput("valuation_of_sum_via_min needs at least one term");
    long best = std::numeric_limits<long>::max();
    std::size_t hits = 0;
    for (const auto& t : terms) {
        if (t.is_zero()) throw DomainError("valuation_of_sum_via_min: zero term");
        const long v = valuation(t, p).exponent();
        if (v < best) {
            best = v;
            hits = 1;
        } else if (v == best) {
            ++hits;
        }
    }
    if (hits != 1) return std::nullopt;
    return best;
}

}  // namespace harmoniter
