#include "harmoniter/padic_fixed.hpp"

#include "harmoniter/errors.hpp"
#include "harmoniter/valuation.hpp"

#include <algorithm>

namespace harmoniter {

BigInt prime_power(unsigned long p, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

namespace {

BigInt reduce(const BigInt& x, const BigInt& modulus) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

BigInt invert_unit(const BigInt& u, const BigInt& modulus) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t()) == 0) {
        throw InternalError("p-adic unit is not invertible");
    }
    return r;
}

}  // namespace

PAdicFixed PAdicFixed::from_rational(const BigRational& q, unsigned long p, unsigned digits) {
    require_prime(p);
    if (q.is_zero()) throw DomainError("p-adic fixed-precision value must be nonzero");
    if (digits == 0) throw DomainError("p-adic precision must be positive");
    BigInt num = q.num();
    BigInt den = q.den();
    const long up = static_cast<long>(strip_factor(num, p));
    const long down = static_cast<long>(strip_factor(den, p));
    const BigInt modulus = prime_power(p, digits);
    BigInt unit = reduce(num * invert_unit(reduce(den, modulus), modulus), modulus);
    return PAdicFixed(p, up - down, std::move(unit), digits);
}

PAdicFixed PAdicFixed::from_integer(unsigned long k, unsigned long p, unsigned digits) {
    return from_rational(BigRational(BigInt(k)), p, digits);
}

PAdicFixed PAdicFixed::restore(unsigned long p, long valuation, const BigInt& unit, unsigned precision) {
    require_prime(p);
    if (precision == 0) throw DomainError("p-adic precision must be positive");
    const BigInt modulus = prime_power(p, precision);
    if (unit < 0 || unit >= modulus || mpz_divisible_ui_p(unit.get_mpz_t(), p) != 0) {
        throw DomainError("p-adic unit out of range or divisible by p");
    }
    return PAdicFixed(p, valuation, unit, precision);
}

PAdicFixed PAdicFixed::inverse() const {
    const BigInt modulus = prime_power(prime_, precision_);
    return PAdicFixed(prime_, -valuation_, invert_unit(unit_, modulus), precision_);
}

PAdicFixed operator*(const PAdicFixed& a, const PAdicFixed& b) {
    if (a.prime_ != b.prime_) throw DomainError("p-adic product across different primes");
    const unsigned precision = std::min(a.precision_, b.precision_);
    const BigInt modulus = prime_power(a.prime_, precision);
    return PAdicFixed(a.prime_, a.valuation_ + b.valuation_,
                      reduce(a.unit_ * b.unit_, modulus), precision);
}

PAdicFixed operator+(const PAdicFixed& a, const PAdicFixed& b) {
    if (a.prime_ != b.prime_) throw DomainError("p-adic sum across different primes");
    const unsigned long p = a.prime_;
    const long known = std::min(a.absolute_precision(), b.absolute_precision());
    const long low = std::min(a.valuation_, b.valuation_);
    const long width = known - low;
    if (width <= 0) throw PrecisionLoss("p-adic sum: no certified digits left");
    const BigInt modulus = prime_power(p, static_cast<unsigned long>(width));
    const auto shifted = [&](const PAdicFixed& x) {
        const long gap = x.valuation_ - low;
        if (gap >= width) return BigInt(0);
        return BigInt(x.unit_ * prime_power(p, static_cast<unsigned long>(gap)));
    };
    BigInt s = reduce(shifted(a) + shifted(b), modulus);
    if (s == 0) throw PrecisionLoss("p-adic sum cancelled to the working precision");
    const auto lost = static_cast<long>(strip_factor(s, p));
    return PAdicFixed(p, low + lost, std::move(s), static_cast<unsigned>(width - lost));
}

std::string PAdicFixed::to_string() const {
    return std::to_string(prime_) + "^" + std::to_string(valuation_) + "*" + unit_.get_str() +
           " (mod " + std::to_string(prime_) + "^" + std::to_string(precision_) + ")";
}

}  // namespace harmoniter
