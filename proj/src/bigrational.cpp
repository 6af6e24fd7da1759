#include "harmoniter/bigrational.hpp"

#include "harmoniter/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace harmoniter {

namespace {

BigInt parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty()) throw std::invalid_argument("empty integer in rational literal");
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("bad digit in rational literal: " + std::string(text));
        }
    }
    return BigInt(std::string(text), 10);
}

}  // namespace

BigRational::BigRational(long value) : value_(value) {}

BigRational::BigRational(const BigInt& value) : value_(value) {}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational::BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

BigRational BigRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_integer(text));
    const BigInt n = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
        throw std::invalid_argument("negative denominator in rational literal");
    }
    return BigRational(n, parse_integer(den_text));
}

std::size_t BigRational::bit_size() const {
    return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

long double BigRational::to_long_double() const {
    if (is_zero()) return 0.0L;
    BigInt n = abs(value_.get_num());
    const BigInt& d = value_.get_den();
    const long nb = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    const long db = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    // Scale so the integer quotient carries at least 66 significant bits.
    const long shift = 66 - (nb - db);
    BigInt q;
    if (shift >= 0) {
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    } else {
        BigInt scaled_d;
        mpz_mul_2exp(scaled_d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
        mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), scaled_d.get_mpz_t());
    }
    if (shift >= 0) mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const long qb = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
    const long drop = qb > 64 ? qb - 64 : 0;
    mpz_tdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
    const auto top = static_cast<unsigned long long>(mpz_get_ui(q.get_mpz_t()));
    const long double mag = std::ldexp(static_cast<long double>(top), static_cast<int>(drop - shift));
    return sign() < 0 ? -mag : mag;
}

std::string BigRational::to_string() const {
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

BigRational BigRational::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return BigRational(std::move(r));
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

BigRational operator-(const BigRational& a) {
    return BigRational(mpq_class(-a.value_));
}

BigRational rat_add(const BigRational& a, const BigRational& b) {
    return a + b;
}

}  // namespace harmoniter
