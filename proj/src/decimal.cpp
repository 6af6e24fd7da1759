#include "harmoniter/decimal.hpp"

#include "harmoniter/errors.hpp"

#include <cmath>

namespace harmoniter {

std::string format_decimal(const BigRational& q, int digits) {
    if (digits < 0) throw DomainError("negative decimal precision");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const BigInt num = abs(q.num_ref()) * scale;
    const BigInt& den = q.den_ref();
    BigInt quotient, remainder;
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const int half = cmp(BigInt(remainder * 2), den);
    if (half > 0 || (half == 0 && mpz_odd_p(quotient.get_mpz_t()) != 0)) quotient += 1;

    std::string body = quotient.get_str(10);
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    if (q.sign() < 0 && quotient != 0) body.insert(0, "-");
    return body;
}

std::string format_decimal(double x, int digits) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    mpq_class exact;
    mpq_set_d(exact.get_mpq_t(), x);
    return format_decimal(BigRational(exact.get_num(), exact.get_den()), digits);
}

}  // namespace harmoniter
