#include "harmoniter/verifiers.hpp"

#include "harmoniter/errors.hpp"
#include "harmoniter/primes.hpp"
#include "harmoniter/scan.hpp"
#include "harmoniter/valuation.hpp"

#include <bit>
#include <cmath>

namespace harmoniter {

// ---------------------------------------------------------------- integrality

IntegralityReport integrality_check(int j, std::uint64_t n_max, ScanEngine engine,
                                    std::size_t bit_budget) {
    if (j < 1) throw DomainError("integrality_check needs j >= 1");
    if (n_max < 1) throw DomainError("integrality_check needs n_max >= 1");
    IntegralityReport report;

    if (engine == ScanEngine::exact) {
        HarmonicStream stream(j, bit_budget);
        if (stream.value().is_integer()) report.integers.push_back(1);
        while (stream.index() < n_max) {
            stream.advance();
            if (stream.value().is_integer()) report.integers.push_back(stream.index());
        }
        return report;
    }

    ScanOptions options;
    options.engine = ScanEngine::padic;
    ValuationScan scan(j, primes_up_to(kCertificatePrimeBound), options);
    scan.run_to(n_max);
    report.integers.push_back(1);  // h_j(1) = 1
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        bool certified = false;
        for (const auto& t : scan.value_tables()) {
            if (t.at(n) < 0) {
                certified = true;
                break;
            }
        }
        if (!certified) report.undetermined.push_back(n);
    }
    return report;
}

// ---------------------------------------------------------------- Theisinger

TheisingerWitness theisinger_witness(std::uint64_t n) {
    if (n < 2) throw DomainError("theisinger_witness needs n >= 2");
    return theisinger_witness(n, harmonic_number(n));
}

TheisingerWitness theisinger_witness(std::uint64_t n, const BigRational& h1_of_n) {
    if (n < 2) throw DomainError("theisinger_witness needs n >= 2");
    const auto r = static_cast<unsigned>(std::bit_width(n) - 1);
    const long v = valuation(h1_of_n, 2).exponent();
    if (v != -static_cast<long>(r)) {
        throw InternalError("nu_2(h_1(" + std::to_string(n) + ")) = " + std::to_string(v) +
                            ", expected -" + std::to_string(r));
    }
    std::vector<BigRational> terms;
    terms.reserve(n);
    for (std::uint64_t k = 1; k <= n; ++k) terms.emplace_back(BigInt(1), BigInt(k));
    const auto via_min = valuation_of_sum_via_min(terms, 2);
    if (!via_min || *via_min != v) {
        throw InternalError("1/2^r is not the unique minimal-valuation term for n=" + std::to_string(n));
    }
    return TheisingerWitness{r, v};
}

// ---------------------------------------------------------------- Kurschak

KurschakWitness kurschak_witness(std::uint64_t n) {
    if (n < 2) throw DomainError("kurschak_witness needs n >= 2");
    return kurschak_witness(n, harmonic_number(n));
}

KurschakWitness kurschak_witness(std::uint64_t n, const BigRational& h1_of_n) {
    if (n < 2) throw DomainError("kurschak_witness needs n >= 2");
    const auto p = smallest_prime_in(n / 2, n);
    if (!p) throw InternalError("no prime in (" + std::to_string(n / 2) + ", " + std::to_string(n) + "]");
    bool verified = valuation(h1_of_n, *p).exponent() == -1;
    for (std::uint64_t k = 1; k <= n && verified; ++k) {
        if (k != *p && k % *p == 0) verified = false;
    }
    return KurschakWitness{*p, verified};
}

// ---------------------------------------------------------------- inequality

namespace {

// Outcome of x < y with the relative guard band applied.
struct Comparison {
    bool less;
    bool marginal;
};

Comparison compare_guarded(double x, double y, long double xl, long double yl) {
    if (std::fabs(x - y) > kInequalityGuardBand * std::fabs(y)) return {x < y, false};
    const bool marginal = std::fabs(xl - yl) <= kInequalityGuardBand * std::fabs(yl);
    return {xl < yl, marginal};
}

}  // namespace

InequalityCheck inequality_at(std::uint64_t k, const BigRational& h1_of_k_minus_1) {
    if (k < 2) throw DomainError("inequality needs k >= 2");
    const auto kd = static_cast<double>(k);
    const auto kl = static_cast<long double>(k);
    // Compare the reciprocals' denominators:
    //   lower: (k-1) h_1(k-1) < (k+1) ln(k+1),  upper: k ln k < (k-1) h_1(k-1)
    const double middle = (kd - 1.0) * h1_of_k_minus_1.to_double();
    const long double middle_l = (kl - 1.0L) * h1_of_k_minus_1.to_long_double();
    const double lower_edge = (kd + 1.0) * std::log(kd + 1.0);
    const long double lower_edge_l = (kl + 1.0L) * std::log(kl + 1.0L);
    const double upper_edge = kd * std::log(kd);
    const long double upper_edge_l = kl * std::log(kl);

    const Comparison lower = compare_guarded(middle, lower_edge, middle_l, lower_edge_l);
    const Comparison upper = compare_guarded(upper_edge, middle, upper_edge_l, middle_l);
    return InequalityCheck{k, lower.less, upper.less, lower.marginal || upper.marginal};
}

InequalityReport inequality_threshold(std::uint64_t k_max) {
    if (k_max < 2) throw DomainError("inequality_threshold needs k_max >= 2");
    InequalityReport report;
    report.k_max = k_max;

    HarmonicStream h1(1);  // h_1(1) at k = 2
    std::uint64_t last_lower_fail = 1;
    std::uint64_t last_upper_fail = 1;
    std::uint64_t last_any_fail = 1;
    for (std::uint64_t k = 2; k <= k_max; ++k) {
        h1.advance_to(k - 1);
        const InequalityCheck c = inequality_at(k, h1.value());
        const bool lower_ok = c.lower_holds && !c.marginal;
        const bool upper_ok = c.upper_holds && !c.marginal;
        if (!lower_ok) last_lower_fail = k;
        if (!upper_ok) last_upper_fail = k;
        if (!lower_ok || !upper_ok) {
            last_any_fail = k;
            report.violations.push_back(c);
        }
    }
    const auto threshold = [k_max](std::uint64_t last_fail) -> std::optional<std::uint64_t> {
        if (last_fail >= k_max) return std::nullopt;
        return last_fail + 1;
    };
    report.k_star = threshold(last_any_fail);
    report.lower_from = threshold(last_lower_fail);
    report.upper_from = threshold(last_upper_fail);
    return report;
}

}  // namespace harmoniter
