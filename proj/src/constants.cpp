#include "harmoniter/constants.hpp"

#include "harmoniter/errors.hpp"
#include "harmoniter/harmonic.hpp"
#include "harmoniter/logiter.hpp"

#include <cmath>

namespace harmoniter {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::minimal: return "minimal";
        case Method::standard: return "standard";
        case Method::improved: return "improved";
        case Method::primed: return "primed";
    }
    return "?";
}

Method parse_method(std::string_view text) {
    if (text == "minimal") return Method::minimal;
    if (text == "standard") return Method::standard;
    if (text == "improved") return Method::improved;
    if (text == "primed") return Method::primed;
    throw DomainError("unknown method: " + std::string(text));
}

std::string_view to_string(HSource s) {
    return s == HSource::exact ? "exact" : "floating";
}

double correction_term(int j, std::uint64_t n) {
    return 1.0 / (2.0 * log_product(j, static_cast<double>(n)));
}

GammaEstimate gamma_classic(std::uint64_t n, Method method) {
    if (n < 1) throw DomainError("gamma_classic needs n >= 1");
    if (method == Method::primed) throw DomainError("primed method needs j >= 2");
    GammaEstimate e;
    e.order = 1;
    e.n = n;
    e.method = method;
    // Subtract in long double so the ~1e-19 rounding of h_1 stays below the
    // 1/n^2 signal at large n.
    const long double h = harmonic_number(n).to_long_double();
    e.raw = static_cast<double>(h - std::log(static_cast<long double>(n)));
    if (method == Method::improved) e.corrected = e.raw - correction_term(1, n);
    return e;
}

GammaEstimate gamma_j_estimate(int j, std::uint64_t n) {
    if (j < 2 || j > kMaxLogOrder) throw DomainError("gamma_j_estimate needs 2 <= j <= 5");
    if (n < start_index(j)) {
        throw DomainError("gamma_j_estimate: n must be >= a(" + std::to_string(j) + ") = " +
                          std::to_string(start_index(j)));
    }
    GammaEstimate e;
    e.order = j;
    e.n = n;
    e.method = Method::improved;
    e.raw = l_step_sum(j, n) - ln_iter(j, static_cast<double>(n));
    e.corrected = e.raw - correction_term(j, n);
    if (j == 5) e.warning = "j=5 sums from a(5)=3814280; expect a long run";
    return e;
}

std::uint64_t exact_h_default_limit(int j) {
    switch (j) {
        case 1: return 1'000'000;
        case 2: return 1'000;
        case 3: return 120;
        default: return 40;
    }
}

GammaEstimate gamma_j_prime_estimate(int j, std::uint64_t n, std::optional<HSource> source) {
    if (j < 2 || j > kMaxLogOrder) throw DomainError("gamma_j_prime_estimate needs 2 <= j <= 5");
    if (n < start_index(j)) {
        throw DomainError("gamma_j_prime_estimate: n must be >= a(" + std::to_string(j) + ") = " +
                          std::to_string(start_index(j)));
    }
    const HSource used = source.value_or(n <= exact_h_default_limit(j) ? HSource::exact
                                                                       : HSource::floating);
    GammaEstimate e;
    e.order = j;
    e.n = n;
    e.method = Method::primed;
    e.h_source = used;
    double h = 0.0;
    if (used == HSource::exact) {
        h = h_eval(j, n).to_double();
    } else {
        FloatHarmonicStream stream(j);
        stream.advance_to(n);
        h = stream.value();
    }
    e.raw = h - l_step_sum(j, n);
    e.error_order = 1.0 / ln_iter(j - 1, static_cast<double>(n));
    return e;
}

}  // namespace harmoniter
