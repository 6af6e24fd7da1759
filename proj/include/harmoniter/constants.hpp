#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace harmoniter {

enum class Method { minimal, standard, improved, primed };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);

// Where h_j(n) comes from in the primed estimator.
enum class HSource { exact, floating };

std::string_view to_string(HSource s);

struct GammaEstimate {
    int order = 1;
    std::uint64_t n = 1;
    Method method = Method::standard;
    // l_j(n) - ln_j(n) (h_1(n) - ln n for j = 1), or h_j(n) - l_j(n) when primed.
    double raw = 0.0;
    // raw minus the 1/(2 n ln n ... ln_{j-1} n) term; unset for the primed estimator.
    std::optional<double> corrected;
    // Primed estimator only: magnitude 1/ln_{j-1}(n) of the known error order.
    std::optional<double> error_order;
    HSource h_source = HSource::exact;
    std::string warning;

    // corrected when present, raw otherwise.
    double value() const { return corrected.value_or(raw); }
};

// 1 / (2 n ln n ln_2 n ... ln_{j-1} n); 1/(2n) for j = 1.
double correction_term(int j, std::uint64_t n);

// Euler's constant from h_1(n) - ln n. h_1(n) is exact until the final
// conversion to double.
GammaEstimate gamma_classic(std::uint64_t n, Method method);

// gamma_j from l_j(n) - ln_j(n), corrected by the half-step term.
// 2 <= j <= 5; n >= a(j). j = 5 sets a cost warning.
GammaEstimate gamma_j_estimate(int j, std::uint64_t n);

// Largest n for which the primed estimator uses exact h_j by default.
std::uint64_t exact_h_default_limit(int j);

// gamma_j' from h_j(n) - l_j(n). Converges only like 1/ln_{j-1} n, which the
// estimate reports in error_order. With no source given, h_j is exact up to
// exact_h_default_limit(j) and compensated double precision beyond.
GammaEstimate gamma_j_prime_estimate(int j, std::uint64_t n,
                                     std::optional<HSource> source = std::nullopt);

}  // namespace harmoniter
