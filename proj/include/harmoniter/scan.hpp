#pragma once

#include "harmoniter/checkpoint.hpp"
#include "harmoniter/harmonic.hpp"
#include "harmoniter/run_table.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace harmoniter {

inline constexpr unsigned kDefaultPAdicDigits = 64;

struct ScanOptions {
    ScanEngine engine = ScanEngine::padic;
    unsigned padic_digits = kDefaultPAdicDigits;
    std::size_t bit_budget = kDefaultBitBudget;
    std::optional<std::filesystem::path> checkpoint_path;
    // Save every this many indices (0: only when run_to finishes or aborts).
    std::uint64_t checkpoint_every = 0;
};

// Valuations of the reduced denominator of h_j(n), n = 1, 2, ..., for a set
// of primes, from one sequential pass.
//
// The exact engine walks a single HarmonicStream and reads every prime's
// valuation off the same rational. The p-adic engine runs one
// PAdicHarmonicStream per prime; its valuations are exact as well (precision
// is tracked and a prime whose working precision runs out is replayed from
// n = 1 at twice the digits), and it stays cheap when the exact denominators
// grow to gigabits.
class ValuationScan {
public:
    ValuationScan(int j, std::vector<unsigned long> primes, ScanOptions options = {});

    static ValuationScan resume(const ScanCheckpoint& checkpoint, ScanOptions options = {});

    int order() const { return order_; }
    const std::vector<unsigned long>& primes() const { return primes_; }
    std::uint64_t last_n() const { return last_n_; }
    const ScanOptions& options() const { return options_; }

    // Valuation of the reduced denominator, one table per prime.
    const std::vector<ValuationRunTable>& tables() const { return denominator_tables_; }
    // nu_p(h_j(n)) itself, kept to cross-check the denominator tables.
    const std::vector<ValuationRunTable>& value_tables() const { return value_tables_; }

    // Extend to n_max (>= last_n). On ResourceLimit the checkpoint (if
    // configured) is written at the last completed n before rethrowing.
    void run_to(std::uint64_t n_max);

    ScanCheckpoint snapshot() const;

private:
    void step();
    void step_padic(std::size_t i, std::uint64_t next);
    void record(std::size_t i, std::uint64_t n, long value_valuation);
    void save_checkpoint() const;

    int order_;
    std::vector<unsigned long> primes_;
    ScanOptions options_;
    std::uint64_t last_n_ = 1;
    std::optional<HarmonicStream> exact_;
    std::vector<PAdicHarmonicStream> padic_;
    std::vector<ValuationRunTable> denominator_tables_;
    std::vector<ValuationRunTable> value_tables_;
};

std::vector<ValuationRunTable> denominator_valuation_scan(int j, const std::vector<unsigned long>& primes,
                                                          std::uint64_t n_max,
                                                          const ScanCheckpoint* resume = nullptr,
                                                          const ScanOptions& options = {});

inline constexpr int kScanReportVersion = 1;

// {version, j, primes:[{p, runs:[[n_start,n_end,v],...]}], n_max, checkpoint_digest}
nlohmann::json scan_report(const ValuationScan& scan);

}  // namespace harmoniter
