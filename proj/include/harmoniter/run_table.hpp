#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace harmoniter {

struct Run {
    std::uint64_t n_start;
    std::uint64_t n_end;
    long valuation;

    friend bool operator==(const Run&, const Run&) = default;
};

// Run-length encoded map n -> valuation over [1, n_max]. Runs are maximal:
// neighbours always carry different valuations.
class ValuationRunTable {
public:
    ValuationRunTable() = default;
    ValuationRunTable(int order, unsigned long prime) : order_(order), prime_(prime) {}
    ValuationRunTable(int order, unsigned long prime, std::vector<Run> runs);

    int order() const { return order_; }
    unsigned long prime() const { return prime_; }
    const std::vector<Run>& runs() const { return runs_; }
    std::uint64_t n_max() const { return runs_.empty() ? 0 : runs_.back().n_end; }

    // Record the valuation at n; n must be n_max() + 1.
    void append(std::uint64_t n, long valuation);

    // Valuation at n in [1, n_max].
    long at(std::uint64_t n) const;

    // Empty when the runs tile [1, n_max] without gaps or overlaps and are
    // maximal; otherwise a description of the first defect.
    std::string defect() const;
    bool is_valid() const { return defect().empty(); }

    // "n_start,n_end,valuation" header plus one row per run, LF endings.
    std::string to_csv() const;

    friend bool operator==(const ValuationRunTable&, const ValuationRunTable&) = default;

private:
    int order_ = 1;
    unsigned long prime_ = 2;
    std::vector<Run> runs_;
};

}  // namespace harmoniter
