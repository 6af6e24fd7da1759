#include "harmoniter/run_table.hpp"

#include "harmoniter/errors.hpp"

#include <algorithm>

namespace harmoniter {

ValuationRunTable::ValuationRunTable(int order, unsigned long prime, std::vector<Run> runs)
    : order_(order), prime_(prime), runs_(std::move(runs)) {
    if (const auto why = defect(); !why.empty()) throw DomainError("invalid run table: " + why);
}

void ValuationRunTable::append(std::uint64_t n, long valuation) {
    if (n != n_max() + 1) {
        throw DomainError("run table append out of order: expected n=" + std::to_string(n_max() + 1) +
                          ", got " + std::to_string(n));
    }
    if (!runs_.empty() && runs_.back().valuation == valuation) {
        runs_.back().n_end = n;
    } else {
        runs_.push_back(Run{n, n, valuation});
    }
}

long ValuationRunTable::at(std::uint64_t n) const {
    const auto it = std::lower_bound(runs_.begin(), runs_.end(), n,
                                     [](const Run& r, std::uint64_t x) { return r.n_end < x; });
    if (n == 0 || it == runs_.end()) throw DomainError("index outside run table");
    return it->valuation;
}

std::string ValuationRunTable::defect() const {
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < runs_.size(); ++i) {
        const Run& r = runs_[i];
        if (r.n_start != expected) {
            return "run " + std::to_string(i) + " starts at " + std::to_string(r.n_start) +
                   ", expected " + std::to_string(expected);
        }
        if (r.n_end < r.n_start) return "run " + std::to_string(i) + " is empty";
        if (i > 0 && runs_[i - 1].valuation == r.valuation) {
            return "runs " + std::to_string(i - 1) + " and " + std::to_string(i) + " share a valuation";
        }
        expected = r.n_end + 1;
    }
    return {};
}

std::string ValuationRunTable::to_csv() const {
    std::string out = "n_start,n_end,valuation\n";
    for (const Run& r : runs_) {
        out += std::to_string(r.n_start) + "," + std::to_string(r.n_end) + "," +
               std::to_string(r.valuation) + "\n";
    }
    return out;
}

}  // namespace harmoniter
