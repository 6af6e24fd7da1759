#include "harmoniter/scan.hpp"

#include "harmoniter/errors.hpp"
#include "harmoniter/valuation.hpp"

#include <algorithm>
#include <set>

namespace harmoniter {

namespace {

constexpr unsigned kMaxPAdicDigits = 4096;

void validate_scan_request(int j, const std::vector<unsigned long>& primes) {
    if (j < 1) throw DomainError("valuation scan needs j >= 1, got " + std::to_string(j));
    if (primes.empty()) throw EmptyInput("valuation scan needs at least one prime");
    for (unsigned long p : primes) require_prime(p);
    if (std::set<unsigned long>(primes.begin(), primes.end()).size() != primes.size()) {
        throw DomainError("valuation scan: duplicate prime");
    }
}

}  // namespace

ValuationScan::ValuationScan(int j, std::vector<unsigned long> primes, ScanOptions options)
    : order_(j), primes_(std::move(primes)), options_(std::move(options)) {
    validate_scan_request(order_, primes_);
    if (options_.engine == ScanEngine::exact) {
        exact_.emplace(order_, options_.bit_budget);
    } else {
        for (unsigned long p : primes_) padic_.emplace_back(order_, p, options_.padic_digits);
    }
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        denominator_tables_.emplace_back(order_, primes_[i]);
        value_tables_.emplace_back(order_, primes_[i]);
        record(i, 1, 0);  // h_j(1) = 1
    }
}

ValuationScan ValuationScan::resume(const ScanCheckpoint& c, ScanOptions options) {
    validate_scan_request(c.order, c.primes);
    options.engine = c.engine;
    ValuationScan scan(c.order, c.primes, options);
    scan.last_n_ = c.last_n;
    scan.denominator_tables_ = c.denominator_tables;
    scan.value_tables_ = c.value_tables;
    if (c.engine == ScanEngine::exact) {
        scan.exact_ = HarmonicStream::restore(c.order, c.last_n, c.exact_levels, options.bit_budget);
    } else {
        scan.padic_.clear();
        for (const auto& s : c.padic_streams) {
            scan.padic_.push_back(PAdicHarmonicStream::restore(c.order, c.last_n, s.digits, s.levels));
        }
    }
    return scan;
}

void ValuationScan::record(std::size_t i, std::uint64_t n, long value_valuation) {
    value_tables_[i].append(n, value_valuation);
    denominator_tables_[i].append(n, std::max(0L, -value_valuation));
}

void ValuationScan::step_padic(std::size_t i, std::uint64_t next) {
    try {
        padic_[i].advance();
        return;
    } catch (const PrecisionLoss&) {
    }
    // Replay this prime from the start with more digits. Values recorded so
    // far were certified and stay as they are.
    unsigned digits = padic_[i].digits();
    while (true) {
        digits *= 2;
        if (digits > kMaxPAdicDigits) {
            throw PrecisionLoss("p=" + std::to_string(primes_[i]) + " needs more than " +
                                std::to_string(kMaxPAdicDigits) + " p-adic digits at n=" +
                                std::to_string(next));
        }
        try {
            PAdicHarmonicStream fresh(order_, primes_[i], digits);
            while (fresh.index() < next) fresh.advance();
            padic_[i] = std::move(fresh);
            return;
        } catch (const PrecisionLoss&) {
        }
    }
}

void ValuationScan::step() {
    const std::uint64_t next = last_n_ + 1;
    if (exact_) {
        exact_->advance();
        const BigRational& h = exact_->value();
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            record(i, next, valuation(h, primes_[i]).exponent());
        }
    } else {
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            step_padic(i, next);
            record(i, next, padic_[i].value().valuation());
        }
    }
    last_n_ = next;
}

void ValuationScan::run_to(std::uint64_t n_max) {
    if (n_max < last_n_) {
        throw DomainError("scan already at n=" + std::to_string(last_n_) + ", cannot run to " +
                          std::to_string(n_max));
    }
    try {
        while (last_n_ < n_max) {
            step();
            if (options_.checkpoint_every != 0 && last_n_ % options_.checkpoint_every == 0) {
                save_checkpoint();
            }
        }
    } catch (const ResourceLimit&) {
        save_checkpoint();
        throw;
    }
    save_checkpoint();
}

void ValuationScan::save_checkpoint() const {
    if (options_.checkpoint_path) checkpoint_save(snapshot(), *options_.checkpoint_path);
}

ScanCheckpoint ValuationScan::snapshot() const {
    ScanCheckpoint c;
    c.order = order_;
    c.primes = primes_;
    c.last_n = last_n_;
    c.engine = exact_ ? ScanEngine::exact : ScanEngine::padic;
    if (exact_) {
        c.exact_levels = exact_->levels();
    } else {
        for (const auto& s : padic_) c.padic_streams.push_back({s.prime(), s.digits(), s.levels()});
    }
    c.denominator_tables = denominator_tables_;
    c.value_tables = value_tables_;
    return c;
}

std::vector<ValuationRunTable> denominator_valuation_scan(int j, const std::vector<unsigned long>& primes,
                                                          std::uint64_t n_max,
                                                          const ScanCheckpoint* resume,
                                                          const ScanOptions& options) {
    if (j < 1 || j > 3) throw DomainError("valuation scan supports j in {1, 2, 3}, got " + std::to_string(j));
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    if (resume != nullptr) {
        if (resume->order != j || resume->primes != primes) {
            throw DomainError("checkpoint was taken for a different j or prime list");
        }
        ValuationScan scan = ValuationScan::resume(*resume, options);
        scan.run_to(n_max);
        return scan.tables();
    }
    ValuationScan scan(j, primes, options);
    scan.run_to(n_max);
    return scan.tables();
}

nlohmann::json scan_report(const ValuationScan& scan) {
    nlohmann::json primes = nlohmann::json::array();
    for (const auto& t : scan.tables()) {
        nlohmann::json runs = nlohmann::json::array();
        for (const Run& r : t.runs()) runs.push_back({r.n_start, r.n_end, r.valuation});
        primes.push_back({{"p", t.prime()}, {"runs", std::move(runs)}});
    }
    return {{"version", kScanReportVersion},
            {"j", scan.order()},
            {"primes", std::move(primes)},
            {"n_max", scan.last_n()},
            {"checkpoint_digest", checkpoint_digest(scan.snapshot())}};
}

}  // namespace harmoniter
