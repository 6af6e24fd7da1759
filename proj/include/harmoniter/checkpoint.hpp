#pragma once

#include "harmoniter/bigrational.hpp"
#include "harmoniter/padic_fixed.hpp"
#include "harmoniter/run_table.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace harmoniter {

enum class ScanEngine { exact, padic };

std::string_view to_string(ScanEngine e);
ScanEngine parse_engine(std::string_view text);

struct PAdicStreamState {
    unsigned long prime = 2;
    unsigned digits = 0;
    std::vector<PAdicFixed> levels;

    friend bool operator==(const PAdicStreamState&, const PAdicStreamState&) = default;
};

// Everything needed to continue a valuation scan after n = last_n.
struct ScanCheckpoint {
    static constexpr int kFormatVersion = 1;

    int format_version = kFormatVersion;
    int order = 1;
    std::vector<unsigned long> primes;
    std::uint64_t last_n = 0;
    ScanEngine engine = ScanEngine::padic;
    std::vector<BigRational> exact_levels;        // engine == exact
    std::vector<PAdicStreamState> padic_streams;  // engine == padic, one per prime
    std::vector<ValuationRunTable> denominator_tables;
    std::vector<ValuationRunTable> value_tables;

    friend bool operator==(const ScanCheckpoint&, const ScanCheckpoint&) = default;
};

// Canonical JSON text (without the digest) that the digest covers.
std::string checkpoint_canonical(const ScanCheckpoint& c);

// "sha256:<hex>" over checkpoint_canonical.
std::string checkpoint_digest(const ScanCheckpoint& c);

// Full file contents: canonical fields plus "digest", pretty-printed.
std::string checkpoint_serialize(const ScanCheckpoint& c);

// Throws VersionMismatch for a format_version other than kFormatVersion and
// CorruptCheckpoint for anything malformed or a digest mismatch.
ScanCheckpoint checkpoint_parse(std::string_view text);

// Write to a temporary sibling, then rename over `path`.
void checkpoint_save(const ScanCheckpoint& c, const std::filesystem::path& path);
ScanCheckpoint checkpoint_load(const std::filesystem::path& path);

// Hex SHA-256 of arbitrary bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace harmoniter
