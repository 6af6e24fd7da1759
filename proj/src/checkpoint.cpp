#include "harmoniter/checkpoint.hpp"

#include "harmoniter/errors.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace harmoniter {

using nlohmann::json;

std::string_view to_string(ScanEngine e) {
    return e == ScanEngine::exact ? "exact" : "padic";
}

ScanEngine parse_engine(std::string_view text) {
    if (text == "exact") return ScanEngine::exact;
    if (text == "padic") return ScanEngine::padic;
    throw DomainError("unknown scan engine: " + std::string(text));
}

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw InternalError("SHA-256 failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(kHex[md[i] >> 4]);
        out.push_back(kHex[md[i] & 0xF]);
    }
    return out;
}

namespace {

json runs_to_json(const ValuationRunTable& t) {
    json runs = json::array();
    for (const Run& r : t.runs()) runs.push_back(json::array({r.n_start, r.n_end, r.valuation}));
    return runs;
}

ValuationRunTable runs_from_json(int order, unsigned long p, const json& runs) {
    std::vector<Run> out;
    for (const auto& r : runs) {
        if (!r.is_array() || r.size() != 3) throw CorruptCheckpoint("malformed run entry");
        out.push_back(Run{r[0].get<std::uint64_t>(), r[1].get<std::uint64_t>(), r[2].get<long>()});
    }
    try {
        return ValuationRunTable(order, p, std::move(out));
    } catch (const DomainError& e) {
        throw CorruptCheckpoint(e.what());
    }
}

json to_json_body(const ScanCheckpoint& c) {
    json body;
    body["format_version"] = c.format_version;
    body["j"] = c.order;
    body["primes"] = c.primes;
    body["last_n"] = c.last_n;
    body["engine"] = std::string(to_string(c.engine));

    json stream;
    if (c.engine == ScanEngine::exact) {
        json levels = json::array();
        for (const auto& q : c.exact_levels) levels.push_back(q.to_string());
        stream["levels"] = std::move(levels);
    } else {
        json per_prime = json::array();
        for (const auto& s : c.padic_streams) {
            json levels = json::array();
            for (const auto& x : s.levels) {
                levels.push_back({{"valuation", x.valuation()},
                                  {"unit", x.unit().get_str()},
                                  {"precision", x.precision()}});
            }
            per_prime.push_back({{"p", s.prime}, {"digits", s.digits}, {"levels", std::move(levels)}});
        }
        stream["padic"] = std::move(per_prime);
    }
    body["stream"] = std::move(stream);

    json tables = json::array();
    for (std::size_t i = 0; i < c.denominator_tables.size(); ++i) {
        json t;
        t["p"] = c.denominator_tables[i].prime();
        t["runs"] = runs_to_json(c.denominator_tables[i]);
        t["value_runs"] = runs_to_json(c.value_tables.at(i));
        tables.push_back(std::move(t));
    }
    body["tables"] = std::move(tables);
    return body;
}

ScanCheckpoint from_json_body(const json& body) {
    ScanCheckpoint c;
    c.format_version = body.at("format_version").get<int>();
    c.order = body.at("j").get<int>();
    c.primes = body.at("primes").get<std::vector<unsigned long>>();
    c.last_n = body.at("last_n").get<std::uint64_t>();
    c.engine = parse_engine(body.at("engine").get<std::string>());

    const json& stream = body.at("stream");
    if (c.engine == ScanEngine::exact) {
        for (const auto& s : stream.at("levels")) {
            c.exact_levels.push_back(BigRational::parse(s.get<std::string>()));
        }
    } else {
        for (const auto& entry : stream.at("padic")) {
            PAdicStreamState state;
            state.prime = entry.at("p").get<unsigned long>();
            state.digits = entry.at("digits").get<unsigned>();
            for (const auto& x : entry.at("levels")) {
                state.levels.push_back(PAdicFixed::restore(
                    state.prime, x.at("valuation").get<long>(),
                    BigInt(x.at("unit").get<std::string>(), 10), x.at("precision").get<unsigned>()));
            }
            c.padic_streams.push_back(std::move(state));
        }
    }

    for (const auto& t : body.at("tables")) {
        const auto p = t.at("p").get<unsigned long>();
        c.denominator_tables.push_back(runs_from_json(c.order, p, t.at("runs")));
        c.value_tables.push_back(runs_from_json(c.order, p, t.at("value_runs")));
    }
    return c;
}

void check_consistency(const ScanCheckpoint& c) {
    const auto fail = [](const std::string& why) { throw CorruptCheckpoint("checkpoint: " + why); };
    if (c.order < 1) fail("order below 1");
    if (c.primes.empty()) fail("no primes");
    if (c.last_n < 1) fail("last_n below 1");
    if (c.denominator_tables.size() != c.primes.size() || c.value_tables.size() != c.primes.size()) {
        fail("table count does not match prime list");
    }
    for (std::size_t i = 0; i < c.primes.size(); ++i) {
        if (c.denominator_tables[i].prime() != c.primes[i]) fail("table prime order");
        if (c.denominator_tables[i].n_max() != c.last_n || c.value_tables[i].n_max() != c.last_n) {
            fail("table length differs from last_n");
        }
    }
    if (c.engine == ScanEngine::exact) {
        if (c.exact_levels.size() != static_cast<std::size_t>(c.order)) fail("exact level count");
    } else {
        if (c.padic_streams.size() != c.primes.size()) fail("p-adic stream count");
        for (std::size_t i = 0; i < c.primes.size(); ++i) {
            if (c.padic_streams[i].prime != c.primes[i]) fail("p-adic stream prime order");
            if (c.padic_streams[i].levels.size() != static_cast<std::size_t>(c.order)) {
                fail("p-adic level count");
            }
        }
    }
}

}  // namespace

std::string checkpoint_canonical(const ScanCheckpoint& c) {
    return to_json_body(c).dump();
}

std::string checkpoint_digest(const ScanCheckpoint& c) {
    return "sha256:" + sha256_hex(checkpoint_canonical(c));
}

std::string checkpoint_serialize(const ScanCheckpoint& c) {
    json body = to_json_body(c);
    body["digest"] = "sha256:" + sha256_hex(body.dump());
    return body.dump(1) + "\n";
}

ScanCheckpoint checkpoint_parse(std::string_view text) {
    json body;
    try {
        body = json::parse(text);
    } catch (const json::exception& e) {
        throw CorruptCheckpoint(std::string("checkpoint is not valid JSON: ") + e.what());
    }
    if (!body.is_object()) throw CorruptCheckpoint("checkpoint is not a JSON object");

    const auto version = body.find("format_version");
    if (version == body.end() || !version->is_number_integer()) {
        throw CorruptCheckpoint("checkpoint has no integer format_version");
    }
    if (version->get<long>() != ScanCheckpoint::kFormatVersion) {
        throw VersionMismatch("checkpoint format_version " + std::to_string(version->get<long>()) +
                              ", this build reads " + std::to_string(ScanCheckpoint::kFormatVersion));
    }

    const auto digest = body.find("digest");
    if (digest == body.end() || !digest->is_string()) throw CorruptCheckpoint("checkpoint has no digest");
    const std::string recorded = digest->get<std::string>();
    body.erase("digest");
    if (recorded != "sha256:" + sha256_hex(body.dump())) {
        throw CorruptCheckpoint("checkpoint digest mismatch");
    }

    ScanCheckpoint c;
    try {
        c = from_json_body(body);
    } catch (const CorruptCheckpoint&) {
        throw;
    } catch (const std::exception& e) {
        throw CorruptCheckpoint(std::string("checkpoint field error: ") + e.what());
    }
    check_consistency(c);
    return c;
}

void checkpoint_save(const ScanCheckpoint& c, const std::filesystem::path& path) {
    const std::string text = checkpoint_serialize(c);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.flush();
        if (!out) throw Error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

ScanCheckpoint checkpoint_load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorruptCheckpoint("cannot open checkpoint " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return checkpoint_parse(buf.str());
}

}  // namespace harmoniter
