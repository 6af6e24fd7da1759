#include "cli.hpp"

#include "harmoniter/checkpoint.hpp"
#include "harmoniter/constants.hpp"
#include "harmoniter/decimal.hpp"
#include "harmoniter/errors.hpp"
#include "harmoniter/harmonic.hpp"
#include "harmoniter/logiter.hpp"
#include "harmoniter/scan.hpp"
#include "harmoniter/verifiers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace harmoniter::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::uint64_t kDefaultNMax = 2000;
constexpr const char* kCheckpointDirEnv = "HARMONITER_CHECKPOINT_DIR";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t budget_bits(double mib) {
    if (!(mib > 0)) throw UsageError("--budget-mib must be positive");
    return static_cast<std::size_t>(mib * 1024.0 * 1024.0 * 8.0);
}

// Every option of a subcommand with its effective value.
json flags_of(const CLI::App& app) {
    json flags = json::object();
    for (const CLI::Option* opt : app.get_options()) {
        const std::string name = opt->get_single_name();
        if (name == "help" || name.empty()) continue;
        if (opt->get_type_size() == 0) {
            flags[name] = opt->count() > 0;
        } else if (opt->count() > 0) {
            const auto& results = opt->results();
            if (opt->get_expected_max() > 1) {
                flags[name] = results;
            } else {
                flags[name] = results.back();
            }
        } else if (!opt->get_default_str().empty()) {
            flags[name] = opt->get_default_str();
        } else {
            flags[name] = nullptr;
        }
    }
    return flags;
}

json envelope(const std::string& command, const CLI::App& app) {
    return json{{"tool", "harmoniter"}, {"tool_version", HARMONITER_VERSION}, {"command", command},
                {"flags", flags_of(app)}};
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f << text;
    f.close();
    if (!f) throw IoError("failed writing " + path.string());
}

void check_n_cap(std::uint64_t n_max, bool unbounded) {
    if (n_max > kDefaultNMax && !unbounded) {
        throw UsageError("--n-max above " + std::to_string(kDefaultNMax) + " needs --unbounded");
    }
}

// "2,3,4" for short stretches, "13-10000" for long ones.
std::string compress(const std::vector<std::uint64_t>& ks) {
    std::ostringstream s;
    for (std::size_t i = 0; i < ks.size();) {
        std::size_t j = i;
        while (j + 1 < ks.size() && ks[j + 1] == ks[j] + 1) ++j;
        if (i > 0) s << ',';
        if (j - i >= 2) {
            s << ks[i] << '-' << ks[j];
        } else {
            for (std::size_t t = i; t <= j; ++t) s << (t > i ? "," : "") << ks[t];
        }
        i = j + 1;
    }
    return s.str();
}

std::string list_text(const std::vector<std::uint64_t>& ns) {
    std::string s = "[";
    for (std::size_t i = 0; i < ns.size(); ++i) s += (i ? ", " : "") + std::to_string(ns[i]);
    return s + "]";
}

// ---- eval ----

struct EvalArgs {
    int j = 1;
    std::uint64_t n = 1;
    std::string format = "rational";
    int precision = 12;
    double budget_mib = 64;
};

int cmd_eval(const EvalArgs& a, const CLI::App& app, std::ostream& out) {
    const BigRational h = h_eval(a.j, a.n, budget_bits(a.budget_mib));
    if (a.format == "rational") {
        out << h.to_string() << '\n';
    } else if (a.format == "decimal") {
        out << format_decimal(h, a.precision) << '\n';
    } else if (a.format == "json") {
        json doc = envelope("eval", app);
        doc["value"] = h.to_string();
        doc["decimal"] = format_decimal(h, a.precision);
        out << doc.dump(2) << '\n';
    } else {
        throw UsageError("eval does not support --format " + a.format);
    }
    return kOk;
}

// ---- scan ----

struct ScanArgs {
    int j = 0;
    std::vector<unsigned long> primes;
    std::uint64_t n_max = kDefaultNMax;
    bool unbounded = false;
    std::string out;
    std::string report;
    std::string checkpoint;
    std::string resume;
    std::uint64_t checkpoint_every = 10000;
    std::string engine = "padic";
    unsigned digits = kDefaultPAdicDigits;
    std::string format = "csv";
    double budget_mib = 64;
};

std::string prime_tag(const std::vector<unsigned long>& primes) {
    std::string tag;
    for (std::size_t i = 0; i < primes.size(); ++i) tag += (i ? "-" : "") + std::to_string(primes[i]);
    return tag;
}

fs::path per_prime_path(const fs::path& base, int j, unsigned long p) {
    fs::path name = base.stem();
    name += "_j" + std::to_string(j) + "_p" + std::to_string(p);
    name += base.extension();
    return base.parent_path() / name;
}

int cmd_scan(ScanArgs a, const CLI::App& app, std::ostream& out) {
    if (a.format != "csv" && a.format != "json") throw UsageError("scan supports --format csv or json");
    check_n_cap(a.n_max, a.unbounded);

    ScanOptions options;
    options.padic_digits = a.digits;
    options.bit_budget = budget_bits(a.budget_mib);
    options.checkpoint_every = a.checkpoint_every;

    std::optional<ScanCheckpoint> resumed;
    if (!a.resume.empty()) {
        resumed = checkpoint_load(a.resume);
        if (a.j != 0 && a.j != resumed->order) throw UsageError("--j differs from the checkpoint");
        if (!a.primes.empty() && a.primes != resumed->primes) throw UsageError("--primes differ from the checkpoint");
        if (app.count("--engine") > 0 && parse_engine(a.engine) != resumed->engine) {
            throw UsageError("--engine differs from the checkpoint");
        }
        a.j = resumed->order;
        a.primes = resumed->primes;
        options.engine = resumed->engine;
    } else {
        if (a.j == 0) throw UsageError("--j is required");
        if (a.primes.empty()) throw UsageError("--primes is required");
        options.engine = parse_engine(a.engine);
    }
    if (a.j < 1 || a.j > 3) throw UsageError("scan supports j = 1, 2, 3");

    if (!a.checkpoint.empty()) {
        options.checkpoint_path = a.checkpoint;
    } else if (!a.resume.empty()) {
        options.checkpoint_path = a.resume;
    } else if (const char* dir = std::getenv(kCheckpointDirEnv); dir != nullptr && *dir != '\0') {
        options.checkpoint_path = fs::path(dir) / ("scan_j" + std::to_string(a.j) + "_p" + prime_tag(a.primes) + ".json");
    }

    ValuationScan scan = resumed ? ValuationScan::resume(*resumed, options) : ValuationScan(a.j, a.primes, options);
    if (a.n_max < scan.last_n()) throw UsageError("--n-max is below the checkpoint's last n");
    scan.run_to(a.n_max);

    json report = scan_report(scan);
    json files = json::array();
    const auto record = [&](const fs::path& path, const std::string& text) {
        write_file(path, text);
        files.push_back({{"path", path.string()}, {"sha256", sha256_hex(text)}});
        out << "wrote " << path.string() << " sha256:" << sha256_hex(text) << '\n';
    };

    if (!a.out.empty() && a.format == "csv") {
        const fs::path base(a.out);
        for (std::size_t i = 0; i < scan.primes().size(); ++i) {
            const fs::path path = scan.primes().size() == 1 ? base : per_prime_path(base, a.j, scan.primes()[i]);
            record(path, scan.tables()[i].to_csv());
        }
    }

    json doc = envelope("scan", app);
    doc.update(report);
    doc["files"] = files;

    if (!a.out.empty() && a.format == "json") record(a.out, doc.dump(2) + "\n");
    if (!a.report.empty()) record(a.report, doc.dump(2) + "\n");

    if (a.out.empty()) {
        if (a.format == "json") {
            out << doc.dump(2) << '\n';
        } else {
            out << "p,n_start,n_end,valuation\n";
            for (std::size_t i = 0; i < scan.primes().size(); ++i) {
                for (const Run& r : scan.tables()[i].runs()) {
                    out << scan.primes()[i] << ',' << r.n_start << ',' << r.n_end << ',' << r.valuation << '\n';
                }
            }
        }
    }
    if (options.checkpoint_path) {
        out << "checkpoint " << options.checkpoint_path->string() << ' ' << report["checkpoint_digest"].get<std::string>()
            << '\n';
    }
    return kOk;
}

// ---- gamma ----

struct GammaArgs {
    int j = 1;
    std::uint64_t n = 0;
    std::string method = "improved";
    std::string format = "decimal";
    int precision = 12;
};

GammaEstimate estimate(int j, std::uint64_t n, Method m) {
    if (m == Method::primed) return gamma_j_prime_estimate(j, n);
    if (j == 1) return gamma_classic(n, m);
    GammaEstimate e = gamma_j_estimate(j, n);
    e.method = m;
    if (m != Method::improved) e.corrected.reset();
    return e;
}

int cmd_gamma(const GammaArgs& a, const CLI::App& app, std::ostream& out) {
    if (a.format != "decimal" && a.format != "json") throw UsageError("gamma supports --format decimal or json");
    const Method m = parse_method(a.method);
    const GammaEstimate e = estimate(a.j, a.n, m);

    std::optional<double> drift;
    if (m != Method::primed && a.j >= 2) drift = std::fabs(estimate(a.j, 2 * a.n, m).value() - e.value());
    const auto stable_digits = [&]() -> int {
        if (!drift) return 0;
        if (*drift == 0.0) return 16;
        return std::clamp(static_cast<int>(std::floor(-std::log10(*drift))), 0, 16);
    };

    if (a.format == "json") {
        json doc = envelope("gamma", app);
        doc["value"] = e.value();
        doc["value_text"] = format_decimal(e.value(), a.precision);
        doc["raw"] = e.raw;
        doc["corrected"] = e.corrected ? json(*e.corrected) : json(nullptr);
        doc["error_order"] = e.error_order ? json(*e.error_order) : json(nullptr);
        doc["h_source"] = std::string(to_string(e.h_source));
        doc["drift_vs_2n"] = drift ? json(*drift) : json(nullptr);
        doc["stable_digits"] = drift ? json(stable_digits()) : json(nullptr);
        doc["warning"] = e.warning;
        out << doc.dump(2) << '\n';
        return kOk;
    }

    out << format_decimal(e.value(), a.precision) << '\n';
    out << "method " << to_string(m) << ", j=" << a.j << ", n=" << a.n << ", raw "
        << format_decimal(e.raw, a.precision);
    if (e.corrected) out << ", correction " << format_decimal(e.raw - *e.corrected, a.precision);
    out << '\n';
    if (drift) {
        out << "stable digits vs n=" << 2 * a.n << ": " << stable_digits() << " (|difference| "
            << format_decimal(*drift, 18) << ")\n";
    }
    if (e.error_order) {
        out << "error order ~ 1/ln_" << a.j - 1 << "(n) = " << format_decimal(*e.error_order, 4)
            << "; this estimator converges too slowly to fix any digit\n";
        out << "h_" << a.j << " source: " << to_string(e.h_source) << '\n';
    }
    if (!e.warning.empty()) out << "warning: " << e.warning << '\n';
    return kOk;
}

// ---- check ----

struct CheckArgs {
    std::string what;
    int j = 1;
    std::uint64_t n_max = kDefaultNMax;
    bool unbounded = false;
    std::string engine = "padic";
    std::string format = "text";
    double budget_mib = 64;
};

int cmd_check(const CheckArgs& a, const CLI::App& app, std::ostream& out) {
    const bool as_json = a.format == "json";
    json doc = envelope("check", app);
    std::ostringstream text;
    bool ok = true;

    if (a.what == "integrality") {
        check_n_cap(a.n_max, a.unbounded);
        const IntegralityReport r = integrality_check(a.j, a.n_max, parse_engine(a.engine), budget_bits(a.budget_mib));
        ok = r.integers == std::vector<std::uint64_t>{1} && r.undetermined.empty();
        text << list_text(r.integers) << '\n';
        if (!r.undetermined.empty()) text << "undetermined: " << list_text(r.undetermined) << '\n';
        doc["integers"] = r.integers;
        doc["undetermined"] = r.undetermined;
    } else if (a.what == "inequality") {
        const InequalityReport r = inequality_threshold(a.n_max);
        std::vector<std::uint64_t> upper, lower, marginal;
        for (const InequalityCheck& c : r.violations) {
            if (!c.upper_holds) upper.push_back(c.k);
            if (!c.lower_holds) lower.push_back(c.k);
            if (c.marginal) marginal.push_back(c.k);
        }
        ok = r.k_star.has_value();
        text << "k*=" << (r.k_star ? std::to_string(*r.k_star) : "none") << "; upper-bound violations: "
             << (upper.empty() ? "none" : compress(upper))
             << "; lower-bound violations: " << (lower.empty() ? "none" : compress(lower)) << '\n';
        if (!marginal.empty()) text << "marginal: " << compress(marginal) << '\n';
        const auto opt = [](const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); };
        doc["k_star"] = opt(r.k_star);
        doc["upper_from"] = opt(r.upper_from);
        doc["lower_from"] = opt(r.lower_from);
        doc["upper_violations"] = upper;
        doc["lower_violations"] = lower;
        doc["marginal"] = marginal;
    } else if (a.what == "concavity") {
        check_n_cap(a.n_max, a.unbounded);
        const auto bad = concavity_check(a.j, a.n_max, budget_bits(a.budget_mib));
        ok = bad.empty();
        text << (ok ? "no concavity violations up to n=" + std::to_string(a.n_max) : "violations: " + compress(bad))
             << '\n';
        doc["violations"] = bad;
    } else if (a.what == "theisinger" || a.what == "kurschak") {
        if (a.n_max < 2) throw UsageError("--n-max must be at least 2");
        HarmonicStream h(1, budget_bits(a.budget_mib));
        std::vector<std::uint64_t> failed;
        json witnesses = json::array();
        while (h.index() < a.n_max) {
            h.advance();
            const std::uint64_t n = h.index();
            if (a.what == "theisinger") {
                try {
                    theisinger_witness(n, h.value());
                } catch (const InternalError&) {
                    failed.push_back(n);
                }
            } else {
                const KurschakWitness w = kurschak_witness(n, h.value());
                if (!w.verified) failed.push_back(n);
                if (as_json) witnesses.push_back({n, w.prime});
            }
        }
        ok = failed.empty();
        text << (ok ? "all witnesses verified" : "witness failed at n=" + compress(failed)) << '\n';
        doc["failed"] = failed;
        if (a.what == "kurschak") doc["witnesses"] = witnesses;
    } else {
        throw UsageError("unknown --what " + a.what);
    }

    doc["ok"] = ok;
    if (as_json) {
        out << doc.dump(2) << '\n';
    } else {
        out << text.str();
    }
    return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Iterated harmonic numbers, generalized Euler constants and p-adic valuation scans", "harmoniter"};
    app.set_version_flag("--version", std::string(HARMONITER_VERSION));
    app.require_subcommand(1);

    EvalArgs ea;
    CLI::App* eval = app.add_subcommand("eval", "exact h_j(n)");
    eval->add_option("--j", ea.j, "order")->required()->check(CLI::PositiveNumber);
    eval->add_option("--n", ea.n, "index")->required()->check(CLI::PositiveNumber);
    eval->add_option("--format", ea.format)->capture_default_str()->check(CLI::IsMember({"rational", "decimal", "json"}));
    eval->add_option("--precision", ea.precision)->capture_default_str()->check(CLI::NonNegativeNumber);
    eval->add_option("--budget-mib", ea.budget_mib, "memory budget for the exact levels")->capture_default_str();

    ScanArgs sa;
    CLI::App* scan = app.add_subcommand("scan", "denominator valuation tables of h_j(n)");
    scan->add_option("--j", sa.j, "order 1..3 (taken from the checkpoint on --resume)");
    scan->add_option("--primes", sa.primes, "comma-separated primes")->delimiter(',');
    scan->add_option("--n-max", sa.n_max)->capture_default_str()->check(CLI::PositiveNumber);
    scan->add_flag("--unbounded", sa.unbounded, "allow --n-max above 2000");
    scan->add_option("--out", sa.out, "output file; several primes give <stem>_j<j>_p<p><ext>");
    scan->add_option("--report", sa.report, "also write a JSON report here");
    scan->add_option("--checkpoint", sa.checkpoint, "checkpoint file (default under $HARMONITER_CHECKPOINT_DIR)");
    scan->add_option("--resume", sa.resume, "continue from this checkpoint");
    scan->add_option("--checkpoint-every", sa.checkpoint_every)->capture_default_str();
    scan->add_option("--engine", sa.engine)->capture_default_str()->check(CLI::IsMember({"padic", "exact"}));
    scan->add_option("--digits", sa.digits, "initial p-adic digits")->capture_default_str()->check(CLI::PositiveNumber);
    scan->add_option("--format", sa.format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--budget-mib", sa.budget_mib)->capture_default_str();

    GammaArgs ga;
    CLI::App* gamma = app.add_subcommand("gamma", "Euler-type constant estimates");
    gamma->add_option("--j", ga.j)->capture_default_str()->check(CLI::Range(1, kMaxLogOrder));
    gamma->add_option("--n", ga.n)->required()->check(CLI::PositiveNumber);
    gamma->add_option("--method", ga.method)
        ->capture_default_str()
        ->check(CLI::IsMember({"minimal", "standard", "improved", "primed"}));
    gamma->add_option("--format", ga.format)->capture_default_str()->check(CLI::IsMember({"decimal", "json"}));
    gamma->add_option("--precision", ga.precision)->capture_default_str()->check(CLI::Range(0, 17));

    CheckArgs ca;
    CLI::App* check = app.add_subcommand("check", "run a verifier over a range");
    check->add_option("--what", ca.what)
        ->required()
        ->check(CLI::IsMember({"integrality", "inequality", "concavity", "theisinger", "kurschak"}));
    check->add_option("--j", ca.j)->capture_default_str()->check(CLI::PositiveNumber);
    check->add_option("--n-max", ca.n_max, "integrality and concavity cap at 2000 without --unbounded")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    check->add_flag("--unbounded", ca.unbounded);
    check->add_option("--engine", ca.engine)->capture_default_str()->check(CLI::IsMember({"padic", "exact"}));
    check->add_option("--format", ca.format)->capture_default_str()->check(CLI::IsMember({"text", "json"}));
    check->add_option("--budget-mib", ca.budget_mib)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*eval) return cmd_eval(ea, *eval, out);
        if (*scan) return cmd_scan(sa, *scan, out);
        if (*gamma) return cmd_gamma(ga, *gamma, out);
        return cmd_check(ca, *check, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CorruptCheckpoint& e) {
        err << "checkpoint error: " << e.what() << '\n';
        return kCheckpoint;
    } catch (const VersionMismatch& e) {
        err << "checkpoint error: " << e.what() << '\n';
        return kCheckpoint;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const Overflow& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kResource;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const fs::filesystem_error& e) {
        err << "i/o error: " << e.what() << '\n';
        return kResource;
    }
}

}  // namespace harmoniter::cli
