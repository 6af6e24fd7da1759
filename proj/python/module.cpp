#include "harmoniter/constants.hpp"
#include "harmoniter/decimal.hpp"
#include "harmoniter/errors.hpp"
#include "harmoniter/harmonic.hpp"
#include "harmoniter/logiter.hpp"
#include "harmoniter/scan.hpp"
#include "harmoniter/valuation.hpp"
#include "harmoniter/verifiers.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace harmoniter;

namespace {

// Rationals cross the boundary as "num/den" text; the Python side wraps them
// in fractions.Fraction.
BigRational from_text(const std::string& s) { return BigRational::parse(s); }

py::dict estimate_dict(const GammaEstimate& e) {
    py::dict d;
    d["order"] = e.order;
    d["n"] = e.n;
    d["method"] = std::string(to_string(e.method));
    d["value"] = e.value();
    d["raw"] = e.raw;
    d["corrected"] = e.corrected ? py::object(py::float_(*e.corrected)) : py::object(py::none());
    d["error_order"] = e.error_order ? py::object(py::float_(*e.error_order)) : py::object(py::none());
    d["h_source"] = std::string(to_string(e.h_source));
    d["warning"] = e.warning;
    return d;
}

py::list runs_list(const ValuationRunTable& t) {
    py::list out;
    for (const Run& r : t.runs()) out.append(py::make_tuple(r.n_start, r.n_end, r.valuation));
    return out;
}

}  // namespace

PYBIND11_MODULE(_harmoniter, m) {
    m.doc() = "exact iterated harmonic numbers, iterated logarithms and valuation scans";
    m.attr("__version__") = HARMONITER_VERSION;

    static py::exception<Error> base(m, "HarmoniterError", PyExc_ValueError);
    py::register_exception<NotPrime>(m, "NotPrime", base.ptr());
    py::register_exception<EmptyInput>(m, "EmptyInput", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<Overflow>(m, "Overflow", base.ptr());
    py::register_exception<UnsupportedOrder>(m, "UnsupportedOrder", base.ptr());
    py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
    py::register_exception<PrecisionLoss>(m, "PrecisionLoss", base.ptr());
    py::register_exception<CorruptCheckpoint>(m, "CorruptCheckpoint", base.ptr());
    py::register_exception<VersionMismatch>(m, "VersionMismatch", base.ptr());
    py::register_exception<InternalError>(m, "InternalError", base.ptr());

    m.def("h_eval", [](int j, std::uint64_t n) { return h_eval(j, n).to_string(); }, py::arg("j"), py::arg("n"));
    m.def("h_levels", [](int j, std::uint64_t n) {
        HarmonicStream s(j);
        s.advance_to(n);
        std::vector<std::string> out;
        for (const auto& q : s.levels()) out.push_back(q.to_string());
        return out;
    }, py::arg("j"), py::arg("n"));
    m.def("hyperharmonic", [](int k, std::uint64_t n) { return hyperharmonic(k, n).to_string(); },
          py::arg("k"), py::arg("n"));
    m.def("cesaro_sum", [](const std::vector<std::string>& terms, int order) {
        std::vector<BigRational> a;
        for (const auto& t : terms) a.push_back(from_text(t));
        const auto series = [&](std::uint64_t i) { return a.at(i - 1); };
        return cesaro_sum(series, order, a.size()).to_string();
    }, py::arg("terms"), py::arg("order"));

    m.def("valuation", [](const std::string& q, unsigned long p) -> std::optional<long> {
        return valuation(from_text(q), p).finite();
    }, py::arg("q"), py::arg("p"), "None stands for the valuation of zero");
    m.def("format_decimal", [](const std::string& q, int digits) { return format_decimal(from_text(q), digits); },
          py::arg("q"), py::arg("digits") = 12);

    m.def("hyperpower_e", &hyperpower_e, py::arg("i"));
    m.def("start_index", &start_index, py::arg("j"));
    m.def("ln_iter", &ln_iter, py::arg("j"), py::arg("x"));
    m.def("l_step_sum", &l_step_sum, py::arg("j"), py::arg("n"));

    m.def("gamma_classic", [](std::uint64_t n, const std::string& method) {
        return estimate_dict(gamma_classic(n, parse_method(method)));
    }, py::arg("n"), py::arg("method") = "improved");
    m.def("gamma_j_estimate", [](int j, std::uint64_t n) { return estimate_dict(gamma_j_estimate(j, n)); },
          py::arg("j"), py::arg("n"));
    m.def("gamma_j_prime_estimate", [](int j, std::uint64_t n) {
        py::gil_scoped_release release;
        const GammaEstimate e = gamma_j_prime_estimate(j, n);
        py::gil_scoped_acquire acquire;
        return estimate_dict(e);
    }, py::arg("j"), py::arg("n"));

    m.def("denominator_valuation_scan", [](int j, const std::vector<unsigned long>& primes, std::uint64_t n_max,
                                           const std::string& engine) {
        ScanOptions options;
        options.engine = parse_engine(engine);
        std::vector<ValuationRunTable> tables;
        {
            py::gil_scoped_release release;
            tables = denominator_valuation_scan(j, primes, n_max, nullptr, options);
        }
        py::dict out;
        for (std::size_t i = 0; i < primes.size(); ++i) out[py::int_(primes[i])] = runs_list(tables[i]);
        return out;
    }, py::arg("j"), py::arg("primes"), py::arg("n_max"), py::arg("engine") = "padic");

    m.def("integrality_check", [](int j, std::uint64_t n_max, const std::string& engine) {
        IntegralityReport r;
        {
            py::gil_scoped_release release;
            r = integrality_check(j, n_max, parse_engine(engine));
        }
        return py::make_tuple(r.integers, r.undetermined);
    }, py::arg("j"), py::arg("n_max"), py::arg("engine") = "padic");
    m.def("theisinger_witness", [](std::uint64_t n) {
        const auto w = theisinger_witness(n);
        return py::make_tuple(w.r, w.valuation);
    }, py::arg("n"));
    m.def("kurschak_witness", [](std::uint64_t n) {
        const auto w = kurschak_witness(n);
        return py::make_tuple(w.prime, w.verified);
    }, py::arg("n"));
    m.def("inequality_threshold", [](std::uint64_t k_max) {
        const InequalityReport r = inequality_threshold(k_max);
        py::dict d;
        d["k_max"] = r.k_max;
        d["k_star"] = r.k_star;
        d["lower_from"] = r.lower_from;
        d["upper_from"] = r.upper_from;
        std::vector<std::uint64_t> upper, lower;
        for (const auto& c : r.violations) {
            if (!c.upper_holds) upper.push_back(c.k);
            if (!c.lower_holds) lower.push_back(c.k);
        }
        d["upper_violations"] = upper;
        d["lower_violations"] = lower;
        return d;
    }, py::arg("k_max"));
}
