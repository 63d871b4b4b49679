// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bindings.cpp
 * @brief pybind11 module exposing counting, spectra, correlators and checks.
 */

#include <motzkin/combinatorics.hpp>
#include <motzkin/correlations.hpp>
#include <motzkin/errors.hpp>
#include <motzkin/hamiltonian.hpp>
#include <motzkin/spectrum.hpp>
#include <motzkin/walks.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace motzkin;

namespace {

ArithmeticMode mode_of(int precision_bits) {
    return precision_bits <= 0 ? ArithmeticMode::exact() : ArithmeticMode::log_float(precision_bits);
}

py::object count_value(const WalkCount& c) {
    if (c.mode().is_exact()) return py::int_(py::str(c.exact().get_str()));
    return py::float_(c.log());
}

py::dict report_dict(const CorrelatorReport& r) {
    py::dict d;
    d["exact"] = r.exact;
    d["asymptotic"] = r.asymptotic ? py::object(py::float_(*r.asymptotic)) : py::object(py::none());
    d["error_bound"] = r.error_bound;
    d["precision_bits"] = r.precision_bits;
    d["reliable"] = r.reliable;
    py::dict terms;
    for (const auto& [k, v] : r.terms) terms[py::str(k)] = v;
    d["terms"] = terms;
    return d;
}

SpinKind kind_of(const std::string& name) {
    for (SpinKind k : {SpinKind::Sx, SpinKind::Sy, SpinKind::Sz, SpinKind::Splus, SpinKind::Sminus})
        if (name == to_string(k)) return k;
    throw ParameterError("unknown spin operator '" + name + "'");
}

std::map<double, double> entropy_map(const SchmidtSpectrum& spec, const std::vector<double>& kappas) {
    const auto rep = entropies(spec, kappas);
    std::map<double, double> out;
    for (double k : kappas) out[k] = rep.at(k);
    return out;
}

} // namespace

PYBIND11_MODULE(_motzkin, m) {
    m.doc() = "Exact and asymptotic computations for colored Motzkin spin chains";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);

    m.def("sigma", &sigma_of, py::arg("s"));
    m.def(
        "motzkin_count",
        [](int n, int mh, int s, int precision_bits) { return count_value(motzkin_count({s, n, mh}, mode_of(precision_bits))); },
        py::arg("n"), py::arg("m") = 0, py::arg("s") = 1, py::arg("precision_bits") = 0,
        "Exact integer count, or its natural log when precision_bits > 0.");
    m.def(
        "motzkin_count_closed_form", [](int n, int mh, int s) { return count_value(motzkin_count_closed_form({s, n, mh})); },
        py::arg("n"), py::arg("m") = 0, py::arg("s") = 1);
    m.def(
        "motzkin_asymptotic", [](int n, int mh, int s) { return motzkin_asymptotic({s, n, mh}); }, py::arg("n"),
        py::arg("m"), py::arg("s") = 1, "Natural log of the asymptotic count.");
    m.def(
        "enumerate_walks",
        [](int n, int s) {
            std::vector<std::vector<int>> out;
            for_each_walk(n, s, [&](const Walk& w) { out.emplace_back(w.steps.begin(), w.steps.end()); });
            return out;
        },
        py::arg("n"), py::arg("s") = 1);

    m.def(
        "cut_entropies",
        [](int n, int s, int b, const std::vector<double>& kappas, int precision_bits) {
            return entropy_map(cut_spectrum(ChainGeometry::cut(n, s, b), mode_of(precision_bits)), kappas);
        },
        py::arg("n"), py::arg("s"), py::arg("b"), py::arg("kappas") = std::vector<double>{1.0},
        py::arg("precision_bits") = 128);
    m.def(
        "block_entropies",
        [](int n, int s, int b, int L, const std::vector<double>& kappas, int precision_bits) {
            return entropy_map(block_spectrum(ChainGeometry::block(n, s, b, L), mode_of(precision_bits)), kappas);
        },
        py::arg("n"), py::arg("s"), py::arg("b"), py::arg("L"), py::arg("kappas") = std::vector<double>{1.0},
        py::arg("precision_bits") = 128);
    m.def(
        "cut_spectrum",
        [](int n, int s, int b) { return cut_spectrum(ChainGeometry::cut(n, s, b), ArithmeticMode::exact()).expanded(); },
        py::arg("n"), py::arg("s"), py::arg("b"), "Expanded Schmidt eigenvalues, descending.");
    m.def(
        "cut_entropy_asymptotic",
        [](int n, int s, int b, double kappa) { return cut_entropy_asymptotic(ChainGeometry::cut(n, s, b), kappa).bits; },
        py::arg("n"), py::arg("s"), py::arg("b"), py::arg("kappa"));
    m.def("rdm_oracle", &rdm_oracle, py::arg("n"), py::arg("s"), py::arg("sites"));

    m.def(
        "sz", [](int n, int b, int s) { return report_dict(sz_expectation_exact(n, b, s)); }, py::arg("n"), py::arg("b"),
        py::arg("s") = 1);
    m.def(
        "szsz",
        [](int n, int i, int j, int s, bool connected) { return report_dict(szsz_exact(n, i, j, s, std::nullopt, connected)); },
        py::arg("n"), py::arg("i"), py::arg("j"), py::arg("s") = 1, py::arg("connected") = false);
    m.def(
        "sxsx_colorless",
        [](int n, int b, int L, bool include_event_e) { return report_dict(sxsx_colorless(n, b, L, include_event_e)); },
        py::arg("n"), py::arg("b"), py::arg("L"), py::arg("include_event_e") = false);
    m.def(
        "sxsx_colorful", [](int n, int L, int s) { return report_dict(sxsx_colorful(n, L, s)); }, py::arg("n"),
        py::arg("L"), py::arg("s"));
    m.def(
        "step_pair_table",
        [](int n, int b, int L) {
            const auto d = step_pair_distribution(n, b, L);
            std::map<std::pair<int, int>, double> out;
            for (int a = -1; a <= 1; ++a)
                for (int c = -1; c <= 1; ++c) out[{a, c}] = d.at(a, c);
            return out;
        },
        py::arg("n"), py::arg("b"), py::arg("L"));
    m.def(
        "bruteforce_correlator",
        [](int n, int s, const std::vector<std::pair<int, std::string>>& ops) {
            std::vector<std::pair<int, SpinOperator>> full;
            for (const auto& [site, name] : ops) full.emplace_back(site, SpinOperator::make(kind_of(name), s));
            return bruteforce_correlator(n, s, full);
        },
        py::arg("n"), py::arg("s"), py::arg("ops"), "ops: list of (1-indexed site, 'Sx'|'Sy'|'Sz'|'S+'|'S-').");

    m.def(
        "ground_energies",
        [](int n, int s, int k, double field_h) { return ground_state_ed(build_hamiltonian(n, s, true, field_h), k).values; },
        py::arg("n"), py::arg("s") = 1, py::arg("k") = 2, py::arg("field_h") = 0.0);
    m.def(
        "frustration_free", [](int n, int s) { return verify_frustration_free(n, s).pass; }, py::arg("n"),
        py::arg("s") = 1);
    m.def(
        "symmetry_residuals", [](int n, int s) { return verify_symmetries(n, s).residuals; }, py::arg("n"),
        py::arg("s") = 1);
    m.def(
        "ssb_sweep",
        [](int n, const std::vector<double>& grid) {
            std::vector<std::pair<double, double>> out;
            for (const auto& p : ssb_sweep(n, grid.empty() ? default_h_grid() : grid, 1)) out.emplace_back(p.h, p.magnetization);
            return out;
        },
        py::arg("n"), py::arg("h_grid") = std::vector<double>{});
}
