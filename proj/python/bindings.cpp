#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ptpc/bounds.hpp"
#include "ptpc/cli.hpp"
#include "ptpc/enumerator.hpp"
#include "ptpc/oracle.hpp"
#include "ptpc/polysearch.hpp"

namespace py = pybind11;
using namespace ptpc;

namespace {

py::int_ to_py(const BigCount& v) {
    const auto text = v.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

BigCount from_py(const py::int_& v) { return BigCount(py::str(v).cast<std::string>()); }

py::dict stats_dict(const EnumerationStats& s) {
    py::dict d;
    d["visited_subtrees"] = s.visited_subtrees;
    d["message_updates"] = s.message_updates;
    d["pretransform_checks"] = s.pretransform_checks;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Minimum-weight codeword counts of pre-transformed polar codes";
    m.attr("__version__") = PTPC_VERSION;

    py::class_<CodeSpec>(m, "CodeSpec")
        .def(py::init<int, std::vector<std::uint32_t>>(), py::arg("n"), py::arg("info_set"))
        .def_property_readonly("n", &CodeSpec::n)
        .def_property_readonly("length", &CodeSpec::length)
        .def_property_readonly("dimension", &CodeSpec::dimension)
        .def_property_readonly("rate", &CodeSpec::rate)
        .def_property_readonly("info_set",
                               [](const CodeSpec& s) { return std::vector<std::uint32_t>(s.info_set().begin(), s.info_set().end()); })
        .def_property_readonly("frozen_set", &CodeSpec::frozen_set)
        .def("is_decreasing", &is_decreasing_profile)
        .def("__eq__", [](const CodeSpec& a, const CodeSpec& b) { return a == b; })
        .def("__repr__", [](const CodeSpec& s) {
            return "CodeSpec(n=" + std::to_string(s.n()) + ", K=" + std::to_string(s.dimension()) + ")";
        });

    py::class_<PacPolynomial>(m, "PacPolynomial")
        .def(py::init<std::uint64_t>(), py::arg("packed"))
        .def_static("from_octal", &PacPolynomial::from_octal, py::arg("text"))
        .def_property_readonly("packed", &PacPolynomial::packed)
        .def_property_readonly("degree", &PacPolynomial::degree)
        .def_property_readonly("nonzero_count", &PacPolynomial::nonzero_count)
        .def("octal", &PacPolynomial::octal)
        .def("__repr__", [](const PacPolynomial& p) { return "PacPolynomial('" + p.octal() + "')"; });

    py::class_<PreTransform>(m, "PreTransform")
        .def(py::init<int>(), py::arg("n"))
        .def_static("identity", &PreTransform::identity, py::arg("n"))
        .def_property_readonly("n", &PreTransform::n)
        .def("entry", &PreTransform::entry, py::arg("row"), py::arg("col"))
        .def("set_entry", &PreTransform::set_entry, py::arg("row"), py::arg("col"), py::arg("value"))
        .def("row", [](const PreTransform& t, std::size_t h) { return t.row(h).support(); }, py::arg("row"));

    m.def("rm_profile", &rm_profile, py::arg("r"), py::arg("n"));
    m.def("pac_transform", &pac_transform, py::arg("spec"), py::arg("polynomial"));
    m.def("random_transform", &random_transform, py::arg("spec"), py::arg("seed"));

    m.def(
        "count_min_weight",
        [](const CodeSpec& spec, const PreTransform& t, bool short_circuit, unsigned threads) {
            EnumerationOptions o;
            o.short_circuit = short_circuit;
            o.threads = threads;
            EnumerationResult r;
            {
                py::gil_scoped_release release;
                r = count_min_weight(spec, t, o);
            }
            py::dict out;
            out["wmin"] = r.wmin;
            out["count"] = to_py(r.count);
            py::dict cosets;
            for (const auto& [leader, count] : r.per_coset) cosets[py::int_(leader)] = to_py(count);
            out["per_coset"] = cosets;
            out["stats"] = stats_dict(r.stats);
            out["dmin_exceeds_wmin"] = r.dmin_exceeds_wmin;
            return out;
        },
        py::arg("spec"), py::arg("transform"), py::arg("short_circuit") = true, py::arg("threads") = 0);

    m.def(
        "weight_spectrum",
        [](const CodeSpec& spec, const PreTransform& t) {
            SpectrumResult r;
            {
                py::gil_scoped_release release;
                r = brute_force_spectrum(spec, t);
            }
            py::list out;
            for (const auto& [w, count] : r.spectrum.entries()) out.append(py::make_tuple(w, to_py(count)));
            return out;
        },
        py::arg("spec"), py::arg("transform"));

    m.def("lb_non_pretransformable", [](const CodeSpec& s) { return to_py(lb_non_pretransformable(s)); }, py::arg("spec"));
    m.def("lb_rm_closed_form", [](int r) { return to_py(lb_rm_closed_form(r)); }, py::arg("r"));
    m.def(
        "union_bound_fer",
        [](const std::vector<std::pair<std::uint64_t, py::int_>>& entries, double rate, double ebn0_db) {
            std::vector<std::pair<std::uint64_t, BigCount>> e;
            for (const auto& [w, c] : entries) e.emplace_back(w, from_py(c));
            return union_bound_fer(WeightSpectrum(std::move(e)), rate, ebn0_db);
        },
        py::arg("spectrum"), py::arg("rate"), py::arg("ebn0_db"));

    m.def(
        "search_optimal_polynomial",
        [](const CodeSpec& spec, int max_degree, std::size_t keep, unsigned threads) {
            SearchOptions o;
            o.keep = keep;
            o.threads = threads;
            SearchReport r;
            {
                py::gil_scoped_release release;
                r = search_optimal_polynomial(spec, max_degree, o);
            }
            py::dict out;
            out["best"] = r.best.octal();
            out["best_count"] = to_py(r.best_count);
            out["wmin"] = r.wmin;
            out["candidates"] = r.candidates;
            out["ties_considered"] = r.ties_considered;
            py::list ranking;
            for (const auto& e : r.ranking) ranking.append(py::make_tuple(e.polynomial.octal(), to_py(e.count)));
            out["ranking"] = ranking;
            return out;
        },
        py::arg("spec"), py::arg("max_degree"), py::arg("keep") = 10, py::arg("threads") = 0);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
