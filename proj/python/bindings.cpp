#include "kgturan/alternation.hpp"
#include "kgturan/cli.hpp"
#include "kgturan/errors.hpp"
#include "kgturan/exact.hpp"
#include "kgturan/families.hpp"
#include "kgturan/harness.hpp"
#include "kgturan/hypergraph.hpp"
#include "kgturan/io.hpp"
#include "kgturan/kneser.hpp"
#include "kgturan/patterns.hpp"
#include "kgturan/sign_vector.hpp"
#include "kgturan/turan.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace kgturan;

namespace {

PatternFamily to_family(const std::vector<Hypergraph>& patterns) { return PatternFamily(patterns); }

py::object chromatic_to_py(const ChromaticValue& v)
{
    if (v.is_unbounded())
        return py::str("unbounded");
    return py::int_(v.value());
}

py::dict turan_to_py(const TuranReport& r)
{
    py::dict d;
    d["value"] = r.value;
    d["mode"] = to_string(r.mode);
    d["witness"] = r.witness;
    if (r.coloring) {
        d["ordering"] = r.coloring->ordering.sequence();
        d["colour"] = r.coloring->colour;
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "General Kneser hypergraphs, alternating Turan numbers and exact chromatic numbers";

    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<std::size_t, std::vector<std::vector<VertexId>>, std::vector<std::string>>(), py::arg("n"),
             py::arg("edges"), py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("n", &Hypergraph::num_vertices)
        .def_property_readonly("edges", &Hypergraph::edges)
        .def_property_readonly("labels", &Hypergraph::labels)
        .def("num_edges", &Hypergraph::num_edges)
        .def("degrees", &Hypergraph::degrees)
        .def("with_isolated_vertices", &Hypergraph::with_isolated_vertices)
        .def("to_json", [](const Hypergraph& h) { return canonical_hypergraph_text(h); })
        .def_static("from_json", &parse_hypergraph_text)
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("__repr__", [](const Hypergraph& h) {
            return "Hypergraph(n=" + std::to_string(h.num_vertices()) + ", edges=" + std::to_string(h.num_edges()) +
                   ")";
        });

    m.def("cycle", &cycle_graph);
    m.def("path", &path_graph);
    m.def("complete", &complete_graph);
    m.def("complete_bipartite", &complete_bipartite_graph);
    m.def("matching", &matching_graph);
    m.def("complete_uniform", &complete_uniform_hypergraph);
    m.def("star", &star_graph);
    m.def("multigraph", py::overload_cast<const Hypergraph&, std::size_t>(&build_multigraph), py::arg("base"),
          py::arg("count"));
    m.def("alt", [](std::vector<int> x) { return alt(SignVector(std::move(x))); });

    m.def(
        "occurrences",
        [](const Hypergraph& host, const std::vector<Hypergraph>& family) {
            std::vector<std::vector<EdgeId>> out;
            for (auto& o : enumerate_occurrences(host, to_family(family)))
                out.push_back(o.edge_ids);
            return out;
        },
        py::arg("host"), py::arg("family"));
    m.def(
        "pattern_hypergraph",
        [](const Hypergraph& host, const std::vector<Hypergraph>& family) {
            return pattern_hypergraph(host, to_family(family));
        },
        py::arg("host"), py::arg("family"));
    m.def(
        "kneser", [](const Hypergraph& rep, int r) { return kneser_power(rep, r).result; }, py::arg("rep"),
        py::arg("r") = 2);
    m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"), py::arg("keep_isolated") = true);

    m.def(
        "chromatic_number",
        [](const Hypergraph& h) {
            auto res = chromatic_number_hypergraph(h);
            py::dict d;
            d["value"] = chromatic_to_py(res.value);
            d["assignment"] = res.coloring.assignment;
            return d;
        },
        py::arg("h"));
    m.def("independence_number", [](const Hypergraph& h) { return independence_number(h).value; });
    m.def("covering_number", [](const Hypergraph& h) { return covering_number(h).value; });

    m.def(
        "ex",
        [](const Hypergraph& host, const std::vector<Hypergraph>& family) {
            return turan_to_py(turan_number(host, to_family(family)));
        },
        py::arg("host"), py::arg("family"));
    m.def(
        "ex_alt_sigma",
        [](const Hypergraph& host, const std::vector<Hypergraph>& family, std::vector<std::uint32_t> sigma,
           bool strong) {
            return turan_to_py(ex_alt_sigma(host, to_family(family), LinearOrdering(std::move(sigma)), strong));
        },
        py::arg("host"), py::arg("family"), py::arg("sigma"), py::arg("strong") = false);
    m.def(
        "ex_alt",
        [](const Hypergraph& host, const std::vector<Hypergraph>& family, bool strong, bool heuristic,
           std::uint64_t seed) {
            OrderingSearch s;
            s.mode = heuristic ? BoundMode::upper_bound : BoundMode::exact;
            s.seed = seed;
            return turan_to_py(ex_alt_min(host, to_family(family), strong, s));
        },
        py::arg("host"), py::arg("family"), py::arg("strong") = false, py::arg("heuristic") = false,
        py::arg("seed") = 1);

    m.def(
        "alt_sigma",
        [](const Hypergraph& rep, std::vector<std::uint32_t> sigma, std::size_t i) {
            return alt_sigma_level(rep, LinearOrdering(std::move(sigma)), i).value;
        },
        py::arg("rep"), py::arg("sigma"), py::arg("i") = 1);
    m.def(
        "salt_sigma",
        [](const Hypergraph& rep, std::vector<std::uint32_t> sigma) {
            return salt_sigma(rep, LinearOrdering(std::move(sigma))).value;
        },
        py::arg("rep"), py::arg("sigma"));
    m.def(
        "altermatic_certificate",
        [](const Hypergraph& rep, std::optional<std::vector<std::uint32_t>> sigma, std::size_t i, bool strong) {
            auto cert = sigma ? altermatic_certificate(rep, LinearOrdering(std::move(*sigma)), i, strong)
                              : best_altermatic_certificate(rep, i, strong);
            py::dict d;
            d["value"] = cert.value;
            d["alternation"] = cert.alternation;
            d["ordering"] = cert.ordering.sequence();
            d["verified"] = verify_altermatic(cert);
            return d;
        },
        py::arg("rep"), py::arg("sigma") = py::none(), py::arg("i") = 1, py::arg("strong") = false);

    m.def(
        "golden_report",
        [](const std::vector<std::string>& groups) {
            return golden_report_json(run_golden_suite({groups.begin(), groups.end()}), -1);
        },
        py::arg("groups") = std::vector<std::string>{});

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    });
}
