#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "domishold/cli.hpp"
#include "domishold/domishold.hpp"
#include "domishold/generators.hpp"
#include "domishold/io.hpp"
#include "domishold/solvers.hpp"

namespace py = pybind11;
using namespace domishold;

// Vertex sets cross the boundary as sorted lists of 0-based indices.
namespace pybind11::detail {
template <>
struct type_caster<VertexSet> {
    PYBIND11_TYPE_CASTER(VertexSet, const_name("list[int]"));

    bool load(handle src, bool) {
        if (!isinstance<pybind11::iterable>(src) || isinstance<pybind11::str>(src)) return false;
        VertexSet s;
        for (auto item : reinterpret_borrow<pybind11::iterable>(src)) {
            if (!isinstance<pybind11::int_>(item)) return false;
            const long v = item.cast<long>();
            if (v < 0 || v >= kMaxVertices) throw value_error("vertex index " + std::to_string(v) + " outside 0..63");
            s.insert(static_cast<int>(v));
        }
        value = s;
        return true;
    }

    static handle cast(VertexSet s, return_value_policy, handle) {
        pybind11::list out;
        for (int v : s) out.append(v);
        return out.release();
    }
};
}  // namespace pybind11::detail

namespace {

std::string verdict_name(Verdict v) { return to_string(v); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Total domishold graphs: recognition, certificates and solvers";
    m.attr("__version__") = DOMISHOLD_VERSION;

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", error.ptr());
    py::register_exception<CapabilityError>(m, "CapabilityError", error.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
    py::register_exception<DomainError>(m, "DomainError", error.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_static("from_edges", [](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); },
                    py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("has_isolated_vertex", &Graph::has_isolated_vertex)
        .def("isolated_vertices", &Graph::isolated_vertices)
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<int, std::vector<VertexSet>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Hypergraph::n)
        .def("edges", &Hypergraph::edges)
        .def(py::self == py::self);

    py::class_<PositiveDnf>(m, "PositiveDnf")
        .def(py::init([](int n, std::vector<VertexSet> terms) { return make_dnf(n, std::move(terms)); }),
             py::arg("n"), py::arg("terms"))
        .def_property_readonly("n", &PositiveDnf::n)
        .def_property_readonly("implicants", &PositiveDnf::implicants)
        .def("is_constant_zero", &PositiveDnf::is_constant_zero)
        .def("is_constant_one", &PositiveDnf::is_constant_one)
        .def("__call__", [](const PositiveDnf& f, VertexSet x) { return eval(f, x); });

    py::class_<TdStructure>(m, "TdStructure")
        .def(py::init([](std::vector<std::int64_t> w, std::int64_t t) { return TdStructure{std::move(w), t}; }),
             py::arg("weights"), py::arg("t"))
        .def_readonly("weights", &TdStructure::weights)
        .def_readonly("t", &TdStructure::t)
        .def("weight", &TdStructure::weight)
        .def(py::self == py::self)
        .def("__repr__", [](const TdStructure& s) {
            std::string w;
            for (auto x : s.weights) w += (w.empty() ? "" : ", ") + std::to_string(x);
            return "TdStructure(weights=[" + w + "], t=" + std::to_string(s.t) + ")";
        });

    py::class_<SeparatingStructure>(m, "SeparatingStructure")
        .def_readonly("weights", &SeparatingStructure::weights)
        .def_readonly("t", &SeparatingStructure::t);

    py::class_<SummabilityWitness>(m, "SummabilityWitness")
        .def_readonly("false_points", &SummabilityWitness::false_points)
        .def_readonly("true_points", &SummabilityWitness::true_points);

    py::class_<TdRecognitionReport>(m, "TdRecognitionReport")
        .def_property_readonly("verdict", [](const TdRecognitionReport& r) { return verdict_name(r.verdict); })
        .def_readonly("structure", &TdRecognitionReport::structure)
        .def_readonly("witness", &TdRecognitionReport::witness)
        .def_readonly("note", &TdRecognitionReport::note)
        .def("__bool__", [](const TdRecognitionReport& r) { return r.verdict == Verdict::Yes; });

    py::class_<ThresholdReport>(m, "ThresholdReport")
        .def_property_readonly("verdict", [](const ThresholdReport& r) { return verdict_name(r.verdict); })
        .def_readonly("structure", &ThresholdReport::structure)
        .def_readonly("constant_one", &ThresholdReport::constant_one)
        .def_readonly("witness", &ThresholdReport::witness)
        .def_readonly("note", &ThresholdReport::note);

    py::class_<HtdRecognitionReport>(m, "HtdRecognitionReport")
        .def_readonly("htd", &HtdRecognitionReport::htd)
        .def_property_readonly("forbidden", [](const HtdRecognitionReport& r) -> py::object {
            if (!r.witness) return py::none();
            return py::str("F" + std::to_string(r.witness->index));
        })
        .def_property_readonly("embedding", [](const HtdRecognitionReport& r) -> py::object {
            if (!r.witness) return py::none();
            return py::cast(r.witness->embedding.map);
        })
        .def("__bool__", [](const HtdRecognitionReport& r) { return r.htd; });

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("set", &SolveResult::set)
        .def_readonly("size", &SolveResult::size)
        .def_property_readonly("method", [](const SolveResult& r) { return to_string(r.method); });

    m.def("recognize_td", [](const Graph& g) { return recognize_td(g); }, py::arg("g"));
    m.def("recognize_htd", &recognize_htd, py::arg("g"));
    m.def("verify_td_structure", &verify_td_structure, py::arg("g"), py::arg("s"), py::arg("max_n") = 16);
    m.def("check_td_structure", [](const Graph& g, const TdStructure& s) { return check_td_structure(g, s); },
          py::arg("g"), py::arg("s"));
    m.def("is_total_dominating_set", &is_total_dominating_set, py::arg("g"), py::arg("s"));
    m.def("is_dominating_set", &is_dominating_set, py::arg("g"), py::arg("s"));
    m.def("neighborhood_dnf", &neighborhood_dnf, py::arg("g"));
    m.def("is_threshold", [](const PositiveDnf& f) { return is_threshold(f); }, py::arg("f"));
    m.def("is_k_summable", &is_k_summable, py::arg("f"), py::arg("k"), py::arg("max_n") = 10);
    m.def("hypergraph_threshold", [](const Hypergraph& h) { return hypergraph_threshold(h); }, py::arg("h"));
    m.def("is_dually_sperner", [](const Hypergraph& h) { return is_dually_sperner(h).dually_sperner; }, py::arg("h"));
    m.def("make_positive", &make_positive, py::arg("g"), py::arg("s"));
    m.def("embed_into_td", [](const Graph& g) {
        const TdEmbedding e = embed_into_td(g);
        return py::make_tuple(e.graph, e.structure, e.embedding.map);
    }, py::arg("g"));
    m.def("equivalence_chain", [](const Graph& g) {
        const EquivalenceReport r = check_equivalence_chain(g);
        py::list legs;
        for (const auto& leg : r.legs) legs.append(py::make_tuple(leg.name, verdict_name(leg.verdict)));
        return legs;
    }, py::arg("g"));

    m.def("greedy_min_tds", &greedy_min_tds, py::arg("g"), py::arg("s"));
    m.def("gamma_t_bruteforce", &gamma_t_bruteforce, py::arg("g"), py::arg("max_n") = 16);
    m.def("gamma_bruteforce", &gamma_bruteforce, py::arg("g"), py::arg("max_n") = 16);
    m.def("approx_dominating_set", [](const Graph& g) { return approx_dominating_set(g); }, py::arg("g"));

    m.def("generate", &generate, py::arg("spec"), py::arg("seed") = 0);
    m.def("forbidden_graph", [](int i) { return forbidden_graph(i).graph; }, py::arg("i"));
    m.def("parse_graph", py::overload_cast<const std::string&>(&parse_graph), py::arg("text"));
    m.def("to_text", py::overload_cast<const Graph&>(&to_text), py::arg("g"));
    m.def("decode_graph6", &decode_graph6, py::arg("line"));
    m.def("encode_graph6", &encode_graph6, py::arg("g"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command line with the given arguments; returns (exit_code, stdout, stderr).");
}
