#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "injcol/density.hpp"
#include "injcol/discharge.hpp"
#include "injcol/gen.hpp"
#include "injcol/io.hpp"
#include "injcol/listcolor.hpp"
#include "injcol/reduce.hpp"
#include "injcol/solver.hpp"

namespace py = pybind11;
using namespace injcol;

namespace {

py::object fraction(const Rational& r)
{
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(r.num(), r.den());
}

Rational to_rational(const py::handle& value)
{
    py::object f = py::module_::import("fractions").attr("Fraction")(value);
    return Rational(f.attr("numerator").cast<std::int64_t>(), f.attr("denominator").cast<std::int64_t>());
}

py::dict coloring_dict(const Coloring& c)
{
    py::dict d;
    d["palette"] = c.palette;
    d["colors"] = c.colors;
    return d;
}

Coloring from_colors(const std::vector<int>& colors)
{
    Coloring c(static_cast<int>(colors.size()), 0);
    c.colors = colors;
    for (int x : colors)
        c.palette = std::max(c.palette, x);
    return c;
}

py::list trace_list(const std::vector<ReductionStep>& steps)
{
    py::list out;
    for (const auto& s : steps) {
        py::dict d;
        d["tag"] = to_string(s.config.tag);
        d["case"] = to_string(s.config.cs.kind);
        d["removed"] = s.removed_labels;
        out.append(d);
    }
    return out;
}

CaseSpec case_for(const Graph& g, const std::string& name)
{
    if (name == "auto")
        return CaseSpec::for_delta(std::max(3, g.max_degree()));
    if (name == "d3")
        return CaseSpec::for_delta(3);
    if (name == "d4")
        return CaseSpec::for_delta(4);
    if (name == "d5")
        return CaseSpec::for_delta(5);
    if (name == "d6")
        return CaseSpec::for_delta(std::max(6, g.max_degree()));
    throw py::value_error("unknown case " + name);
}

py::object json_loads(const std::string& text)
{
    return py::module_::import("json").attr("loads")(text);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Injective graph coloring for sparse graphs";

    py::register_exception<HypothesisViolated>(m, "HypothesisViolated", PyExc_ValueError);
    py::register_exception<Stalled>(m, "Stalled", PyExc_RuntimeError);
    py::register_exception<ConfigPresent>(m, "ConfigPresent", PyExc_ValueError);
    py::register_exception<DeficitFound>(m, "DeficitFound", PyExc_RuntimeError);
    py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<CaseMismatch>(m, "CaseMismatch", PyExc_ValueError);
    py::register_exception<gen::BadParameter>(m, "BadParameter", PyExc_ValueError);
    py::register_exception<gen::GenerationFailed>(m, "GenerationFailed", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
             py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def_property_readonly("max_degree", &Graph::max_degree)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("neighbors",
             [](const Graph& g, Vertex v) {
                 auto s = g.neighbors(v);
                 return std::vector<Vertex>(s.begin(), s.end());
             })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
            return s.str();
        });

    m.def("neighboring_graph", &neighboring_graph, "G^(2): u ~ v iff they share a neighbor");
    m.def("girth", &girth);
    m.def("mad", [](const Graph& g) { return fraction(mad_exact(g).density); }, "Maximum average degree, exactly");
    m.def("mad_witness", [](const Graph& g) {
        auto w = mad_exact(g);
        return py::make_tuple(fraction(w.density), w.subset);
    });
    m.def("satisfies_hypothesis",
          [](const Graph& g, const py::object& bound) { return satisfies_hypothesis(g, to_rational(bound)); },
          py::arg("g"), py::arg("bound"));
    m.def("hypothesis_bound", [](int delta) { return fraction(hypothesis_bound(delta)); });

    m.def(
        "chi_i",
        [](const Graph& g, std::optional<int> ub) -> py::object {
            auto c = chi_exact(neighboring_graph(g), ub.value_or(g.vertex_count()));
            if (!c)
                return py::none();
            return py::make_tuple(c->palette, c->colors);
        },
        py::arg("g"), py::arg("ub") = py::none(),
        "(chi_i, colors) by exact search on G^(2), or None above the bound");

    m.def(
        "color_injective",
        [](const Graph& g, const std::string& mode) {
            if (mode != "strict" && mode != "force")
                throw py::value_error("mode must be 'strict' or 'force'");
            SolveResult r;
            {
                py::gil_scoped_release release;
                r = color_injective(g, mode == "strict" ? SolveMode::Strict : SolveMode::Force);
            }
            py::dict d = coloring_dict(r.coloring);
            d["mad"] = fraction(r.report.mad);
            d["palette_bound"] = r.report.palette;
            d["components"] = r.report.components;
            d["fallback_vertices"] = r.report.fallback_vertices;
            d["runtime_seconds"] = r.report.runtime_seconds;
            d["trace"] = trace_list(r.report.trace);
            return d;
        },
        py::arg("g"), py::arg("mode") = "strict");

    m.def(
        "verify_injective",
        [](const Graph& g, const std::vector<int>& colors) -> py::object {
            if (static_cast<int>(colors.size()) != g.vertex_count())
                throw py::value_error("one color per vertex expected");
            auto bad = verify_injective(g, from_colors(colors));
            if (!bad)
                return py::none();
            return py::make_tuple(bad->u, bad->v, bad->shared_neighbor);
        },
        "None, or the first (u, v, shared_neighbor) violating injectivity");

    m.def("reduction_trace", [](const Graph& g) { return trace_list(reduction_trace(g)); });

    m.def(
        "find_config",
        [](const Graph& g, const std::string& which) -> py::object {
            auto c = find_config(g, case_for(g, which));
            if (!c)
                return py::none();
            py::dict d;
            d["tag"] = to_string(c->tag);
            d["anchor"] = c->anchor;
            d["vertices"] = c->vertices;
            return d;
        },
        py::arg("g"), py::arg("case") = "auto");

    m.def(
        "discharge",
        [](const Graph& g, const std::string& which) {
            CaseSpec cs = case_for(g, which);
            ChargeLedger l;
            switch (cs.kind) {
            case DeltaCase::D3: l = discharge_thm2(g); break;
            case DeltaCase::D4:
            case DeltaCase::D5: l = discharge_two_phase(g, build_aux_H(g, cs), cs.kind); break;
            case DeltaCase::D6Plus: l = discharge_lemma6(g, cs.delta); break;
            }
            return json_loads(io::ledger_json(l, to_string(cs.kind)));
        },
        py::arg("g"), py::arg("case") = "auto", "Discharging ledger as a dict with 'num/den' charges");

    m.def("parse_dimacs", [](const std::string& text) {
        std::istringstream in(text);
        return io::parse_graph(in, io::Format::Dimacs);
    });
    m.def("parse_edgelist", [](const std::string& text) {
        std::istringstream in(text);
        return io::parse_graph(in, io::Format::Edgelist);
    });
    m.def("to_dimacs", &io::emit_dimacs);
    m.def("to_edgelist", &io::emit_edgelist);

    py::module_ g = m.def_submodule("gen", "Graph generators");
    g.def("fano_incidence", &gen::fano_incidence);
    g.def("fano_minus_vertex", &gen::fano_minus_vertex);
    g.def("heawood", &gen::heawood);
    g.def("petersen", &gen::petersen);
    g.def("cycle", &gen::cycle);
    g.def("path", &gen::path);
    g.def("star", &gen::star);
    g.def("complete", &gen::complete);
    g.def("subdivide", &gen::subdivide, py::arg("g"), py::arg("times_per_edge") = 1);
    g.def("subdivide_random", &gen::subdivide_random, py::arg("g"), py::arg("p"), py::arg("seed"));
    g.def(
        "random_sparse",
        [](int n, int delta_max, const py::object& bound, std::uint64_t seed) {
            return gen::random_sparse(n, delta_max, to_rational(bound), seed);
        },
        py::arg("n"), py::arg("delta_max"), py::arg("mad_bound"), py::arg("seed"));
    g.def("random_regular", &gen::random_regular, py::arg("n"), py::arg("d"), py::arg("min_girth") = 3,
          py::arg("seed") = 1);
    g.def("is_isomorphic", &gen::is_isomorphic);
}
