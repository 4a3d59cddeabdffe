#include <woody/construct.hpp>
#include <woody/decompose.hpp>
#include <woody/exact.hpp>
#include <woody/hunt.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace woody;

namespace
{
    auto make_budget(std::optional<std::uint64_t> nodes, std::optional<double> seconds) -> Budget
    {
        return Budget{nodes, seconds};
    }

    auto to_python(const json & j) -> py::object
    {
        return py::module_::import("json").attr("loads")(j.dump());
    }

    auto witness_dict(const Graph & g, const VerifyResult & r) -> py::object
    {
        return r.witness ? to_python(witness_to_json(g, *r.witness)) : py::none();
    }

    template <typename Cert>
    auto exact_dict(const ExactResult<Cert> & r) -> py::dict
    {
        py::dict d;
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        d["exact"] = r.exact;
        d["nodes"] = r.nodes;
        d["certificate"] = r.certificate.colors;
        return d;
    }

    auto subset(const Graph & g, const std::vector<Vertex> & members) -> VertexSet
    {
        return make_vertex_set(g.n(), members);
    }
}

PYBIND11_MODULE(_woody, m)
{
    m.doc() = "Strongly woody edge colorings and strong arboricity";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_OverflowError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>> & edges) {
            std::vector<Edge> es;
            for (auto [u, v] : edges)
                es.push_back({u, v});
            return Graph(n, std::move(es));
        }),
            py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_static("from_graph6", [](const std::string & s) { return parse_graph6(s); })
        .def_static("from_edge_list", [](const std::string & s) { return parse_edge_list(s); })
        .def("to_graph6", [](const Graph & g) { return encode_graph6(g); })
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def_property_readonly("edges", [](const Graph & g) {
            std::vector<std::pair<int, int>> out;
            for (auto [u, v] : g.edges())
                out.emplace_back(u, v);
            return out;
        })
        .def("neighbors", [](const Graph & g, Vertex v) {
            auto nb = g.neighbors(v);
            return std::vector<Vertex>(nb.begin(), nb.end());
        })
        .def("__eq__", [](const Graph & a, const Graph & b) { return a == b; })
        .def("__repr__", [](const Graph & g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
        });

    m.def("complete", &families::complete);
    m.def("cycle", &families::cycle);
    m.def("path", &families::path);
    m.def("petersen", &families::petersen);
    m.def("mcgee", &families::mcgee);
    m.def("subdivide", &families::subdivide, py::arg("g"), py::arg("times"));

    m.def("girth", &girth, "Shortest cycle length, or None for forests.");
    m.def("coloring_number", [](const Graph & g) {
        auto c = coloring_number(g);
        return py::make_tuple(c.value, c.ordering);
    });
    m.def("has_triangle", &has_triangle);
    m.def("is_2_independent", [](const Graph & g, const std::vector<Vertex> & a) { return is_2_independent(g, subset(g, a)); });
    m.def("induces_forest", [](const Graph & g, const std::vector<Vertex> & f) { return induces_forest(g, subset(g, f)); });

    m.def("arboricity", [](const Graph & g) {
        auto r = arboricity(g);
        py::dict d;
        d["k"] = r.k;
        d["forests"] = r.decomposition.assignment;
        if (r.lower_bound) {
            d["dense_vertices"] = vertex_set_members(r.lower_bound->subgraph.members());
            d["density"] = py::make_tuple(r.lower_bound->density.num, r.lower_bound->density.den);
        }
        return d;
    });
    m.def("fractional_arboricity", [](const Graph & g) {
        auto c = fractional_arboricity_bruteforce(g);
        return py::make_tuple(c.density.num, c.density.den);
    }, "Exact max density |E(H)|/(|V(H)|-1) as a (numerator, denominator) pair.");

    m.def("is_woody", [](const Graph & g, const std::vector<Color> & c) {
        auto r = is_woody(g, EdgeColoring(c));
        return py::make_tuple(r.ok, witness_dict(g, r));
    });
    m.def("is_strongly_woody", [](const Graph & g, const std::vector<Color> & c) {
        auto r = is_strongly_woody(g, EdgeColoring(c));
        return py::make_tuple(r.ok, witness_dict(g, r));
    });
    m.def("is_strongly_woody_oracle", [](const Graph & g, const std::vector<Color> & c) {
        return is_strongly_woody_oracle(g, EdgeColoring(c));
    });
    m.def("is_p_woody", [](const Graph & g, const std::vector<Color> & c, int p, bool allow_large) {
        return is_p_woody(g, EdgeColoring(c), p, allow_large);
    }, py::arg("g"), py::arg("coloring"), py::arg("p"), py::arg("allow_large") = false);
    m.def("is_acyclic_vertex", [](const Graph & g, const std::vector<Color> & f) {
        return is_acyclic_vertex(g, VertexColoring(f)).ok;
    });

    m.def("derived_coloring", [](const Graph & g, const std::vector<Color> & f, int k) {
        return derived_coloring(g, VertexColoring(f), k).colors;
    });
    m.def("triangle_free_planar_coloring", [](const Graph & g) { return triangle_free_planar_coloring(g).colors; });
    m.def("degeneracy_pipeline", [](const Graph & g) {
        auto r = degeneracy_pipeline(g);
        py::dict d;
        d["coloring"] = r.coloring.colors;
        d["arboricity"] = r.arboricity;
        d["vertex_colors"] = r.vertex_colors;
        d["triangle_free_route"] = r.triangle_free_route;
        d["bound"] = r.bound;
        return d;
    });
    m.def("partition_coloring", [](const Graph & g, const std::vector<Vertex> & a, const std::vector<Vertex> & f) {
        return partition_coloring(g, subset(g, a), subset(g, f)).colors;
    });

    m.def("zeta_exact", [](const Graph & g, std::optional<std::uint64_t> nodes, std::optional<double> seconds) {
        return exact_dict(zeta_exact(g, make_budget(nodes, seconds)));
    }, py::arg("g"), py::arg("budget_nodes") = py::none(), py::arg("budget_secs") = py::none());
    m.def("acyclic_chromatic_exact", [](const Graph & g, std::optional<std::uint64_t> nodes, std::optional<double> seconds) {
        return exact_dict(acyclic_chromatic_exact(g, make_budget(nodes, seconds)));
    }, py::arg("g"), py::arg("budget_nodes") = py::none(), py::arg("budget_secs") = py::none());
    m.def("chromatic_exact", [](const Graph & g, std::optional<std::uint64_t> nodes, std::optional<double> seconds) {
        return exact_dict(chromatic_exact(g, make_budget(nodes, seconds)));
    }, py::arg("g"), py::arg("budget_nodes") = py::none(), py::arg("budget_secs") = py::none());
    m.def("chromatic_index_exact", [](const Graph & g, std::optional<std::uint64_t> nodes, std::optional<double> seconds) {
        return exact_dict(chromatic_index_exact(g, make_budget(nodes, seconds)));
    }, py::arg("g"), py::arg("budget_nodes") = py::none(), py::arg("budget_secs") = py::none());
    m.def("find_forest_2independent_partition",
        [](const Graph & g, std::optional<std::uint64_t> nodes, std::optional<double> seconds) -> py::object {
            auto r = find_forest_2independent_partition(g, make_budget(nodes, seconds));
            if (! r.found)
                return py::make_tuple(py::none(), r.exact);
            return py::make_tuple(py::make_tuple(vertex_set_members(r.a), vertex_set_members(r.f)), r.exact);
        },
        py::arg("g"), py::arg("budget_nodes") = py::none(), py::arg("budget_secs") = py::none());

    m.def("hunt", [](const std::vector<std::string> & graph6_lines, const std::string & conjectures, int jobs,
                      const std::string & declared_class, std::optional<std::uint64_t> nodes, std::optional<double> seconds) {
        std::string text;
        for (auto & line : graph6_lines)
            text += line + "\n";
        HuntOptions options;
        options.conjectures = parse_conjecture_list(conjectures);
        options.jobs = jobs;
        options.declared_class = declared_class;
        options.budget = make_budget(nodes, seconds);
        std::ostringstream report;
        HuntOutcome outcome;
        {
            py::gil_scoped_release release;
            outcome = run_hunt(read_graph6_lines(text, "python"), options, report);
        }
        py::list records;
        std::istringstream in(report.str());
        std::string line;
        while (std::getline(in, line))
            records.append(to_python(json::parse(line)));
        return py::make_tuple(records, to_python(outcome.summary));
    },
        py::arg("graph6_lines"), py::arg("conjectures") = "planar4,twoarb,col", py::arg("jobs") = 1,
        py::arg("declared_class") = "", py::arg("budget_nodes") = 10'000'000ULL, py::arg("budget_secs") = 10.0);
    m.def("recheck_record", [](py::object record) {
        auto text = py::module_::import("json").attr("dumps")(record).cast<std::string>();
        auto r = recheck_record(json::parse(text));
        return py::make_tuple(r.ok, r.detail);
    });
}
