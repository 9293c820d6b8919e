#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rigidity_forge/cli.hpp"
#include "rigidity_forge/combinatorics.hpp"
#include "rigidity_forge/constructions.hpp"
#include "rigidity_forge/error.hpp"
#include "rigidity_forge/experiments.hpp"
#include "rigidity_forge/global_rigidity.hpp"
#include "rigidity_forge/graph.hpp"
#include "rigidity_forge/rigidity.hpp"

namespace py = pybind11;
using namespace rigidity_forge;

namespace {

Graph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<std::pair<int, int>> pairs_of(const std::vector<Edge>& edges) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(py::int_(py::str(numerator(r).str())), py::int_(py::str(denominator(r).str())));
}

TrialConfig config(std::size_t trials, std::uint64_t seed, std::uint64_t prime) { return {trials, seed, prime}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Generic rigidity toolkit";

    static py::exception<Error> base(m, "RigidityError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_pairs), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_static("parse", [](const std::string& text) { return parse_graph(text); })
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", [](const Graph& g) { return pairs_of(g.edges()); })
        .def("neighbors", &Graph::neighbors)
        .def("has_edge", &Graph::has_edge)
        .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def("digest", [](const Graph& g) { return graph_digest(g); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("value", &Verdict::value)
        .def_property_readonly("confidence", [](const Verdict& v) { return std::string(to_string(v.confidence)); })
        .def("__bool__", [](const Verdict& v) { return v.value; })
        .def("__repr__", [](const Verdict& v) {
            return std::string("Verdict(") + (v.value ? "True" : "False") + ", " + std::string(to_string(v.confidence)) + ")";
        });

    py::class_<RankReport>(m, "RankReport")
        .def_readonly("rank", &RankReport::rank)
        .def_readonly("dim", &RankReport::dim)
        .def_readonly("trials", &RankReport::trials)
        .def_readonly("seed", &RankReport::seed)
        .def_readonly("prime", &RankReport::prime)
        .def_property_readonly("confidence", [](const RankReport& r) { return std::string(to_string(r.confidence)); });

    const auto kw = [](const char* name) { return py::arg(name); };
#define RF_TRIAL_ARGS py::kw_only(), py::arg("trials") = 2, py::arg("seed") = 0, py::arg("prime") = kMersenne61

    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("complete_bipartite_graph", &complete_bipartite_graph);
    m.def("harary_graph", &harary_graph, kw("k"), kw("s"));
    m.def("sharpness_example", &sharpness_example, kw("dim"));
    m.def("lovasz_yemini_family", [](int dim, int s) { return lovasz_yemini_family(dim, s).graph; }, kw("dim"), kw("s"));
    m.def("lovasz_yemini_cover_bound", [](int dim, int s) {
        const auto family = lovasz_yemini_family(dim, s);
        return cover_rank_bound(family.graph, dim, family.cover);
    }, kw("dim"), kw("s"));

    m.def("vertex_connectivity", &vertex_connectivity);
    m.def("maximal_cliques", &maximal_cliques);

    m.def("generic_rank", [](const Graph& g, int dim, std::size_t trials, std::uint64_t seed, std::uint64_t prime) {
        return generic_rank(g, dim, config(trials, seed, prime));
    }, kw("graph"), kw("dim"), RF_TRIAL_ARGS);
    m.def("is_independent", [](const Graph& g, int dim, std::size_t trials, std::uint64_t seed, std::uint64_t prime) {
        return is_independent(g, dim, config(trials, seed, prime));
    }, kw("graph"), kw("dim"), RF_TRIAL_ARGS);
    m.def("is_rigid", [](const Graph& g, int dim, std::size_t trials, std::uint64_t seed, std::uint64_t prime) {
        return is_rigid(g, dim, config(trials, seed, prime));
    }, kw("graph"), kw("dim"), RF_TRIAL_ARGS);
    m.def("is_globally_rigid", [](const Graph& g, int dim, std::size_t trials, std::uint64_t seed, std::uint64_t prime) {
        return is_globally_rigid(g, dim, config(trials, seed, prime));
    }, kw("graph"), kw("dim"), RF_TRIAL_ARGS);
    m.def("is_linked", [](const Graph& g, int dim, int u, int v, std::size_t trials, std::uint64_t seed, std::uint64_t prime) {
        return is_linked(g, dim, u, v, config(trials, seed, prime));
    }, kw("graph"), kw("dim"), kw("u"), kw("v"), RF_TRIAL_ARGS);
    m.def("is_t_redundantly_rigid", [](const Graph& g, int dim, int t, std::size_t trials, std::uint64_t seed, std::uint64_t prime) {
        const auto r = is_t_redundantly_rigid(g, dim, t, config(trials, seed, prime));
        return py::make_tuple(r.value, std::string(to_string(r.confidence)), r.subsets_checked, pairs_of(r.witness));
    }, kw("graph"), kw("dim"), kw("t"), RF_TRIAL_ARGS);
    m.def("stress_matrix_rank", [](const Graph& g, int dim, std::size_t trials, std::uint64_t seed, std::uint64_t prime) {
        const auto c = stress_matrix_rank(g, dim, config(trials, seed, prime));
        return py::make_tuple(c.omega_rank, c.target);
    }, kw("graph"), kw("dim"), RF_TRIAL_ARGS);

    m.def("build_gpi", [](const Graph& g, int dim, const std::vector<int>& order) { return build_gpi(g, dim, order).subgraph; },
          kw("graph"), kw("dim"), kw("ordering"));
    m.def("random_ordering", &random_ordering, kw("n"), kw("seed"));
    m.def("exact_expected_gpi_edges", [](const Graph& g, int dim, int cap) { return fraction(exact_expected_gpi_edges(g, dim, cap)); },
          kw("graph"), kw("dim"), py::arg("degree_cap") = kDefaultDegreeCap);
    m.def("brute_force_expected_gpi", [](const Graph& g, int dim) { return fraction(brute_force_expected_gpi(g, dim)); },
          kw("graph"), kw("dim"));
    m.def("monte_carlo_gpi", [](const Graph& g, int dim, std::size_t trials, std::uint64_t seed) {
        const auto s = monte_carlo_gpi(g, dim, trials, seed);
        return py::make_tuple(s.mean, s.stddev, s.half_width);
    }, kw("graph"), kw("dim"), kw("trials"), kw("seed"));

    m.def("m_dk", [](int d, int k) { return fraction(m_dk(d, k)); }, kw("d"), kw("k"));
    m.def("grn_lower_bound", &grn_lower_bound, kw("vertices"), kw("edges"));
    m.def("verify_comblemma", [](int n, int d, const std::vector<std::vector<int>>& sets, int mm) {
        const auto r = verify_comblemma(CliqueSystem{n, d, sets}, mm);
        py::dict out;
        out["applicable"] = r.applicable;
        out["reason"] = r.reason;
        out["count"] = py::int_(py::str(r.count.str()));
        out["bound"] = py::int_(py::str(r.bound.str()));
        out["holds"] = r.holds;
        return out;
    }, kw("n"), kw("d"), kw("sets"), kw("m"));

    m.def("run_cli", [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = 0;
        {
            py::gil_scoped_release release;
            code = cli::run(args, in, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, kw("args"), py::arg("input") = std::string());
#undef RF_TRIAL_ARGS
}
