#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leafspan/commands.hpp"
#include "leafspan/extremal.hpp"
#include "leafspan/graph.hpp"
#include "leafspan/report.hpp"
#include "leafspan/spectra.hpp"
#include "leafspan/structural.hpp"
#include "leafspan/trees.hpp"
#include "leafspan/verify.hpp"

namespace py = pybind11;
using namespace leafspan;

namespace {

py::object to_python(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& x : j) out.append(to_python(x));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
            return out;
        }
        default: return py::none();
    }
}

std::vector<std::vector<double>> to_rows(const SymMatrix& m) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.dimension()));
    for (int i = 0; i < m.dimension(); ++i)
        for (int j = 0; j < m.dimension(); ++j) rows[static_cast<std::size_t>(i)].push_back(m(i, j));
    return rows;
}

std::vector<std::int64_t> coefficients(const CharPoly& p) {
    return std::visit(
        [](const auto& q) -> std::vector<std::int64_t> {
            if constexpr (std::is_same_v<std::decay_t<decltype(q)>, CubicPoly>) {
                return {1, q.c2, q.c1, q.c0};
            } else {
                return {1, q.c1, q.c0};
            }
        },
        p);
}

CharPoly from_coefficients(const std::vector<std::int64_t>& c) {
    if (c.size() == 4 && c[0] == 1) return CubicPoly{c[1], c[2], c[3]};
    if (c.size() == 3 && c[0] == 1) return QuadPoly{c[1], c[2]};
    throw std::invalid_argument("expected monic coefficients [1, c2, c1, c0] or [1, c1, c0]");
}

py::object search_result(const TreeSearchResult& r) {
    py::dict out;
    out["status"] = to_string(r.status);
    out["nodes"] = r.nodes;
    out["tree"] = r.tree ? to_python(to_json(*r.tree)) : py::none();
    return out;
}

}  // namespace

PYBIND11_MODULE(_leafspan, m) {
    m.doc() = "Spanning trees with large leaf distance: graphs, spectra, extremal graphs and oracles.";

    py::register_exception<cli::InputError>(m, "InputError", PyExc_ValueError);

    py::enum_<MatrixKind>(m, "MatrixKind")
        .value("ADJACENCY", MatrixKind::Adjacency)
        .value("SIGNLESS_LAPLACIAN", MatrixKind::SignlessLaplacian)
        .value("DISTANCE", MatrixKind::Distance)
        .value("DISTANCE_SIGNLESS_LAPLACIAN", MatrixKind::DistanceSignlessLaplacian)
        .value("A_ALPHA", MatrixKind::AAlpha);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).members(); })
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph('" + format_graph6(g) + "')"; });

    m.def("complete", &complete, py::arg("n"));
    m.def("path", &path, py::arg("n"));
    m.def("cycle", &cycle, py::arg("n"));
    m.def("star", &star, py::arg("leaves"));
    m.def("disjoint_union", &disjoint_union);
    m.def("join", &join);
    m.def("is_connected", &is_connected);
    m.def("min_degree", &min_degree);
    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("format_graph6", &format_graph6);
    m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); });
    m.def("distances", [](const Graph& g) {
        const auto d = bfs_distances(g);
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(d.order()));
        for (int i = 0; i < d.order(); ++i)
            for (int j = 0; j < d.order(); ++j) rows[static_cast<std::size_t>(i)].push_back(d.at(i, j));
        return rows;
    });

    m.def("build_matrix", [](const Graph& g, MatrixKind k, double alpha) { return to_rows(build_matrix(g, k, alpha)); },
          py::arg("g"), py::arg("kind"), py::arg("alpha") = 0.0);
    m.def("spectral_radius",
          [](const Graph& g, MatrixKind k, double alpha) { return spectral_radius(build_matrix(g, k, alpha)); },
          py::arg("g"), py::arg("kind"), py::arg("alpha") = 0.0);
    m.def("matrix_spectral_radius",
          [](const std::vector<std::vector<double>>& rows, double tol) {
              return spectral_radius(SymMatrix::from_rows(rows), tol);
          },
          py::arg("rows"), py::arg("tol") = kEigenTolerance);

    m.def("build_extremal", [](int n, int t) { return build_extremal({n, t}); }, py::arg("n"), py::arg("t"));
    m.def("canonical_partition_sizes", [](int n, int t) { return canonical_partition({n, t}).sizes(); },
          py::arg("n"), py::arg("t"));
    m.def("char_poly", [](int n, int t, MatrixKind k) { return coefficients(char_poly({n, t}, k)); },
          py::arg("n"), py::arg("t"), py::arg("kind"), "Monic integer coefficients, highest degree first.");
    m.def("largest_root",
          [](const std::vector<std::int64_t>& c, double hint) { return largest_root(from_coefficients(c), hint); },
          py::arg("coefficients"), py::arg("lower_hint") = 0.0);
    m.def("extremal_radius", [](int n, int t, MatrixKind k) { return extremal_radius({n, t}, k); });
    m.def("check_bounds", [](int n, int t) {
        py::list out;
        for (const auto& b : check_bounds({n, t})) out.append(to_python(to_json(b)));
        return out;
    });

    m.def("isolated_count", [](const Graph& g, const std::vector<int>& s) {
        VertexSet set;
        for (int v : s) set.insert(v);
        return isolated_count(g, set);
    });
    m.def(
        "check_condition",
        [](const Graph& g, int num, int den) -> py::object {
            const auto outcome = check_condition(g, {num, den});
            return outcome.witness ? to_python(to_json(*outcome.witness)) : py::none();
        },
        py::arg("g"), py::arg("num") = 1, py::arg("den") = 1,
        "None when den * i(G - S) < num * |S| for every nonempty S, else a violating witness.");

    m.def("find_spanning_tree_leaf_distance",
          [](const Graph& g, int d, std::uint64_t budget) { return search_result(find_spanning_tree_leaf_distance(g, d, budget)); },
          py::arg("g"), py::arg("d") = 4, py::arg("budget") = kDefaultBranchBudget);
    m.def("find_spanning_tree_leaf_degree",
          [](const Graph& g, int k, std::uint64_t budget) { return search_result(find_spanning_tree_leaf_degree(g, k, budget)); },
          py::arg("g"), py::arg("k") = 1, py::arg("budget") = kDefaultBranchBudget);
    m.def("hamilton_path_extremal", [](int n, int t) { return to_python(to_json(hamilton_path_extremal({n, t}))); });

    m.def("edge_bound", [](int n, int t) {
        const auto r = edge_bound(n, t);
        return py::make_tuple(r.num, r.den);
    });
    m.def(
        "evaluate",
        [](const Graph& g, int t, const std::string& theorem, bool oracle) {
            Verdict v = evaluate(g, t, parse_theorem(theorem));
            if (oracle) v = oracle_confirm(v, g);
            return to_python(to_json(v));
        },
        py::arg("g"), py::arg("t"), py::arg("theorem"), py::arg("oracle") = false);
    m.def("lemma_suite", [](std::uint64_t seed, int trials) { return to_python(to_json(lemma_suite(seed, trials))); },
          py::arg("seed") = 1, py::arg("trials") = 100);
}
