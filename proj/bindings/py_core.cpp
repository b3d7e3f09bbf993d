#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seidel/bounds.hpp"
#include "seidel/errors.hpp"
#include "seidel/graph.hpp"
#include "seidel/odd.hpp"
#include "seidel/spectral.hpp"
#include "seidel/treegen.hpp"

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace seidel;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Seidel matrices, energies, odd pairs, and tree bounds";

  py::register_exception<Error>(m, "SeidelError");

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return Graph::from_edge_list(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def("order", &Graph::order)
      .def("size", &Graph::size)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("max_degree", &Graph::max_degree)
      .def("min_degree", &Graph::min_degree)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("path", [](int n) { return make_family(TreeFamily::path(n)); }, py::arg("n"));
  m.def("star", [](int n) { return make_family(TreeFamily::star(n)); }, py::arg("n"));
  m.def("cycle", [](int n) { return make_family(TreeFamily::cycle(n)); }, py::arg("n"));
  m.def("complete", [](int n) { return make_family(TreeFamily::complete(n)); }, py::arg("n"));
  m.def("type1", [](int a, int b) { return make_family(TreeFamily::type1(a, b)); }, py::arg("a"),
        py::arg("b"));
  m.def("type2", [](int a, int b) { return make_family(TreeFamily::type2(a, b)); }, py::arg("a"),
        py::arg("b"));

  m.def("complement", &complement);
  m.def("is_tree", &is_tree);
  m.def("distance", &distance, py::arg("g"), py::arg("u"), py::arg("v"));
  m.def("max_leaf_concentration", &max_leaf_concentration);

  m.def("seidel_matrix",
        [](const Graph& g) {
          const SymmetricMatrix s = seidel_matrix(g);
          std::vector<std::vector<double>> rows(s.dim(), std::vector<double>(s.dim()));
          for (int i = 0; i < s.dim(); ++i)
            for (int j = 0; j < s.dim(); ++j) rows[i][j] = s(i, j);
          return rows;
        });
  m.def("seidel_spectrum",
        [](const Graph& g, double tol) {
          return symmetric_eigenvalues(seidel_matrix(g), tol).eigenvalues;
        },
        py::arg("g"), py::arg("tol") = kDefaultEigenTol);
  m.def("seidel_energy", &seidel_energy, py::arg("g"), py::arg("tol") = kDefaultEigenTol);
  m.def("seidel_switch",
        [](const Graph& g, const std::vector<int>& v1) { return seidel_switch(g, SwitchSpec{v1}); },
        py::arg("g"), py::arg("v1"));
  m.def("seidel_charpoly", [](const Graph& g) { return charpoly_oracle(seidel_matrix(g)); });

  m.def("count_odd_pairs", &count_odd_pairs);
  m.def("odd_pairs_with_first",
        [](const Graph& g, int u, int v) { return odd_pairs_with_first(g, VertexPairSet(u, v)); },
        py::arg("g"), py::arg("u"), py::arg("v"));
  m.def("lambda_graph", &lambda_graph);
  m.def("lambda_degree", &lambda_degree, py::arg("g"), py::arg("v"));

  py::enum_<NonedgeCase>(m, "NonedgeCase")
      .value("Case1_TwinLeaves", NonedgeCase::Case1_TwinLeaves)
      .value("Case2_Type1Hubs", NonedgeCase::Case2_Type1Hubs)
      .value("Case3_Type2Hubs", NonedgeCase::Case3_Type2Hubs);
  m.def("classify_lambda_nonedge", &classify_lambda_nonedge, py::arg("t"), py::arg("u"),
        py::arg("v"));

  m.def("haemers_bound", &haemers_bound);
  m.def("aekn_lower_bound", &aekn_lower_bound, py::arg("n"), py::arg("nop"));
  m.def("tree_lower_bound", &tree_lower_bound, py::arg("n"), py::arg("d_stat"));
  m.def("is_excluded_tree", &is_excluded_tree);

  py::class_<ChainedBound>(m, "ChainedBound")
      .def_readonly("nop", &ChainedBound::nop)
      .def_readonly("lambda_edges", &ChainedBound::lambda_edges)
      .def_readonly("rhs1", &ChainedBound::rhs1)
      .def_readonly("rhs2", &ChainedBound::rhs2)
      .def_readonly("twice_rhs3", &ChainedBound::twice_rhs3)
      .def_readonly("holds", &ChainedBound::holds);
  m.def("chained_nop_bound", &chained_nop_bound);

  py::class_<LambdaSizeCheck>(m, "LambdaSizeCheck")
      .def_readonly("lambda_edges", &LambdaSizeCheck::lambda_edges)
      .def_readonly("twice_bound", &LambdaSizeCheck::twice_bound)
      .def_readonly("holds", &LambdaSizeCheck::holds);
  m.def("verify_lemma_lambda_size", &verify_lemma_lambda_size);

  py::class_<PerEdgeCheck>(m, "PerEdgeCheck")
      .def_readonly("min_count", &PerEdgeCheck::min_count)
      .def_readonly("bound", &PerEdgeCheck::bound)
      .def_readonly("holds", &PerEdgeCheck::holds);
  m.def("verify_lemma_per_edge", &verify_lemma_per_edge);

  py::class_<ClassificationCheck>(m, "ClassificationCheck")
      .def_readonly("nonedges_checked", &ClassificationCheck::nonedges_checked)
      .def_readonly("twin_leaves", &ClassificationCheck::twin_leaves)
      .def_readonly("type1_hubs", &ClassificationCheck::type1_hubs)
      .def_readonly("type2_hubs", &ClassificationCheck::type2_hubs)
      .def_readonly("all_classified", &ClassificationCheck::all_classified);
  m.def("verify_classification", &verify_classification);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("n", &BoundReport::n)
      .def_readonly("d_stat", &BoundReport::d_stat)
      .def_readonly("nop", &BoundReport::nop)
      .def_readonly("lambda_edges", &BoundReport::lambda_edges)
      .def_readonly("energy", &BoundReport::energy)
      .def_readonly("haemers", &BoundReport::haemers)
      .def_readonly("aekn", &BoundReport::aekn)
      .def_readonly("tree_bound", &BoundReport::tree_bound)
      .def_readonly("slack_haemers", &BoundReport::slack_haemers)
      .def_readonly("slack_aekn", &BoundReport::slack_aekn)
      .def_readonly("slack_tree", &BoundReport::slack_tree)
      .def_readonly("passed", &BoundReport::passed);
  m.def("check_tree", &check_tree, py::arg("t"), py::arg("tol") = kBoundTol);

  py::enum_<AverageMode>(m, "AverageMode")
      .value("Exact", AverageMode::Exact)
      .value("MonteCarlo", AverageMode::MonteCarlo);
  py::class_<AverageDResult>(m, "AverageDResult")
      .def_readonly("n", &AverageDResult::n)
      .def_readonly("mode", &AverageDResult::mode)
      .def_readonly("mean", &AverageDResult::mean)
      .def_readonly("exact_numerator", &AverageDResult::exact_numerator)
      .def_readonly("denominator", &AverageDResult::denominator)
      .def_readonly("samples", &AverageDResult::samples)
      .def_readonly("std_error", &AverageDResult::std_error)
      .def_readonly("seed", &AverageDResult::seed);
  m.def("average_D_exact", &average_D_exact, py::arg("n"));
  m.def("average_D_monte_carlo", &average_D_monte_carlo, py::arg("n"), py::arg("samples"),
        py::arg("seed"));

  m.def("prufer_decode",
        [](const std::vector<int>& seq) { return prufer_decode(PruferCode{seq}); },
        py::arg("seq"));
  m.def("prufer_encode", [](const Graph& t) { return prufer_encode(t).seq; }, py::arg("t"));
  m.def("sample_uniform_labeled_tree", &sample_uniform_labeled_tree, py::arg("n"),
        py::arg("seed"));
  m.def("canonical_form", [](const Graph& t) { return canonical_form(t).code; });
  m.def("free_trees", [](int n) { return free_trees(n); }, py::arg("n"));
}
