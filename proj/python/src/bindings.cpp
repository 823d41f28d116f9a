#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "treematch/cnf.hpp"
#include "treematch/error.hpp"
#include "treematch/generators.hpp"
#include "treematch/graph.hpp"
#include "treematch/graph_io.hpp"
#include "treematch/matching.hpp"
#include "treematch/oracle.hpp"
#include "treematch/pmst.hpp"
#include "treematch/reductions.hpp"
#include "treematch/sbst.hpp"

namespace py = pybind11;
using namespace treematch;

namespace {

using EdgeTuple = std::tuple<Vertex, Vertex, Weight>;

WeightedGraph makeGraph(int n, const std::vector<EdgeTuple>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [u, v, w] : edges) list.push_back({u, v, w});
  return WeightedGraph(n, std::move(list));
}

std::vector<EdgeTuple> edgeTuples(const WeightedGraph& g) {
  std::vector<EdgeTuple> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.weight);
  return out;
}

std::string sideName(Side s) { return s == Side::Plus ? "plus" : "minus"; }

py::dict infeasible(const Infeasible& inf) {
  py::dict d;
  d["status"] = "infeasible";
  d["reason"] = std::string(toString(inf.reason));
  return d;
}

py::dict certificate(const SbstCertificate& c) {
  py::dict d;
  d["plus_side"] = sideName(c.plusSide);
  d["unique_leaf"] = c.uniqueLeaf;
  d["matching"] = c.alternatingMatching.edges().ids();
  return d;
}

py::dict sbstResult(const std::variant<SbstSolution, Infeasible>& r) {
  if (auto* inf = std::get_if<Infeasible>(&r)) return infeasible(*inf);
  const auto& s = std::get<SbstSolution>(r);
  py::dict d;
  d["status"] = "optimal";
  d["weight"] = s.weight;
  d["tree"] = s.tree.ids();
  d["certificate"] = certificate(s.certificate);
  return d;
}

HostKind makeHost(int n, const std::optional<std::vector<Vertex>>& plus) {
  if (!plus) return HostKind::complete(n);
  std::vector<char> isPlus(n, 0);
  for (Vertex v : *plus) {
    if (v < 0 || v >= n) throw Error(ErrorCode::HostMismatch, "plus vertex out of range");
    isPlus[v] = 1;
  }
  std::vector<Vertex> minus;
  for (Vertex v = 0; v < n; ++v) {
    if (!isPlus[v]) minus.push_back(v);
  }
  return HostKind::completeBipartite(*plus, minus);
}

CnfLayout makeLayout(int n, const std::vector<std::vector<int>>& clauses,
                     const std::optional<std::vector<std::string>>& sides) {
  CnfFormula f{n, clauses};
  if (!sides) return defaultLayout(std::move(f));
  std::vector<ClauseSide> s;
  for (const std::string& name : *sides) {
    if (name == "in") s.push_back(ClauseSide::Inside);
    else if (name == "out") s.push_back(ClauseSide::Outside);
    else throw Error(ErrorCode::InvalidArgument, "clause side must be 'in' or 'out'");
  }
  return layoutWithSides(std::move(f), std::move(s));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spanning trees containing perfect matchings";

  static py::exception<Error> error(m, "TreematchError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(toString(e.code())), e.what());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::class_<WeightedGraph>(m, "Graph")
      .def(py::init(&makeGraph), py::arg("n"), py::arg("edges") = std::vector<EdgeTuple>{},
           "Graph on vertices 0..n-1 from (u, v, weight) triples; edge ids follow list order.")
      .def_property_readonly("vertex_count", &WeightedGraph::vertexCount)
      .def_property_readonly("edge_count", &WeightedGraph::edgeCount)
      .def_property_readonly("edges", &edgeTuples)
      .def("degree", &WeightedGraph::degree)
      .def("find_edge", &WeightedGraph::findEdge)
      .def("weight_of", [](const WeightedGraph& g, std::vector<EdgeId> ids) {
        return g.weightOf(EdgeSet(std::move(ids)));
      })
      .def("to_text", [](const WeightedGraph& g) { return formatGraph(g); })
      .def_static("from_text", [](const std::string& text) { return parseGraph(text); })
      .def(py::self == py::self)
      .def("__repr__", [](const WeightedGraph& g) {
        std::ostringstream s;
        s << "Graph(n=" << g.vertexCount() << ", m=" << g.edgeCount() << ")";
        return s.str();
      });

  m.def("complete_graph", &completeGraph, py::arg("n"), py::arg("weight") = 0);
  m.def("complete_bipartite_graph", &completeBipartiteGraph, py::arg("a"), py::arg("b"),
        py::arg("weight") = 0);
  m.def("cycle_graph", &cycleGraph, py::arg("n"), py::arg("weight") = 0);
  m.def("path_graph", &pathGraph, py::arg("n"), py::arg("weight") = 0);
  m.def("hypercube_graph", &hypercubeGraph, py::arg("d"));
  m.def("random_graph", &randomGraph, py::arg("n"), py::arg("p"), py::arg("seed"));

  m.def("maximum_matching", [](const WeightedGraph& g) { return maximumMatching(g).edges().ids(); },
        "Edge ids of a maximum-cardinality matching.");
  m.def("deficiency", &deficiency);

  m.def("pmst_feasible", [](const WeightedGraph& g) -> py::dict {
    auto r = pmstFeasible(g);
    if (auto* inf = std::get_if<Infeasible>(&r)) return infeasible(*inf);
    const EdgeSet& tree = std::get<EdgeSet>(r);
    py::dict d;
    d["status"] = "feasible";
    d["tree"] = tree.ids();
    d["matching"] = treePerfectMatching(asBipartitionedTree(g, tree))->edges().ids();
    return d;
  });

  m.def("min_pmst_two_valued", [](const WeightedGraph& g) {
    TwoValuedSolution s = minPmstTwoValued(g);
    py::dict d;
    d["weight"] = s.totalWeight;
    d["tree"] = s.tree.ids();
    d["heavy_edges"] = s.heavyEdges;
    return d;
  });

  m.def(
      "greedy_augment",
      [](const WeightedGraph& h, std::optional<std::vector<Vertex>> plus) {
        AugmentationResult r = greedyAugment(h, makeHost(h.vertexCount(), plus));
        py::dict d;
        d["added_edges"] = r.addedEdges;
        d["opt"] = r.optValue;
        d["augmented"] = r.augmented;
        d["matching"] = r.finalMatching.edges().ids();
        return d;
      },
      py::arg("graph"), py::arg("plus_side") = py::none(),
      "Greedy augmentation; pass plus_side to restrict additions to a balanced bipartite host.");

  m.def(
      "is_strongly_balanced",
      [](const WeightedGraph& g, std::optional<std::vector<EdgeId>> tree) -> py::object {
        std::vector<EdgeId> ids;
        if (tree) {
          ids = std::move(*tree);
        } else {
          for (EdgeId id = 0; id < g.edgeCount(); ++id) ids.push_back(id);
        }
        auto cert = isStronglyBalanced(asBipartitionedTree(g, EdgeSet(std::move(ids))));
        if (!cert) return py::none();
        return certificate(*cert);
      },
      py::arg("graph"), py::arg("tree") = py::none());

  m.def("min_sbst_bipartite", [](const WeightedGraph& g) { return sbstResult(minSbstBipartite(g)); });

  m.def(
      "reduce_hc_to_minpmst",
      [](const WeightedGraph& g, std::optional<std::vector<std::array<EdgeId, 3>>> rotation,
         bool complete, std::optional<std::vector<Vertex>> cycle) {
        RotationSystem rot = rotation ? RotationSystem{*rotation} : ascendingRotation(g);
        HcReduction r = reduceHcToMinPmst(g, rot);
        if (complete) r = completeWithWeightTwo(r);
        py::dict d;
        d["graph"] = r.outputGraph;
        std::vector<std::string> tags;
        for (const HcTag& t : r.tagOf) tags.push_back(t.name());
        d["tags"] = tags;
        d["edge_origin"] = r.edgeOrigin;
        if (cycle) d["tree"] = mapHcToTree(r, VertexCycle{*cycle}).ids();
        return d;
      },
      py::arg("graph"), py::arg("rotation") = py::none(), py::arg("complete") = false,
      py::arg("cycle") = py::none());

  m.def(
      "reduce_sat_to_sbst",
      [](int n, const std::vector<std::vector<int>>& clauses,
         std::optional<std::vector<std::string>> sides, std::optional<Assignment> assignment) {
        SatReduction r = reduceSatToSbst(makeLayout(n, clauses, sides));
        py::dict d;
        d["graph"] = r.outputGraph;
        d["tags"] = r.tagOf;
        if (assignment) d["tree"] = mapAssignmentToSbTree(r, *assignment).ids();
        return d;
      },
      py::arg("variables"), py::arg("clauses"), py::arg("sides") = py::none(),
      py::arg("assignment") = py::none());

  m.def(
      "extract_assignment",
      [](int n, const std::vector<std::vector<int>>& clauses,
         std::optional<std::vector<std::string>> sides, std::vector<EdgeId> tree) {
        SatReduction r = reduceSatToSbst(makeLayout(n, clauses, sides));
        return extractAssignmentFromTree(r, EdgeSet(std::move(tree)));
      },
      py::arg("variables"), py::arg("clauses"), py::arg("sides") = py::none(), py::arg("tree"));

  m.def("replace_leaves", &replaceLeaves);

  py::module_ oracle = m.def_submodule("oracle", "Exhaustive reference solvers");
  oracle.def(
      "count_spanning_trees",
      [](const WeightedGraph& g, std::int64_t cap) {
        EnumerationResult r = enumerateSpanningTrees(g, [](std::span<const EdgeId>) {}, cap);
        return std::make_pair(r.visited, r.truncated);
      },
      py::arg("graph"), py::arg("cap") = kDefaultTreeCap);
  oracle.def(
      "min_pmst",
      [](const WeightedGraph& g, std::int64_t cap) -> py::dict {
        auto r = bruteForceMinPmst(g, cap);
        if (auto* inf = std::get_if<Infeasible>(&r)) return infeasible(*inf);
        py::dict d;
        d["status"] = "optimal";
        d["weight"] = std::get<PmstOptimum>(r).weight;
        d["tree"] = std::get<PmstOptimum>(r).tree.ids();
        return d;
      },
      py::arg("graph"), py::arg("cap") = kDefaultTreeCap);
  oracle.def("min_sbst", [](const WeightedGraph& g) { return sbstResult(bruteForceMinSbst(g)); });
  oracle.def(
      "opt_aug",
      [](const WeightedGraph& h, std::optional<std::vector<Vertex>> plus) {
        return bruteForceOptAug(h, makeHost(h.vertexCount(), plus));
      },
      py::arg("graph"), py::arg("plus_side") = py::none());
  oracle.def("sat", [](int n, const std::vector<std::vector<int>>& clauses) {
    return bruteForceSat(CnfFormula{n, clauses});
  });
  oracle.def("maximum_matching", &bruteForceMaximumMatching);
}
