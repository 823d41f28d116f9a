#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "expect_error.hpp"
#include "instances.hpp"
#include "treematch/generators.hpp"
#include "treematch/graph.hpp"
#include "treematch/graph_io.hpp"

namespace treematch {
namespace {

using testing::uniformInt;
using testing::uniformUnit;

EdgeSet allEdges(const WeightedGraph& g) {
  std::vector<EdgeId> ids(g.edgeCount());
  for (EdgeId id = 0; id < g.edgeCount(); ++id) ids[id] = id;
  return EdgeSet(ids);
}

TEST(WeightedGraph, RejectsSelfLoopsParallelEdgesAndBadIds) {
  EXPECT_TM_ERROR(WeightedGraph(2, {{0, 0, 1}}), ErrorCode::InvalidGraph);
  EXPECT_TM_ERROR(WeightedGraph(2, {{0, 1, 1}, {1, 0, 2}}), ErrorCode::InvalidGraph);
  EXPECT_TM_ERROR(WeightedGraph(2, {{0, 2, 1}}), ErrorCode::InvalidGraph);
  EXPECT_TM_ERROR(WeightedGraph(0, {}), ErrorCode::InvalidGraph);
}

TEST(WeightedGraph, IncidenceAndLookup) {
  WeightedGraph g(4, {{0, 1, 5}, {2, 1, 3}, {3, 0, -1}});
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_EQ(g.degree(1), 2);
  ASSERT_TRUE(g.findEdge(1, 2).has_value());
  EXPECT_EQ(*g.findEdge(1, 2), 1);
  EXPECT_FALSE(g.hasEdge(0, 2));
  EXPECT_EQ(g.weightOf(EdgeSet({0, 2})), 4);
  auto inc = g.incident(0);
  EXPECT_TRUE(std::is_sorted(inc.begin(), inc.end()));
}

TEST(WeightedGraph, SubgraphAndAddedEdgesKeepIdsPredictable) {
  WeightedGraph g = completeGraph(4, 2);
  WeightedGraph s = g.subgraph(EdgeSet({5, 0}));
  ASSERT_EQ(s.edgeCount(), 2);
  EXPECT_EQ(s.edge(0), g.edge(0));
  EXPECT_EQ(s.edge(1), g.edge(5));
  std::vector<Edge> extra = {{0, 2, 7}};
  WeightedGraph t = s.withAddedEdges(extra);
  EXPECT_EQ(t.edgeCount(), 3);
  EXPECT_EQ(t.edge(2).weight, 7);
}

TEST(EdgeSet, SortsAndDeduplicates) {
  EdgeSet s({4, 1, 4, 2});
  EXPECT_EQ(s.ids(), (std::vector<EdgeId>{1, 2, 4}));
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(3));
}

TEST(ConnectedComponents, Examples) {
  EXPECT_EQ(connectedComponents(WeightedGraph(3, {})),
            (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
  EXPECT_EQ(connectedComponents(pathGraph(3)), (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
  EXPECT_EQ(connectedComponents(WeightedGraph(4, {{0, 1, 0}, {2, 3, 0}})),
            (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(componentLabels(WeightedGraph(4, {{1, 3, 0}})), (std::vector<int>{0, 1, 2, 1}));
}

TEST(Bipartition, Examples) {
  auto edge = std::get<Bipartition>(bipartitionOf(pathGraph(2)));
  EXPECT_EQ(edge.members(Side::Plus), std::vector<Vertex>{0});
  EXPECT_EQ(edge.members(Side::Minus), std::vector<Vertex>{1});

  auto odd = bipartitionOf(cycleGraph(3));
  ASSERT_TRUE(std::holds_alternative<OddCycle>(odd));
  auto witness = std::get<OddCycle>(odd).witness.order;
  std::sort(witness.begin(), witness.end());
  EXPECT_EQ(witness, (std::vector<Vertex>{0, 1, 2}));

  auto c4 = std::get<Bipartition>(bipartitionOf(cycleGraph(4)));
  EXPECT_EQ(c4.members(Side::Plus), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(c4.members(Side::Minus), (std::vector<Vertex>{1, 3}));
  EXPECT_TRUE(c4.balanced());
}

TEST(Bipartition, OddCycleWitnessIsACycleOfOddLength) {
  WeightedGraph g(7, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {4, 5, 0}, {5, 6, 0}, {6, 2, 0}});
  auto odd = std::get<OddCycle>(bipartitionOf(g)).witness;
  EXPECT_EQ(odd.order.size() % 2, 1u);
  for (std::size_t k = 0; k < odd.order.size(); ++k) {
    EXPECT_TRUE(g.hasEdge(odd.order[k], odd.order[(k + 1) % odd.order.size()]));
  }
}

TEST(Bipartition, EachComponentAnchoredAtSmallestVertex) {
  WeightedGraph g(5, {{0, 1, 0}, {3, 2, 0}, {4, 3, 0}});
  auto b = std::get<Bipartition>(bipartitionOf(g));
  EXPECT_EQ(b.side[2], Side::Plus);
  EXPECT_EQ(b.side[3], Side::Minus);
  EXPECT_EQ(b.side[4], Side::Plus);
}

TEST(AsBipartitionedTree, Examples) {
  WeightedGraph p4 = pathGraph(4);
  BipartitionedTree t = asBipartitionedTree(p4, allEdges(p4));
  EXPECT_EQ(t.bipartition().members(Side::Plus), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(t.bipartition().members(Side::Minus), (std::vector<Vertex>{1, 3}));

  WeightedGraph c4 = cycleGraph(4);
  EXPECT_TM_ERROR(asBipartitionedTree(c4, allEdges(c4)), ErrorCode::NotATree);

  WeightedGraph star(4, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}});
  BipartitionedTree s = asBipartitionedTree(star, allEdges(star));
  EXPECT_EQ(s.bipartition().members(Side::Plus), std::vector<Vertex>{0});
  EXPECT_EQ(s.degree(0), 3);
  EXPECT_EQ(s.hostEdge(1), 1);
}

TEST(AsBipartitionedTree, RejectsNonSpanningAndBadIds) {
  WeightedGraph g(4, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}, {2, 3, 0}});
  EXPECT_TM_ERROR(asBipartitionedTree(g, EdgeSet({0, 1, 2})), ErrorCode::NotATree);
  EXPECT_TM_ERROR(asBipartitionedTree(g, EdgeSet({0, 1})), ErrorCode::NotATree);
  EXPECT_TM_ERROR(asBipartitionedTree(g, EdgeSet({0, 1, 9})), ErrorCode::NotATree);
  EXPECT_NO_THROW(asBipartitionedTree(WeightedGraph(1, {}), EdgeSet()));
}

TEST(HamiltonianCycle, Examples) {
  WeightedGraph c4 = cycleGraph(4);
  EXPECT_TRUE(isHamiltonianCycle(c4, {{0, 1, 2, 3}}));
  EXPECT_FALSE(isHamiltonianCycle(c4, {{0, 1, 2}}));
  EXPECT_FALSE(isHamiltonianCycle(c4, {{0, 2, 1, 3}}));
  EXPECT_FALSE(isHamiltonianCycle(c4, {{0, 1, 1, 3}}));
  // Gray code order walks the cube.
  EXPECT_TRUE(isHamiltonianCycle(hypercubeGraph(3), {{0, 1, 3, 2, 6, 7, 5, 4}}));
}

TEST(Generators, Shapes) {
  EXPECT_EQ(completeGraph(5).edgeCount(), 10);
  EXPECT_EQ(completeBipartiteGraph(2, 3).edgeCount(), 6);
  WeightedGraph q3 = hypercubeGraph(3);
  EXPECT_EQ(q3.vertexCount(), 8);
  EXPECT_EQ(q3.edgeCount(), 12);
  WeightedGraph prism = prismGraph(6);
  EXPECT_EQ(prism.edgeCount(), 18);
  WeightedGraph petersen = petersenGraph();
  EXPECT_EQ(petersen.edgeCount(), 15);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(petersen.degree(v), 3);
  EXPECT_TRUE(std::holds_alternative<OddCycle>(bipartitionOf(petersen)));
  EXPECT_EQ(randomGraph(12, 0.4, 9), randomGraph(12, 0.4, 9));
}

TEST(GraphIo, ParsesCommentsAndDefaultWeights) {
  WeightedGraph g = parseGraph("c triangle\np 3 3\ne 0 1 4\ne 1 2\nc mid\ne 2 0 -3\n");
  EXPECT_EQ(g.vertexCount(), 3);
  EXPECT_EQ(g.edge(1).weight, 0);
  EXPECT_EQ(g.edge(2).weight, -3);
}

TEST(GraphIo, ReportsLineNumbers) {
  try {
    parseGraph("p 3 2\ne 0 1\ne 0 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_TM_ERROR(parseGraph("e 0 1\n"), ErrorCode::ParseError);
  EXPECT_TM_ERROR(parseGraph("p 3 2\ne 0 1\n"), ErrorCode::ParseError);
  EXPECT_TM_ERROR(parseGraph("p 2 1\ne 0 0\n"), ErrorCode::ParseError);
  EXPECT_TM_ERROR(readGraphFile("/nonexistent/file.graph"), ErrorCode::ParseError);
}

TEST(GraphIoProperty, WriteThenReadIsIdentity) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    int n = uniformInt(rng, 1, 12);
    WeightedGraph g = testing::withRandomWeights(
        rng, testing::randomSubgraph(rng, completeGraph(n), uniformUnit(rng)), -50, 50);
    // Shuffle edge order so the writer cannot rely on sorted input.
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::shuffle(edges.begin(), edges.end(), rng);
    for (Edge& e : edges) {
      if (uniformInt(rng, 0, 1)) std::swap(e.u, e.v);
    }
    WeightedGraph shuffled(n, edges);
    EXPECT_EQ(parseGraph(formatGraph(shuffled)), shuffled);
  }
}

TEST(GraphProperty, ComponentsPartitionVertices) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    int n = uniformInt(rng, 1, 14);
    WeightedGraph g = testing::randomSubgraph(rng, completeGraph(n), 0.3 * uniformUnit(rng));
    std::set<Vertex> seen;
    Vertex previousSmallest = -1;
    for (const auto& comp : connectedComponents(g)) {
      EXPECT_GT(comp.front(), previousSmallest);
      previousSmallest = comp.front();
      for (Vertex v : comp) EXPECT_TRUE(seen.insert(v).second);
    }
    EXPECT_EQ(static_cast<int>(seen.size()), n);
    auto labels = componentLabels(g);
    for (const Edge& e : g.edges()) EXPECT_EQ(labels[e.u], labels[e.v]);
  }
}

TEST(GraphProperty, BipartitionIsUniqueUpToSwap) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    int half = uniformInt(rng, 1, 6);
    WeightedGraph g = testing::randomBalancedBipartite(rng, half, uniformInt(rng, 0, 20), 0);
    auto b = std::get<Bipartition>(bipartitionOf(g));
    EXPECT_EQ(b.sizePlus + b.sizeMinus, g.vertexCount());
    for (const Edge& e : g.edges()) EXPECT_NE(b.side[e.u], b.side[e.v]);
    // Recolouring any vertex of a connected graph with an edge breaks some edge.
    for (Vertex v = 0; v < g.vertexCount() && g.edgeCount() > 0; ++v) {
      bool broken = false;
      for (EdgeId id : g.incident(v)) broken = broken || b.side[g.edge(id).other(v)] != b.side[v];
      EXPECT_TRUE(broken);
    }
  }
}

TEST(GraphProperty, TreeDegreeSumsPerSide) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 200; ++t) {
    int n = uniformInt(rng, 2, 12);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = uniformInt(rng, 0, n - 1);
    WeightedGraph tree = testing::pruferTree(seq);
    BipartitionedTree bt = asBipartitionedTree(tree, allEdges(tree));
    int plus = 0, minus = 0;
    for (Vertex v = 0; v < n; ++v) (bt.sideOf(v) == Side::Plus ? plus : minus) += bt.degree(v);
    EXPECT_EQ(plus, n - 1);
    EXPECT_EQ(minus, n - 1);
    EXPECT_EQ(bt.sideOf(0), Side::Plus);
  }
}

}  // namespace
}  // namespace treematch
