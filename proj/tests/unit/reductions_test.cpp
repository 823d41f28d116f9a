#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "expect_error.hpp"
#include "instances.hpp"
#include "treematch/detail/union_find.hpp"
#include "treematch/generators.hpp"
#include "treematch/oracle.hpp"
#include "treematch/reductions.hpp"

namespace treematch {
namespace {

using testing::uniformInt;

int countWeight(const WeightedGraph& g, Weight w) {
  return static_cast<int>(
      std::count_if(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return e.weight == w; }));
}

bool cubic(const WeightedGraph& g) {
  for (Vertex v = 0; v < g.vertexCount(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

RotationSystem shuffledRotation(std::mt19937_64& rng, const WeightedGraph& g) {
  RotationSystem rot = ascendingRotation(g);
  for (auto& order : rot.order) std::shuffle(order.begin(), order.end(), rng);
  return rot;
}

std::vector<VertexCycle> shiftsAndReversals(const VertexCycle& x) {
  std::vector<VertexCycle> out;
  const int n = static_cast<int>(x.order.size());
  for (int reverse = 0; reverse < 2; ++reverse) {
    for (int shift = 0; shift < n; ++shift) {
      VertexCycle c;
      for (int k = 0; k < n; ++k) {
        int idx = reverse ? (shift - k + n) % n : (shift + k) % n;
        c.order.push_back(x.order[idx]);
      }
      out.push_back(c);
    }
  }
  return out;
}

// --- HC -> MinPMST -----------------------------------------------------------

TEST(HcReduction, CubeCounts) {
  WeightedGraph q3 = hypercubeGraph(3);
  HcReduction r = reduceHcToMinPmst(q3, ascendingRotation(q3));
  EXPECT_EQ(r.outputGraph.vertexCount(), 32);
  EXPECT_EQ(r.outputGraph.edgeCount(), 48);
  EXPECT_EQ(countWeight(r.outputGraph, 1), 24);
  EXPECT_EQ(countWeight(r.outputGraph, 0), 24);
  EXPECT_TRUE(cubic(r.outputGraph));
  EXPECT_TRUE(std::holds_alternative<Bipartition>(bipartitionOf(r.outputGraph)));
}

TEST(HcReduction, K33Counts) {
  WeightedGraph k33 = completeBipartiteGraph(3, 3);
  HcReduction r = reduceHcToMinPmst(k33, ascendingRotation(k33));
  EXPECT_EQ(r.outputGraph.vertexCount(), 24);
  EXPECT_TRUE(cubic(r.outputGraph));
  EXPECT_TRUE(std::holds_alternative<Bipartition>(bipartitionOf(r.outputGraph)));
}

TEST(HcReduction, TagsAndOrigins) {
  WeightedGraph k33 = completeBipartiteGraph(3, 3);
  HcReduction r = reduceHcToMinPmst(k33, ascendingRotation(k33));
  EXPECT_EQ(r.tagOf[8].name(), "center(2)");
  EXPECT_EQ(r.tagOf[11].name(), "port(2,3)");
  std::vector<int> copies(k33.edgeCount(), 0);
  for (EdgeId id = 0; id < r.outputGraph.edgeCount(); ++id) {
    const Edge& e = r.outputGraph.edge(id);
    if (r.edgeOrigin[id] < 0) {
      EXPECT_EQ(e.weight, 0);
      EXPECT_EQ(r.tagOf[e.u].source, r.tagOf[e.v].source);
      continue;
    }
    EXPECT_EQ(e.weight, 1);
    const Edge& source = k33.edge(r.edgeOrigin[id]);
    EXPECT_EQ(std::minmax(r.tagOf[e.u].source, r.tagOf[e.v].source), std::minmax(source.u, source.v));
    EXPECT_EQ(r.tagOf[e.u].kind, HcTag::Kind::Port);
    ++copies[r.edgeOrigin[id]];
  }
  for (int c : copies) EXPECT_EQ(c, 2);
}

TEST(HcReduction, Errors) {
  WeightedGraph c4 = cycleGraph(4);
  EXPECT_TM_ERROR(reduceHcToMinPmst(c4, RotationSystem{}), ErrorCode::NotCubic);
  WeightedGraph prism3 = prismGraph(3);
  EXPECT_TM_ERROR(reduceHcToMinPmst(prism3, ascendingRotation(prism3)), ErrorCode::NotBipartite);
  WeightedGraph k33 = completeBipartiteGraph(3, 3);
  std::vector<Edge> twoCopies(k33.edges().begin(), k33.edges().end());
  for (const Edge& e : k33.edges()) twoCopies.push_back({e.u + 6, e.v + 6, 0});
  WeightedGraph split(12, twoCopies);
  EXPECT_TM_ERROR(reduceHcToMinPmst(split, ascendingRotation(split)), ErrorCode::Disconnected);
  WeightedGraph q3 = hypercubeGraph(3);
  RotationSystem bad = ascendingRotation(q3);
  bad.order[2][1] = bad.order[2][0];
  EXPECT_TM_ERROR(reduceHcToMinPmst(q3, bad), ErrorCode::BadRotation);
  RotationSystem shortRot = ascendingRotation(q3);
  shortRot.order.pop_back();
  EXPECT_TM_ERROR(reduceHcToMinPmst(q3, shortRot), ErrorCode::BadRotation);
}

TEST(HcReduction, CompletionCounts) {
  WeightedGraph q3 = hypercubeGraph(3);
  HcReduction full = completeWithWeightTwo(reduceHcToMinPmst(q3, ascendingRotation(q3)));
  EXPECT_EQ(full.outputGraph.edgeCount(), 496);
  EXPECT_EQ(countWeight(full.outputGraph, 2), 448);
  EXPECT_EQ(static_cast<int>(full.edgeOrigin.size()), 496);

  WeightedGraph k33 = completeBipartiteGraph(3, 3);
  HcReduction k = completeWithWeightTwo(reduceHcToMinPmst(k33, ascendingRotation(k33)));
  EXPECT_EQ(k.outputGraph.edgeCount(), 276);
  EXPECT_EQ(completeWithWeightTwo(k).outputGraph, k.outputGraph);
}

TEST(MapHcToTree, CubeTree) {
  WeightedGraph q3 = hypercubeGraph(3);
  HcReduction r = reduceHcToMinPmst(q3, ascendingRotation(q3));
  EdgeSet tree = mapHcToTree(r, {{0, 1, 3, 2, 6, 7, 5, 4}});
  EXPECT_EQ(tree.size(), 31);
  EXPECT_EQ(r.outputGraph.weightOf(tree), 8);
  EXPECT_TRUE(treePerfectMatching(asBipartitionedTree(r.outputGraph, tree)));
  EXPECT_TM_ERROR(mapHcToTree(r, {{0, 1, 3, 2, 6, 7, 4, 5}}), ErrorCode::NotHamiltonian);
}

TEST(MapHcToTree, AnyRotationStartAndDirection) {
  std::mt19937_64 rng(91);
  for (const WeightedGraph& g : {hypercubeGraph(3), completeBipartiteGraph(3, 3), prismGraph(4),
                                 prismGraph(6), prismGraph(8)}) {
    auto cycle = bruteForceHamiltonianCycle(g);
    ASSERT_TRUE(cycle);
    for (int t = 0; t < 5; ++t) {
      HcReduction r = reduceHcToMinPmst(g, shuffledRotation(rng, g));
      HcReduction full = completeWithWeightTwo(r);
      for (const VertexCycle& x : shiftsAndReversals(*cycle)) {
        EdgeSet tree = mapHcToTree(r, x);
        BipartitionedTree bt = asBipartitionedTree(r.outputGraph, tree);
        EXPECT_TRUE(treePerfectMatching(bt));
        EXPECT_EQ(r.outputGraph.weightOf(tree), g.vertexCount());
        EXPECT_EQ(full.outputGraph.weightOf(tree), g.vertexCount());
      }
    }
  }
}

TEST(Rotation, ReadWriteRoundTrip) {
  std::mt19937_64 rng(92);
  WeightedGraph q3 = hypercubeGraph(3);
  RotationSystem rot = shuffledRotation(rng, q3);
  std::ostringstream out;
  writeRotation(out, rot);
  std::istringstream in("c rotation\n" + out.str());
  RotationSystem back = readRotation(in, 8);
  EXPECT_EQ(back.order, rot.order);
  EXPECT_NO_THROW(validateRotation(q3, back));
}

TEST(Rotation, MalformedInput) {
  auto parse = [](const std::string& text, int n) {
    std::istringstream in(text);
    return readRotation(in, n);
  };
  EXPECT_TM_ERROR(parse("r 0 1 2\n", 1), ErrorCode::BadRotation);
  EXPECT_TM_ERROR(parse("x 0 1 2 3\n", 1), ErrorCode::BadRotation);
  EXPECT_TM_ERROR(parse("r 0 1 2 3\nr 0 1 2 3\n", 1), ErrorCode::BadRotation);
  EXPECT_TM_ERROR(parse("r 5 1 2 3\n", 1), ErrorCode::BadRotation);
  EXPECT_TM_ERROR(parse("r 0 1 2 3\n", 2), ErrorCode::BadRotation);
  EXPECT_TM_ERROR(parse("r 0 1 2 3 4\n", 1), ErrorCode::BadRotation);
  EXPECT_TM_ERROR(readRotationFile("/nonexistent.rot", 1), ErrorCode::BadRotation);
  EXPECT_TM_ERROR(ascendingRotation(cycleGraph(4)), ErrorCode::NotCubic);
}

// --- SAT -> SBST -------------------------------------------------------------

CnfLayout layoutOf(int n, std::vector<std::vector<int>> clauses) {
  return defaultLayout(CnfFormula{n, std::move(clauses)});
}

bool subcubic(const WeightedGraph& g) {
  for (Vertex v = 0; v < g.vertexCount(); ++v) {
    if (g.degree(v) > 3) return false;
  }
  return true;
}

TEST(SatReduction, SingleVariableNoClauses) {
  SatReduction r = reduceSatToSbst(layoutOf(1, {}));
  EXPECT_EQ(r.outputGraph.vertexCount(), 18);
  EXPECT_TRUE(subcubic(r.outputGraph));
  EXPECT_EQ(r.tagOf[r.start.s1], "s1");
  for (int bit : {0, 1}) {
    EdgeSet tree = mapAssignmentToSbTree(r, {bit});
    EXPECT_TRUE(isStronglyBalanced(asBipartitionedTree(r.outputGraph, tree)));
    EXPECT_EQ(extractAssignmentFromTree(r, tree), Assignment{bit});
  }
}

TEST(SatReduction, OneClauseCountsAndAttachment) {
  SatReduction r = reduceSatToSbst(layoutOf(3, {{1, 2, 3}}));
  EXPECT_EQ(r.outputGraph.vertexCount(), 52);
  EXPECT_TRUE(subcubic(r.outputGraph));
  const ClauseGadget& c = r.clauses[0];
  EXPECT_EQ(c.attachment[1], r.variables[1].inPositive[0]);
  EXPECT_EQ(r.tagOf[c.attachment[1]], "u_in[2,1]");
  EXPECT_EQ(r.tagOf[c.tailJoint], "c'[1]");

  EdgeSet tree = mapAssignmentToSbTree(r, {1, 0, 0});
  EXPECT_TRUE(tree.contains(c.attachmentEdge[0]));
  EXPECT_FALSE(tree.contains(c.attachmentEdge[1]));
  EXPECT_FALSE(tree.contains(c.attachmentEdge[2]));
  EXPECT_EQ(extractAssignmentFromTree(r, tree), (Assignment{1, 0, 0}));
  EXPECT_TM_ERROR(mapAssignmentToSbTree(r, {0, 0, 0}), ErrorCode::NotSatisfying);
}

TEST(SatReduction, ClauseCycleIsASixCycle) {
  SatReduction r = reduceSatToSbst(layoutOf(2, {{1, -2, 2}}));
  const ClauseGadget& c = r.clauses[0];
  const WeightedGraph& g = r.outputGraph;
  for (int l = 0; l < 3; ++l) {
    EXPECT_TRUE(g.hasEdge(c.literal[l], c.between[l]));
    EXPECT_TRUE(g.hasEdge(c.between[l], c.literal[(l + 1) % 3]));
  }
  EXPECT_EQ(c.attachment[1], r.variables[1].inNegative[0]);
  EXPECT_EQ(c.attachment[2], r.variables[1].inPositive[1]);
}

TEST(SatReduction, OutsideClausesUseOutsidePools) {
  CnfLayout l = layoutWithSides(CnfFormula{2, {{1, -2, 1}}}, {ClauseSide::Outside});
  SatReduction r = reduceSatToSbst(l);
  EXPECT_EQ(r.clauses[0].attachment[0], r.variables[0].outPositive[0]);
  EXPECT_EQ(r.clauses[0].attachment[1], r.variables[1].outNegative[0]);
  EXPECT_EQ(r.clauses[0].attachment[2], r.variables[0].outPositive[1]);
}

TEST(SatReduction, DuplicateLiteralsGetDistinctAttachments) {
  SatReduction r = reduceSatToSbst(layoutOf(2, {{1, 1, 2}}));
  EXPECT_EQ(r.clauses[0].attachment[0], r.variables[0].inPositive[0]);
  EXPECT_EQ(r.clauses[0].attachment[1], r.variables[0].inPositive[1]);
}

TEST(SatReduction, ExtractReadsFalsePattern) {
  SatReduction r = reduceSatToSbst(layoutOf(2, {{-1, 2, 2}}));
  EdgeSet tree = mapAssignmentToSbTree(r, {0, 0});
  const VariableGadget& v = r.variables[0];
  EXPECT_FALSE(tree.contains(*r.outputGraph.findEdge(v.u, v.out0)));
  EXPECT_TRUE(tree.contains(*r.outputGraph.findEdge(v.u, v.in0)));
  EXPECT_EQ(extractAssignmentFromTree(r, tree), (Assignment{0, 0}));
}

TEST(SatReduction, ExtractErrors) {
  SatReduction r = reduceSatToSbst(layoutOf(1, {}));
  EXPECT_TM_ERROR(extractAssignmentFromTree(r, EdgeSet()), ErrorCode::MalformedTree);
  // Kruskal tree in id order keeps the whole start tree and cycle prefix; it
  // is a spanning tree but not strongly balanced.
  const WeightedGraph& g = r.outputGraph;
  detail::UnionFind uf(g.vertexCount());
  std::vector<EdgeId> ids;
  for (EdgeId id = 0; id < g.edgeCount(); ++id) {
    if (uf.unite(g.edge(id).u, g.edge(id).v)) ids.push_back(id);
  }
  EdgeSet kruskal(ids);
  ASSERT_FALSE(isStronglyBalanced(asBipartitionedTree(g, kruskal)));
  EXPECT_TM_ERROR(extractAssignmentFromTree(r, kruskal), ErrorCode::NotStronglyBalanced);
  EXPECT_TM_ERROR(reduceSatToSbst(layoutOf(1, {{1, 2, 1}})), ErrorCode::BadLayout);
}

// Strongly balanced trees of the reduction: s1 is the unique constrained
// leaf, spine vertices sit on the constrained side, and clause gadgets never
// connect variable gadgets.
void expectForcedShape(const SatReduction& r, const EdgeSet& tree) {
  const WeightedGraph& g = r.outputGraph;
  BipartitionedTree bt = asBipartitionedTree(g, tree);
  auto cert = isStronglyBalanced(bt);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->uniqueLeaf, r.start.s1);
  for (const VariableGadget& v : r.variables) {
    EXPECT_EQ(bt.sideOf(v.u), cert->plusSide);
    EXPECT_EQ(bt.sideOf(v.end), cert->plusSide);
  }
  std::vector<char> clauseVertex(g.vertexCount(), 0);
  int clauseCount = 0;
  for (const ClauseGadget& c : r.clauses) {
    for (Vertex v : c.literal) clauseVertex[v] = 1;
    for (Vertex v : c.between) clauseVertex[v] = 1;
    clauseVertex[c.tail] = clauseVertex[c.tailJoint] = 1;
    clauseCount += 8;
  }
  detail::UnionFind uf(g.vertexCount());
  for (EdgeId id : tree) {
    const Edge& e = g.edge(id);
    if (!clauseVertex[e.u] && !clauseVertex[e.v]) uf.unite(e.u, e.v);
  }
  EXPECT_EQ(uf.setCount(), clauseCount + 1);
}

TEST(SatReductionProperty, SearchTreesHaveTheForcedShape) {
  for (int seed = 0; seed < 40; ++seed) {
    CnfLayout l = randomCnfLayout(1 + seed % 3, seed % 4, 300 + seed);
    SatReduction r = reduceSatToSbst(l);
    auto truth = bruteForceSat(l.formula);
    auto found = bruteForceMinSbst(r.outputGraph);
    ASSERT_EQ(truth.has_value(), std::holds_alternative<SbstSolution>(found));
    if (!truth) continue;
    const EdgeSet& tree = std::get<SbstSolution>(found).tree;
    expectForcedShape(r, tree);
    EXPECT_TRUE(satisfies(l.formula, extractAssignmentFromTree(r, tree)));
    expectForcedShape(r, mapAssignmentToSbTree(r, *truth));
  }
}

// --- leaf replacement ----------------------------------------------------------

TEST(ReplaceLeaves, SingleEdge) {
  WeightedGraph g = replaceLeaves(pathGraph(2));
  EXPECT_EQ(g.vertexCount(), 10);
  for (Vertex v = 0; v < 10; ++v) {
    EXPECT_GE(g.degree(v), 2);
    EXPECT_LE(g.degree(v), 3);
  }
}

TEST(ReplaceLeaves, LeaflessUnchangedAndErrors) {
  WeightedGraph q3 = hypercubeGraph(3);
  EXPECT_EQ(replaceLeaves(q3), q3);
  WeightedGraph star(5, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {0, 4, 0}});
  EXPECT_TM_ERROR(replaceLeaves(star), ErrorCode::NotSubcubic);
}

TEST(ReplaceLeavesProperty, ShapeAndExistence) {
  std::mt19937_64 rng(93);
  for (int t = 0; t < 60; ++t) {
    WeightedGraph g = testing::randomConnectedSubcubic(rng, uniformInt(rng, 2, 10), 0.2);
    int leaves = 0;
    for (Vertex v = 0; v < g.vertexCount(); ++v) leaves += g.degree(v) == 1;
    WeightedGraph h = replaceLeaves(g);
    EXPECT_EQ(h.vertexCount(), g.vertexCount() + 4 * leaves);
    for (Vertex v = 0; v < h.vertexCount(); ++v) {
      EXPECT_GE(h.degree(v), 2);
      EXPECT_LE(h.degree(v), 3);
    }
    EXPECT_EQ(std::holds_alternative<SbstSolution>(bruteForceMinSbst(g)),
              std::holds_alternative<SbstSolution>(bruteForceMinSbst(h)));
  }
}

}  // namespace
}  // namespace treematch
