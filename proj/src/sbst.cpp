#include "treematch/sbst.hpp"

#include <stdexcept>
#include <vector>

#include "treematch/error.hpp"
#include "treematch/matroid.hpp"

namespace treematch {

namespace {

// Parent edge (local id) of every vertex when the tree hangs from `root`,
// plus the BFS order.
struct RootedTree {
  std::vector<EdgeId> parentEdge;
  std::vector<Vertex> order;
};

RootedTree hang(const WeightedGraph& tree, Vertex root) {
  RootedTree r;
  r.parentEdge.assign(tree.vertexCount(), -1);
  std::vector<char> seen(tree.vertexCount(), 0);
  r.order.push_back(root);
  seen[root] = 1;
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    Vertex v = r.order[head];
    for (EdgeId id : tree.incident(v)) {
      Vertex w = tree.edge(id).other(v);
      if (seen[w]) continue;
      seen[w] = 1;
      r.parentEdge[w] = id;
      r.order.push_back(w);
    }
  }
  return r;
}

std::optional<SbstCertificate> checkSide(const BipartitionedTree& t, Side s) {
  Vertex leaf = -1;
  for (Vertex v = 0; v < t.vertexCount(); ++v) {
    if (t.sideOf(v) != s) continue;
    if (t.degree(v) == 1) {
      if (leaf != -1) return std::nullopt;
      leaf = v;
    } else if (t.degree(v) != 2) {
      return std::nullopt;
    }
  }
  if (leaf == -1) return std::nullopt;

  // Each side-s vertex takes the edge to its single child.
  const WeightedGraph& tree = t.graph();
  RootedTree rooted = hang(tree, leaf);
  std::vector<EdgeId> ids;
  std::vector<Edge> ends;
  for (Vertex v = 0; v < t.vertexCount(); ++v) {
    if (t.sideOf(v) == s) continue;
    EdgeId local = rooted.parentEdge[v];
    ids.push_back(t.hostEdge(local));
    ends.push_back(tree.edge(local));
  }
  return SbstCertificate{s, leaf, Matching::fromEndpoints(t.vertexCount(), std::move(ids), ends)};
}

}  // namespace

std::optional<SbstCertificate> isStronglyBalanced(const BipartitionedTree& t) {
  if (auto c = checkSide(t, Side::Plus)) return c;
  return checkSide(t, Side::Minus);
}

std::optional<SbstCertificate> alternatingCharacterization(const BipartitionedTree& t) {
  std::optional<Matching> m = treePerfectMatching(t);
  if (!m) return std::nullopt;
  const WeightedGraph& tree = t.graph();
  std::vector<char> matched(tree.edgeCount(), 0);
  for (EdgeId i = 0; i < tree.edgeCount(); ++i) matched[i] = m->edges().contains(t.hostEdge(i));

  for (Vertex r = 0; r < t.vertexCount(); ++r) {
    if (t.degree(r) != 1) continue;
    RootedTree rooted = hang(tree, r);
    bool alternates = true;
    for (Vertex v : rooted.order) {
      if (v == r) continue;
      const char up = matched[rooted.parentEdge[v]];
      for (EdgeId id : tree.incident(v)) {
        if (id != rooted.parentEdge[v] && matched[id] == up) {
          alternates = false;
          break;
        }
      }
      if (!alternates) break;
    }
    if (alternates) return SbstCertificate{t.sideOf(r), r, *m};
  }
  return std::nullopt;
}

std::variant<SbstSolution, Infeasible> minSbstBipartite(const WeightedGraph& g) {
  auto colouring = bipartitionOf(g);
  if (std::holds_alternative<OddCycle>(colouring)) {
    throw Error(ErrorCode::NotBipartite, "graph has an odd cycle");
  }
  const Bipartition& sides = std::get<Bipartition>(colouring);
  if (!isConnected(g)) return Infeasible{InfeasibleReason::Disconnected};
  if (!sides.balanced()) return Infeasible{InfeasibleReason::Unbalanced};

  const int n = g.vertexCount();
  std::vector<Weight> weights;
  for (const Edge& e : g.edges()) weights.push_back(e.weight);
  GraphicMatroid forests(g);

  std::optional<CommonBase> best;
  for (Side s : {Side::Plus, Side::Minus}) {
    // Parts are the stars of the side-s vertices, two edges each.
    std::vector<int> partOf;
    for (const Edge& e : g.edges()) partOf.push_back(sides.side[e.u] == s ? e.u : e.v);
    PartitionMatroid stars(std::move(partOf), std::vector<int>(n, 2));
    auto base = minWeightCommonBase(forests, stars, weights, n - 1);
    if (base && (!best || base->weight < best->weight)) best = std::move(base);
  }
  if (!best) return Infeasible{InfeasibleReason::NoCommonBase};

  SbstSolution out;
  out.tree = EdgeSet(best->elements);
  out.weight = best->weight;
  auto cert = isStronglyBalanced(asBipartitionedTree(g, out.tree));
  if (!cert) throw std::logic_error("common base is not a strongly balanced tree");
  out.certificate = std::move(*cert);
  return out;
}

}  // namespace treematch
