#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace treematch {

using Vertex = int;
using EdgeId = int;
using Weight = std::int64_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight weight = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of edge indices of some host graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<EdgeId> ids);

  bool contains(EdgeId id) const;
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<EdgeId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<EdgeId> ids_;
};

/// Simple undirected graph with integer edge weights. Immutable once built.
///
/// Edge ids are positions in the constructor's edge list. Incident-edge
/// lists are kept in ascending edge-id order, which is the scan order every
/// deterministic algorithm in the library relies on.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  /// Throws Error(InvalidGraph) on self-loops, parallel edges, bad ids or n < 1.
  WeightedGraph(int vertexCount, std::vector<Edge> edges);

  int vertexCount() const { return n_; }
  int edgeCount() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }
  int degree(Vertex v) const { return offset_[v + 1] - offset_[v]; }

  std::optional<EdgeId> findEdge(Vertex a, Vertex b) const;
  bool hasEdge(Vertex a, Vertex b) const { return findEdge(a, b).has_value(); }

  Weight weightOf(const EdgeSet& set) const;
  /// Subgraph on the same vertex set; local edge i is set.ids()[i].
  WeightedGraph subgraph(const EdgeSet& set) const;
  /// New graph with extra edges appended after the existing ones.
  WeightedGraph withAddedEdges(std::span<const Edge> extra) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offset_{0};
  std::vector<EdgeId> adj_;
  std::vector<std::pair<std::uint64_t, EdgeId>> index_;
};

enum class Side : std::uint8_t { Plus, Minus };

inline Side opposite(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }

struct Bipartition {
  std::vector<Side> side;
  int sizePlus = 0;
  int sizeMinus = 0;

  bool balanced() const { return sizePlus == sizeMinus; }
  std::vector<Vertex> members(Side s) const;
};

struct VertexCycle {
  std::vector<Vertex> order;
};

struct OddCycle {
  VertexCycle witness;
};

/// Spanning tree of a host graph together with its canonical two-colouring
/// (vertex 0 on the plus side) and tree degrees.
class BipartitionedTree {
 public:
  int vertexCount() const { return tree_.vertexCount(); }
  const EdgeSet& treeEdges() const { return hostEdges_; }
  /// The tree as a standalone graph; local edge i is treeEdges().ids()[i].
  const WeightedGraph& graph() const { return tree_; }
  EdgeId hostEdge(EdgeId local) const { return hostEdges_.ids()[local]; }
  const Bipartition& bipartition() const { return bipartition_; }
  Side sideOf(Vertex v) const { return bipartition_.side[v]; }
  int degree(Vertex v) const { return tree_.degree(v); }
  const std::vector<int>& degrees() const { return degrees_; }

 private:
  friend BipartitionedTree asBipartitionedTree(const WeightedGraph&, const EdgeSet&);
  WeightedGraph tree_;
  EdgeSet hostEdges_;
  Bipartition bipartition_;
  std::vector<int> degrees_;
};

/// Components ordered by smallest vertex; each component sorted ascending.
std::vector<std::vector<Vertex>> connectedComponents(const WeightedGraph& g);
/// Component index per vertex, numbered in the order of connectedComponents.
std::vector<int> componentLabels(const WeightedGraph& g);
bool isConnected(const WeightedGraph& g);

/// Proper 2-colouring with the smallest vertex of each component on the plus
/// side, or an odd cycle witnessing that none exists.
std::variant<Bipartition, OddCycle> bipartitionOf(const WeightedGraph& g);

/// Throws Error(NotATree) unless `t` is a spanning tree of g.
BipartitionedTree asBipartitionedTree(const WeightedGraph& g, const EdgeSet& t);

bool isHamiltonianCycle(const WeightedGraph& g, const VertexCycle& x);

}  // namespace treematch
