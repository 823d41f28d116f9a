#pragma once

#include <optional>
#include <span>
#include <vector>

#include "treematch/graph.hpp"

namespace treematch {

inline constexpr Vertex kExposed = -1;

/// Pairwise-disjoint edges of a host graph plus the mate table.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int vertexCount) : mate_(vertexCount, kExposed) {}
  /// Throws Error(InvalidArgument) if two edges share a vertex.
  static Matching fromEdges(const WeightedGraph& g, const EdgeSet& edges);
  /// For edges whose ids refer to a graph not at hand; endpoints[i] belongs to ids[i].
  static Matching fromEndpoints(int vertexCount, std::vector<EdgeId> ids,
                                std::span<const Edge> endpoints);

  const EdgeSet& edges() const { return edges_; }
  Vertex mate(Vertex v) const { return mate_[v]; }
  const std::vector<Vertex>& mates() const { return mate_; }
  int size() const { return edges_.size(); }
  bool isExposed(Vertex v) const { return mate_[v] == kExposed; }
  bool isPerfect() const { return 2 * size() == static_cast<int>(mate_.size()); }
  /// Ascending vertex ids.
  std::vector<Vertex> exposedVertices() const;

 private:
  EdgeSet edges_;
  std::vector<Vertex> mate_;
};

/// Maximum-cardinality matching (weights ignored), computed per connected
/// component with Edmonds' blossom shrinking. Vertices and incident edges are
/// scanned in ascending id order, so the result is a function of the input.
Matching maximumMatching(const WeightedGraph& g);

int deficiency(const WeightedGraph& g);

struct DeficiencyProfile {
  int deficiency = 0;
  int componentCount = 0;
  int cPlus = 0;
  int cZero = 0;
  /// Indexed like connectedComponents(g).
  std::vector<int> perComponentDeficiency;

  bool evenDeficiency() const { return deficiency % 2 == 0; }
  /// Only meaningful when evenDeficiency().
  int halfDeficiency() const { return deficiency / 2; }
};

DeficiencyProfile deficiencyProfile(const WeightedGraph& g);
/// Profile from an already-computed maximum matching of g.
DeficiencyProfile deficiencyProfile(const WeightedGraph& g, const Matching& maximum);

/// The unique perfect matching of a tree, or nullopt when it has none.
std::optional<Matching> treePerfectMatching(const BipartitionedTree& t);

/// Leaf-elimination core shared with the brute-force oracles: positions in
/// `edges` forming the perfect matching of the forest on n vertices, or nullopt.
std::optional<std::vector<int>> forestPerfectMatching(int n, std::span<const Edge> edges);

}  // namespace treematch
