#pragma once

#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "treematch/graph.hpp"
#include "treematch/matching.hpp"

namespace treematch {

enum class InfeasibleReason {
  Disconnected,
  NoPerfectMatching,
  OddOrder,
  Unbalanced,
  NoCommonBase,
  NoStronglyBalancedTree,
};

std::string_view toString(InfeasibleReason reason);

struct Infeasible {
  InfeasibleReason reason;
};

/// Spanning tree containing a perfect matching, when one exists. A graph has
/// one exactly when it is connected and perfectly matchable.
std::variant<EdgeSet, Infeasible> pmstFeasible(const WeightedGraph& g);

/// Extends a perfect matching of a connected graph to a spanning tree, adding
/// connectors in (weight, edge id) order.
EdgeSet buildTreeContainingMatching(const WeightedGraph& g, const Matching& m);

/// Minimum number of edge additions that make a graph with this profile
/// connected and perfectly matchable. Throws Error(OddDeficiency).
int optAug(const DeficiencyProfile& profile);

/// The graph that additions are drawn from: K_n, or a balanced K_{a,a}.
class HostKind {
 public:
  enum class Kind { Complete, CompleteBipartite };

  static HostKind complete(int vertexCount);
  /// Throws Error(HostMismatch) unless the sides partition 0..n-1 and are
  /// equal in size.
  static HostKind completeBipartite(std::vector<Vertex> sidePlus, std::vector<Vertex> sideMinus);

  Kind kind() const { return kind_; }
  bool bipartite() const { return kind_ == Kind::CompleteBipartite; }
  int vertexCount() const { return n_; }
  const std::vector<Vertex>& sidePlus() const { return plus_; }
  const std::vector<Vertex>& sideMinus() const { return minus_; }
  Side sideOf(Vertex v) const { return side_[v]; }
  bool allows(Vertex a, Vertex b) const {
    return a != b && (kind_ == Kind::Complete || side_[a] != side_[b]);
  }

 private:
  Kind kind_ = Kind::Complete;
  int n_ = 0;
  std::vector<Vertex> plus_;
  std::vector<Vertex> minus_;
  std::vector<Side> side_;
};

/// Host edges listed as (u, v), u < v, in lexicographic order.
WeightedGraph hostGraph(const HostKind& host, Weight weight = 0);

struct AugmentationResult {
  std::vector<std::pair<Vertex, Vertex>> addedEdges;
  /// Input graph with the additions appended (weight 1 each).
  WeightedGraph augmented;
  /// Perfect matching of `augmented`.
  Matching finalMatching;
  int optValue = 0;
};

/// Greedy augmentation: joins deficient components through exposed vertices
/// (deficiency >= 1 with >= 2 first, then pairs of deficiency-1 components),
/// closes the remaining deficiency inside the last deficient component, and
/// finally links the perfectly matchable components. Exposed vertices and
/// component pairs are chosen by smallest id; bipartite hosts only ever get
/// edges across the host sides.
///
/// Throws Error(OddVertexCount) or Error(HostMismatch).
AugmentationResult greedyAugment(const WeightedGraph& h, const HostKind& host);

struct TwoValuedSolution {
  EdgeSet tree;  // ids of hostGraph(host)
  Weight totalWeight = 0;
  int heavyEdges = 0;
};

/// Minimum-weight spanning tree with a perfect matching when every host edge
/// weighs `light` (if in lightEdges) or `heavy`. Throws Error(WeightOrder)
/// unless light < heavy, Error(OddVertexCount) for odd hosts.
TwoValuedSolution minPmstTwoValued(const HostKind& host, const EdgeSet& lightEdges, Weight light,
                                   Weight heavy);

/// Same problem read off a weighted graph: g must be complete or balanced
/// complete bipartite with at most two distinct weights. Tree ids refer to g.
TwoValuedSolution minPmstTwoValued(const WeightedGraph& g);

}  // namespace treematch
