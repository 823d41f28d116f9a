#pragma once

#include <optional>
#include <variant>

#include "treematch/graph.hpp"
#include "treematch/matching.hpp"
#include "treematch/pmst.hpp"

namespace treematch {

/// Witness that a tree is strongly balanced: on `plusSide` the vertex
/// `uniqueLeaf` is the only leaf and every other vertex has degree 2.
/// `alternatingMatching` is the tree's perfect matching (host edge ids).
struct SbstCertificate {
  Side plusSide = Side::Plus;
  Vertex uniqueLeaf = 0;
  Matching alternatingMatching;
};

/// Degree-pattern check on both colour classes, plus side first.
std::optional<SbstCertificate> isStronglyBalanced(const BipartitionedTree& t);

/// Checks for a perfect matching and a leaf r such that every path leaving r
/// alternates matched and unmatched edges. Leaves are tried in ascending order.
std::optional<SbstCertificate> alternatingCharacterization(const BipartitionedTree& t);

struct SbstSolution {
  EdgeSet tree;
  Weight weight = 0;
  SbstCertificate certificate;
};

/// Minimum-weight strongly balanced spanning tree of a bipartite graph. Both
/// colour classes are tried as the degree-bounded side; the lighter result
/// wins, plus side on ties.
///
/// Throws Error(NotBipartite). Returns Infeasible with reason Disconnected,
/// Unbalanced or NoCommonBase.
std::variant<SbstSolution, Infeasible> minSbstBipartite(const WeightedGraph& g);

}  // namespace treematch
