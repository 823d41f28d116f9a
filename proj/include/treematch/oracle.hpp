#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>

#include "treematch/cnf.hpp"
#include "treematch/graph.hpp"
#include "treematch/pmst.hpp"
#include "treematch/sbst.hpp"

namespace treematch {

// Exhaustive reference solvers. They share nothing with the fast solvers
// beyond the graph type, the tree perfect-matching core and the strongly
// balanced degree check.

inline constexpr std::int64_t kDefaultTreeCap = 10'000'000;
inline constexpr std::int64_t kDefaultSearchNodeCap = 200'000'000;

struct EnumerationResult {
  std::int64_t visited = 0;
  /// More spanning trees exist than the cap allowed to visit.
  bool truncated = false;
};

/// Receives the edge ids of one spanning tree (in selection order, not sorted).
using TreeVisitor = std::function<void(std::span<const EdgeId>)>;

/// Visits every spanning tree once by contraction/deletion on edge ids,
/// forcing bridges at each step. Throws Error(Disconnected).
EnumerationResult enumerateSpanningTrees(const WeightedGraph& g, const TreeVisitor& visit,
                                         std::int64_t cap = kDefaultTreeCap);

struct PmstOptimum {
  EdgeSet tree;
  Weight weight = 0;
};

/// Lightest spanning tree with a perfect matching, first found on ties.
/// Throws Error(Truncated) when the tree count exceeds the cap.
std::variant<PmstOptimum, Infeasible> bruteForceMinPmst(const WeightedGraph& g,
                                                        std::int64_t cap = kDefaultTreeCap);

/// Lightest strongly balanced spanning tree by a tree-growing search from
/// vertex 0 with both colour guesses for it. Degree-2 saturation, the
/// single-leaf rule, side-size bounds, connectivity and a weight bound cut
/// the search. Throws Error(Truncated) past `nodeCap` search nodes.
std::variant<SbstSolution, Infeasible> bruteForceMinSbst(
    const WeightedGraph& g, std::int64_t nodeCap = kDefaultSearchNodeCap);

/// Minimum number of host edges whose addition makes h connected and
/// perfectly matchable, by iterative deepening. Throws Error(TooLarge) above
/// 8 vertices, Error(OddVertexCount), Error(HostMismatch).
int bruteForceOptAug(const WeightedGraph& h, const HostKind& host);

/// Lexicographically smallest satisfying assignment (variable 1 most
/// significant), or nullopt. Throws Error(TooLarge) above 20 variables.
std::optional<Assignment> bruteForceSat(const CnfFormula& f);

/// Maximum matching size by subset dynamic programming. Throws
/// Error(TooLarge) above 22 vertices.
int bruteForceMaximumMatching(const WeightedGraph& g);

/// Some Hamiltonian cycle starting at vertex 0, by depth-first search.
std::optional<VertexCycle> bruteForceHamiltonianCycle(const WeightedGraph& g);

}  // namespace treematch
