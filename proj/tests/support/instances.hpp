#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "treematch/cnf.hpp"
#include "treematch/graph.hpp"

namespace treematch::testing {

/// Pairs (u < v) of K_n in lexicographic order.
std::vector<std::pair<Vertex, Vertex>> completePairs(int n);

/// Subgraph of K_n keeping pair k when bit k of mask is set.
WeightedGraph graphFromMask(int n, std::uint64_t mask);

/// Subgraph of the given graph keeping edge k when bit k of mask is set.
WeightedGraph subgraphFromMask(const WeightedGraph& host, std::uint64_t mask);

/// Each pair (u < v) kept with probability p.
WeightedGraph randomSubgraph(std::mt19937_64& rng, const WeightedGraph& host, double p);

/// Tree decoded from a Prüfer sequence over n = seq.size() + 2 vertices.
WeightedGraph pruferTree(const std::vector<int>& seq);

/// Connected bipartite graph with sides {0..half-1} and {half..2*half-1}:
/// a random spanning tree across the sides plus random extra edges up to
/// edgeCount (clamped to [n - 1, half^2]), weights uniform in [0, maxWeight].
WeightedGraph randomBalancedBipartite(std::mt19937_64& rng, int half, int edgeCount, int maxWeight);

/// Connected graph with maximum degree 3 on n vertices.
WeightedGraph randomConnectedSubcubic(std::mt19937_64& rng, int n, double extraEdgeProbability);

/// Same graph with weights drawn uniformly from [lo, hi].
WeightedGraph withRandomWeights(std::mt19937_64& rng, const WeightedGraph& g, int lo, int hi);

int uniformInt(std::mt19937_64& rng, int lo, int hi);
double uniformUnit(std::mt19937_64& rng);

/// Number of spanning trees by the Matrix-Tree theorem (exact fraction-free
/// elimination).
std::int64_t matrixTreeCount(const WeightedGraph& g);

/// Exposed-vertex count of a maximum matching, by exhaustive search.
int bruteDeficiency(const WeightedGraph& g);

/// Connected with a perfect matching, checked without the library matcher.
bool connectedAndPerfectlyMatchable(const WeightedGraph& g);

}  // namespace treematch::testing
