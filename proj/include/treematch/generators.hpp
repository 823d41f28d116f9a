#pragma once

#include <cstdint>

#include "treematch/cnf.hpp"
#include "treematch/graph.hpp"

namespace treematch {

// Deterministic instance generators. Random ones draw from std::mt19937_64
// directly (no library distributions), so output depends only on the seed.

WeightedGraph completeGraph(int n, Weight weight = 0);
/// Sides {0..a-1} and {a..a+b-1}.
WeightedGraph completeBipartiteGraph(int a, int b, Weight weight = 0);
WeightedGraph cycleGraph(int n, Weight weight = 0);
WeightedGraph pathGraph(int n, Weight weight = 0);
/// Hypercube Q_d on 2^d vertices; edges join labels differing in one bit.
WeightedGraph hypercubeGraph(int d);
/// Circular ladder C_k x K2 (outer cycle 0..k-1, inner k..2k-1).
WeightedGraph prismGraph(int k);
WeightedGraph petersenGraph();

/// G(n, p): each pair (u < v) kept with probability p.
WeightedGraph randomGraph(int n, double p, std::uint64_t seed);

/// n variables, m clauses of three literals over distinct-or-repeated
/// variables with random signs; clause sides are random, occurrence orders
/// are random permutations.
CnfLayout randomCnfLayout(int n, int m, std::uint64_t seed);

}  // namespace treematch
