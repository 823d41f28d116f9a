#include "treematch/generators.hpp"

#include <random>
#include <string>

#include "treematch/error.hpp"

namespace treematch {

namespace {

void requirePositive(int n, const char* what) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

WeightedGraph completeGraph(int n, Weight weight) {
  requirePositive(n, "vertex count");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, weight});
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph completeBipartiteGraph(int a, int b, Weight weight) {
  requirePositive(a, "side size");
  requirePositive(b, "side size");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v, weight});
  }
  return WeightedGraph(a + b, std::move(edges));
}

WeightedGraph cycleGraph(int n, Weight weight) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, weight});
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph pathGraph(int n, Weight weight) {
  requirePositive(n, "vertex count");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, weight});
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph hypercubeGraph(int d) {
  if (d < 1 || d > 20) throw Error(ErrorCode::InvalidArgument, "hypercube dimension outside 1..20");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (int bit = 0; bit < d; ++bit) {
      Vertex v = u ^ (1 << bit);
      if (u < v) edges.push_back({u, v, 0});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph prismGraph(int k) {
  if (k < 3) throw Error(ErrorCode::InvalidArgument, "a prism needs k >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < k; ++v) {
    edges.push_back({v, (v + 1) % k, 0});
    edges.push_back({k + v, k + (v + 1) % k, 0});
    edges.push_back({v, k + v, 0});
  }
  return WeightedGraph(2 * k, std::move(edges));
}

WeightedGraph petersenGraph() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 5; ++v) {
    edges.push_back({v, (v + 1) % 5, 0});
    edges.push_back({v, v + 5, 0});
    edges.push_back({5 + v, 5 + (v + 2) % 5, 0});
  }
  return WeightedGraph(10, std::move(edges));
}

WeightedGraph randomGraph(int n, double p, std::uint64_t seed) {
  requirePositive(n, "vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "probability outside [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit(rng) < p) edges.push_back({u, v, 0});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

CnfLayout randomCnfLayout(int n, int m, std::uint64_t seed) {
  requirePositive(n, "variable count");
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "clause count must be nonnegative");
  std::mt19937_64 rng(seed);
  CnfFormula f;
  f.variableCount = n;
  std::vector<ClauseSide> sides;
  for (int j = 0; j < m; ++j) {
    std::vector<int> clause;
    for (int s = 0; s < 3; ++s) {
      int var = static_cast<int>(below(rng, n)) + 1;
      clause.push_back(rng() & 1u ? -var : var);
    }
    f.clauses.push_back(std::move(clause));
    sides.push_back(rng() & 1u ? ClauseSide::Outside : ClauseSide::Inside);
  }
  CnfLayout layout = layoutWithSides(std::move(f), std::move(sides));
  for (auto* orders : {&layout.insideOrder, &layout.outsideOrder}) {
    for (auto& order : *orders) {
      for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[below(rng, k)]);
    }
  }
  return layout;
}

}  // namespace treematch
