#include "treematch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <vector>

#include "treematch/detail/union_find.hpp"
#include "treematch/error.hpp"
#include "treematch/matching.hpp"

namespace treematch {

namespace {

// --- spanning tree enumeration ---------------------------------------------

class TreeEnumerator {
 public:
  TreeEnumerator(const WeightedGraph& g, const TreeVisitor& visit, std::int64_t cap)
      : g_(g), visit_(visit), cap_(cap), n_(g.vertexCount()) {}

  EnumerationResult run() {
    std::vector<EdgeId> chosen;
    std::vector<EdgeId> available(g_.edgeCount());
    for (EdgeId id = 0; id < g_.edgeCount(); ++id) available[id] = id;
    recurse(chosen, std::move(available));
    return result_;
  }

 private:
  void recurse(std::vector<EdgeId>& chosen, std::vector<EdgeId> available) {
    if (stopped_) return;
    detail::UnionFind uf(n_);
    for (EdgeId id : chosen) uf.unite(g_.edge(id).u, g_.edge(id).v);
    std::erase_if(available, [&](EdgeId id) { return uf.same(g_.edge(id).u, g_.edge(id).v); });

    const std::size_t base = chosen.size();
    std::vector<char> bridge = bridges(uf, available);
    std::vector<EdgeId> rest;
    for (std::size_t k = 0; k < available.size(); ++k) {
      if (bridge[k]) {
        chosen.push_back(available[k]);
      } else {
        rest.push_back(available[k]);
      }
    }
    if (static_cast<int>(chosen.size()) == n_ - 1) {
      emit(chosen);
    } else if (!rest.empty()) {
      const EdgeId pivot = rest.front();
      rest.erase(rest.begin());
      chosen.push_back(pivot);
      recurse(chosen, rest);
      chosen.pop_back();
      recurse(chosen, std::move(rest));
    }
    chosen.resize(base);
  }

  void emit(const std::vector<EdgeId>& tree) {
    if (result_.visited == cap_) {
      result_.truncated = true;
      stopped_ = true;
      return;
    }
    ++result_.visited;
    visit_(tree);
  }

  // Bridges of the multigraph on union-find classes formed by `edges`.
  std::vector<char> bridges(detail::UnionFind& uf, const std::vector<EdgeId>& edges) {
    std::vector<std::vector<std::pair<int, int>>> adj(n_);  // (class, edge slot)
    for (std::size_t k = 0; k < edges.size(); ++k) {
      int a = uf.find(g_.edge(edges[k]).u);
      int b = uf.find(g_.edge(edges[k]).v);
      adj[a].push_back({b, static_cast<int>(k)});
      adj[b].push_back({a, static_cast<int>(k)});
    }
    std::vector<char> isBridge(edges.size(), 0);
    std::vector<int> tin(n_, -1), low(n_, 0);
    int timer = 0;
    struct Frame {
      int v, parentSlot;
      std::size_t next;
    };
    std::vector<Frame> stack;
    for (int start = 0; start < n_; ++start) {
      if (tin[start] != -1 || adj[start].empty()) continue;
      tin[start] = low[start] = timer++;
      stack.push_back({start, -1, 0});
      while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < adj[f.v].size()) {
          auto [to, slot] = adj[f.v][f.next++];
          if (slot == f.parentSlot) continue;
          if (tin[to] != -1) {
            low[f.v] = std::min(low[f.v], tin[to]);
          } else {
            tin[to] = low[to] = timer++;
            stack.push_back({to, slot, 0});
          }
        } else {
          Frame done = f;
          stack.pop_back();
          if (!stack.empty()) {
            int parent = stack.back().v;
            low[parent] = std::min(low[parent], low[done.v]);
            if (low[done.v] > tin[parent]) isBridge[done.parentSlot] = 1;
          }
        }
      }
    }
    return isBridge;
  }

  const WeightedGraph& g_;
  const TreeVisitor& visit_;
  std::int64_t cap_;
  int n_;
  bool stopped_ = false;
  EnumerationResult result_;
};

// --- strongly balanced tree search -----------------------------------------

class SbstSearch {
 public:
  SbstSearch(const WeightedGraph& g, std::int64_t nodeCap)
      : g_(g), n_(g.vertexCount()), nodeCap_(nodeCap) {
    minWeight_ = std::numeric_limits<Weight>::max();
    for (const Edge& e : g.edges()) minWeight_ = std::min(minWeight_, e.weight);
  }

  std::optional<SbstSolution> run() {
    for (int rootColour : {0, 1}) {
      inTree_.assign(n_, 0);
      colour_.assign(n_, -1);
      treeDeg_.assign(n_, 0);
      excluded_.assign(g_.edgeCount(), 0);
      members_.assign(1, 0);
      inTree_[0] = 1;
      colour_[0] = rootColour;
      sideCount_[0] = sideCount_[1] = 0;
      ++sideCount_[rootColour];
      weight_ = 0;
      edges_.clear();
      if (viable()) search();
    }
    return best_;
  }

 private:
  // Colour 0 is the side with the degree pattern.
  bool saturated(Vertex v) const { return colour_[v] == 0 && treeDeg_[v] >= 2; }

  bool usable(EdgeId id, Vertex from) const {
    return !excluded_[id] && !inTree_[g_.edge(id).other(from)];
  }

  bool viable() {
    if (sideCount_[0] > n_ / 2 || sideCount_[1] > n_ / 2) return false;
    if (best_ && weight_ + static_cast<Weight>(n_ - 1 - static_cast<int>(edges_.size())) * minWeight_ >=
                     best_->weight) {
      return false;
    }
    int finishedLeaves = 0;
    for (Vertex v : members_) {
      if (colour_[v] != 0 || treeDeg_[v] >= 2) continue;
      bool canGrow = false;
      for (EdgeId id : g_.incident(v)) {
        if (usable(id, v)) {
          canGrow = true;
          break;
        }
      }
      if (!canGrow && ++finishedLeaves > 1) return false;
      if (!canGrow && treeDeg_[v] == 0) return false;
    }
    // Every vertex outside the tree must stay reachable.
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> queue;
    for (Vertex v : members_) {
      if (!saturated(v)) queue.push_back(v);
      seen[v] = 1;
    }
    int reached = static_cast<int>(members_.size());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (EdgeId id : g_.incident(v)) {
        if (excluded_[id]) continue;
        Vertex w = g_.edge(id).other(v);
        if (seen[w]) continue;
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
    return reached == n_;
  }

  void search() {
    if (++nodes_ > nodeCap_) {
      throw Error(ErrorCode::Truncated, "strongly balanced tree search exceeded " +
                                            std::to_string(nodeCap_) + " nodes");
    }
    if (static_cast<int>(members_.size()) == n_) {
      record();
      return;
    }
    EdgeId pick = -1;
    Vertex from = -1;
    for (Vertex v : members_) {
      if (saturated(v)) continue;
      for (EdgeId id : g_.incident(v)) {
        if (usable(id, v)) {
          pick = id;
          from = v;
          break;
        }
      }
      if (pick != -1) break;
    }
    if (pick == -1) return;
    const Vertex to = g_.edge(pick).other(from);

    inTree_[to] = 1;
    colour_[to] = 1 - colour_[from];
    ++sideCount_[colour_[to]];
    ++treeDeg_[from];
    ++treeDeg_[to];
    members_.push_back(to);
    edges_.push_back(pick);
    weight_ += g_.edge(pick).weight;
    if (viable()) search();
    weight_ -= g_.edge(pick).weight;
    edges_.pop_back();
    members_.pop_back();
    --treeDeg_[to];
    --treeDeg_[from];
    --sideCount_[colour_[to]];
    colour_[to] = -1;
    inTree_[to] = 0;

    excluded_[pick] = 1;
    if (viable()) search();
    excluded_[pick] = 0;
  }

  void record() {
    if (best_ && weight_ >= best_->weight) return;
    EdgeSet tree{std::vector<EdgeId>(edges_)};
    auto cert = isStronglyBalanced(asBipartitionedTree(g_, tree));
    if (!cert) return;
    best_ = SbstSolution{std::move(tree), weight_, std::move(*cert)};
  }

  const WeightedGraph& g_;
  int n_;
  std::int64_t nodeCap_;
  std::int64_t nodes_ = 0;
  Weight minWeight_;
  std::vector<char> inTree_;
  std::vector<int> colour_;
  std::vector<int> treeDeg_;
  std::vector<char> excluded_;
  std::vector<Vertex> members_;
  std::vector<EdgeId> edges_;
  int sideCount_[2] = {0, 0};
  Weight weight_ = 0;
  std::optional<SbstSolution> best_;
};

// --- bitmask helpers for tiny graphs ------------------------------------------

bool hasPerfectMatching(const std::vector<unsigned>& adj, unsigned mask) {
  if (mask == 0) return true;
  const int v = std::countr_zero(mask);
  unsigned rest = mask & ~(1u << v);
  for (unsigned cand = adj[v] & rest; cand; cand &= cand - 1) {
    const int w = std::countr_zero(cand);
    if (hasPerfectMatching(adj, rest & ~(1u << w))) return true;
  }
  return false;
}

int componentCount(const std::vector<unsigned>& adj) {
  const int n = static_cast<int>(adj.size());
  unsigned seen = 0;
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen >> s & 1u) continue;
    ++count;
    unsigned frontier = 1u << s;
    seen |= frontier;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      unsigned fresh = adj[v] & ~seen;
      seen |= fresh;
      frontier |= fresh;
    }
  }
  return count;
}

int maxMatchingBits(const std::vector<unsigned>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::int8_t> best(std::size_t{1} << n, 0);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int v = std::countr_zero(mask);
    const unsigned rest = mask & ~(1u << v);
    int value = best[rest];
    for (unsigned cand = adj[v] & rest; cand; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      value = std::max(value, 1 + best[rest & ~(1u << w)]);
    }
    best[mask] = static_cast<std::int8_t>(value);
  }
  return best[(1u << n) - 1];
}

std::vector<unsigned> adjacencyBits(const WeightedGraph& g) {
  std::vector<unsigned> adj(g.vertexCount(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  return adj;
}

bool tryAdditions(std::vector<unsigned>& adj, const std::vector<std::pair<int, int>>& cand,
                  std::size_t from, int left) {
  const unsigned all = (1u << adj.size()) - 1;
  if (left == 0) return componentCount(adj) == 1 && hasPerfectMatching(adj, all);
  for (std::size_t k = from; k + left <= cand.size(); ++k) {
    auto [a, b] = cand[k];
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
    const bool ok = tryAdditions(adj, cand, k + 1, left - 1);
    adj[a] &= ~(1u << b);
    adj[b] &= ~(1u << a);
    if (ok) return true;
  }
  return false;
}

}  // namespace

EnumerationResult enumerateSpanningTrees(const WeightedGraph& g, const TreeVisitor& visit,
                                         std::int64_t cap) {
  if (!isConnected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
  return TreeEnumerator(g, visit, cap).run();
}

std::variant<PmstOptimum, Infeasible> bruteForceMinPmst(const WeightedGraph& g, std::int64_t cap) {
  if (g.vertexCount() % 2 != 0) return Infeasible{InfeasibleReason::OddOrder};
  if (!isConnected(g)) return Infeasible{InfeasibleReason::Disconnected};
  std::optional<PmstOptimum> best;
  std::vector<Edge> edges;
  auto result = enumerateSpanningTrees(
      g,
      [&](std::span<const EdgeId> tree) {
        Weight w = 0;
        for (EdgeId id : tree) w += g.edge(id).weight;
        if (best && w >= best->weight) return;
        edges.clear();
        for (EdgeId id : tree) edges.push_back(g.edge(id));
        if (!forestPerfectMatching(g.vertexCount(), edges)) return;
        best = PmstOptimum{EdgeSet(std::vector<EdgeId>(tree.begin(), tree.end())), w};
      },
      cap);
  if (result.truncated) {
    throw Error(ErrorCode::Truncated, "more than " + std::to_string(cap) + " spanning trees");
  }
  if (!best) return Infeasible{InfeasibleReason::NoPerfectMatching};
  return *best;
}

std::variant<SbstSolution, Infeasible> bruteForceMinSbst(const WeightedGraph& g,
                                                         std::int64_t nodeCap) {
  if (g.vertexCount() % 2 != 0) return Infeasible{InfeasibleReason::OddOrder};
  if (!isConnected(g)) return Infeasible{InfeasibleReason::Disconnected};
  auto best = SbstSearch(g, nodeCap).run();
  if (!best) return Infeasible{InfeasibleReason::NoStronglyBalancedTree};
  return std::move(*best);
}

int bruteForceOptAug(const WeightedGraph& h, const HostKind& host) {
  const int n = h.vertexCount();
  if (n > 8) throw Error(ErrorCode::TooLarge, "brute-force augmentation is limited to 8 vertices");
  if (n % 2 != 0) throw Error(ErrorCode::OddVertexCount, std::to_string(n) + " vertices");
  if (host.vertexCount() != n) throw Error(ErrorCode::HostMismatch, "host size differs");
  for (const Edge& e : h.edges()) {
    if (!host.allows(e.u, e.v)) throw Error(ErrorCode::HostMismatch, "edge outside the host");
  }
  std::vector<unsigned> adj = adjacencyBits(h);
  std::vector<std::pair<int, int>> cand;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (host.allows(a, b) && !(adj[a] >> b & 1u)) cand.push_back({a, b});
    }
  }
  // Each addition merges at most two components and covers at most two
  // exposed vertices.
  const int exposed = n - 2 * maxMatchingBits(adj);
  int k = std::max(componentCount(adj) - 1, (exposed + 1) / 2);
  for (; k <= static_cast<int>(cand.size()); ++k) {
    if (tryAdditions(adj, cand, 0, k)) return k;
  }
  throw Error(ErrorCode::HostMismatch, "host cannot be made connected and perfectly matchable");
}

std::optional<Assignment> bruteForceSat(const CnfFormula& f) {
  const int n = f.variableCount;
  if (n > 20) throw Error(ErrorCode::TooLarge, "brute-force SAT is limited to 20 variables");
  Assignment a(n, 0);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) a[i] = static_cast<int>(mask >> (n - 1 - i) & 1u);
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

int bruteForceMaximumMatching(const WeightedGraph& g) {
  if (g.vertexCount() > 22) throw Error(ErrorCode::TooLarge, "subset DP is limited to 22 vertices");
  return maxMatchingBits(adjacencyBits(g));
}

std::optional<VertexCycle> bruteForceHamiltonianCycle(const WeightedGraph& g) {
  const int n = g.vertexCount();
  if (n < 3) return std::nullopt;
  std::vector<Vertex> path{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::function<bool()> extend = [&]() {
    if (static_cast<int>(path.size()) == n) return g.hasEdge(path.back(), 0);
    for (EdgeId id : g.incident(path.back())) {
      Vertex w = g.edge(id).other(path.back());
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  if (!extend()) return std::nullopt;
  return VertexCycle{path};
}

}  // namespace treematch
