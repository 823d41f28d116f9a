#include "treematch/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "treematch/error.hpp"

namespace treematch {

Matching Matching::fromEdges(const WeightedGraph& g, const EdgeSet& edges) {
  Matching m(g.vertexCount());
  for (EdgeId id : edges) {
    if (id < 0 || id >= g.edgeCount()) {
      throw Error(ErrorCode::InvalidArgument, "matching edge id out of range");
    }
    const Edge& e = g.edge(id);
    if (m.mate_[e.u] != kExposed || m.mate_[e.v] != kExposed) {
      throw Error(ErrorCode::InvalidArgument,
                  "edges share vertex " + std::to_string(m.mate_[e.u] != kExposed ? e.u : e.v));
    }
    m.mate_[e.u] = e.v;
    m.mate_[e.v] = e.u;
  }
  m.edges_ = edges;
  return m;
}

Matching Matching::fromEndpoints(int vertexCount, std::vector<EdgeId> ids,
                                 std::span<const Edge> endpoints) {
  Matching m(vertexCount);
  for (const Edge& e : endpoints) {
    if (m.mate_[e.u] != kExposed || m.mate_[e.v] != kExposed) {
      throw Error(ErrorCode::InvalidArgument, "edges share a vertex");
    }
    m.mate_[e.u] = e.v;
    m.mate_[e.v] = e.u;
  }
  m.edges_ = EdgeSet(std::move(ids));
  return m;
}

std::vector<Vertex> Matching::exposedVertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(mate_.size()); ++v) {
    if (mate_[v] == kExposed) out.push_back(v);
  }
  return out;
}

namespace {

// Edmonds' algorithm on one component, local vertex ids 0..n-1.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(std::vector<std::vector<int>> adj)
      : n_(static_cast<int>(adj.size())), adj_(std::move(adj)), match_(n_, -1) {}

  const std::vector<int>& run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int to : adj_[v]) {
        if (match_[to] == -1) {
          match_[v] = to;
          match_[to] = v;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int end = findPath(root);
      while (end != -1) {
        int pv = parent_[end];
        int next = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = next;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::fill(onPath_.begin(), onPath_.end(), 0);
    for (;;) {
      a = base_[a];
      onPath_[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (onPath_[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void markPath(int v, int b, int child) {
    while (base_[v] != b) {
      inBlossom_[base_[v]] = 1;
      inBlossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int findPath(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    onPath_.resize(n_);
    std::queue<int> queue;
    used_[root] = 1;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur = lca(v, to);
          inBlossom_.assign(n_, 0);
          markPath(v, cur, to);
          markPath(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (inBlossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> inBlossom_;
  std::vector<char> onPath_;
};

}  // namespace

Matching maximumMatching(const WeightedGraph& g) {
  const int n = g.vertexCount();
  std::vector<EdgeId> chosen;
  std::vector<int> local(n, -1);
  for (const auto& comp : connectedComponents(g)) {
    if (comp.size() < 2) continue;
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (EdgeId id : g.incident(comp[i])) adj[i].push_back(local[g.edge(id).other(comp[i])]);
    }
    BlossomMatcher matcher(std::move(adj));
    const std::vector<int>& mate = matcher.run();
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (mate[i] > static_cast<int>(i)) chosen.push_back(*g.findEdge(comp[i], comp[mate[i]]));
    }
  }
  return Matching::fromEdges(g, EdgeSet(std::move(chosen)));
}

int deficiency(const WeightedGraph& g) {
  return g.vertexCount() - 2 * maximumMatching(g).size();
}

DeficiencyProfile deficiencyProfile(const WeightedGraph& g, const Matching& maximum) {
  std::vector<int> label = componentLabels(g);
  DeficiencyProfile p;
  p.componentCount = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  p.perComponentDeficiency.assign(p.componentCount, 0);
  for (Vertex v = 0; v < g.vertexCount(); ++v) {
    if (maximum.isExposed(v)) ++p.perComponentDeficiency[label[v]];
  }
  for (int d : p.perComponentDeficiency) {
    p.deficiency += d;
    (d > 0 ? p.cPlus : p.cZero)++;
  }
  return p;
}

DeficiencyProfile deficiencyProfile(const WeightedGraph& g) {
  return deficiencyProfile(g, maximumMatching(g));
}

std::optional<std::vector<int>> forestPerfectMatching(int n, std::span<const Edge> edges) {
  if (n % 2 != 0) return std::nullopt;
  std::vector<int> offset(n + 1, 0);
  for (const Edge& e : edges) {
    ++offset[e.u + 1];
    ++offset[e.v + 1];
  }
  for (int v = 0; v < n; ++v) offset[v + 1] += offset[v];
  std::vector<int> slot(offset.begin(), offset.end() - 1);
  std::vector<int> adj(offset[n]);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    adj[slot[edges[i].u]++] = i;
    adj[slot[edges[i].v]++] = i;
  }
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    deg[v] = offset[v + 1] - offset[v];
    if (deg[v] == 0) return std::nullopt;
    if (deg[v] == 1) leaves.push_back(v);
  }
  std::vector<int> picked;
  picked.reserve(n / 2);
  while (!leaves.empty()) {
    int leaf = leaves.back();
    leaves.pop_back();
    if (removed[leaf]) continue;
    if (deg[leaf] == 0) return std::nullopt;
    int via = -1;
    for (int k = offset[leaf]; k < offset[leaf + 1]; ++k) {
      if (!removed[edges[adj[k]].other(leaf)]) {
        via = adj[k];
        break;
      }
    }
    int partner = edges[via].other(leaf);
    picked.push_back(via);
    removed[leaf] = removed[partner] = 1;
    for (int k = offset[partner]; k < offset[partner + 1]; ++k) {
      int w = edges[adj[k]].other(partner);
      if (removed[w]) continue;
      if (--deg[w] == 0) return std::nullopt;
      if (deg[w] == 1) leaves.push_back(w);
    }
  }
  if (static_cast<int>(picked.size()) * 2 != n) return std::nullopt;
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::optional<Matching> treePerfectMatching(const BipartitionedTree& t) {
  auto local = forestPerfectMatching(t.vertexCount(), t.graph().edges());
  if (!local) return std::nullopt;
  std::vector<EdgeId> host;
  std::vector<Edge> ends;
  for (int i : *local) {
    host.push_back(t.hostEdge(i));
    ends.push_back(t.graph().edge(i));
  }
  return Matching::fromEndpoints(t.vertexCount(), std::move(host), ends);
}

}  // namespace treematch
