#include "treematch/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "treematch/detail/union_find.hpp"
#include "treematch/error.hpp"

namespace treematch {

namespace {

std::uint64_t pairKey(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

std::string_view toString(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotSubcubic: return "NotSubcubic";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::BadRotation: return "BadRotation";
    case ErrorCode::BadLayout: return "BadLayout";
    case ErrorCode::OddVertexCount: return "OddVertexCount";
    case ErrorCode::OddDeficiency: return "OddDeficiency";
    case ErrorCode::HostMismatch: return "HostMismatch";
    case ErrorCode::WeightOrder: return "WeightOrder";
    case ErrorCode::GroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::NotHamiltonian: return "NotHamiltonian";
    case ErrorCode::NotSatisfying: return "NotSatisfying";
    case ErrorCode::NotStronglyBalanced: return "NotStronglyBalanced";
    case ErrorCode::MalformedTree: return "MalformedTree";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Truncated: return "Truncated";
  }
  return "Unknown";
}

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EdgeSet::contains(EdgeId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

WeightedGraph::WeightedGraph(int vertexCount, std::vector<Edge> edges)
    : n_(vertexCount), edges_(std::move(edges)) {
  if (n_ < 1) throw Error(ErrorCode::InvalidGraph, "vertex count must be positive");
  const int m = edgeCount();
  index_.reserve(m);
  std::vector<int> deg(n_, 0);
  for (EdgeId id = 0; id < m; ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw Error(ErrorCode::InvalidGraph,
                  "edge " + std::to_string(id) + " has a vertex id out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::InvalidGraph, "self-loop at vertex " + std::to_string(e.u));
    }
    index_.emplace_back(pairKey(e.u, e.v), id);
    ++deg[e.u];
    ++deg[e.v];
  }
  std::sort(index_.begin(), index_.end());
  for (std::size_t i = 1; i < index_.size(); ++i) {
    if (index_[i].first == index_[i - 1].first) {
      const Edge& e = edges_[index_[i].second];
      throw Error(ErrorCode::InvalidGraph, "parallel edge between " + std::to_string(e.u) +
                                               " and " + std::to_string(e.v));
    }
  }
  offset_.assign(n_ + 1, 0);
  for (Vertex v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + deg[v];
  adj_.resize(offset_[n_]);
  std::vector<int> fill(offset_.begin(), offset_.end() - 1);
  for (EdgeId id = 0; id < m; ++id) {
    adj_[fill[edges_[id].u]++] = id;
    adj_[fill[edges_[id].v]++] = id;
  }
}

std::optional<EdgeId> WeightedGraph::findEdge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return std::nullopt;
  const std::uint64_t key = pairKey(a, b);
  auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(key, EdgeId{0}));
  if (it == index_.end() || it->first != key) return std::nullopt;
  return it->second;
}

Weight WeightedGraph::weightOf(const EdgeSet& set) const {
  Weight total = 0;
  for (EdgeId id : set) total += edges_[id].weight;
  return total;
}

WeightedGraph WeightedGraph::subgraph(const EdgeSet& set) const {
  std::vector<Edge> picked;
  picked.reserve(set.size());
  for (EdgeId id : set) picked.push_back(edges_[id]);
  return WeightedGraph(n_, std::move(picked));
}

WeightedGraph WeightedGraph::withAddedEdges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return WeightedGraph(n_, std::move(all));
}

std::vector<Vertex> Bipartition::members(Side s) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(side.size()); ++v) {
    if (side[v] == s) out.push_back(v);
  }
  return out;
}

std::vector<int> componentLabels(const WeightedGraph& g) {
  const int n = g.vertexCount();
  std::vector<int> label(n, -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId id : g.incident(x)) {
        Vertex y = g.edge(id).other(x);
        if (label[y] == -1) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<Vertex>> connectedComponents(const WeightedGraph& g) {
  std::vector<int> label = componentLabels(g);
  int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<Vertex>> comps(count);
  for (Vertex v = 0; v < g.vertexCount(); ++v) comps[label[v]].push_back(v);
  return comps;
}

bool isConnected(const WeightedGraph& g) {
  std::vector<int> label = componentLabels(g);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

std::variant<Bipartition, OddCycle> bipartitionOf(const WeightedGraph& g) {
  const int n = g.vertexCount();
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      for (EdgeId id : g.incident(x)) {
        Vertex y = g.edge(id).other(x);
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push(y);
        } else if (color[y] == color[x]) {
          // Walk both BFS branches up to their meeting point.
          std::vector<Vertex> left{x};
          std::vector<Vertex> right{y};
          Vertex a = x;
          Vertex b = y;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          std::reverse(left.begin(), left.end());
          left.insert(left.end(), right.begin(), right.end());
          return OddCycle{VertexCycle{std::move(left)}};
        }
      }
    }
  }
  Bipartition bp;
  bp.side.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    bp.side[v] = color[v] == 0 ? Side::Plus : Side::Minus;
    (color[v] == 0 ? bp.sizePlus : bp.sizeMinus)++;
  }
  return bp;
}

BipartitionedTree asBipartitionedTree(const WeightedGraph& g, const EdgeSet& t) {
  const int n = g.vertexCount();
  if (t.size() != n - 1) {
    throw Error(ErrorCode::NotATree, "expected " + std::to_string(n - 1) + " edges, got " +
                                         std::to_string(t.size()));
  }
  detail::UnionFind uf(n);
  std::vector<Edge> local;
  local.reserve(t.size());
  for (EdgeId id : t) {
    if (id < 0 || id >= g.edgeCount()) {
      throw Error(ErrorCode::NotATree, "edge id " + std::to_string(id) + " out of range");
    }
    const Edge& e = g.edge(id);
    if (!uf.unite(e.u, e.v)) {
      throw Error(ErrorCode::NotATree, "edge set contains a cycle");
    }
    local.push_back(e);
  }
  BipartitionedTree tree;
  tree.tree_ = WeightedGraph(n, std::move(local));
  tree.hostEdges_ = t;
  tree.bipartition_ = std::get<Bipartition>(bipartitionOf(tree.tree_));
  tree.degrees_.resize(n);
  for (Vertex v = 0; v < n; ++v) tree.degrees_[v] = tree.tree_.degree(v);
  return tree;
}

bool isHamiltonianCycle(const WeightedGraph& g, const VertexCycle& x) {
  const int n = g.vertexCount();
  const auto& order = x.order;
  if (static_cast<int>(order.size()) != n || n < 3) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!g.hasEdge(order[i], order[(i + 1) % order.size()])) return false;
  }
  return true;
}

}  // namespace treematch
