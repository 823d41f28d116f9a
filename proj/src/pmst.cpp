#include "treematch/pmst.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>

#include "treematch/detail/union_find.hpp"
#include "treematch/error.hpp"

namespace treematch {

std::string_view toString(InfeasibleReason reason) {
  switch (reason) {
    case InfeasibleReason::Disconnected: return "Disconnected";
    case InfeasibleReason::NoPerfectMatching: return "NoPerfectMatching";
    case InfeasibleReason::OddOrder: return "OddOrder";
    case InfeasibleReason::Unbalanced: return "Unbalanced";
    case InfeasibleReason::NoCommonBase: return "NoCommonBase";
    case InfeasibleReason::NoStronglyBalancedTree: return "NoStronglyBalancedTree";
  }
  return "Unknown";
}

std::variant<EdgeSet, Infeasible> pmstFeasible(const WeightedGraph& g) {
  if (!isConnected(g)) return Infeasible{InfeasibleReason::Disconnected};
  Matching m = maximumMatching(g);
  if (!m.isPerfect()) return Infeasible{InfeasibleReason::NoPerfectMatching};
  return buildTreeContainingMatching(g, m);
}

EdgeSet buildTreeContainingMatching(const WeightedGraph& g, const Matching& m) {
  if (!m.isPerfect() || static_cast<int>(m.mates().size()) != g.vertexCount()) {
    throw Error(ErrorCode::InvalidArgument, "matching is not perfect");
  }
  if (!isConnected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
  detail::UnionFind uf(g.vertexCount());
  std::vector<EdgeId> tree;
  for (EdgeId id : m.edges()) {
    uf.unite(g.edge(id).u, g.edge(id).v);
    tree.push_back(id);
  }
  std::vector<EdgeId> rest;
  for (EdgeId id = 0; id < g.edgeCount(); ++id) {
    if (!m.edges().contains(id)) rest.push_back(id);
  }
  std::stable_sort(rest.begin(), rest.end(),
                   [&](EdgeId a, EdgeId b) { return g.edge(a).weight < g.edge(b).weight; });
  for (EdgeId id : rest) {
    if (uf.unite(g.edge(id).u, g.edge(id).v)) tree.push_back(id);
  }
  return EdgeSet(std::move(tree));
}

int optAug(const DeficiencyProfile& p) {
  if (!p.evenDeficiency()) {
    throw Error(ErrorCode::OddDeficiency, "deficiency " + std::to_string(p.deficiency) + " is odd");
  }
  if (p.deficiency == 0 || p.halfDeficiency() < p.cPlus) return p.componentCount - 1;
  return p.halfDeficiency() + p.cZero;
}

HostKind HostKind::complete(int vertexCount) {
  if (vertexCount < 1) throw Error(ErrorCode::HostMismatch, "host needs at least one vertex");
  HostKind h;
  h.kind_ = Kind::Complete;
  h.n_ = vertexCount;
  h.side_.assign(vertexCount, Side::Plus);
  return h;
}

HostKind HostKind::completeBipartite(std::vector<Vertex> sidePlus, std::vector<Vertex> sideMinus) {
  if (sidePlus.size() != sideMinus.size() || sidePlus.empty()) {
    throw Error(ErrorCode::HostMismatch, "complete bipartite host must be balanced and nonempty");
  }
  HostKind h;
  h.kind_ = Kind::CompleteBipartite;
  h.n_ = static_cast<int>(sidePlus.size() + sideMinus.size());
  std::sort(sidePlus.begin(), sidePlus.end());
  std::sort(sideMinus.begin(), sideMinus.end());
  std::vector<int> seen(h.n_, 0);
  auto mark = [&](const std::vector<Vertex>& side, Side s) {
    for (Vertex v : side) {
      if (v < 0 || v >= h.n_ || seen[v]) {
        throw Error(ErrorCode::HostMismatch, "host sides do not partition the vertex set");
      }
      seen[v] = 1;
    }
    (void)s;
  };
  mark(sidePlus, Side::Plus);
  mark(sideMinus, Side::Minus);
  h.side_.assign(h.n_, Side::Plus);
  for (Vertex v : sideMinus) h.side_[v] = Side::Minus;
  h.plus_ = std::move(sidePlus);
  h.minus_ = std::move(sideMinus);
  return h;
}

WeightedGraph hostGraph(const HostKind& host, Weight weight) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < host.vertexCount(); ++u) {
    for (Vertex v = u + 1; v < host.vertexCount(); ++v) {
      if (host.allows(u, v)) edges.push_back({u, v, weight});
    }
  }
  return WeightedGraph(host.vertexCount(), std::move(edges));
}

namespace {

int sideIndex(Side s) { return s == Side::Plus ? 0 : 1; }

// Component bookkeeping for the greedy; one record per union-find root.
struct ComponentState {
  Vertex smallest = INT_MAX;
  std::array<Vertex, 2> smallestOnSide{INT_MAX, INT_MAX};
  std::array<std::set<Vertex>, 2> exposed;  // by host side; complete hosts use slot 0

  int deficiency() const { return static_cast<int>(exposed[0].size() + exposed[1].size()); }
  Vertex smallestExposed() const {
    Vertex best = INT_MAX;
    for (const auto& s : exposed) {
      if (!s.empty()) best = std::min(best, *s.begin());
    }
    return best;
  }
};

class GreedyAugmenter {
 public:
  GreedyAugmenter(const WeightedGraph& h, const HostKind& host)
      : h_(h), host_(host), uf_(h.vertexCount()), state_(h.vertexCount()) {}

  AugmentationResult run() {
    const int n = h_.vertexCount();
    initial_ = maximumMatching(h_);
    mate_ = initial_.mates();
    for (const Edge& e : h_.edges()) uf_.unite(e.u, e.v);
    for (Vertex v = 0; v < n; ++v) {
      ComponentState& c = state_[uf_.find(v)];
      c.smallest = std::min(c.smallest, v);
      Vertex& s = c.smallestOnSide[slot(v)];
      s = std::min(s, v);
      if (mate_[v] == kExposed) c.exposed[slot(v)].insert(v);
    }
    for (Vertex v = 0; v < n; ++v) {
      if (uf_.find(v) == v) index(v);
    }

    // Step 1: a deficient component meets one of deficiency >= 2.
    while (auto pair = findPair([](int a, int b) { return std::max(a, b) >= 2; },
                                deficient_.size() >= 2 && heavyCount_ > 0)) {
      join(pair->first, pair->second, true);
    }
    // Step 2: two components of deficiency 1.
    while (auto pair = findPair([](int a, int b) { return a == 1 && b == 1; },
                                deficient_.size() >= 2)) {
      join(pair->first, pair->second, true);
    }
    // Step 3: close the deficiency inside the single deficient component.
    while (!deficient_.empty()) {
      if (deficient_.size() != 1) {
        throw std::logic_error("greedy augmentation: several deficient components after step 2");
      }
      const ComponentState& c = state_[deficient_.begin()->second];
      Vertex v1 = c.smallestExposed();
      Vertex v2 = INT_MAX;
      if (host_.bipartite()) {
        const auto& other = c.exposed[1 - slot(v1)];
        if (other.empty()) {
          throw std::logic_error("greedy augmentation: no opposite-side exposed vertex in step 3");
        }
        v2 = *other.begin();
      } else {
        auto it = c.exposed[0].upper_bound(v1);
        if (it == c.exposed[0].end()) {
          throw std::logic_error("greedy augmentation: single exposed vertex in step 3");
        }
        v2 = *it;
      }
      join(v1, v2, true);
    }
    // Step 4: link perfectly matchable components.
    while (order_.size() > 1) {
      const ComponentState& first = state_[order_.begin()->second];
      const ComponentState& second = state_[std::next(order_.begin())->second];
      Vertex v1 = first.smallest;
      Vertex v2 = host_.bipartite() ? second.smallestOnSide[1 - slot(v1)] : second.smallest;
      if (v2 == INT_MAX) {
        throw std::logic_error("greedy augmentation: component without an opposite-side vertex");
      }
      join(v1, v2, false);
    }
    return finish();
  }

 private:
  int slot(Vertex v) const { return host_.bipartite() ? sideIndex(host_.sideOf(v)) : 0; }

  void index(int root) {
    const ComponentState& c = state_[root];
    order_.insert({c.smallest, root});
    if (c.deficiency() > 0) deficient_.insert({c.smallest, root});
    if (c.deficiency() >= 2) ++heavyCount_;
  }

  void unindex(int root) {
    const ComponentState& c = state_[root];
    order_.erase({c.smallest, root});
    deficient_.erase({c.smallest, root});
    if (c.deficiency() >= 2) --heavyCount_;
  }

  // First pair of deficient components (ordered by smallest vertex) accepted
  // by `accept`, returned as the two exposed endpoints to join. On bipartite
  // hosts a pair only qualifies with exposed vertices on opposite sides.
  template <class Accept>
  std::optional<std::pair<Vertex, Vertex>> findPair(Accept accept, bool possible) {
    if (!possible) return std::nullopt;
    bool guardHolds = false;
    for (auto a = deficient_.begin(); a != deficient_.end(); ++a) {
      const ComponentState& ca = state_[a->second];
      for (auto b = std::next(a); b != deficient_.end(); ++b) {
        const ComponentState& cb = state_[b->second];
        if (!accept(ca.deficiency(), cb.deficiency())) continue;
        guardHolds = true;
        if (!host_.bipartite()) return std::make_pair(ca.smallestExposed(), cb.smallestExposed());
        Vertex best = INT_MAX;
        for (int s = 0; s < 2; ++s) {
          if (!ca.exposed[s].empty() && !cb.exposed[1 - s].empty()) {
            best = std::min(best, *ca.exposed[s].begin());
          }
        }
        if (best != INT_MAX) return std::make_pair(best, *cb.exposed[1 - slot(best)].begin());
      }
    }
    if (guardHolds) {
      throw std::logic_error("greedy augmentation: no opposite-side exposed pair on bipartite host");
    }
    return std::nullopt;
  }

  void join(Vertex v1, Vertex v2, bool matched) {
    if (!host_.allows(v1, v2) || h_.hasEdge(v1, v2)) {
      throw std::logic_error("greedy augmentation: chose an unavailable host edge");
    }
    added_.emplace_back(v1, v2);
    addedMatched_.push_back(matched);
    int r1 = uf_.find(v1);
    int r2 = uf_.find(v2);
    unindex(r1);
    if (r2 != r1) unindex(r2);
    if (matched) {
      mate_[v1] = v2;
      mate_[v2] = v1;
      state_[r1].exposed[slot(v1)].erase(v1);
      state_[r2].exposed[slot(v2)].erase(v2);
    }
    if (r1 != r2) {
      uf_.unite(r1, r2);
      int root = uf_.find(r1);
      int gone = root == r1 ? r2 : r1;
      ComponentState& keep = state_[root];
      ComponentState& drop = state_[gone];
      keep.smallest = std::min(keep.smallest, drop.smallest);
      for (int s = 0; s < 2; ++s) {
        keep.smallestOnSide[s] = std::min(keep.smallestOnSide[s], drop.smallestOnSide[s]);
        if (keep.exposed[s].size() < drop.exposed[s].size()) keep.exposed[s].swap(drop.exposed[s]);
        keep.exposed[s].insert(drop.exposed[s].begin(), drop.exposed[s].end());
        drop.exposed[s].clear();
      }
      index(root);
    } else {
      index(r1);
    }
  }

  AugmentationResult finish() {
    AugmentationResult result;
    std::vector<Edge> extra;
    for (auto [u, v] : added_) extra.push_back({u, v, 1});
    result.augmented = h_.withAddedEdges(extra);
    std::vector<EdgeId> matched(initial_.edges().begin(), initial_.edges().end());
    for (std::size_t i = 0; i < added_.size(); ++i) {
      if (addedMatched_[i]) matched.push_back(h_.edgeCount() + static_cast<int>(i));
    }
    result.finalMatching = Matching::fromEdges(result.augmented, EdgeSet(std::move(matched)));
    result.addedEdges = added_;
    result.optValue = optAug(deficiencyProfile(h_, initial_));
    if (result.optValue != static_cast<int>(added_.size())) {
      throw std::logic_error("greedy augmentation added " + std::to_string(added_.size()) +
                             " edges but the optimum is " + std::to_string(result.optValue));
    }
    return result;
  }

  const WeightedGraph& h_;
  const HostKind& host_;
  detail::UnionFind uf_;
  std::vector<ComponentState> state_;
  Matching initial_;
  std::vector<Vertex> mate_;
  std::set<std::pair<Vertex, int>> order_;      // (smallest vertex, root)
  std::set<std::pair<Vertex, int>> deficient_;  // same key, deficiency > 0 only
  std::vector<std::pair<Vertex, Vertex>> added_;
  std::vector<bool> addedMatched_;
  int heavyCount_ = 0;  // indexed components with deficiency >= 2
};

}  // namespace

AugmentationResult greedyAugment(const WeightedGraph& h, const HostKind& host) {
  if (h.vertexCount() % 2 != 0) {
    throw Error(ErrorCode::OddVertexCount, std::to_string(h.vertexCount()) + " vertices");
  }
  if (host.vertexCount() != h.vertexCount()) {
    throw Error(ErrorCode::HostMismatch, "host and graph differ in vertex count");
  }
  for (const Edge& e : h.edges()) {
    if (!host.allows(e.u, e.v)) {
      throw Error(ErrorCode::HostMismatch, "edge " + std::to_string(e.u) + "-" +
                                               std::to_string(e.v) + " is not a host edge");
    }
  }
  return GreedyAugmenter(h, host).run();
}

TwoValuedSolution minPmstTwoValued(const HostKind& host, const EdgeSet& lightEdges, Weight light,
                                   Weight heavy) {
  if (light >= heavy) throw Error(ErrorCode::WeightOrder, "light weight must be below heavy");
  if (host.vertexCount() % 2 != 0) {
    throw Error(ErrorCode::OddVertexCount, std::to_string(host.vertexCount()) + " vertices");
  }
  WeightedGraph full = hostGraph(host);
  for (EdgeId id : lightEdges) {
    if (id < 0 || id >= full.edgeCount()) {
      throw Error(ErrorCode::InvalidArgument, "light edge id out of range");
    }
  }
  WeightedGraph g0 = full.subgraph(lightEdges);
  AugmentationResult aug = greedyAugment(g0, host);

  auto hostId = [&](EdgeId augmentedId) -> EdgeId {
    if (augmentedId < g0.edgeCount()) return lightEdges.ids()[augmentedId];
    const Edge& e = aug.augmented.edge(augmentedId);
    return *full.findEdge(e.u, e.v);
  };
  detail::UnionFind uf(host.vertexCount());
  std::vector<EdgeId> tree;
  auto offer = [&](EdgeId augmentedId) {
    const Edge& e = aug.augmented.edge(augmentedId);
    if (uf.unite(e.u, e.v)) tree.push_back(hostId(augmentedId));
  };
  for (EdgeId id : aug.finalMatching.edges()) offer(id);
  for (EdgeId id = 0; id < aug.augmented.edgeCount(); ++id) offer(id);

  TwoValuedSolution out;
  out.tree = EdgeSet(std::move(tree));
  for (EdgeId id : out.tree) {
    if (!lightEdges.contains(id)) ++out.heavyEdges;
  }
  if (out.heavyEdges != aug.optValue) {
    throw std::logic_error("two-valued tree uses " + std::to_string(out.heavyEdges) +
                           " heavy edges, expected " + std::to_string(aug.optValue));
  }
  const int n = host.vertexCount();
  out.totalWeight = light * (n - 1 - out.heavyEdges) + heavy * out.heavyEdges;
  return out;
}

TwoValuedSolution minPmstTwoValued(const WeightedGraph& g) {
  const int n = g.vertexCount();
  std::set<Weight> values;
  for (const Edge& e : g.edges()) values.insert(e.weight);
  if (values.size() > 2) {
    throw Error(ErrorCode::InvalidArgument, "more than two distinct edge weights");
  }
  std::optional<HostKind> host;
  if (2LL * g.edgeCount() == 1LL * n * (n - 1)) {
    host = HostKind::complete(n);
  } else if (auto bp = bipartitionOf(g); std::holds_alternative<Bipartition>(bp)) {
    const auto& sides = std::get<Bipartition>(bp);
    if (isConnected(g) && sides.balanced() &&
        1LL * sides.sizePlus * sides.sizeMinus == g.edgeCount()) {
      host = HostKind::completeBipartite(sides.members(Side::Plus), sides.members(Side::Minus));
    }
  }
  if (!host) {
    throw Error(ErrorCode::HostMismatch, "graph is neither complete nor balanced complete bipartite");
  }
  const Weight light = values.empty() ? 0 : *values.begin();
  const Weight heavy = values.size() == 2 ? *values.rbegin() : light + 1;
  WeightedGraph full = hostGraph(*host);
  std::vector<EdgeId> lightIds;
  for (const Edge& e : g.edges()) {
    if (e.weight == light) lightIds.push_back(*full.findEdge(e.u, e.v));
  }
  TwoValuedSolution hostSolution = minPmstTwoValued(*host, EdgeSet(std::move(lightIds)), light, heavy);
  std::vector<EdgeId> ids;
  for (EdgeId id : hostSolution.tree) {
    const Edge& e = full.edge(id);
    ids.push_back(*g.findEdge(e.u, e.v));
  }
  TwoValuedSolution out;
  out.tree = EdgeSet(std::move(ids));
  out.totalWeight = g.weightOf(out.tree);
  out.heavyEdges = hostSolution.heavyEdges;
  return out;
}

}  // namespace treematch
