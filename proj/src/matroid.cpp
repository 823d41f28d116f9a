#include "treematch/matroid.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <utility>

#include "treematch/detail/union_find.hpp"
#include "treematch/error.hpp"

namespace treematch {

std::vector<char> MatroidOracle::exchangeRow(std::span<const Element> current,
                                             Element removed) const {
  std::vector<char> row(groundSize(), 0);
  std::vector<char> inCurrent(groundSize(), 0);
  std::vector<Element> trial;
  for (Element e : current) {
    inCurrent[e] = 1;
    if (e != removed) trial.push_back(e);
  }
  trial.push_back(-1);
  for (Element x = 0; x < groundSize(); ++x) {
    if (inCurrent[x]) continue;
    trial.back() = x;
    row[x] = isIndependent(trial) ? 1 : 0;
  }
  return row;
}

int MatroidOracle::rank() const {
  std::vector<Element> chosen;
  for (Element x = 0; x < groundSize(); ++x) {
    chosen.push_back(x);
    if (!isIndependent(chosen)) chosen.pop_back();
  }
  return static_cast<int>(chosen.size());
}

FreeMatroid::FreeMatroid(int groundSize) : n_(groundSize) {
  if (n_ < 0) throw Error(ErrorCode::InvalidArgument, "negative ground size");
}

bool FreeMatroid::isIndependent(std::span<const Element>) const { return true; }

GraphicMatroid::GraphicMatroid(WeightedGraph host) : host_(std::move(host)) {}

bool GraphicMatroid::isIndependent(std::span<const Element> set) const {
  detail::UnionFind uf(host_.vertexCount());
  for (Element e : set) {
    if (!uf.unite(host_.edge(e).u, host_.edge(e).v)) return false;
  }
  return true;
}

std::vector<char> GraphicMatroid::exchangeRow(std::span<const Element> current,
                                              Element removed) const {
  detail::UnionFind uf(host_.vertexCount());
  std::vector<char> row(groundSize(), 1);
  for (Element e : current) {
    row[e] = 0;
    if (e != removed) uf.unite(host_.edge(e).u, host_.edge(e).v);
  }
  for (Element x = 0; x < groundSize(); ++x) {
    if (row[x] && uf.same(host_.edge(x).u, host_.edge(x).v)) row[x] = 0;
  }
  return row;
}

PartitionMatroid::PartitionMatroid(std::vector<int> partOf, std::vector<int> capacities)
    : partOf_(std::move(partOf)), capacities_(std::move(capacities)) {
  for (int p : partOf_) {
    if (p < 0 || p >= static_cast<int>(capacities_.size())) {
      throw Error(ErrorCode::InvalidArgument, "part id " + std::to_string(p) + " out of range");
    }
  }
  for (int c : capacities_) {
    if (c < 0) throw Error(ErrorCode::InvalidArgument, "negative part capacity");
  }
}

bool PartitionMatroid::isIndependent(std::span<const Element> set) const {
  std::vector<int> used(capacities_.size(), 0);
  for (Element e : set) {
    if (++used[partOf_[e]] > capacities_[partOf_[e]]) return false;
  }
  return true;
}

std::vector<char> PartitionMatroid::exchangeRow(std::span<const Element> current,
                                                Element removed) const {
  std::vector<int> used(capacities_.size(), 0);
  std::vector<char> row(groundSize(), 1);
  for (Element e : current) {
    row[e] = 0;
    if (e != removed) ++used[partOf_[e]];
  }
  for (Element x = 0; x < groundSize(); ++x) {
    if (row[x] && used[partOf_[x]] >= capacities_[partOf_[x]]) row[x] = 0;
  }
  return row;
}

TruncatedMatroid::TruncatedMatroid(MatroidPtr base, int k) : base_(std::move(base)), k_(k) {
  if (k_ < 0 || k_ > base_->groundSize()) {
    throw Error(ErrorCode::InvalidArgument, "truncation size " + std::to_string(k_) +
                                                " outside 0.." +
                                                std::to_string(base_->groundSize()));
  }
}

bool TruncatedMatroid::isIndependent(std::span<const Element> set) const {
  return static_cast<int>(set.size()) <= k_ && base_->isIndependent(set);
}

std::vector<char> TruncatedMatroid::exchangeRow(std::span<const Element> current,
                                                Element removed) const {
  int after = static_cast<int>(current.size()) + (removed == -1 ? 1 : 0);
  if (after > k_) return std::vector<char>(groundSize(), 0);
  return base_->exchangeRow(current, removed);
}

MatroidPtr truncate(MatroidPtr m, int k) {
  return std::make_shared<TruncatedMatroid>(std::move(m), k);
}

namespace {

struct PathLength {
  Weight weight = std::numeric_limits<Weight>::max();
  int arcs = 0;
  bool reached() const { return weight != std::numeric_limits<Weight>::max(); }
  friend bool operator<(const PathLength& a, const PathLength& b) {
    return a.weight != b.weight ? a.weight < b.weight : a.arcs < b.arcs;
  }
};

}  // namespace

std::optional<CommonBase> minWeightCommonBase(const MatroidOracle& m1, const MatroidOracle& m2,
                                              std::span<const Weight> weights, int k) {
  const int n = m1.groundSize();
  if (m2.groundSize() != n || static_cast<int>(weights.size()) != n) {
    throw Error(ErrorCode::GroundSetMismatch,
                "ground sizes " + std::to_string(n) + ", " + std::to_string(m2.groundSize()) +
                    " and " + std::to_string(weights.size()) + " weights");
  }
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative target size");
  if (k > n) return std::nullopt;

  std::vector<char> inSet(n, 0);
  std::vector<Element> current;
  std::vector<std::vector<int>> out(n);
  for (int round = 0; round < k; ++round) {
    // Exchange graph: y -> x when I - y + x is independent in m1,
    // x -> y when I - y + x is independent in m2 (y in I, x outside).
    for (auto& arcs : out) arcs.clear();
    std::vector<char> source = m1.exchangeRow(current, -1);
    std::vector<char> sink = m2.exchangeRow(current, -1);
    for (Element y : current) {
      std::vector<char> row1 = m1.exchangeRow(current, y);
      std::vector<char> row2 = m2.exchangeRow(current, y);
      for (Element x = 0; x < n; ++x) {
        if (row1[x]) out[y].push_back(x);
        if (row2[x]) out[x].push_back(y);
      }
    }
    for (auto& arcs : out) std::sort(arcs.begin(), arcs.end());

    auto length = [&](Element v) { return inSet[v] ? -weights[v] : weights[v]; };
    std::vector<PathLength> dist(n);
    std::vector<int> parent(n, -1);
    std::vector<char> queued(n, 0);
    std::deque<Element> queue;
    for (Element x = 0; x < n; ++x) {
      if (source[x]) {
        dist[x] = {length(x), 0};
        queue.push_back(x);
        queued[x] = 1;
      }
    }
    while (!queue.empty()) {
      Element v = queue.front();
      queue.pop_front();
      queued[v] = 0;
      for (Element to : out[v]) {
        PathLength cand{dist[v].weight + length(to), dist[v].arcs + 1};
        if (cand < dist[to]) {
          dist[to] = cand;
          parent[to] = v;
          if (!queued[to]) {
            queued[to] = 1;
            queue.push_back(to);
          }
        }
      }
    }
    Element end = -1;
    for (Element x = 0; x < n; ++x) {
      if (sink[x] && dist[x].reached() && (end == -1 || dist[x] < dist[end])) end = x;
    }
    if (end == -1) return std::nullopt;
    for (Element v = end; v != -1; v = parent[v]) inSet[v] = !inSet[v];
    current.clear();
    for (Element x = 0; x < n; ++x) {
      if (inSet[x]) current.push_back(x);
    }
  }
  CommonBase result;
  result.elements = current;
  for (Element e : current) result.weight += weights[e];
  return result;
}

}  // namespace treematch
