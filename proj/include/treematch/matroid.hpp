#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "treematch/graph.hpp"

namespace treematch {

/// Ground elements are 0..groundSize()-1.
using Element = int;

/// Independence oracle. Sets are passed as lists of distinct elements.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;

  virtual int groundSize() const = 0;
  virtual bool isIndependent(std::span<const Element> set) const = 0;

  /// For an independent `current`: row[x] != 0 iff x is outside `current`
  /// and current - removed + x is independent. removed == -1 means plain
  /// insertion. The default asks isIndependent once per element.
  virtual std::vector<char> exchangeRow(std::span<const Element> current, Element removed) const;

  /// Size of a maximal independent set, found greedily in element order.
  int rank() const;
};

using MatroidPtr = std::shared_ptr<const MatroidOracle>;

/// Every subset independent.
class FreeMatroid final : public MatroidOracle {
 public:
  explicit FreeMatroid(int groundSize);
  int groundSize() const override { return n_; }
  bool isIndependent(std::span<const Element> set) const override;

 private:
  int n_;
};

/// Edge subsets of a graph; independent iff acyclic.
class GraphicMatroid final : public MatroidOracle {
 public:
  explicit GraphicMatroid(WeightedGraph host);
  int groundSize() const override { return host_.edgeCount(); }
  bool isIndependent(std::span<const Element> set) const override;
  std::vector<char> exchangeRow(std::span<const Element> current, Element removed) const override;
  const WeightedGraph& host() const { return host_; }

 private:
  WeightedGraph host_;
};

/// Element x lies in part partOf[x]; a set is independent iff it takes at
/// most capacities[p] elements of each part p.
class PartitionMatroid final : public MatroidOracle {
 public:
  /// Throws Error(InvalidArgument) on part ids out of range or negative capacities.
  PartitionMatroid(std::vector<int> partOf, std::vector<int> capacities);
  int groundSize() const override { return static_cast<int>(partOf_.size()); }
  bool isIndependent(std::span<const Element> set) const override;
  std::vector<char> exchangeRow(std::span<const Element> current, Element removed) const override;

 private:
  std::vector<int> partOf_;
  std::vector<int> capacities_;
};

/// Independent sets of `base` with at most k elements.
class TruncatedMatroid final : public MatroidOracle {
 public:
  TruncatedMatroid(MatroidPtr base, int k);
  int groundSize() const override { return base_->groundSize(); }
  bool isIndependent(std::span<const Element> set) const override;
  std::vector<char> exchangeRow(std::span<const Element> current, Element removed) const override;

 private:
  MatroidPtr base_;
  int k_;
};

/// Throws Error(InvalidArgument) unless 0 <= k <= groundSize.
MatroidPtr truncate(MatroidPtr m, int k);

struct CommonBase {
  std::vector<Element> elements;  // ascending
  Weight weight = 0;
};

/// Minimum-weight set of k elements independent in both matroids, or nullopt
/// when the largest common independent set is smaller than k. Grows the
/// solution one element at a time along shortest augmenting paths of the
/// exchange graph, ordered by (weight, arc count, sink index).
///
/// Throws Error(GroundSetMismatch) when the ground sets or the weight vector
/// differ in size, Error(InvalidArgument) for negative k.
std::optional<CommonBase> minWeightCommonBase(const MatroidOracle& m1, const MatroidOracle& m2,
                                              std::span<const Weight> weights, int k);

}  // namespace treematch
