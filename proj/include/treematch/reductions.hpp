#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "treematch/cnf.hpp"
#include "treematch/graph.hpp"

namespace treematch {

// ---------------------------------------------------------------------------
// Hamiltonian cycle in cubic bipartite graphs -> two/three-valued MinPMST

/// Clockwise order of the three edges around each vertex of a cubic graph.
struct RotationSystem {
  std::vector<std::array<EdgeId, 3>> order;
};

/// Throws Error(BadRotation) unless order[v] is a permutation of v's edges.
void validateRotation(const WeightedGraph& g, const RotationSystem& rot);

/// Rotation with every vertex's edges in ascending id order.
RotationSystem ascendingRotation(const WeightedGraph& g);

// Rotation file: one line `r <v> <e1> <e2> <e3>` per vertex, `c` comments.
RotationSystem readRotation(std::istream& in, int vertexCount);
RotationSystem readRotationFile(const std::string& path, int vertexCount);
void writeRotation(std::ostream& out, const RotationSystem& rot);

struct HcTag {
  enum class Kind { Center, Port };
  Kind kind = Kind::Center;
  Vertex source = 0;  // vertex of the input graph
  int port = 0;       // 1..3 for ports, 0 for the centre
  std::string name() const;
  friend bool operator==(const HcTag&, const HcTag&) = default;
};

/// Output vertex 4u is the centre of input vertex u, 4u + i its port i.
/// Every input edge {u, v} becomes two weight-1 port edges; each vertex keeps
/// three weight-0 centre-port edges.
struct HcReduction {
  WeightedGraph source;
  RotationSystem rotation;
  WeightedGraph outputGraph;
  std::vector<HcTag> tagOf;
  /// Input edge behind each output edge, -1 for weight-0 and weight-2 edges.
  std::vector<EdgeId> edgeOrigin;
};

/// Throws Error(NotCubic), Error(NotBipartite), Error(Disconnected) or
/// Error(BadRotation).
HcReduction reduceHcToMinPmst(const WeightedGraph& g, const RotationSystem& rot);

/// Adds every absent vertex pair as a weight-2 edge, sorted by (u, v).
HcReduction completeWithWeightTwo(const HcReduction& r);

/// Spanning tree of r.outputGraph of weight |V| containing a perfect
/// matching, built from a Hamiltonian cycle of r.source.
/// Throws Error(NotHamiltonian).
EdgeSet mapHcToTree(const HcReduction& r, const VertexCycle& x);

// ---------------------------------------------------------------------------
// Planar 3-SAT -> strongly balanced spanning tree

struct VariableGadget {
  Vertex u = 0, in0 = 0, out0 = 0, trueEnd = 0, falseEnd = 0;
  Vertex hub = 0, end = 0, hubPendant = 0, hubLeaf = 0, joint = 0;
  // Index k - 1 holds the k-th occurrence vertex of each kind.
  std::vector<Vertex> inPositive, inNegative, outPositive, outNegative;
};

struct ClauseGadget {
  std::array<Vertex, 3> literal{};  // c_{j,1..3}
  std::array<Vertex, 3> between{};  // c_{j,12}, c_{j,23}, c_{j,31}
  Vertex tail = 0;                  // c_j
  Vertex tailJoint = 0;             // c'_j
  std::array<Vertex, 3> attachment{};
  std::array<EdgeId, 3> attachmentEdge{};
};

struct StartTree {
  Vertex s1 = 0, p0 = 0, p1 = 0, p2 = 0, q1 = 0, q2 = 0, s2 = 0, s3 = 0;
};

struct SatReduction {
  CnfLayout layout;
  WeightedGraph outputGraph;
  std::vector<std::string> tagOf;
  StartTree start;
  std::vector<VariableGadget> variables;
  std::vector<ClauseGadget> clauses;
};

/// Throws Error(BadLayout) via validateLayout.
SatReduction reduceSatToSbst(const CnfLayout& layout);

/// Strongly balanced spanning tree for a satisfying assignment. Each clause
/// hangs off its smallest true literal slot. Throws Error(NotSatisfying).
EdgeSet mapAssignmentToSbTree(const SatReduction& r, const Assignment& a);

/// Reads variable i as true when the gadget keeps {u_i, out0} and drops
/// {u_i, in0}. Throws Error(NotStronglyBalanced) or Error(MalformedTree).
Assignment extractAssignmentFromTree(const SatReduction& r, const EdgeSet& t);

/// Hangs a 4-cycle a-b-c-d-a off every degree-1 vertex via an edge to a, in
/// ascending leaf order; new edges weigh 0. Throws Error(NotSubcubic).
WeightedGraph replaceLeaves(const WeightedGraph& g);

}  // namespace treematch
