#include "treematch/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "treematch/error.hpp"
#include "treematch/matching.hpp"
#include "treematch/pmst.hpp"
#include "treematch/sbst.hpp"

namespace treematch {

// --- rotation systems ------------------------------------------------------

void validateRotation(const WeightedGraph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.order.size()) != g.vertexCount()) {
    throw Error(ErrorCode::BadRotation, "rotation covers " + std::to_string(rot.order.size()) +
                                            " of " + std::to_string(g.vertexCount()) + " vertices");
  }
  for (Vertex v = 0; v < g.vertexCount(); ++v) {
    std::array<EdgeId, 3> given = rot.order[v];
    std::sort(given.begin(), given.end());
    auto inc = g.incident(v);
    if (inc.size() != 3 || !std::equal(given.begin(), given.end(), inc.begin())) {
      throw Error(ErrorCode::BadRotation,
                  "rotation at vertex " + std::to_string(v) + " is not a permutation of its edges");
    }
  }
}

RotationSystem ascendingRotation(const WeightedGraph& g) {
  RotationSystem rot;
  rot.order.resize(g.vertexCount());
  for (Vertex v = 0; v < g.vertexCount(); ++v) {
    auto inc = g.incident(v);
    if (inc.size() != 3) throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(inc.size()));
    std::copy(inc.begin(), inc.end(), rot.order[v].begin());
  }
  return rot;
}

RotationSystem readRotation(std::istream& in, int vertexCount) {
  RotationSystem rot;
  rot.order.resize(vertexCount);
  std::vector<char> given(vertexCount, 0);
  std::string text;
  int lineNo = 0;
  auto bad = [&](const std::string& what) {
    throw Error(ErrorCode::BadRotation, "line " + std::to_string(lineNo) + ": " + what);
  };
  while (std::getline(in, text)) {
    ++lineNo;
    std::istringstream ls(text);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag != "r") bad("unknown line type '" + tag + "'");
    int v = -1;
    std::array<EdgeId, 3> edges{};
    if (!(ls >> v >> edges[0] >> edges[1] >> edges[2])) bad("expected 'r <v> <e1> <e2> <e3>'");
    std::string extra;
    if (ls >> extra) bad("trailing token '" + extra + "'");
    if (v < 0 || v >= vertexCount) bad("vertex out of range");
    if (given[v]) bad("vertex " + std::to_string(v) + " listed twice");
    given[v] = 1;
    rot.order[v] = edges;
  }
  for (Vertex v = 0; v < vertexCount; ++v) {
    if (!given[v]) throw Error(ErrorCode::BadRotation, "no rotation for vertex " + std::to_string(v));
  }
  return rot;
}

RotationSystem readRotationFile(const std::string& path, int vertexCount) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadRotation, "cannot open " + path);
  return readRotation(in, vertexCount);
}

void writeRotation(std::ostream& out, const RotationSystem& rot) {
  for (std::size_t v = 0; v < rot.order.size(); ++v) {
    out << "r " << v << ' ' << rot.order[v][0] << ' ' << rot.order[v][1] << ' ' << rot.order[v][2]
        << '\n';
  }
}

// --- HC -> MinPMST -----------------------------------------------------------

std::string HcTag::name() const {
  if (kind == Kind::Center) return "center(" + std::to_string(source) + ")";
  return "port(" + std::to_string(source) + "," + std::to_string(port) + ")";
}

namespace {

// Port receiving the first / second copy of the edge at rotation position i
// (1-based): merging u'4,u'5 -> port 1, u'6,u'1 -> port 2, u'2,u'3 -> port 3.
constexpr int kFirstPort[4] = {0, 2, 3, 1};
constexpr int kSecondPort[4] = {0, 3, 1, 2};

int rotationPosition(const RotationSystem& rot, Vertex v, EdgeId e) {
  const auto& order = rot.order[v];
  return static_cast<int>(std::find(order.begin(), order.end(), e) - order.begin()) + 1;
}

}  // namespace

HcReduction reduceHcToMinPmst(const WeightedGraph& g, const RotationSystem& rot) {
  const int n = g.vertexCount();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 3) {
      throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  if (std::holds_alternative<OddCycle>(bipartitionOf(g))) {
    throw Error(ErrorCode::NotBipartite, "input graph has an odd cycle");
  }
  if (!isConnected(g)) throw Error(ErrorCode::Disconnected, "input graph is not connected");
  validateRotation(g, rot);

  HcReduction r;
  r.source = g;
  r.rotation = rot;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    r.tagOf.push_back({HcTag::Kind::Center, u, 0});
    for (int i = 1; i <= 3; ++i) {
      r.tagOf.push_back({HcTag::Kind::Port, u, i});
      edges.push_back({4 * u, 4 * u + i, 0});
      r.edgeOrigin.push_back(-1);
    }
  }
  for (EdgeId id = 0; id < g.edgeCount(); ++id) {
    const Edge& e = g.edge(id);
    int i = rotationPosition(rot, e.u, id);
    int j = rotationPosition(rot, e.v, id);
    edges.push_back({4 * e.u + kFirstPort[i], 4 * e.v + kSecondPort[j], 1});
    edges.push_back({4 * e.u + kSecondPort[i], 4 * e.v + kFirstPort[j], 1});
    r.edgeOrigin.push_back(id);
    r.edgeOrigin.push_back(id);
  }
  r.outputGraph = WeightedGraph(4 * n, std::move(edges));

  for (Vertex v = 0; v < 4 * n; ++v) {
    if (r.outputGraph.degree(v) != 3) throw std::logic_error("HC reduction output is not cubic");
  }
  if (std::holds_alternative<OddCycle>(bipartitionOf(r.outputGraph))) {
    throw std::logic_error("HC reduction output is not bipartite");
  }
  return r;
}

HcReduction completeWithWeightTwo(const HcReduction& r) {
  HcReduction out = r;
  const int n = r.outputGraph.vertexCount();
  std::vector<Edge> extra;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!r.outputGraph.hasEdge(u, v)) extra.push_back({u, v, 2});
    }
  }
  out.outputGraph = r.outputGraph.withAddedEdges(extra);
  out.edgeOrigin.resize(out.outputGraph.edgeCount(), -1);
  return out;
}

EdgeSet mapHcToTree(const HcReduction& r, const VertexCycle& x) {
  if (!isHamiltonianCycle(r.source, x)) {
    throw Error(ErrorCode::NotHamiltonian, "vertex sequence is not a Hamiltonian cycle of the input");
  }
  const WeightedGraph& out = r.outputGraph;
  const int n = static_cast<int>(x.order.size());
  std::vector<std::vector<EdgeId>> copies(r.source.edgeCount());
  for (EdgeId id = 0; id < out.edgeCount(); ++id) {
    if (r.edgeOrigin[id] >= 0) copies[r.edgeOrigin[id]].push_back(id);
  }
  auto portAt = [&](EdgeId id, Vertex sourceVertex) {
    const Edge& e = out.edge(id);
    return r.tagOf[e.u].source == sourceVertex ? e.u : e.v;
  };
  auto cycleEdge = [&](int k) {
    return *r.source.findEdge(x.order[k % n], x.order[(k + 1) % n]);
  };

  // The first pick avoids both ports used by copies of the closing edge.
  const Vertex s = x.order[0];
  std::vector<Vertex> closingPorts;
  for (EdgeId id : copies[cycleEdge(n - 1)]) closingPorts.push_back(portAt(id, s));
  std::vector<EdgeId> chosen;
  for (EdgeId id : copies[cycleEdge(0)]) {
    if (std::find(closingPorts.begin(), closingPorts.end(), portAt(id, s)) == closingPorts.end()) {
      chosen.push_back(id);
      break;
    }
  }
  for (int k = 1; k < n; ++k) {
    const Vertex here = x.order[k];
    const Vertex taken = portAt(chosen.back(), here);
    for (EdgeId id : copies[cycleEdge(k)]) {
      if (portAt(id, here) != taken) {
        chosen.push_back(id);
        break;
      }
    }
  }
  if (static_cast<int>(chosen.size()) != n) throw std::logic_error("no disjoint copy available");

  std::vector<char> covered(out.vertexCount(), 0);
  for (EdgeId id : chosen) covered[out.edge(id).u] = covered[out.edge(id).v] = 1;
  for (Vertex u = 0; u < r.source.vertexCount(); ++u) {
    for (int i = 1; i <= 3; ++i) {
      if (!covered[4 * u + i]) chosen.push_back(*out.findEdge(4 * u, 4 * u + i));
    }
  }
  Matching m = Matching::fromEdges(out, EdgeSet(std::move(chosen)));
  EdgeSet tree = buildTreeContainingMatching(out, m);
  if (out.weightOf(tree) != r.source.vertexCount()) {
    throw std::logic_error("HC tree weight differs from the vertex count");
  }
  return tree;
}

// --- 3-SAT -> SBST -------------------------------------------------------------

namespace {

class GraphBuilder {
 public:
  Vertex add(std::string tag) {
    tags_.push_back(std::move(tag));
    return static_cast<Vertex>(tags_.size()) - 1;
  }
  EdgeId link(Vertex a, Vertex b) {
    edges_.push_back({a, b, 0});
    return static_cast<EdgeId>(edges_.size()) - 1;
  }
  int vertexCount() const { return static_cast<int>(tags_.size()); }
  std::vector<std::string> takeTags() { return std::move(tags_); }
  std::vector<Edge> takeEdges() { return std::move(edges_); }

 private:
  std::vector<std::string> tags_;
  std::vector<Edge> edges_;
};

std::string idx(int a) { return "[" + std::to_string(a) + "]"; }
std::string idx(int a, int b) { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; }

bool literalTrue(int lit, const Assignment& a) { return (lit > 0) == (a[std::abs(lit) - 1] != 0); }

}  // namespace

SatReduction reduceSatToSbst(const CnfLayout& layout) {
  validateLayout(layout);
  const CnfFormula& f = layout.formula;
  const int n = f.variableCount;
  const int m = static_cast<int>(f.clauses.size());
  SatReduction r;
  r.layout = layout;
  GraphBuilder b;

  StartTree& st = r.start;
  st.s1 = b.add("s1");
  st.p0 = b.add("p0");
  st.p1 = b.add("p1");
  st.p2 = b.add("p2");
  st.q1 = b.add("q1");
  st.q2 = b.add("q2");
  st.s2 = b.add("s2");
  st.s3 = b.add("s3");
  b.link(st.s1, st.p0);
  b.link(st.p0, st.p1);
  b.link(st.p1, st.p2);
  b.link(st.p2, st.q1);
  b.link(st.q1, st.s2);
  b.link(st.p2, st.q2);
  b.link(st.q2, st.s3);

  Vertex previous = st.p0;
  for (int i = 1; i <= n; ++i) {
    VariableGadget vg;
    const int kin = layout.insideCount(i - 1);
    const int kout = layout.outsideCount(i - 1);
    std::vector<Vertex> cycle;
    vg.u = b.add("u" + idx(i));
    cycle.push_back(vg.u);
    vg.in0 = b.add("u_in" + idx(i, 0));
    cycle.push_back(vg.in0);
    for (int k = 1; k <= kin; ++k) {
      vg.inPositive.push_back(b.add("u_in" + idx(i, k)));
      vg.inNegative.push_back(b.add("ubar_in" + idx(i, k)));
      cycle.push_back(vg.inPositive.back());
      cycle.push_back(vg.inNegative.back());
    }
    vg.trueEnd = b.add("uT" + idx(i));
    vg.falseEnd = b.add("uF" + idx(i));
    cycle.push_back(vg.trueEnd);
    cycle.push_back(vg.falseEnd);
    vg.outPositive.resize(kout);
    vg.outNegative.resize(kout);
    for (int k = kout; k >= 1; --k) {
      vg.outPositive[k - 1] = b.add("u_out" + idx(i, k));
      vg.outNegative[k - 1] = b.add("ubar_out" + idx(i, k));
      cycle.push_back(vg.outPositive[k - 1]);
      cycle.push_back(vg.outNegative[k - 1]);
    }
    vg.out0 = b.add("u_out" + idx(i, 0));
    cycle.push_back(vg.out0);
    for (std::size_t c = 0; c < cycle.size(); ++c) b.link(cycle[c], cycle[(c + 1) % cycle.size()]);

    vg.hub = b.add("u0" + idx(i));
    vg.end = b.add("uend" + idx(i));
    vg.hubPendant = b.add("u0'" + idx(i));
    vg.hubLeaf = b.add("u0''" + idx(i));
    b.link(vg.hub, vg.in0);
    b.link(vg.hub, vg.out0);
    b.link(vg.end, vg.trueEnd);
    b.link(vg.end, vg.falseEnd);
    b.link(vg.hub, vg.hubPendant);
    b.link(vg.hubPendant, vg.hubLeaf);

    b.link(previous, vg.u);
    vg.joint = b.add("joint" + idx(i, i + 1));
    b.link(vg.end, vg.joint);
    previous = vg.joint;
    r.variables.push_back(std::move(vg));
  }

  auto position = [&](int var, ClauseSide side, Occurrence o) {
    const auto& order = side == ClauseSide::Inside ? layout.insideOrder[var] : layout.outsideOrder[var];
    return static_cast<int>(std::find(order.begin(), order.end(), o) - order.begin());
  };
  for (int j = 1; j <= m; ++j) {
    ClauseGadget cg;
    cg.literal[0] = b.add("c" + idx(j, 1));
    cg.between[0] = b.add("c" + idx(j, 12));
    cg.literal[1] = b.add("c" + idx(j, 2));
    cg.between[1] = b.add("c" + idx(j, 23));
    cg.literal[2] = b.add("c" + idx(j, 3));
    cg.between[2] = b.add("c" + idx(j, 31));
    cg.tail = b.add("c" + idx(j));
    cg.tailJoint = b.add("c'" + idx(j));
    for (int l = 0; l < 3; ++l) {
      b.link(cg.literal[l], cg.between[l]);
      b.link(cg.between[l], cg.literal[(l + 1) % 3]);
    }
    b.link(cg.tail, cg.tailJoint);
    b.link(cg.tailJoint, cg.between[2]);
    const ClauseSide side = layout.clauseSide[j - 1];
    for (int l = 0; l < 3; ++l) {
      const int lit = f.clauses[j - 1][l];
      const int var = std::abs(lit) - 1;
      const int k = position(var, side, Occurrence{j - 1, l});
      const VariableGadget& vg = r.variables[var];
      const auto& pool = side == ClauseSide::Inside ? (lit > 0 ? vg.inPositive : vg.inNegative)
                                                    : (lit > 0 ? vg.outPositive : vg.outNegative);
      cg.attachment[l] = pool[k];
      cg.attachmentEdge[l] = b.link(cg.literal[l], cg.attachment[l]);
    }
    r.clauses.push_back(cg);
  }

  const int count = b.vertexCount();
  r.tagOf = b.takeTags();
  r.outputGraph = WeightedGraph(count, b.takeEdges());
  if (count != 10 * n + 14 * m + 8) throw std::logic_error("SAT reduction vertex count mismatch");
  for (Vertex v = 0; v < count; ++v) {
    if (r.outputGraph.degree(v) > 3) throw std::logic_error("SAT reduction output is not subcubic");
  }
  return r;
}

EdgeSet mapAssignmentToSbTree(const SatReduction& r, const Assignment& a) {
  const CnfFormula& f = r.layout.formula;
  if (!satisfies(f, a)) throw Error(ErrorCode::NotSatisfying, "assignment falsifies a clause");
  const WeightedGraph& g = r.outputGraph;
  std::vector<char> drop(g.edgeCount(), 0);
  auto dropEdge = [&](Vertex p, Vertex q) { drop[*g.findEdge(p, q)] = 1; };
  for (int i = 0; i < f.variableCount; ++i) {
    const VariableGadget& vg = r.variables[i];
    if (a[i]) {
      dropEdge(vg.u, vg.in0);
      dropEdge(vg.hub, vg.out0);
      dropEdge(vg.falseEnd, vg.end);
    } else {
      dropEdge(vg.u, vg.out0);
      dropEdge(vg.hub, vg.in0);
      dropEdge(vg.trueEnd, vg.end);
    }
  }
  for (std::size_t j = 0; j < r.clauses.size(); ++j) {
    const ClauseGadget& cg = r.clauses[j];
    int chosen = 0;
    while (!literalTrue(f.clauses[j][chosen], a)) ++chosen;
    for (int l = 0; l < 3; ++l) {
      if (l != chosen) drop[cg.attachmentEdge[l]] = 1;
    }
    dropEdge(cg.literal[chosen], cg.between[chosen]);
  }
  std::vector<EdgeId> kept;
  for (EdgeId id = 0; id < g.edgeCount(); ++id) {
    if (!drop[id]) kept.push_back(id);
  }
  EdgeSet tree(std::move(kept));
  if (!isStronglyBalanced(asBipartitionedTree(g, tree))) {
    throw std::logic_error("assignment tree is not strongly balanced");
  }
  return tree;
}

Assignment extractAssignmentFromTree(const SatReduction& r, const EdgeSet& t) {
  const WeightedGraph& g = r.outputGraph;
  std::optional<SbstCertificate> cert;
  try {
    cert = isStronglyBalanced(asBipartitionedTree(g, t));
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedTree, e.what());
  }
  if (!cert) throw Error(ErrorCode::NotStronglyBalanced, "tree is not strongly balanced");
  Assignment a;
  for (std::size_t i = 0; i < r.variables.size(); ++i) {
    const VariableGadget& vg = r.variables[i];
    const bool viaIn = t.contains(*g.findEdge(vg.u, vg.in0));
    const bool viaOut = t.contains(*g.findEdge(vg.u, vg.out0));
    if (viaIn == viaOut) {
      throw Error(ErrorCode::MalformedTree,
                  "variable " + std::to_string(i + 1) + " gadget enters through both or neither side");
    }
    a.push_back(viaOut ? 1 : 0);
  }
  return a;
}

WeightedGraph replaceLeaves(const WeightedGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  int n = g.vertexCount();
  for (Vertex v = 0; v < g.vertexCount(); ++v) {
    if (g.degree(v) > 3) {
      throw Error(ErrorCode::NotSubcubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  for (Vertex leaf = 0; leaf < g.vertexCount(); ++leaf) {
    if (g.degree(leaf) != 1) continue;
    const Vertex a = n, b = n + 1, c = n + 2, d = n + 3;
    n += 4;
    edges.push_back({leaf, a, 0});
    edges.push_back({a, b, 0});
    edges.push_back({b, c, 0});
    edges.push_back({c, d, 0});
    edges.push_back({d, a, 0});
  }
  return WeightedGraph(n, std::move(edges));
}

}  // namespace treematch
