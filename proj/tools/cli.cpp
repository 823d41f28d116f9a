#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "treematch/cnf.hpp"
#include "treematch/error.hpp"
#include "treematch/generators.hpp"
#include "treematch/graph.hpp"
#include "treematch/graph_io.hpp"
#include "treematch/matching.hpp"
#include "treematch/oracle.hpp"
#include "treematch/pmst.hpp"
#include "treematch/reductions.hpp"
#include "treematch/sbst.hpp"

namespace treematch::cli {

namespace {

using json = nlohmann::json;

json edgeJson(const WeightedGraph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  return {{"id", id}, {"u", e.u}, {"v", e.v}, {"w", e.weight}};
}

template <class Ids>
json edgeList(const WeightedGraph& g, const Ids& ids) {
  json list = json::array();
  for (EdgeId id : ids) list.push_back(edgeJson(g, id));
  return list;
}

json idList(const EdgeSet& set) { return json(set.ids()); }

json report(const std::string& status, json value, json edges, json certificate) {
  return {{"status", status}, {"value", std::move(value)}, {"edges", std::move(edges)},
          {"certificate", std::move(certificate)}};
}

json infeasibleReport(const Infeasible& inf) {
  return report("infeasible", nullptr, json::array(), {{"reason", toString(inf.reason)}});
}

std::string sideName(Side s) { return s == Side::Plus ? "plus" : "minus"; }

json certificateJson(const SbstCertificate& c) {
  return {{"plusSide", sideName(c.plusSide)},
          {"uniqueLeaf", c.uniqueLeaf},
          {"matching", idList(c.alternatingMatching.edges())}};
}

// Whitespace-separated nonnegative integers; '#' starts a comment.
std::vector<int> readIntegers(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::vector<int> ids;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        int id = std::stoi(tok, &used);
        if (used != tok.size() || id < 0) throw std::invalid_argument(tok);
        ids.push_back(id);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, path + " line " + std::to_string(lineNo) +
                                               ": bad integer '" + tok + "'");
      }
    }
  }
  return ids;
}

EdgeSet readEdgeIds(const std::string& path) { return EdgeSet(readIntegers(path)); }

std::vector<int> parseIntList(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "bad integer '" + item + "'");
    }
  }
  return out;
}

void writeText(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << text;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// --- solve commands -----------------------------------------------------------

int cmdPmstCheck(const std::string& path, std::ostream& out) {
  WeightedGraph g = readGraphFile(path);
  auto result = pmstFeasible(g);
  if (auto* inf = std::get_if<Infeasible>(&result)) {
    emit(out, infeasibleReport(*inf));
    return kExitInfeasible;
  }
  const EdgeSet& tree = std::get<EdgeSet>(result);
  auto matching = treePerfectMatching(asBipartitionedTree(g, tree));
  emit(out, report("feasible", g.weightOf(tree), edgeList(g, tree),
                   {{"matching", idList(matching->edges())}}));
  return kExitOk;
}

int cmdMinPmst2(const std::string& path, std::ostream& out) {
  WeightedGraph g = readGraphFile(path);
  TwoValuedSolution sol = minPmstTwoValued(g);
  auto matching = treePerfectMatching(asBipartitionedTree(g, sol.tree));
  emit(out, report("optimal", sol.totalWeight, edgeList(g, sol.tree),
                   {{"heavyEdges", sol.heavyEdges}, {"matching", idList(matching->edges())}}));
  return kExitOk;
}

int cmdSbstCheck(const std::string& path, const std::string& treePath, bool search,
                 std::ostream& out) {
  WeightedGraph g = readGraphFile(path);
  if (search) {
    auto result = bruteForceMinSbst(g);
    if (auto* inf = std::get_if<Infeasible>(&result)) {
      emit(out, infeasibleReport(*inf));
      return kExitInfeasible;
    }
    const auto& sol = std::get<SbstSolution>(result);
    emit(out, report("strongly-balanced", sol.weight, edgeList(g, sol.tree),
                     certificateJson(sol.certificate)));
    return kExitOk;
  }
  EdgeSet tree;
  if (!treePath.empty()) {
    tree = readEdgeIds(treePath);
  } else {
    std::vector<EdgeId> all(g.edgeCount());
    for (EdgeId id = 0; id < g.edgeCount(); ++id) all[id] = id;
    tree = EdgeSet(std::move(all));
  }
  BipartitionedTree t = asBipartitionedTree(g, tree);
  auto degreeCheck = isStronglyBalanced(t);
  auto alternating = alternatingCharacterization(t);
  json cert = degreeCheck ? certificateJson(*degreeCheck) : json(nullptr);
  if (cert.is_object()) cert["alternatingLeaf"] = alternating ? json(alternating->uniqueLeaf) : json(nullptr);
  emit(out, report(degreeCheck ? "strongly-balanced" : "not-strongly-balanced", g.weightOf(tree),
                   edgeList(g, tree), cert));
  return degreeCheck ? kExitOk : kExitInfeasible;
}

int cmdMinSbstBipartite(const std::string& path, std::ostream& out) {
  WeightedGraph g = readGraphFile(path);
  auto result = minSbstBipartite(g);
  if (auto* inf = std::get_if<Infeasible>(&result)) {
    emit(out, infeasibleReport(*inf));
    return kExitInfeasible;
  }
  const auto& sol = std::get<SbstSolution>(result);
  emit(out, report("optimal", sol.weight, edgeList(g, sol.tree), certificateJson(sol.certificate)));
  return kExitOk;
}

int cmdAug(const std::string& path, const std::string& hostKind, const std::string& plusList,
           std::ostream& out) {
  WeightedGraph h = readGraphFile(path);
  const int n = h.vertexCount();
  HostKind host = HostKind::complete(n);
  if (hostKind == "bipartite") {
    std::vector<Vertex> plus;
    if (plusList.empty()) {
      for (Vertex v = 0; v < n / 2; ++v) plus.push_back(v);
    } else {
      plus = parseIntList(plusList);
    }
    std::vector<char> isPlus(n, 0);
    for (Vertex v : plus) {
      if (v < 0 || v >= n) throw Error(ErrorCode::HostMismatch, "plus vertex out of range");
      isPlus[v] = 1;
    }
    std::vector<Vertex> minus;
    for (Vertex v = 0; v < n; ++v) {
      if (!isPlus[v]) minus.push_back(v);
    }
    host = HostKind::completeBipartite(plus, minus);
  }
  AugmentationResult r = greedyAugment(h, host);
  json added = json::array();
  for (auto [u, v] : r.addedEdges) added.push_back({u, v});
  std::vector<EdgeId> addedIds;
  for (EdgeId id = h.edgeCount(); id < r.augmented.edgeCount(); ++id) addedIds.push_back(id);
  emit(out, report("optimal", r.optValue, edgeList(r.augmented, addedIds),
                   {{"addedEdges", added}, {"matching", idList(r.finalMatching.edges())}}));
  return kExitOk;
}

// --- reductions -----------------------------------------------------------------

json hcTags(const HcReduction& r) {
  json tags = json::array();
  for (std::size_t v = 0; v < r.tagOf.size(); ++v) {
    const HcTag& t = r.tagOf[v];
    tags.push_back({{"vertex", v},
                    {"kind", t.kind == HcTag::Kind::Center ? "center" : "port"},
                    {"source", t.source},
                    {"port", t.port},
                    {"name", t.name()}});
  }
  return tags;
}

int cmdReduceHc(const std::string& graphPath, const std::string& rotPath, const std::string& prefix,
                bool complete, const std::string& cyclePath, std::ostream& out) {
  WeightedGraph g = readGraphFile(graphPath);
  RotationSystem rot = readRotationFile(rotPath, g.vertexCount());
  HcReduction r = reduceHcToMinPmst(g, rot);
  if (complete) r = completeWithWeightTwo(r);
  json meta = {{"reduction", "hc-to-minpmst"},
               {"sourceVertices", g.vertexCount()},
               {"sourceEdges", g.edgeCount()},
               {"completed", complete},
               {"threshold", g.vertexCount()},
               {"edgeOrigin", r.edgeOrigin}};
  json edges = json::array();
  if (!cyclePath.empty()) {
    VertexCycle x{readIntegers(cyclePath)};
    EdgeSet tree = mapHcToTree(r, x);
    meta["tree"] = idList(tree);
    edges = edgeList(r.outputGraph, tree);
  }
  writeGraphFile(prefix + ".graph", r.outputGraph);
  writeText(prefix + ".tags.json", hcTags(r).dump(2) + "\n");
  writeText(prefix + ".meta.json", meta.dump(2) + "\n");
  emit(out, report("ok", r.outputGraph.vertexCount(), edges,
                   {{"graph", prefix + ".graph"},
                    {"vertices", r.outputGraph.vertexCount()},
                    {"edges", r.outputGraph.edgeCount()}}));
  return kExitOk;
}

json satMeta(const SatReduction& r) {
  json variables = json::array();
  for (const VariableGadget& vg : r.variables) {
    variables.push_back({{"u", vg.u},
                         {"in0", vg.in0},
                         {"out0", vg.out0},
                         {"T", vg.trueEnd},
                         {"F", vg.falseEnd},
                         {"hub", vg.hub},
                         {"end", vg.end},
                         {"joint", vg.joint},
                         {"inPositive", vg.inPositive},
                         {"inNegative", vg.inNegative},
                         {"outPositive", vg.outPositive},
                         {"outNegative", vg.outNegative}});
  }
  json clauses = json::array();
  for (const ClauseGadget& cg : r.clauses) {
    clauses.push_back({{"literal", cg.literal},
                       {"between", cg.between},
                       {"tail", cg.tail},
                       {"tailJoint", cg.tailJoint},
                       {"attachment", cg.attachment},
                       {"attachmentEdge", cg.attachmentEdge}});
  }
  return {{"reduction", "sat-to-sbst"},
          {"variables", variables},
          {"clauses", clauses},
          {"start", {{"s1", r.start.s1}, {"s2", r.start.s2}, {"s3", r.start.s3}, {"p0", r.start.p0}}}};
}

int cmdReduceSat(const std::string& cnfPath, const std::string& prefix, const std::string& assign,
                 std::ostream& out) {
  CnfLayout layout = readCnfLayoutFile(cnfPath);
  SatReduction r = reduceSatToSbst(layout);
  json meta = satMeta(r);
  json edges = json::array();
  if (!assign.empty()) {
    Assignment a;
    for (char c : assign) {
      if (c == '0' || c == '1') {
        a.push_back(c - '0');
      } else if (c != ',' && c != ' ') {
        throw Error(ErrorCode::InvalidArgument, "assignment must be a string of 0/1 digits");
      }
    }
    EdgeSet tree = mapAssignmentToSbTree(r, a);
    meta["assignment"] = a;
    meta["tree"] = idList(tree);
    edges = edgeList(r.outputGraph, tree);
  }
  writeGraphFile(prefix + ".graph", r.outputGraph);
  writeText(prefix + ".tags.json", json(r.tagOf).dump(2) + "\n");
  writeText(prefix + ".meta.json", meta.dump(2) + "\n");
  emit(out, report("ok", r.outputGraph.vertexCount(), edges,
                   {{"graph", prefix + ".graph"},
                    {"vertices", r.outputGraph.vertexCount()},
                    {"edges", r.outputGraph.edgeCount()}}));
  return kExitOk;
}

int cmdReplaceLeaves(const std::string& path, const std::string& prefix, std::ostream& out) {
  WeightedGraph g = readGraphFile(path);
  WeightedGraph h = replaceLeaves(g);
  json tags = json::array();
  for (Vertex v = 0; v < h.vertexCount(); ++v) {
    tags.push_back(v < g.vertexCount() ? "v" + std::to_string(v)
                                       : "gadget" + std::to_string((v - g.vertexCount()) / 4) +
                                             "abcd"[(v - g.vertexCount()) % 4]);
  }
  writeGraphFile(prefix + ".graph", h);
  writeText(prefix + ".tags.json", tags.dump(2) + "\n");
  writeText(prefix + ".meta.json",
            json({{"reduction", "replace-leaves"},
                  {"originalVertices", g.vertexCount()},
                  {"gadgets", (h.vertexCount() - g.vertexCount()) / 4}})
                    .dump(2) +
                "\n");
  emit(out, report("ok", h.vertexCount(), json::array(),
                   {{"graph", prefix + ".graph"}, {"vertices", h.vertexCount()}, {"edges", h.edgeCount()}}));
  return kExitOk;
}

// --- generators and export ----------------------------------------------------------

int toInt(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad ") + what + " '" + s + "'");
  }
}

int cmdGen(const std::string& kind, const std::vector<std::string>& params,
           std::optional<std::uint64_t> seedOption, std::int64_t weight, const std::string& outPath,
           std::ostream& out) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw Error(ErrorCode::InvalidArgument, "gen " + kind + " expects " + std::to_string(lo) +
                                                  (lo == hi ? "" : "-" + std::to_string(hi)) +
                                                  " parameters");
    }
  };
  auto seedAt = [&](std::size_t pos) -> std::uint64_t {
    if (params.size() > pos) {
      if (seedOption) throw Error(ErrorCode::InvalidArgument, "seed given twice");
      try {
        return std::stoull(params[pos]);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::InvalidArgument, "bad seed '" + params[pos] + "'");
      }
    }
    if (!seedOption) throw Error(ErrorCode::InvalidArgument, "gen " + kind + " needs a seed");
    return *seedOption;
  };
  std::string text;
  if (kind == "complete") {
    need(1, 1);
    text = formatGraph(completeGraph(toInt(params[0], "vertex count"), weight));
  } else if (kind == "complete-bipartite") {
    need(2, 2);
    text = formatGraph(completeBipartiteGraph(toInt(params[0], "side"), toInt(params[1], "side"), weight));
  } else if (kind == "cube") {
    need(0, 1);
    text = formatGraph(hypercubeGraph(params.empty() ? 3 : toInt(params[0], "dimension")));
  } else if (kind == "cycle") {
    need(1, 1);
    text = formatGraph(cycleGraph(toInt(params[0], "vertex count"), weight));
  } else if (kind == "random") {
    need(2, 3);
    double p = 0;
    try {
      p = std::stod(params[1]);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "bad probability '" + params[1] + "'");
    }
    text = formatGraph(randomGraph(toInt(params[0], "vertex count"), p, seedAt(2)));
  } else if (kind == "random-cnf") {
    need(2, 3);
    text = formatCnfLayout(randomCnfLayout(toInt(params[0], "variable count"),
                                           toInt(params[1], "clause count"), seedAt(2)));
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown generator '" + kind + "'");
  }
  if (outPath.empty() || outPath == "-") {
    out << text;
  } else {
    writeText(outPath, text);
  }
  return kExitOk;
}

std::string dotEscape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

int cmdExportDot(const std::string& path, const std::string& treePath, const std::string& tagPath,
                 const std::string& outPath, std::ostream& out) {
  WeightedGraph g = readGraphFile(path);
  EdgeSet overlay;
  if (!treePath.empty()) overlay = readEdgeIds(treePath);
  std::vector<std::string> labels(g.vertexCount());
  for (Vertex v = 0; v < g.vertexCount(); ++v) labels[v] = std::to_string(v);
  if (!tagPath.empty()) {
    std::ifstream in(tagPath);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + tagPath);
    json tags;
    try {
      in >> tags;
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, tagPath + ": " + e.what());
    }
    if (!tags.is_array()) throw Error(ErrorCode::ParseError, tagPath + ": expected a JSON array");
    for (std::size_t v = 0; v < tags.size() && v < labels.size(); ++v) {
      if (tags[v].is_string()) labels[v] = tags[v].get<std::string>();
      else if (tags[v].is_object() && tags[v].contains("name")) labels[v] = tags[v]["name"].get<std::string>();
    }
  }
  std::ostringstream dot;
  dot << "graph G {\n";
  for (Vertex v = 0; v < g.vertexCount(); ++v) {
    dot << "  " << v << " [label=\"" << dotEscape(labels[v]) << "\"];\n";
  }
  for (EdgeId id = 0; id < g.edgeCount(); ++id) {
    const Edge& e = g.edge(id);
    dot << "  " << e.u << " -- " << e.v << " [label=\"" << e.weight << "\"";
    if (overlay.contains(id)) dot << ", style=bold, penwidth=3";
    dot << "];\n";
  }
  dot << "}\n";
  if (outPath.empty() || outPath == "-") {
    out << dot.str();
  } else {
    writeText(outPath, dot.str());
  }
  return kExitOk;
}

// --- oracle commands ---------------------------------------------------------------

int cmdOracle(const std::string& what, const std::string& path, const std::string& hostKind,
              std::int64_t cap, std::ostream& out) {
  if (what == "sat") {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    CnfFormula f = readCnf(in);
    auto a = bruteForceSat(f);
    if (!a) {
      emit(out, report("unsatisfiable", nullptr, json::array(), nullptr));
      return kExitInfeasible;
    }
    emit(out, report("satisfiable", nullptr, json::array(), {{"assignment", *a}}));
    return kExitOk;
  }
  WeightedGraph g = readGraphFile(path);
  if (what == "min-pmst") {
    auto r = bruteForceMinPmst(g, cap);
    if (auto* inf = std::get_if<Infeasible>(&r)) {
      emit(out, infeasibleReport(*inf));
      return kExitInfeasible;
    }
    const auto& opt = std::get<PmstOptimum>(r);
    emit(out, report("optimal", opt.weight, edgeList(g, opt.tree), nullptr));
    return kExitOk;
  }
  if (what == "min-sbst") {
    auto r = bruteForceMinSbst(g);
    if (auto* inf = std::get_if<Infeasible>(&r)) {
      emit(out, infeasibleReport(*inf));
      return kExitInfeasible;
    }
    const auto& sol = std::get<SbstSolution>(r);
    emit(out, report("optimal", sol.weight, edgeList(g, sol.tree), certificateJson(sol.certificate)));
    return kExitOk;
  }
  if (what == "opt-aug") {
    const int n = g.vertexCount();
    HostKind host = HostKind::complete(n);
    if (hostKind == "bipartite") {
      std::vector<Vertex> plus, minus;
      for (Vertex v = 0; v < n; ++v) (v < n / 2 ? plus : minus).push_back(v);
      host = HostKind::completeBipartite(plus, minus);
    }
    emit(out, report("optimal", bruteForceOptAug(g, host), json::array(), nullptr));
    return kExitOk;
  }
  if (what == "matching") {
    emit(out, report("optimal", bruteForceMaximumMatching(g), json::array(), nullptr));
    return kExitOk;
  }
  if (what == "count-trees") {
    auto r = enumerateSpanningTrees(g, [](std::span<const EdgeId>) {}, cap);
    emit(out, report(r.truncated ? "truncated" : "complete", r.visited, json::array(), nullptr));
    return r.truncated ? kExitInfeasible : kExitOk;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown oracle '" + what + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spanning trees with perfect matchings: solvers, checkers, reductions"};
  app.name("treematch");
  app.require_subcommand(1);

  std::string graph, tree, tags, outPath, host = "complete", plus, rotation, prefix, cycle, assign;
  std::string generator, oracleKind;
  std::vector<std::string> params;
  std::optional<std::uint64_t> seed;
  std::int64_t weight = 0;
  std::int64_t cap = kDefaultTreeCap;
  bool search = false, complete = false;

  auto* pmst = app.add_subcommand("pmst-check", "Spanning tree containing a perfect matching");
  pmst->add_option("graph", graph, "Graph file")->required();

  auto* minpmst = app.add_subcommand("minpmst2", "Two-valued MinPMST on complete or K_{a,a} hosts");
  minpmst->add_option("graph", graph, "Graph file")->required();

  auto* sbst = app.add_subcommand("sbst-check", "Check a tree for being strongly balanced");
  sbst->add_option("graph", graph, "Graph file")->required();
  sbst->add_option("--tree", tree, "File of tree edge ids (default: the graph itself)");
  sbst->add_flag("--search", search, "Search the graph for a strongly balanced spanning tree");

  auto* minsbst = app.add_subcommand("minsbst-bipartite", "Minimum strongly balanced spanning tree");
  minsbst->add_option("graph", graph, "Graph file")->required();

  auto* aug = app.add_subcommand("aug", "Greedy augmentation to a connected perfectly matchable graph");
  aug->add_option("graph", graph, "Graph file")->required();
  aug->add_option("--host", host, "complete | bipartite")->check(CLI::IsMember({"complete", "bipartite"}));
  aug->add_option("--plus", plus, "Comma-separated plus side of a bipartite host (default 0..n/2-1)");

  auto* reduce = app.add_subcommand("reduce", "Hardness reductions");
  reduce->require_subcommand(1);
  auto* hc = reduce->add_subcommand("hc-to-minpmst", "Cubic bipartite HC to MinPMST");
  hc->add_option("graph", graph, "Cubic bipartite graph file")->required();
  hc->add_option("rotation", rotation, "Rotation file")->required();
  hc->add_option("--out,-o", prefix, "Output prefix")->required();
  hc->add_flag("--complete", complete, "Add absent pairs with weight 2");
  hc->add_option("--cycle", cycle, "File with a Hamiltonian cycle (vertex ids) to map to a tree");
  auto* sat = reduce->add_subcommand("sat-to-sbst", "Planar 3-SAT to SBST");
  sat->add_option("cnf", graph, "CNF layout file")->required();
  sat->add_option("--out,-o", prefix, "Output prefix")->required();
  sat->add_option("--assign", assign, "Satisfying assignment as 0/1 digits to map to a tree");
  auto* leaves = reduce->add_subcommand("replace-leaves", "Replace leaves by 4-cycle gadgets");
  leaves->add_option("graph", graph, "Subcubic graph file")->required();
  leaves->add_option("--out,-o", prefix, "Output prefix")->required();

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->add_option("generator", generator,
                  "complete n | complete-bipartite a b | cube [d] | cycle n | random n p [seed] | "
                  "random-cnf n m [seed]")
      ->required();
  gen->add_option("params", params, "Generator parameters");
  gen->add_option("--seed", seed, "Seed for random generators");
  gen->add_option("--weight", weight, "Edge weight for deterministic graphs");
  gen->add_option("--out,-o", outPath, "Output file (default stdout)");

  auto* dot = app.add_subcommand("export-dot", "Graphviz export");
  dot->add_option("graph", graph, "Graph file")->required();
  dot->add_option("--tree", tree, "File of edge ids drawn bold");
  dot->add_option("--tags", tags, "JSON tag file for node labels");
  dot->add_option("--out,-o", outPath, "Output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference solvers");
  oracle->add_option("kind", oracleKind, "min-pmst | min-sbst | opt-aug | sat | matching | count-trees")
      ->required()
      ->check(CLI::IsMember({"min-pmst", "min-sbst", "opt-aug", "sat", "matching", "count-trees"}));
  oracle->add_option("file", graph, "Graph or CNF file")->required();
  oracle->add_option("--host", host, "complete | bipartite (opt-aug)")
      ->check(CLI::IsMember({"complete", "bipartite"}));
  oracle->add_option("--cap", cap, "Spanning tree cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (pmst->parsed()) return cmdPmstCheck(graph, out);
    if (minpmst->parsed()) return cmdMinPmst2(graph, out);
    if (sbst->parsed()) return cmdSbstCheck(graph, tree, search, out);
    if (minsbst->parsed()) return cmdMinSbstBipartite(graph, out);
    if (aug->parsed()) return cmdAug(graph, host, plus, out);
    if (hc->parsed()) return cmdReduceHc(graph, rotation, prefix, complete, cycle, out);
    if (sat->parsed()) return cmdReduceSat(graph, prefix, assign, out);
    if (leaves->parsed()) return cmdReplaceLeaves(graph, prefix, out);
    if (gen->parsed()) return cmdGen(generator, params, seed, weight, outPath, out);
    if (dot->parsed()) return cmdExportDot(graph, tree, tags, outPath, out);
    if (oracle->parsed()) return cmdOracle(oracleKind, graph, host, cap, out);
  } catch (const Error& e) {
    err << "treematch: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace treematch::cli
