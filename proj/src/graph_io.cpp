#include "treematch/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "treematch/error.hpp"

namespace treematch {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

WeightedGraph readGraph(std::istream& in) {
  std::string line;
  int lineNo = 0;
  int n = -1;
  int m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineNo;
    if (blank(line)) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n != -1) fail(lineNo, "duplicate problem line");
      if (!(ls >> n >> m) || n < 1 || m < 0) fail(lineNo, "expected 'p <n> <m>' with n >= 1");
    } else if (tag == "e") {
      if (n == -1) fail(lineNo, "edge before problem line");
      Edge e;
      if (!(ls >> e.u >> e.v)) fail(lineNo, "expected 'e <u> <v> [<w>]'");
      if (!(ls >> e.weight)) {
        if (!ls.eof()) fail(lineNo, "malformed weight");
        e.weight = 0;
      }
      std::string extra;
      if (ls >> extra) fail(lineNo, "trailing token '" + extra + "'");
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) fail(lineNo, "vertex id out of range");
      if (e.u == e.v) fail(lineNo, "self-loop");
      edges.push_back(e);
    } else {
      fail(lineNo, "unknown line type '" + tag + "'");
    }
  }
  if (n == -1) throw Error(ErrorCode::ParseError, "missing problem line");
  if (static_cast<int>(edges.size()) != m) {
    throw Error(ErrorCode::ParseError, "problem line declares " + std::to_string(m) +
                                           " edges but " + std::to_string(edges.size()) +
                                           " were given");
  }
  try {
    return WeightedGraph(n, std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

WeightedGraph parseGraph(const std::string& text) {
  std::istringstream in(text);
  return readGraph(in);
}

WeightedGraph readGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return readGraph(in);
}

void writeGraph(std::ostream& out, const WeightedGraph& g) {
  out << "p " << g.vertexCount() << ' ' << g.edgeCount() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.weight << '\n';
}

std::string formatGraph(const WeightedGraph& g) {
  std::ostringstream out;
  writeGraph(out, g);
  return out.str();
}

void writeGraphFile(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  writeGraph(out, g);
}

}  // namespace treematch
