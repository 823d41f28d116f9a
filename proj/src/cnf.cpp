#include "treematch/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "treematch/error.hpp"

namespace treematch {

bool satisfies(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.variableCount) {
    throw Error(ErrorCode::InvalidArgument, "assignment has " + std::to_string(a.size()) +
                                                " bits for " + std::to_string(f.variableCount) +
                                                " variables");
  }
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      int bit = a[std::abs(lit) - 1];
      if ((lit > 0) == (bit != 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

CnfLayout layoutWithSides(CnfFormula f, std::vector<ClauseSide> sides) {
  CnfLayout layout;
  layout.insideOrder.resize(f.variableCount);
  layout.outsideOrder.resize(f.variableCount);
  for (int j = 0; j < static_cast<int>(f.clauses.size()); ++j) {
    for (int s = 0; s < static_cast<int>(f.clauses[j].size()); ++s) {
      int var = std::abs(f.clauses[j][s]) - 1;
      if (var < 0 || var >= f.variableCount) continue;  // left for validateLayout
      auto& order = j < static_cast<int>(sides.size()) && sides[j] == ClauseSide::Outside
                        ? layout.outsideOrder
                        : layout.insideOrder;
      order[var].push_back({j, s});
    }
  }
  layout.formula = std::move(f);
  layout.clauseSide = std::move(sides);
  return layout;
}

CnfLayout defaultLayout(CnfFormula f) {
  std::vector<ClauseSide> sides(f.clauses.size(), ClauseSide::Inside);
  return layoutWithSides(std::move(f), std::move(sides));
}

void validateLayout(const CnfLayout& layout) {
  const CnfFormula& f = layout.formula;
  const int n = f.variableCount;
  const int m = static_cast<int>(f.clauses.size());
  auto bad = [](const std::string& what) { throw Error(ErrorCode::BadLayout, what); };
  if (n < 1) bad("at least one variable is required");
  if (static_cast<int>(layout.clauseSide.size()) != m) bad("clause side count differs from clause count");
  if (static_cast<int>(layout.insideOrder.size()) != n ||
      static_cast<int>(layout.outsideOrder.size()) != n) {
    bad("occurrence orders must be given for every variable");
  }
  for (int j = 0; j < m; ++j) {
    if (f.clauses[j].size() != 3) bad("clause " + std::to_string(j + 1) + " does not have 3 literals");
    for (int lit : f.clauses[j]) {
      if (lit == 0 || std::abs(lit) > n) bad("clause " + std::to_string(j + 1) + " has literal " + std::to_string(lit));
    }
  }
  std::vector<std::vector<int>> seen(m, std::vector<int>(3, 0));
  for (int side = 0; side < 2; ++side) {
    const auto& orders = side == 0 ? layout.insideOrder : layout.outsideOrder;
    const ClauseSide expected = side == 0 ? ClauseSide::Inside : ClauseSide::Outside;
    for (int var = 0; var < n; ++var) {
      for (const Occurrence& o : orders[var]) {
        if (o.clause < 0 || o.clause >= m || o.slot < 0 || o.slot >= 3) bad("occurrence out of range");
        if (std::abs(f.clauses[o.clause][o.slot]) != var + 1) {
          bad("occurrence " + std::to_string(o.clause + 1) + ":" + std::to_string(o.slot + 1) +
              " is not a literal of variable " + std::to_string(var + 1));
        }
        if (layout.clauseSide[o.clause] != expected) {
          bad("occurrence " + std::to_string(o.clause + 1) + ":" + std::to_string(o.slot + 1) +
              " listed on the wrong side");
        }
        if (seen[o.clause][o.slot]++) {
          bad("occurrence " + std::to_string(o.clause + 1) + ":" + std::to_string(o.slot + 1) +
              " listed twice");
        }
      }
    }
  }
  for (int j = 0; j < m; ++j) {
    for (int s = 0; s < 3; ++s) {
      if (!seen[j][s]) bad("occurrence " + std::to_string(j + 1) + ":" + std::to_string(s + 1) + " not listed");
    }
  }
}

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

struct RawCnf {
  CnfFormula formula;
  int declaredClauses = -1;
  std::map<int, ClauseSide> sides;                          // 0-based clause
  std::map<std::pair<int, int>, std::vector<Occurrence>> orders;  // (var, side)
};

int parseIndex(const std::string& token, int line) {
  char* end = nullptr;
  long v = std::strtol(token.c_str(), &end, 10);
  if (token.empty() || *end != '\0' || v < 1) fail(line, "expected a positive index, got '" + token + "'");
  return static_cast<int>(v);
}

ClauseSide parseSide(const std::string& token, int line) {
  if (token == "in") return ClauseSide::Inside;
  if (token == "out") return ClauseSide::Outside;
  fail(line, "expected 'in' or 'out', got '" + token + "'");
}

RawCnf readRaw(std::istream& in) {
  RawCnf raw;
  std::string text;
  int lineNo = 0;
  std::vector<int> pending;
  bool header = false;
  while (std::getline(in, text)) {
    ++lineNo;
    std::istringstream ls(text);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok == "%") continue;
    if (tok == "p") {
      std::string kind;
      if (header) fail(lineNo, "duplicate problem line");
      if (!(ls >> kind >> raw.formula.variableCount >> raw.declaredClauses) || kind != "cnf" ||
          raw.formula.variableCount < 0 || raw.declaredClauses < 0) {
        fail(lineNo, "expected 'p cnf <n> <m>'");
      }
      header = true;
      continue;
    }
    if (!header) fail(lineNo, "content before problem line");
    if (tok == "l") {
      std::string clause, side, extra;
      if (!(ls >> clause >> side)) fail(lineNo, "expected 'l <clause> in|out'");
      if (ls >> extra) fail(lineNo, "trailing token '" + extra + "'");
      int j = parseIndex(clause, lineNo) - 1;
      if (!raw.sides.emplace(j, parseSide(side, lineNo)).second) fail(lineNo, "clause side given twice");
      continue;
    }
    if (tok == "o") {
      std::string var, side, item;
      if (!(ls >> var >> side)) fail(lineNo, "expected 'o <var> in|out <clause>:<slot> ...'");
      int v = parseIndex(var, lineNo) - 1;
      int s = parseSide(side, lineNo) == ClauseSide::Inside ? 0 : 1;
      if (raw.orders.count({v, s})) fail(lineNo, "occurrence order given twice");
      auto& list = raw.orders[{v, s}];
      while (ls >> item) {
        auto colon = item.find(':');
        if (colon == std::string::npos) fail(lineNo, "expected <clause>:<slot>, got '" + item + "'");
        list.push_back({parseIndex(item.substr(0, colon), lineNo) - 1,
                        parseIndex(item.substr(colon + 1), lineNo) - 1});
      }
      continue;
    }
    ls.clear();
    ls.str(text);
    std::string num;
    while (ls >> num) {
      char* end = nullptr;
      long lit = std::strtol(num.c_str(), &end, 10);
      if (*end != '\0') fail(lineNo, "malformed literal '" + num + "'");
      if (lit == 0) {
        raw.formula.clauses.push_back(std::move(pending));
        pending.clear();
      } else {
        if (std::labs(lit) > raw.formula.variableCount) {
          fail(lineNo, "literal " + num + " exceeds variable count");
        }
        pending.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!header) throw Error(ErrorCode::ParseError, "missing problem line");
  if (!pending.empty()) throw Error(ErrorCode::ParseError, "last clause is not terminated by 0");
  if (static_cast<int>(raw.formula.clauses.size()) != raw.declaredClauses) {
    throw Error(ErrorCode::ParseError, "problem line declares " +
                                           std::to_string(raw.declaredClauses) + " clauses but " +
                                           std::to_string(raw.formula.clauses.size()) +
                                           " were given");
  }
  return raw;
}

}  // namespace

CnfFormula readCnf(std::istream& in) { return readRaw(in).formula; }

CnfLayout readCnfLayout(std::istream& in) {
  RawCnf raw = readRaw(in);
  const int m = static_cast<int>(raw.formula.clauses.size());
  std::vector<ClauseSide> sides(m, ClauseSide::Inside);
  for (auto [j, side] : raw.sides) {
    if (j >= m) throw Error(ErrorCode::BadLayout, "side given for missing clause " + std::to_string(j + 1));
    sides[j] = side;
  }
  CnfLayout layout = layoutWithSides(std::move(raw.formula), std::move(sides));
  for (auto& [key, list] : raw.orders) {
    auto [var, side] = key;
    if (var >= layout.formula.variableCount) {
      throw Error(ErrorCode::BadLayout, "order given for missing variable " + std::to_string(var + 1));
    }
    (side == 0 ? layout.insideOrder : layout.outsideOrder)[var] = std::move(list);
  }
  validateLayout(layout);
  return layout;
}

CnfLayout parseCnfLayout(const std::string& text) {
  std::istringstream in(text);
  return readCnfLayout(in);
}

CnfLayout readCnfLayoutFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return readCnfLayout(in);
}

void writeCnfLayout(std::ostream& out, const CnfLayout& layout) {
  const CnfFormula& f = layout.formula;
  out << "p cnf " << f.variableCount << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  for (std::size_t j = 0; j < layout.clauseSide.size(); ++j) {
    out << "l " << j + 1 << (layout.clauseSide[j] == ClauseSide::Inside ? " in" : " out") << '\n';
  }
  for (int side = 0; side < 2; ++side) {
    const auto& orders = side == 0 ? layout.insideOrder : layout.outsideOrder;
    for (std::size_t v = 0; v < orders.size(); ++v) {
      if (orders[v].empty()) continue;
      out << "o " << v + 1 << (side == 0 ? " in" : " out");
      for (const Occurrence& o : orders[v]) out << ' ' << o.clause + 1 << ':' << o.slot + 1;
      out << '\n';
    }
  }
}

std::string formatCnfLayout(const CnfLayout& layout) {
  std::ostringstream out;
  writeCnfLayout(out, layout);
  return out.str();
}

}  // namespace treematch
