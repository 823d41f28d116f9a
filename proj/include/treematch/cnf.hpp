#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treematch {

/// Clauses of signed, 1-based variable ids (DIMACS convention).
struct CnfFormula {
  int variableCount = 0;
  std::vector<std::vector<int>> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// One bit per variable, a[i] in {0, 1} for variable i + 1.
using Assignment = std::vector<int>;

bool satisfies(const CnfFormula& f, const Assignment& a);

enum class ClauseSide { Inside, Outside };

/// A literal slot: clause index and position 0..2, both 0-based.
struct Occurrence {
  int clause = 0;
  int slot = 0;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// Formula plus the embedding data the SAT reduction consumes: which side of
/// the variable cycle each clause lies on, and per variable the order of its
/// occurrences on each side.
struct CnfLayout {
  CnfFormula formula;
  std::vector<ClauseSide> clauseSide;
  std::vector<std::vector<Occurrence>> insideOrder;   // per variable (0-based)
  std::vector<std::vector<Occurrence>> outsideOrder;  // per variable (0-based)

  int insideCount(int variable) const { return static_cast<int>(insideOrder[variable].size()); }
  int outsideCount(int variable) const { return static_cast<int>(outsideOrder[variable].size()); }
  friend bool operator==(const CnfLayout&, const CnfLayout&) = default;
};

/// Every clause inside, occurrences ordered by (clause, slot).
CnfLayout defaultLayout(CnfFormula f);

/// Same formula with the given clause sides; occurrences ordered by (clause, slot).
CnfLayout layoutWithSides(CnfFormula f, std::vector<ClauseSide> sides);

/// Throws Error(BadLayout) unless every clause has three literals over
/// variables 1..n and each occurrence is listed exactly once, under its
/// variable and on its clause's side.
void validateLayout(const CnfLayout& layout);

// CNF layout format: a DIMACS body
//   p cnf <n> <m>
//   <lit> <lit> ... 0
// optionally followed by annotations (1-based indices)
//   l <clause> in|out
//   o <var> in|out <clause>:<slot> ...
// Clauses without an `l` line lie inside; a missing `o` line means the
// (clause, slot) order. Plain DIMACS clauses of any width are accepted by
// readCnf; layouts additionally require width 3.
CnfFormula readCnf(std::istream& in);
CnfLayout readCnfLayout(std::istream& in);
CnfLayout parseCnfLayout(const std::string& text);
CnfLayout readCnfLayoutFile(const std::string& path);
void writeCnfLayout(std::ostream& out, const CnfLayout& layout);
std::string formatCnfLayout(const CnfLayout& layout);

}  // namespace treematch
