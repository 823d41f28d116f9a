#include <gtest/gtest.h>

#include <sstream>

#include "expect_error.hpp"
#include "treematch/cnf.hpp"
#include "treematch/generators.hpp"

namespace treematch {
namespace {

CnfFormula formula(int n, std::vector<std::vector<int>> clauses) {
  return CnfFormula{n, std::move(clauses)};
}

TEST(Satisfies, EvaluatesClauses) {
  CnfFormula f = formula(3, {{1, 2, 3}, {-1, -2, -3}});
  EXPECT_TRUE(satisfies(f, {0, 0, 1}));
  EXPECT_FALSE(satisfies(f, {0, 0, 0}));
  EXPECT_FALSE(satisfies(f, {1, 1, 1}));
  EXPECT_TM_ERROR(satisfies(f, {1}), ErrorCode::InvalidArgument);
}

TEST(Layout, DefaultOrdersBySlot) {
  CnfLayout l = defaultLayout(formula(2, {{1, -2, 1}, {2, 2, -1}}));
  EXPECT_EQ(l.insideOrder[0], (std::vector<Occurrence>{{0, 0}, {0, 2}, {1, 2}}));
  EXPECT_EQ(l.insideOrder[1], (std::vector<Occurrence>{{0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(l.insideCount(0) + l.insideCount(1) + l.outsideCount(0) + l.outsideCount(1), 6);
  EXPECT_NO_THROW(validateLayout(l));

  CnfLayout sides =
      layoutWithSides(formula(2, {{1, -2, 1}, {2, 2, -1}}), {ClauseSide::Inside, ClauseSide::Outside});
  EXPECT_EQ(sides.outsideOrder[1], (std::vector<Occurrence>{{1, 0}, {1, 1}}));
  EXPECT_NO_THROW(validateLayout(sides));
}

TEST(Layout, ValidationFailures) {
  EXPECT_TM_ERROR(validateLayout(defaultLayout(formula(0, {}))), ErrorCode::BadLayout);
  EXPECT_TM_ERROR(validateLayout(defaultLayout(formula(2, {{1, 2}}))), ErrorCode::BadLayout);
  EXPECT_TM_ERROR(validateLayout(defaultLayout(formula(2, {{1, 2, 3}}))), ErrorCode::BadLayout);
  EXPECT_TM_ERROR(validateLayout(defaultLayout(formula(2, {{1, 2, 0}}))), ErrorCode::BadLayout);

  CnfLayout wrongSide = defaultLayout(formula(1, {{1, 1, 1}}));
  wrongSide.clauseSide[0] = ClauseSide::Outside;
  EXPECT_TM_ERROR(validateLayout(wrongSide), ErrorCode::BadLayout);

  CnfLayout duplicated = defaultLayout(formula(1, {{1, 1, 1}}));
  duplicated.insideOrder[0][1] = duplicated.insideOrder[0][0];
  EXPECT_TM_ERROR(validateLayout(duplicated), ErrorCode::BadLayout);

  CnfLayout missing = defaultLayout(formula(1, {{1, 1, 1}}));
  missing.insideOrder[0].pop_back();
  EXPECT_TM_ERROR(validateLayout(missing), ErrorCode::BadLayout);

  CnfLayout misplaced = defaultLayout(formula(2, {{1, 2, 2}}));
  std::swap(misplaced.insideOrder[0], misplaced.insideOrder[1]);
  EXPECT_TM_ERROR(validateLayout(misplaced), ErrorCode::BadLayout);
}

TEST(CnfIo, ReadsPlainDimacs) {
  std::istringstream in("c comment\np cnf 3 2\n1 -2 0\n3 2\n-1 0\n");
  CnfFormula f = readCnf(in);
  EXPECT_EQ(f.variableCount, 3);
  EXPECT_EQ(f.clauses, (std::vector<std::vector<int>>{{1, -2}, {3, 2, -1}}));
}

TEST(CnfIo, ReadsAnnotations) {
  CnfLayout l = parseCnfLayout(
      "p cnf 2 2\n1 2 -1 0\n-2 1 2 0\nl 2 out\no 1 in 1:3 1:1\no 2 out 2:3 2:1\n");
  EXPECT_EQ(l.clauseSide, (std::vector<ClauseSide>{ClauseSide::Inside, ClauseSide::Outside}));
  EXPECT_EQ(l.insideOrder[0], (std::vector<Occurrence>{{0, 2}, {0, 0}}));
  EXPECT_EQ(l.outsideOrder[0], (std::vector<Occurrence>{{1, 1}}));
  EXPECT_EQ(l.outsideOrder[1], (std::vector<Occurrence>{{1, 2}, {1, 0}}));
  EXPECT_EQ(l.insideOrder[1], (std::vector<Occurrence>{{0, 1}}));
}

TEST(CnfIo, RoundTrip) {
  for (int seed = 0; seed < 30; ++seed) {
    CnfLayout l = randomCnfLayout(1 + seed % 4, seed % 5, 900 + seed);
    EXPECT_NO_THROW(validateLayout(l));
    EXPECT_EQ(parseCnfLayout(formatCnfLayout(l)), l);
  }
}

TEST(CnfIo, Errors) {
  try {
    parseCnfLayout("p cnf 2 1\n1 2 x 0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_TM_ERROR(parseCnfLayout("1 2 3 0\n"), ErrorCode::ParseError);
  EXPECT_TM_ERROR(parseCnfLayout("p cnf 2 1\n1 2 2 0\nl 3 in\n"), ErrorCode::BadLayout);
  EXPECT_TM_ERROR(parseCnfLayout("p cnf 2 1\n1 2 2 0\nl 1 sideways\n"), ErrorCode::ParseError);
  EXPECT_TM_ERROR(parseCnfLayout("p cnf 2 1\n1 2 2 0\no 1 in 1:9\n"), ErrorCode::BadLayout);
  EXPECT_TM_ERROR(readCnfLayoutFile("/nonexistent.cnf"), ErrorCode::ParseError);
}

}  // namespace
}  // namespace treematch
