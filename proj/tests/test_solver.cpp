#include <gtest/gtest.h>

#include "support.hpp"
#include "wavesym/catalog.hpp"
#include "wavesym/solver.hpp"

using namespace wavesym;

namespace {

ClassMember member_of(const std::string& id, const Binding& bind) {
  const CatalogCase& c = load_catalog().find_case(id);
  return case_member(c, {"", bind, {}});
}

LieAlgebraSpan documented(const std::string& id, const Binding& bind) {
  const CatalogCase& c = load_catalog().find_case(id);
  std::vector<VectorField> b;
  for (const auto& q : case_basis(c, bind)) b.push_back(q.size() > 3 ? q.project(3) : q);
  return LieAlgebraSpan(b);
}

void expect_reproduces(const std::string& id, const Binding& bind, int degree, std::size_t dim,
                       std::vector<std::string> extra = {}) {
  SolverConfig cfg;
  cfg.extra_basis = std::move(extra);
  SolveResult r = solve_symmetries(member_of(id, bind), degree, cfg);
  EXPECT_EQ(r.dim(), dim) << id;
  EXPECT_TRUE(r.closure.closed) << id;
  EXPECT_TRUE(subspace_equal(r.span, documented(id, bind))) << id;
}

}  // namespace

TEST(Oracle, CountsMatchClosedForm) {
  for (int d = 0; d <= 4; ++d) {
    EXPECT_EQ(fixtures::liouville_oracle_count(d, 1), static_cast<std::size_t>(2 * d + 2));
    EXPECT_EQ(fixtures::liouville_oracle_count(d, -1), static_cast<std::size_t>(2 * d + 2));
  }
}

TEST(Ansatz, BasisSize) {
  // 4 components times 6 monomials of degree <= 2
  EXPECT_EQ(ansatz_basis(2, {}).size(), 24u);
  EXPECT_EQ(ansatz_basis(1, {"exp2t"}).size(), 36u);
}

TEST(Solver, CubicKleinGordonPoincare) {
  SolveResult r = solve_symmetries(ClassMember::make(Expr(1), parse("u^3")), 1);
  EXPECT_EQ(r.dim(), 4u);
  EXPECT_FALSE(r.numeric);
}

TEST(Solver, DocumentedDimensions) {
  expect_reproduces("19a", {{"eps", "1"}}, 2, 5);
  expect_reproduces("19d", {{"eps", "1"}}, 2, 5);
  expect_reproduces("14a", {{"eps", "1"}, {"epsp", "1"}}, 2, 4);
  expect_reproduces("16", {{"p", "1"}, {"eps", "1"}}, 2, 4);
  expect_reproduces("18a", {{"q", "3"}, {"eps", "1"}, {"epsp", "1"}}, 1, 4);
}

TEST(Solver, ExtraBasisCases) {
  expect_reproduces("14b", {{"eps", "1"}, {"epsp", "1"}}, 1, 4, {"exp2t"});
  expect_reproduces("14c", {{"eps", "1"}, {"epsp", "1"}}, 1, 4, {"trig2t"});
}

TEST(Solver, PowerNonlinearityIsLargerThanGenericCase) {
  // fhat = u makes the generic row a power case: d_t, d_x, t d_t + x d_x and x d_x + 2u d_u.
  SolveResult r = solve_symmetries(member_of("11", {{"fhat", "s"}}), 1);
  EXPECT_EQ(r.dim(), 4u);
  LieAlgebraSpan with_scaling(
      {VectorField::txu(Expr(1), Expr(0), Expr(0)), VectorField::txu(Expr(0), Expr(1), Expr(0)),
       VectorField::txu(sym("t"), sym("x"), Expr(0)), VectorField::txu(Expr(0), sym("x"), Expr(2) * sym("u"))});
  EXPECT_TRUE(subspace_equal(r.span, with_scaling));
  LieAlgebraSpan doc = documented("11", {{"fhat", "s"}});
  for (const auto& q : doc.basis()) EXPECT_TRUE(r.span.contains(q));
}

TEST(Solver, LiouvilleProfileMatchesOracle) {
  for (int eps : {1, -1}) {
    auto prof = dimension_profile(ClassMember::make(Expr(eps), parse("exp(u)")), 4);
    ASSERT_EQ(prof.size(), 5u);
    for (int d = 0; d <= 4; ++d) EXPECT_EQ(prof[d], fixtures::liouville_oracle_count(d, eps)) << "eps=" << eps << " d=" << d;
  }
}
