#include <gtest/gtest.h>

#include "support.hpp"
#include "wavesym/equiv.hpp"

using namespace wavesym;

namespace {

using G = GenKind;

VectorField gen(G k, const char* p = "0") { return generator(k, parse(p)); }

bool same_field(const VectorField& a, const VectorField& b, const Chart& chart = {}) {
  return (a - b).is_zero(chart);
}

Chart xpos() {
  Chart c;
  c.range("x", Rational(1), Rational(10));
  return c;
}

}  // namespace

TEST(Generators, Components) {
  VectorField d = gen(G::D, "x^2");
  EXPECT_EQ(d.component("x"), simplify(parse("x^2")));
  EXPECT_EQ(d.component("u"), simplify(parse("x*u")));
  EXPECT_EQ(d.component("f"), simplify(parse("4*x*f")));
  EXPECT_EQ(d.component("g"), simplify(parse("x*g")));
  VectorField z = gen(G::Z, "x^3");
  EXPECT_EQ(z.component("g"), simplify(parse("-6*x*f")));
}

TEST(CommutationTable, RelationsAndVanishingPairs) {
  fixtures::SuiteResult r = fixtures::commutation_table();
  EXPECT_EQ(r.cases, 75);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first;
}

TEST(AdjointActions, ClosedFormActions) {
  fixtures::SuiteResult r = fixtures::adjoint_actions(5, 31337);
  EXPECT_EQ(r.cases, 25);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first;
}

TEST(AdjointActions, WrongFormulasAreRejected) {
  Expr phi = parse("x^2"), phi_hat = parse("x^(1/2)");
  VectorField lhs = adjoint_on_generator(Elementary::D(phi, phi_hat), gen(G::Z, "x^3"));
  EXPECT_FALSE(same_field(lhs, gen(G::Z, "x^(3/2)"), xpos()));
  EXPECT_FALSE(same_field(adjoint_on_generator(Elementary::Z(parse("x^2")), gen(G::Du)), gen(G::Du)));
}

TEST(Group, ComposeInvertAndFactor) {
  EquivalenceElement s;
  s.c0 = 2;
  s.c1 = 3;
  s.c2 = Rational(1, 2);
  s.phi = parse("x^3 + 1");
  s.phi_inv = parse("(x - 1)^(1/3)");
  s.psi = parse("x^2 - x");
  Chart chart = xpos();
  ClassMember th = ClassMember::make(parse("x*u"), parse("u^3 + x"), chart);
  Chart tchart;
  tchart.range("x", Rational(2), Rational(1001));
  ClassMember img = apply_to_member(s, th);
  img.chart = tchart;
  ClassMember back = apply_to_member(invert_equiv(s), img);
  EXPECT_TRUE(same_member(back, th));
  PointMap id = s.full_map();
  EXPECT_TRUE(check_inverse(id, chart));
  EXPECT_TRUE(same_map(compose_elementary(factor_elementary(s)), s.full_map(), chart));
  EquivalenceElement ss = compose_equiv(s, invert_equiv(s));
  EXPECT_TRUE(same_map(ss.full_map(), EquivalenceElement::identity().full_map(), chart));
}

TEST(Group, DomainChecks) {
  EquivalenceElement s;
  s.c1 = 0;
  EXPECT_THROW(s.validate(), DomainError);
  EquivalenceElement r;
  r.phi = parse("-x");
  r.phi_inv = parse("-x");
  EXPECT_THROW(r.validate(), DomainError);
}

TEST(Involutions, FlipSigns) {
  PointMap m = discrete_involution('u');
  EXPECT_EQ(m.fwd[2], simplify(-sym("u")));
  EXPECT_EQ(m.fwd[4], simplify(-sym("g")));
  EXPECT_TRUE(same_map(compose(m, m), PointMap::identity({"t", "x", "u", "f", "g"})));
  EXPECT_THROW(discrete_involution('f'), DomainError);
}
