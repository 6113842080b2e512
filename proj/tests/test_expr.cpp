#include <gtest/gtest.h>

#include "wavesym/eval.hpp"
#include "wavesym/expr.hpp"
#include "wavesym/zero.hpp"
#include "support.hpp"

using namespace wavesym;

namespace {

// Decimal literal -> exact rational.
Rational decimal(const std::string& s) {
  auto dot = s.find('.');
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
  Rational q(mpz_class(digits, 10), den);
  q.canonicalize();
  return q;
}

// |value - oracle| < 10^-45
void expect_close(const std::string& text, const Point& p, const std::string& oracle) {
  Value v = eval(parse(text), p);
  Real want(decimal(oracle), v.approx.bits());
  Real diff = abs(v.approx - want);
  EXPECT_TRUE(diff < pow10(-45, v.approx.bits())) << text << " = " << v.str(50) << ", oracle " << oracle;
}

}  // namespace

TEST(Parse, PrecedenceAndUnaryMinus) {
  EXPECT_EQ(simplify(parse("-x^2")), simplify(-pow(sym("x"), Expr(2))));
  EXPECT_EQ(simplify(parse("2^3^2")), Expr(512));
  EXPECT_EQ(simplify(parse("a/b*c")), simplify(sym("a") * sym("c") / sym("b")));
  EXPECT_EQ(simplify(parse("e^x")), exp(sym("x")));
  EXPECT_EQ(simplify(parse("sqrt(x)")), pow(sym("x"), rat(1, 2)));
}

TEST(Parse, ErrorCarriesOffsetAndExpected) {
  try {
    parse("x + * y");
    FAIL() << "no ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse("sin(x"), ParseError);
  EXPECT_THROW(parse("foo(x)"), ParseError);
}

TEST(Render, RoundTrip) {
  for (const char* s : {"u^(-4)", "x*u^(-3) + sigma*u", "exp(2*t)/2", "-1/2*x + 3*x*y^2/4", "cos(x)^(-2)*u^3",
                        "arctan(1/(t + x)) - arctanh(t/x)", "abs(u)^p*sign(u)", "(1 + x^2)^(-1/2)"}) {
    Expr e = simplify(parse(s));
    EXPECT_EQ(simplify(parse(render(e))), e) << s << " -> " << render(e);
  }
}

TEST(Simplify, CanonicalIdentities) {
  EXPECT_TRUE(simplify(parse("(x+1)^2 - x^2 - 2*x - 1")).is_zero());
  EXPECT_TRUE(simplify(parse("exp(x)*exp(-x) - 1")).is_zero());
  EXPECT_TRUE(simplify(parse("sin(t)^2 + cos(t)^2 - 1")).is_zero());
  EXPECT_TRUE(simplify(parse("cosh(x)^2 - sinh(x)^2 - 1")).is_zero());
  EXPECT_EQ(simplify(parse("(x^2)^(1/2)")), sym("x"));
  EXPECT_EQ(simplify(parse("x*y - y*x")), Expr(0));
}

TEST(Diff, Rules) {
  EXPECT_EQ(differentiate(parse("x^3"), "x"), simplify(parse("3*x^2")));
  EXPECT_EQ(differentiate(parse("exp(-x)*sinh(t)"), "t"), simplify(parse("exp(-x)*cosh(t)")));
  EXPECT_EQ(differentiate(parse("ln(x)"), "x"), simplify(parse("1/x")));
  EXPECT_EQ(differentiate(parse("arctan(x)"), "x"), simplify(parse("1/(1+x^2)")));
  EXPECT_TRUE(is_zero(differentiate(parse("tan(x)"), "x") - parse("1 + tan(x)^2")).zero());
  EXPECT_EQ(differentiate(parse("y^2"), "x"), Expr(0));
}

TEST(Substitute, Simultaneous) {
  EXPECT_EQ(substitute(parse("t + 2*x"), {{"t", sym("x")}, {"x", sym("t")}}), simplify(parse("x + 2*t")));
}

TEST(Eval, ExactRationalArithmetic) {
  Value v = eval(parse("u^(-4) + 1/3"), {{"u", Rational(1, 2)}});
  ASSERT_TRUE(v.exact);
  EXPECT_EQ(v.q, Rational(49, 3));
}

TEST(Eval, HighPrecisionOracleValues) {
  expect_close("tan(t)", {{"t", Rational(1, 4)}}, "0.255341921221036266504482236490473678204201638800822621740476");
  expect_close("arctanh(x)", {{"x", Rational(1, 3)}}, "0.34657359027997265470861606072908828403775006718012762706034");
  expect_close("exp(1/2)*ln(3) + sinh(2/7)*cos(5/3)", {},
               "1.78358223848953104412792948049868576701413749609592504158838");
  expect_close("arctan(7) + sqrt(2)", {}, "2.84311283456382774522015879874689643766047481633603691128602");
}

TEST(Eval, UnboundAndSingular) {
  EXPECT_THROW(eval(parse("x + y"), {{"x", Rational(1)}}), UnboundSymbolError);
  EXPECT_THROW(eval(parse("1/x"), {{"x", Rational(0)}}), DomainError);
}

TEST(ZeroTest, Tiers) {
  EXPECT_TRUE(is_zero(parse("sin(t)^2 + cos(t)^2 - 1")).proven());
  EXPECT_TRUE(is_zero(parse("1/(x+1) + 1/(x-1) - 2*x/(x^2-1)")).zero());
  ZeroResult r = is_zero(parse("x - 1/1000000"));
  EXPECT_EQ(r.verdict, Verdict::NonZero);
  EXPECT_FALSE(r.witness.empty());
  EXPECT_TRUE(is_zero(parse("arctan(x) + arctan(1/x) - 2*arctan(1)")).zero());
}

TEST(ZeroTest, ChartSigns) {
  Chart neg;
  neg.negative("x");
  EXPECT_TRUE(is_zero(parse("abs(x) + x"), neg).zero());
  EXPECT_FALSE(is_zero(parse("abs(x) - x"), neg).zero());
  EXPECT_TRUE(is_zero(parse("abs(x) - x")).zero());
}

TEST(Property, EvalSimplifyAgreement) {
  fixtures::SuiteResult r = fixtures::eval_simplify_agreement(1000, 20261018);
  EXPECT_EQ(r.cases, 1000);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first;
}
