#include <gtest/gtest.h>

#include "support.hpp"
#include "wavesym/jets.hpp"

using namespace wavesym;

namespace {

// Restricts a jet expression to the graph of u = U(t,x).
Expr on_graph(const Expr& e, const Expr& U) {
  Expr Ut = differentiate(U, "t"), Ux = differentiate(U, "x");
  return simplify(subs_raw(e, {{"u", U},
                               {jet::ut, Ut},
                               {jet::ux, Ux},
                               {jet::utt, differentiate(Ut, "t")},
                               {jet::utx, differentiate(Ut, "x")},
                               {jet::uxx, differentiate(Ux, "x")}}));
}

// Recursive prolongation formula along the graph, with plain partial
// derivatives of the composed coefficients:
//   eta^J,v = d_v eta^J - u_{Jt} d_v tau - u_{Jx} d_v xi
struct GraphProlongation {
  Expr t_eta_t, t_eta_x, t_eta_tt, t_eta_tx, t_eta_xx;
};

GraphProlongation oracle(const VectorField& q, const Expr& U) {
  auto comp = [&](const Expr& e) { return simplify(subs_raw(e, {{"u", U}})); };
  Expr T = comp(q[0]), X = comp(q[1]), H = comp(q[2]);
  auto d = [](const Expr& e, const char* v) { return differentiate(e, v); };
  Expr Ut = d(U, "t"), Ux = d(U, "x");
  Expr Utt = d(Ut, "t"), Utx = d(Ut, "x"), Uxx = d(Ux, "x");
  GraphProlongation o;
  o.t_eta_t = simplify(d(H, "t") - Ut * d(T, "t") - Ux * d(X, "t"));
  o.t_eta_x = simplify(d(H, "x") - Ut * d(T, "x") - Ux * d(X, "x"));
  o.t_eta_tt = simplify(d(o.t_eta_t, "t") - Utt * d(T, "t") - Utx * d(X, "t"));
  o.t_eta_tx = simplify(d(o.t_eta_t, "x") - Utt * d(T, "x") - Utx * d(X, "x"));
  o.t_eta_xx = simplify(d(o.t_eta_x, "x") - Utx * d(T, "x") - Uxx * d(X, "x"));
  return o;
}

void expect_matches_oracle(const VectorField& q, const Expr& U) {
  ProlongedField p = prolong2(q);
  GraphProlongation o = oracle(q, U);
  EXPECT_TRUE(is_zero(on_graph(p.eta_t, U) - o.t_eta_t).zero()) << q.str();
  EXPECT_TRUE(is_zero(on_graph(p.eta_x, U) - o.t_eta_x).zero()) << q.str();
  EXPECT_TRUE(is_zero(on_graph(p.eta_tt, U) - o.t_eta_tt).zero()) << q.str();
  EXPECT_TRUE(is_zero(on_graph(p.eta_tx, U) - o.t_eta_tx).zero()) << q.str();
  EXPECT_TRUE(is_zero(on_graph(p.eta_xx, U) - o.t_eta_xx).zero()) << q.str();
}

}  // namespace

TEST(VectorField, ApplyAndCommutator) {
  VectorField a = VectorField::txu(Expr(1), Expr(0), Expr(0));
  VectorField b = VectorField::txu(sym("t"), sym("x"), Expr(-2) * sym("u"));
  EXPECT_EQ(b.apply(parse("t^2*u")), simplify(parse("2*t^2*u - 2*t^2*u")));
  VectorField c = commutator(a, b);
  EXPECT_EQ(c[0], Expr(1));
  EXPECT_EQ(c[1], Expr(0));
  EXPECT_EQ(c[2], Expr(0));
  EXPECT_THROW(commutator(a, VectorField({"t", "x"}, {Expr(1), Expr(0)})), CoordinateMismatch);
}

TEST(TotalDerivative, FirstOrder) {
  Expr e = parse("x*u^2 + t*u_x");
  EXPECT_EQ(total_derivative(e, "x"), simplify(parse("u^2 + 2*x*u*u_x + t*u_xx")));
  EXPECT_EQ(total_derivative(e, "t"), simplify(parse("2*x*u*u_t + u_x + t*u_tx")));
}

TEST(Prolongation, ScalingField) {
  ProlongedField p = prolong2(VectorField::txu(sym("t"), sym("x"), sym("u")));
  EXPECT_EQ(p.eta_x, Expr(0));
  EXPECT_EQ(p.eta_tt, simplify(parse("-u_tt")));
  EXPECT_EQ(p.eta_xx, simplify(parse("-u_xx")));
}

TEST(Prolongation, AgreesWithGraphOracle) {
  Expr U1 = parse("sin(t)*x^2 + exp(x)*t");
  Expr U2 = parse("t^3 - x*t + cosh(x)");
  for (const char* s : {"t^2*x, x*u, u^2 + t", "exp(x)*u, sin(t), t*x*u", "1, 0, x^2*u - t*u^2",
                        "t*u, x^2 + u, exp(t)*u^2"}) {
    auto parts = std::vector<Expr>{};
    std::string txt(s);
    std::size_t a = 0;
    for (int k = 0; k < 3; ++k) {
      std::size_t b = txt.find(',', a);
      parts.push_back(parse(txt.substr(a, b == std::string::npos ? b : b - a)));
      a = b + 1;
    }
    VectorField q = VectorField::txu(parts[0], parts[1], parts[2]);
    expect_matches_oracle(q, U1);
    expect_matches_oracle(q, U2);
  }
}

TEST(Property, ProlongationLinearity) {
  fixtures::SuiteResult r = fixtures::prolongation_linearity(200, 4242);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first;
}

TEST(Property, JacobiIdentity) {
  fixtures::SuiteResult r = fixtures::jacobi_identity(500, 777);
  EXPECT_EQ(r.cases, 500);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first;
}
