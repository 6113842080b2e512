#include "wavesym/deteq.hpp"

namespace wavesym {

ClassMember ClassMember::make(const Expr& f, const Expr& g, const Chart& chart) {
  ClassMember m{simplify(f), simplify(g), chart};
  ZeroOptions opt;
  if (is_zero(m.f, chart, opt).zero()) throw InvalidMember("f vanishes identically: " + render(f));
  bool fu0 = is_zero(differentiate(m.f, "u"), chart, opt).zero();
  bool guu0 = is_zero(differentiate(differentiate(m.g, "u"), "u"), chart, opt).zero();
  if (fu0 && guu0)
    throw InvalidMember("linear member (f_u = g_uu = 0): f=" + render(f) + ", g=" + render(g));
  for (const Expr* e : {&m.f, &m.g})
    for (const auto& s : free_symbols(*e))
      if (s == "t") throw InvalidMember("arbitrary elements may not depend on t");
  return m;
}

ClassMember ClassMember::unchecked(const Expr& f, const Expr& g, const Chart& chart) {
  return ClassMember{simplify(f), simplify(g), chart};
}

std::string ClassMember::fingerprint() const { return "(f=" + render(f) + ", g=" + render(g) + ")"; }

namespace {

void check_projectable(const VectorField& q, const ClassMember& th, const ZeroOptions& opt) {
  if (q.coords() != std::vector<std::string>{"t", "x", "u"})
    throw CoordinateMismatch("symmetry candidates live on (t,x,u)");
  for (const auto& s : {"u_t", "u_x", "u_tt", "u_tx", "u_xx"})
    for (const auto& c : q.comps())
      if (depends_on(c, s)) throw NotProjectable("component depends on jet variable " + std::string(s));
  struct Cond {
    const char* name;
    Expr e;
  } conds[] = {{"tau_u", diff_raw(q[0], "u")},
               {"xi_u", diff_raw(q[1], "u")},
               {"eta_uu", diff_raw(diff_raw(q[2], "u"), "u")}};
  for (auto& c : conds) {
    if (c.e.is_zero()) continue;
    ZeroResult r = is_zero(c.e, th.chart, opt);
    if (!r.zero()) throw NotProjectable(std::string(c.name) + " = " + render(simplify(c.e)) + " is nonzero");
  }
}

}  // namespace

std::array<Expr, 5> invariance_residuals(const VectorField& q, const ClassMember& th, const ZeroOptions& opt) {
  check_projectable(q, th, opt);
  const Expr& tau = q[0];
  const Expr& xi = q[1];
  const Expr& eta = q[2];
  const Expr& f = th.f;
  const Expr& g = th.g;
  auto d = [](const Expr& e, const char* v) { return diff_raw(e, v); };
  Expr tau_t = d(tau, "t"), tau_x = d(tau, "x");
  Expr xi_t = d(xi, "t"), xi_x = d(xi, "x");
  Expr eta_u = d(eta, "u");
  std::array<Expr, 5> r;
  r[0] = simplify(xi_t - tau_x * f);
  r[1] = simplify(d(tau_t, "t") - d(tau_x, "x") * f - Expr(2) * d(d(eta, "t"), "u"));
  r[2] = simplify(d(xi_t, "t") - d(xi_x, "x") * f + Expr(2) * d(d(eta, "x"), "u") * f);
  r[3] = simplify(xi * d(f, "x") + eta * d(f, "u") - Expr(2) * (xi_x - tau_t) * f);
  r[4] = simplify(xi * d(g, "x") + eta * d(g, "u") - (eta_u - Expr(2) * tau_t) * g + d(d(eta, "x"), "x") * f -
                  d(d(eta, "t"), "t"));
  return r;
}

Expr criterion_residual(const VectorField& q, const ClassMember& th) {
  ProlongedField p = prolong2(q);
  const Expr& xi = q[1];
  const Expr& eta = q[2];
  const Expr& f = th.f;
  const Expr& g = th.g;
  Expr uxx = sym(jet::uxx);
  Expr r = p.eta_tt - (xi * diff_raw(f, "x") + eta * diff_raw(f, "u")) * uxx - f * p.eta_xx -
           xi * diff_raw(g, "x") - eta * diff_raw(g, "u");
  r = substitute(r, {{jet::utt, f * uxx + g}});
  if (depends_on(r, jet::utt)) throw ConsistencyError("criterion residual still depends on u_tt");
  return r;
}

bool SymmetryVerdict::exact() const {
  for (const auto& r : residuals)
    if (!r.exact()) return false;
  return direct.exact();
}

std::string SymmetryVerdict::str() const {
  std::string s = symmetric ? "symmetry" : "not a symmetry";
  s += " [";
  for (std::size_t i = 0; i < residuals.size(); ++i) s += (i ? ", " : "") + residuals[i].str();
  s += "; direct " + direct.str() + "]";
  return s;
}

SymmetryVerdict is_symmetry(const VectorField& q, const ClassMember& th, const ZeroOptions& opt) {
  SymmetryVerdict v;
  auto res = invariance_residuals(q, th, opt);
  bool all = true;
  for (std::size_t i = 0; i < 5; ++i) {
    v.residuals[i] = is_zero(res[i], th.chart, opt);
    all = all && v.residuals[i].zero();
  }
  v.direct = is_zero(criterion_residual(q, th), th.chart, opt);
  if (all != v.direct.zero())
    throw ConsistencyError("determining equations and direct criterion disagree for " + q.str() + " on " +
                           th.fingerprint());
  v.symmetric = all;
  return v;
}

}  // namespace wavesym
