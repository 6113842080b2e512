#include "wavesym/ptrans.hpp"

namespace wavesym {

PointMap PointMap::identity(const std::vector<std::string>& coords) {
  PointMap m;
  m.coords = coords;
  for (const auto& c : coords) {
    m.fwd.push_back(sym(c));
    m.inv.push_back(sym(c));
  }
  return m;
}

PointMap PointMap::txu(const Expr& T, const Expr& X, const Expr& U) {
  return PointMap{{"t", "x", "u"}, {T, X, U}, {}};
}

PointMap PointMap::txu(const Expr& T, const Expr& X, const Expr& U, const Expr& Ti, const Expr& Xi,
                       const Expr& Ui) {
  return PointMap{{"t", "x", "u"}, {T, X, U}, {Ti, Xi, Ui}};
}

std::map<std::string, Expr> PointMap::forward_binding() const {
  std::map<std::string, Expr> b;
  for (std::size_t i = 0; i < coords.size(); ++i) b[coords[i]] = fwd[i];
  return b;
}

std::map<std::string, Expr> PointMap::inverse_binding() const {
  if (!has_inverse()) throw MissingInverse();
  std::map<std::string, Expr> b;
  for (std::size_t i = 0; i < coords.size(); ++i) b[coords[i]] = inv[i];
  return b;
}

PointMap PointMap::inverted() const {
  if (!has_inverse()) throw MissingInverse();
  return PointMap{coords, inv, fwd};
}

std::string PointMap::str() const {
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? ", " : "") + coords[i] + "~ = " + render(fwd[i]);
  return s;
}

PointMap compose(const PointMap& first, const PointMap& second) {
  if (first.coords != second.coords) throw CoordinateMismatch("composing maps on different coordinates");
  PointMap m;
  m.coords = first.coords;
  auto fb = first.forward_binding();
  for (const auto& e : second.fwd) m.fwd.push_back(simplify(subs_raw(e, fb)));
  if (first.has_inverse() && second.has_inverse()) {
    auto sb = second.inverse_binding();
    for (const auto& e : first.inv) m.inv.push_back(simplify(subs_raw(e, sb)));
  }
  return m;
}

Expr jacobian(const PointMap& m) {
  std::size_t n = m.coords.size();
  std::vector<std::vector<Expr>> a(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = diff_raw(m.fwd[i], m.coords[j]);
  // Laplace expansion; n <= 5 here.
  std::function<Expr(std::vector<std::size_t>, std::size_t)> det = [&](std::vector<std::size_t> cols,
                                                                        std::size_t row) -> Expr {
    if (cols.empty()) return Expr(1);
    std::vector<Expr> ts;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (a[row][cols[k]].is_zero()) continue;
      std::vector<std::size_t> rest = cols;
      rest.erase(rest.begin() + k);
      Expr t = a[row][cols[k]] * det(rest, row + 1);
      ts.push_back(k % 2 ? -t : t);
    }
    return add(std::move(ts));
  };
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  return simplify(det(cols, 0));
}

bool check_inverse(const PointMap& m, const Chart& chart, const ZeroOptions& opt) {
  if (!m.has_inverse()) throw MissingInverse();
  auto fb = m.forward_binding();
  for (std::size_t i = 0; i < m.coords.size(); ++i) {
    Expr back = subs_raw(m.inv[i], fb);
    if (!is_zero(back - sym(m.coords[i]), chart, opt).zero()) return false;
  }
  return true;
}

bool ConditionReport::exact() const {
  for (const auto& it : items)
    if (!it.result.exact()) return false;
  return true;
}

std::string ConditionReport::str() const {
  std::string s = ok ? "admissible" : "NOT admissible";
  for (const auto& it : items) s += "\n  " + it.name + ": " + it.result.str();
  return s;
}

namespace {

struct MapDerivs {
  Expr T_t, T_x, X_t, X_x, U_t, U_x, U_u, U_tt, U_xx, U_ut, U_ux;
};

MapDerivs derivs(const PointMap& m) {
  auto d = [](const Expr& e, const char* v) { return diff_raw(e, v); };
  MapDerivs r;
  r.T_t = d(m.T(), "t");
  r.T_x = d(m.T(), "x");
  r.X_t = d(m.X(), "t");
  r.X_x = d(m.X(), "x");
  r.U_t = d(m.U(), "t");
  r.U_x = d(m.U(), "x");
  r.U_u = d(m.U(), "u");
  r.U_tt = d(r.U_t, "t");
  r.U_xx = d(r.U_x, "x");
  r.U_ut = d(r.U_u, "t");
  r.U_ux = d(r.U_u, "x");
  return r;
}

void require_txu(const PointMap& m) {
  if (m.coords != std::vector<std::string>{"t", "x", "u"})
    throw CoordinateMismatch("admissible transformations act on (t,x,u)");
}

}  // namespace

ConditionReport verify_admissible(const ClassMember& source, const PointMap& map, const ClassMember& target,
                                  const ZeroOptions& opt) {
  require_txu(map);
  const Chart& ch = source.chart;
  ConditionReport rep;
  auto check = [&](const std::string& name, const Expr& e) {
    ZeroResult r = is_zero(e, ch, opt);
    rep.items.push_back({name, r});
    rep.ok = rep.ok && r.zero();
  };
  MapDerivs d = derivs(map);
  const Expr& f = source.f;
  const Expr& g = source.g;
  check("T_u = 0", diff_raw(map.T(), "u"));
  check("X_u = 0", diff_raw(map.X(), "u"));
  check("U_uu = 0", diff_raw(d.U_u, "u"));
  if (!rep.ok) return rep;
  Expr den = d.T_t * d.T_t - f * d.T_x * d.T_x;
  if (is_zero(den, ch, opt).zero()) throw DomainError("singular chart: T_t^2 - f T_x^2 vanishes identically");
  std::map<std::string, Expr> at{{"x", map.X()}, {"u", map.U()}};
  Expr ft = subs_raw(target.f, at);
  Expr gt = subs_raw(target.g, at);
  Expr two(2);
  Expr rt = d.U_ut / d.U_u;
  Expr rx = d.U_ux / d.U_u;
  check("T_t X_t = f T_x X_x", d.T_t * d.X_t - f * d.T_x * d.X_x);
  check("f~ T_t^2 + X_t^2 = f (f~ T_x^2 + X_x^2)",
        ft * d.T_t * d.T_t + d.X_t * d.X_t - f * (ft * d.T_x * d.T_x + d.X_x * d.X_x));
  Expr T_tt = diff_raw(d.T_t, "t"), T_xx = diff_raw(d.T_x, "x");
  Expr X_tt = diff_raw(d.X_t, "t"), X_xx = diff_raw(d.X_x, "x");
  check("T equation", T_tt - two * rt * d.T_t - f * (T_xx - two * rx * d.T_x));
  check("X equation", X_tt - two * rt * d.X_t - f * (X_xx - two * rx * d.X_x));
  check("g~ equation", gt * d.T_t * d.T_t - d.U_tt + two * rt * d.U_t -
                           f * (gt * d.T_x * d.T_x - d.U_xx + two * rx * d.U_x) - g * d.U_u);
  return rep;
}

ClassMember pushforward_theta(const PointMap& map, const ClassMember& source, const Chart& target_chart,
                              const ZeroOptions& opt) {
  require_txu(map);
  if (!map.has_inverse()) throw MissingInverse();
  for (const char* c : {"T", "X"}) {
    const Expr& e = c[0] == 'T' ? map.T() : map.X();
    if (!is_zero(diff_raw(e, "u"), source.chart, opt).zero())
      throw NotAdmissible(std::string(c) + " depends on u; the map is not fiber-preserving");
  }
  MapDerivs d = derivs(map);
  if (!is_zero(diff_raw(d.U_u, "u"), source.chart, opt).zero()) throw NotAdmissible("U is not affine in u");
  const Expr& f = source.f;
  const Expr& g = source.g;
  Expr two(2);
  Expr den = d.T_t * d.T_t - f * d.T_x * d.T_x;
  if (is_zero(den, source.chart, opt).zero())
    throw DomainError("singular chart: T_t^2 - f T_x^2 vanishes identically");
  Expr rt = d.U_ut / d.U_u;
  Expr rx = d.U_ux / d.U_u;
  Expr ft = (f * d.X_x * d.X_x - d.X_t * d.X_t) / den;
  Expr gt = (d.U_tt - two * rt * d.U_t - f * (d.U_xx - two * rx * d.U_x) + g * d.U_u) / den;
  auto ib = map.inverse_binding();
  ft = simplify(subs_raw(ft, ib));
  gt = simplify(subs_raw(gt, ib));
  for (const Expr* e : {&ft, &gt}) {
    if (depends_on(*e, "t") && !is_zero(diff_raw(*e, "t"), target_chart, opt).zero())
      throw NotAdmissible("image arbitrary element depends on t: " + render(*e));
  }
  // Drop a t-dependence that is only apparent (identically constant in t).
  Interval it = target_chart.interval_for("t");
  Rational mid = (it.lo + it.hi) / 2;
  mid.canonicalize();
  if (depends_on(ft, "t")) ft = simplify(subs_raw(ft, {{"t", Expr(mid)}}));
  if (depends_on(gt, "t")) gt = simplify(subs_raw(gt, {{"t", Expr(mid)}}));
  return ClassMember::unchecked(ft, gt, target_chart);
}

VectorField pushforward_field(const PointMap& map, const VectorField& q) {
  if (!map.has_inverse()) throw MissingInverse();
  if (map.coords != q.coords()) throw CoordinateMismatch("field and map on different coordinates");
  auto ib = map.inverse_binding();
  std::vector<Expr> c;
  for (const auto& e : map.fwd) c.push_back(simplify(subs_raw(q.apply(e), ib)));
  return VectorField(q.coords(), std::move(c));
}

bool same_member(const ClassMember& a, const ClassMember& b, const ZeroOptions& opt) {
  return is_zero(a.f - b.f, a.chart, opt).zero() && is_zero(a.g - b.g, a.chart, opt).zero();
}

bool same_map(const PointMap& a, const PointMap& b, const Chart& chart, const ZeroOptions& opt) {
  if (a.coords != b.coords) return false;
  for (std::size_t i = 0; i < a.fwd.size(); ++i)
    if (!is_zero(a.fwd[i] - b.fwd[i], chart, opt).zero()) return false;
  return true;
}

AdmissibleTransformation identity_at(const ClassMember& th) { return {th, PointMap::identity(), th}; }

AdmissibleTransformation compose_admissible(const AdmissibleTransformation& a, const AdmissibleTransformation& b,
                                            const ZeroOptions& opt) {
  if (!same_member(a.target, b.source, opt))
    throw NotAdmissible("non-composable: " + a.target.fingerprint() + " vs " + b.source.fingerprint());
  return {a.source, compose(a.map, b.map), b.target};
}

AdmissibleTransformation invert_admissible(const AdmissibleTransformation& a) {
  return {a.target, a.map.inverted(), a.source};
}

Expr raw_transformed_residual(const ClassMember& source, const PointMap& map, const ClassMember& target) {
  require_txu(map);
  MapDerivs d = derivs(map);
  if (depends_on(map.T(), "u") || depends_on(map.X(), "u"))
    throw NotAdmissible("raw residual needs a fiber-preserving map");
  Expr J = d.T_t * d.X_x - d.T_x * d.X_t;
  Expr DtU = total_derivative(map.U(), "t");
  Expr DxU = total_derivative(map.U(), "x");
  Expr v_t = simplify((DtU * d.X_x - DxU * d.X_t) / J);
  Expr v_x = simplify((d.T_t * DxU - d.T_x * DtU) / J);
  Expr v_tt = (total_derivative(v_t, "t") * d.X_x - total_derivative(v_t, "x") * d.X_t) / J;
  Expr v_xx = (d.T_t * total_derivative(v_x, "x") - d.T_x * total_derivative(v_x, "t")) / J;
  std::map<std::string, Expr> at{{"x", map.X()}, {"u", map.U()}};
  Expr r = v_tt - subs_raw(target.f, at) * v_xx - subs_raw(target.g, at);
  return substitute(r, {{jet::utt, source.f * sym(jet::uxx) + source.g}});
}

}  // namespace wavesym
