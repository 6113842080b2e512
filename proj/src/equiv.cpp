#include "wavesym/equiv.hpp"

namespace wavesym {

namespace {

Expr at_x(const Expr& e, const Expr& v) { return subs_raw(e, {{"x", v}}); }
Expr half() { return Expr(Rational(1, 2)); }

}  // namespace

Expr alpha_phi(const Expr& phi) {
  Expr p1 = diff_raw(phi, "x");
  Expr p2 = diff_raw(p1, "x");
  Expr p3 = diff_raw(p2, "x");
  return simplify((Expr(2) * p3 * p1 - Expr(3) * p2 * p2) / (Expr(4) * pow(p1, Expr(Rational(3, 2)))));
}

void EquivalenceElement::validate(const Chart& chart) const {
  if (c1 == 0 || c2 == 0) throw DomainError("equivalence element needs c1*c2 != 0");
  Expr px = simplify(diff_raw(phi, "x"));
  if (px.kind() == Kind::Const) {
    if (px.value() <= 0) throw DomainError("equivalence element needs phi_x > 0 on the chart");
    return;
  }
  std::mt19937_64 rng(0x9e37);
  for (int i = 0; i < 16; ++i) {
    Point p = sample_point(free_symbols(px), chart, rng);
    Value v = eval(px, p);
    if ((v.exact ? sgn(v.q) : v.approx.sign()) <= 0)
      throw DomainError("equivalence element needs phi_x > 0 on the chart (phi = " + render(phi) + ")");
  }
}

PointMap EquivalenceElement::full_map() const {
  Expr t = sym("t"), u = sym("u"), f = sym("f"), g = sym("g");
  Expr px = diff_raw(phi, "x");
  Expr pxx = diff_raw(px, "x");
  Expr sq = pow(px, half());
  Expr c1sq(Rational(c1 * c1));
  Expr psx = diff_raw(psi, "x");
  Expr psxx = diff_raw(psx, "x");
  std::vector<Expr> fwd{
      simplify(Expr(c1) * t + Expr(c0)),
      simplify(phi),
      simplify(Expr(c2) * sq * u + psi),
      simplify(px * px * f / c1sq),
      simplify(Expr(c2) / c1sq * sq * g - (Expr(c2) * alpha_phi(phi) * u + psxx - pxx / px * psx) * f / c1sq),
  };
  PointMap m{{"t", "x", "u", "f", "g"}, fwd, {}};
  // The inverse element supplies the inverse map.
  EquivalenceElement iv = invert_equiv(*this);
  Expr ipx = diff_raw(iv.phi, "x");
  Expr ipxx = diff_raw(ipx, "x");
  Expr isq = pow(ipx, half());
  Expr ic1sq(Rational(iv.c1 * iv.c1));
  Expr ipsx = diff_raw(iv.psi, "x");
  m.inv = {
      simplify(Expr(iv.c1) * t + Expr(iv.c0)),
      simplify(iv.phi),
      simplify(Expr(iv.c2) * isq * u + iv.psi),
      simplify(ipx * ipx * f / ic1sq),
      simplify(Expr(iv.c2) / ic1sq * isq * g -
               (Expr(iv.c2) * alpha_phi(iv.phi) * u + diff_raw(ipsx, "x") - ipxx / ipx * ipsx) * f / ic1sq),
  };
  return m;
}

PointMap EquivalenceElement::point_map() const {
  PointMap full = full_map();
  return PointMap::txu(full.fwd[0], full.fwd[1], full.fwd[2], full.inv[0], full.inv[1], full.inv[2]);
}

std::string EquivalenceElement::str() const {
  return "c0=" + c0.get_str() + ", c1=" + c1.get_str() + ", c2=" + c2.get_str() + ", phi=" + render(phi) +
         ", psi=" + render(psi);
}

ClassMember apply_to_member(const EquivalenceElement& s, const ClassMember& th, const ZeroOptions& opt) {
  s.validate(th.chart);
  PointMap full = s.full_map();
  std::map<std::string, Expr> fg{{"f", th.f}, {"g", th.g}};
  std::map<std::string, Expr> back{{"t", full.inv[0]}, {"x", full.inv[1]}, {"u", full.inv[2]}};
  Expr ft = simplify(subs_raw(subs_raw(full.fwd[3], fg), back));
  Expr gt = simplify(subs_raw(subs_raw(full.fwd[4], fg), back));
  ClassMember out = ClassMember::unchecked(ft, gt, th.chart);
  ClassMember via_points = pushforward_theta(s.point_map(), th, th.chart, opt);
  if (!same_member(out, via_points, opt))
    throw ConsistencyError("equivalence action disagrees with the point push-forward for " + s.str());
  return out;
}

EquivalenceElement compose_equiv(const EquivalenceElement& a, const EquivalenceElement& b) {
  EquivalenceElement r;
  r.c1 = a.c1 * b.c1;
  r.c0 = b.c1 * a.c0 + b.c0;
  r.c2 = a.c2 * b.c2;
  r.phi = simplify(at_x(b.phi, a.phi));
  r.phi_inv = simplify(at_x(a.phi_inv, b.phi_inv));
  Expr bpx = diff_raw(b.phi, "x");
  r.psi = simplify(Expr(b.c2) * pow(at_x(bpx, a.phi), half()) * a.psi + at_x(b.psi, a.phi));
  return r;
}

EquivalenceElement invert_equiv(const EquivalenceElement& s) {
  EquivalenceElement r;
  r.c1 = 1 / s.c1;
  r.c0 = -s.c0 / s.c1;
  r.c2 = 1 / s.c2;
  r.phi = s.phi_inv;
  r.phi_inv = s.phi;
  Expr px = diff_raw(s.phi, "x");
  r.psi = simplify(-at_x(s.psi, s.phi_inv) / (Expr(s.c2) * pow(at_x(px, s.phi_inv), half())));
  return r;
}

PointMap Elementary::full_map() const {
  EquivalenceElement e;
  switch (kind) {
    case ElemKind::Pt: e.c0 = c; break;
    case ElemKind::Dt: e.c1 = c; break;
    case ElemKind::Du: e.c2 = c; break;
    case ElemKind::D:
      e.phi = fn;
      e.phi_inv = fn_inv;
      break;
    case ElemKind::Z: e.psi = fn; break;
  }
  return e.full_map();
}

std::string Elementary::str() const {
  switch (kind) {
    case ElemKind::Pt: return "Pt(" + c.get_str() + ")";
    case ElemKind::Dt: return "Dt(" + c.get_str() + ")";
    case ElemKind::Du: return "Du(" + c.get_str() + ")";
    case ElemKind::D: return "D(" + render(fn) + ")";
    case ElemKind::Z: return "Z(" + render(fn) + ")";
  }
  return "?";
}

std::vector<Elementary> factor_elementary(const EquivalenceElement& s) {
  return {Elementary::Pt(s.c0), Elementary::Dt(s.c1), Elementary::Z(simplify(at_x(s.psi, s.phi_inv))),
          Elementary::D(s.phi, s.phi_inv), Elementary::Du(s.c2)};
}

PointMap compose_elementary(const std::vector<Elementary>& factors) {
  PointMap m = PointMap::identity({"t", "x", "u", "f", "g"});
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) m = compose(m, it->full_map());
  return m;
}

VectorField generator(GenKind kind, const Expr& param) {
  Expr t = sym("t"), u = sym("u"), f = sym("f"), g = sym("g");
  Expr z(0);
  switch (kind) {
    case GenKind::Pt: return VectorField::txufg(Expr(1), z, z, z, z);
    case GenKind::Dt: return VectorField::txufg(t, z, z, Expr(-2) * f, Expr(-2) * g);
    case GenKind::Du: return VectorField::txufg(z, z, u, z, g);
    case GenKind::D: {
      Expr zx = differentiate(param, "x");
      Expr zxxx = differentiate(differentiate(zx, "x"), "x");
      return VectorField::txufg(z, param, simplify(half() * zx * u), simplify(Expr(2) * zx * f),
                                simplify(half() * (zx * g - zxxx * u * f)));
    }
    case GenKind::Z: {
      Expr cxx = differentiate(differentiate(param, "x"), "x");
      return VectorField::txufg(z, z, param, z, simplify(-cxx * f));
    }
  }
  return VectorField::txufg(z, z, z, z, z);
}

VectorField adjoint_on_generator(const Elementary& e, const VectorField& gen) {
  return pushforward_field(e.full_map(), gen);
}

PointMap discrete_involution(char var) {
  PointMap m = PointMap::identity({"t", "x", "u", "f", "g"});
  auto flip = [&](std::size_t i) {
    m.fwd[i] = -m.fwd[i];
    m.inv[i] = -m.inv[i];
  };
  switch (var) {
    case 't': flip(0); break;
    case 'x': flip(1); break;
    case 'u':
      flip(2);
      flip(4);
      break;
    default: throw DomainError("discrete involution for t, x or u only");
  }
  return m;
}

}  // namespace wavesym
