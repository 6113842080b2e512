#include "wavesym/jets.hpp"

namespace wavesym {

VectorField::VectorField(std::vector<std::string> coords, std::vector<Expr> comps)
    : coords_(std::move(coords)), comps_(std::move(comps)) {
  if (coords_.size() != comps_.size()) throw CoordinateMismatch("component count differs from coordinate count");
}

VectorField VectorField::txu(const Expr& tau, const Expr& xi, const Expr& eta) {
  return VectorField({"t", "x", "u"}, {tau, xi, eta});
}

VectorField VectorField::txufg(const Expr& tau, const Expr& xi, const Expr& eta, const Expr& phi_f,
                               const Expr& phi_g) {
  return VectorField({"t", "x", "u", "f", "g"}, {tau, xi, eta, phi_f, phi_g});
}

int VectorField::index_of(const std::string& coord) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] == coord) return static_cast<int>(i);
  return -1;
}

const Expr& VectorField::component(const std::string& coord) const {
  int i = index_of(coord);
  if (i < 0) throw CoordinateMismatch("no coordinate '" + coord + "'");
  return comps_[i];
}

Expr VectorField::apply(const Expr& h) const {
  std::vector<Expr> ts;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (comps_[i].is_zero() || !depends_on(h, coords_[i])) continue;
    ts.push_back(mul({comps_[i], diff_raw(h, coords_[i])}));
  }
  return simplify(add(std::move(ts)));
}

VectorField VectorField::simplified() const {
  std::vector<Expr> c;
  for (const auto& e : comps_) c.push_back(simplify(e));
  return VectorField(coords_, std::move(c));
}

VectorField VectorField::project(std::size_t n) const {
  if (n > coords_.size()) throw CoordinateMismatch("projection to more coordinates than present");
  return VectorField(std::vector<std::string>(coords_.begin(), coords_.begin() + n),
                     std::vector<Expr>(comps_.begin(), comps_.begin() + n));
}

bool VectorField::is_zero(const Chart& chart, const ZeroOptions& opt) const {
  for (const auto& c : comps_)
    if (!wavesym::is_zero(c, chart, opt).zero()) return false;
  return true;
}

std::string VectorField::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const Expr& c = comps_[i];
    std::string d = "d_" + coords_[i];
    if (c.is_one()) {
      out += d;
    } else if (c.kind() == Kind::Add) {
      out += "(" + render(c) + ")*" + d;
    } else {
      out += render(c) + "*" + d;
    }
  }
  return out.empty() ? "0" : out;
}

static void same_coords(const VectorField& a, const VectorField& b) {
  if (a.coords() != b.coords()) throw CoordinateMismatch("vector fields on different coordinate lists");
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  same_coords(a, b);
  std::vector<Expr> c;
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(a[i] + b[i]);
  return VectorField(a.coords(), std::move(c));
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  same_coords(a, b);
  std::vector<Expr> c;
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(a[i] - b[i]);
  return VectorField(a.coords(), std::move(c));
}

VectorField operator*(const Expr& k, const VectorField& a) {
  std::vector<Expr> c;
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(k * a[i]);
  return VectorField(a.coords(), std::move(c));
}

VectorField operator-(const VectorField& a) { return Expr(-1) * a; }

VectorField commutator(const VectorField& q1, const VectorField& q2) {
  same_coords(q1, q2);
  std::vector<Expr> c;
  for (std::size_t i = 0; i < q1.size(); ++i) c.push_back(simplify(q1.apply(q2[i]) - q2.apply(q1[i])));
  return VectorField(q1.coords(), std::move(c));
}

bool has_third_order(const Expr& e) {
  for (const char* s : {jet::uttt, jet::uttx, jet::utxx, jet::uxxx})
    if (depends_on(e, s)) return true;
  return false;
}

bool has_second_order(const Expr& e) {
  for (const char* s : {jet::utt, jet::utx, jet::uxx})
    if (depends_on(e, s)) return true;
  return has_third_order(e);
}

namespace {

// D_t, D_x on expressions of order <= 2 (output may reach order 3).
Expr total_raw(const Expr& e, const std::string& v) {
  if (has_third_order(e)) throw DomainError("total derivative beyond third order");
  const bool t = v == "t";
  if (!t && v != "x") throw DomainError("total derivative only in t or x");
  const std::pair<const char*, const char*> chain_t[] = {
      {"u", jet::ut}, {jet::ut, jet::utt}, {jet::ux, jet::utx},
      {jet::utt, jet::uttt}, {jet::utx, jet::uttx}, {jet::uxx, jet::utxx}};
  const std::pair<const char*, const char*> chain_x[] = {
      {"u", jet::ux}, {jet::ut, jet::utx}, {jet::ux, jet::uxx},
      {jet::utt, jet::uttx}, {jet::utx, jet::utxx}, {jet::uxx, jet::uxxx}};
  std::vector<Expr> ts{diff_raw(e, v)};
  for (const auto& [s, next] : (t ? chain_t : chain_x)) {
    if (!depends_on(e, s)) continue;
    ts.push_back(mul({sym(next), diff_raw(e, s)}));
  }
  return add(std::move(ts));
}

}  // namespace

Expr total_derivative(const Expr& e, const std::string& v) {
  if (has_second_order(e)) throw DomainError("total_derivative: input must have jet order <= 1");
  return simplify(total_raw(e, v));
}

ProlongedField prolong2(const VectorField& q) {
  if (q.coords() != std::vector<std::string>{"t", "x", "u"})
    throw CoordinateMismatch("prolong2 needs a field on (t,x,u)");
  const Expr& tau = q[0];
  const Expr& xi = q[1];
  const Expr& eta = q[2];
  Expr ut = sym(jet::ut), ux = sym(jet::ux);
  Expr utt = sym(jet::utt), utx = sym(jet::utx), uxx = sym(jet::uxx);
  // eta^{J,v} = D_v eta^J - u_{Jt} D_v tau - u_{Jx} D_v xi; every step stays
  // at jet order <= 2, so nothing has to cancel at third order.
  Expr tau_t = total_raw(tau, "t"), tau_x = total_raw(tau, "x");
  Expr xi_t = total_raw(xi, "t"), xi_x = total_raw(xi, "x");
  ProlongedField p;
  p.base = q;
  p.eta_t = simplify(total_raw(eta, "t") - ut * tau_t - ux * xi_t);
  p.eta_x = simplify(total_raw(eta, "x") - ut * tau_x - ux * xi_x);
  p.eta_tt = simplify(total_raw(p.eta_t, "t") - utt * tau_t - utx * xi_t);
  p.eta_tx = simplify(total_raw(p.eta_t, "x") - utt * tau_x - utx * xi_x);
  p.eta_xx = simplify(total_raw(p.eta_x, "x") - utx * tau_x - uxx * xi_x);
  return p;
}

}  // namespace wavesym
