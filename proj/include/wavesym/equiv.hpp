#pragma once

#include <string>
#include <vector>

#include "wavesym/deteq.hpp"
#include "wavesym/ptrans.hpp"

namespace wavesym {

// t~ = c1 t + c0, x~ = phi(x), u~ = c2 |phi_x|^(1/2) u + psi(x), with the
// induced action on (f,g). phi_inv is the compositional inverse of phi.
// Elements are used on the phi_x > 0 chart.
struct EquivalenceElement {
  Rational c0 = 0;
  Rational c1 = 1;
  Rational c2 = 1;
  Expr phi = sym("x");
  Expr phi_inv = sym("x");
  Expr psi = Expr(0);

  static EquivalenceElement identity() { return {}; }
  void validate(const Chart& chart = {}) const;

  PointMap point_map() const;  // on (t,x,u), with inverse
  PointMap full_map() const;   // on (t,x,u,f,g), with inverse
  std::string str() const;
};

ClassMember apply_to_member(const EquivalenceElement& s, const ClassMember& th, const ZeroOptions& opt = {});

// b o a (a acts first).
EquivalenceElement compose_equiv(const EquivalenceElement& a, const EquivalenceElement& b);
EquivalenceElement invert_equiv(const EquivalenceElement& s);

enum class ElemKind { Pt, Dt, Du, D, Z };

struct Elementary {
  ElemKind kind;
  Rational c = 0;          // c0, c1 or c2
  Expr fn = Expr(0);       // phi or psi
  Expr fn_inv = Expr(0);   // phi inverse (D only)

  static Elementary Pt(const Rational& c0) { return {ElemKind::Pt, c0, Expr(0), Expr(0)}; }
  static Elementary Dt(const Rational& c1) { return {ElemKind::Dt, c1, Expr(0), Expr(0)}; }
  static Elementary Du(const Rational& c2) { return {ElemKind::Du, c2, Expr(0), Expr(0)}; }
  static Elementary D(const Expr& phi, const Expr& phi_inv) { return {ElemKind::D, 0, phi, phi_inv}; }
  static Elementary Z(const Expr& psi) { return {ElemKind::Z, 0, psi, Expr(0)}; }

  PointMap full_map() const;
  std::string str() const;
};

// [Pt(c0), Dt(c1), Z(psi o phi_inv), D(phi), Du(c2)]; the rightmost acts first.
std::vector<Elementary> factor_elementary(const EquivalenceElement& s);
// Composite action of a factor list in the same order convention.
PointMap compose_elementary(const std::vector<Elementary>& factors);

// alpha^phi = (2 phi_xxx phi_x - 3 phi_xx^2) / (4 |phi_x|^(3/2)) on phi_x > 0.
Expr alpha_phi(const Expr& phi);

enum class GenKind { Pt, Dt, Du, D, Z };

// Equivalence-algebra generators on (t,x,u,f,g); param is zeta or chi.
VectorField generator(GenKind kind, const Expr& param = Expr(0));

// Push-forward of an equivalence-algebra field by an elementary transformation.
VectorField adjoint_on_generator(const Elementary& e, const VectorField& gen);

// Discrete involutions changing the signs of t, x or u (with g -> -g for u).
PointMap discrete_involution(char var);

}  // namespace wavesym
