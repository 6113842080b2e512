#pragma once

#include <string>
#include <vector>

#include "wavesym/expr.hpp"
#include "wavesym/zero.hpp"

namespace wavesym {

// First-order differential operator sum_i comps[i] * d/d coords[i].
class VectorField {
 public:
  VectorField() = default;
  VectorField(std::vector<std::string> coords, std::vector<Expr> comps);

  // Fields on (t,x,u) and on (t,x,u,f,g).
  static VectorField txu(const Expr& tau, const Expr& xi, const Expr& eta);
  static VectorField txufg(const Expr& tau, const Expr& xi, const Expr& eta, const Expr& phi_f, const Expr& phi_g);

  const std::vector<std::string>& coords() const { return coords_; }
  const std::vector<Expr>& comps() const { return comps_; }
  std::size_t size() const { return comps_.size(); }
  const Expr& operator[](std::size_t i) const { return comps_[i]; }
  const Expr& component(const std::string& coord) const;
  int index_of(const std::string& coord) const;

  // Q(h) = sum_i comps[i] * dh/dcoords[i]
  Expr apply(const Expr& h) const;
  VectorField simplified() const;
  // Drops trailing coordinates (the projection to (t,x,u) of a 5-coordinate field).
  VectorField project(std::size_t n) const;
  bool is_zero(const Chart& chart = {}, const ZeroOptions& opt = {}) const;

  std::string str() const;

  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const Expr& c, const VectorField& a);
  friend VectorField operator-(const VectorField& a);

 private:
  std::vector<std::string> coords_;
  std::vector<Expr> comps_;
};

class CoordinateMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// [Q1,Q2] = Q1(Q2) - Q2(Q1), canonical components.
VectorField commutator(const VectorField& q1, const VectorField& q2);

// Second-order jet symbols, and the third-order ones used only internally.
namespace jet {
inline const char* const ut = "u_t";
inline const char* const ux = "u_x";
inline const char* const utt = "u_tt";
inline const char* const utx = "u_tx";
inline const char* const uxx = "u_xx";
inline const char* const uttt = "u_ttt";
inline const char* const uttx = "u_ttx";
inline const char* const utxx = "u_txx";
inline const char* const uxxx = "u_xxx";
}  // namespace jet

bool has_third_order(const Expr& e);
bool has_second_order(const Expr& e);

// Total derivative D_t or D_x of an expression of jet order <= 1.
Expr total_derivative(const Expr& e, const std::string& v);

struct ProlongedField {
  VectorField base;
  Expr eta_t, eta_x, eta_tt, eta_tx, eta_xx;
};

ProlongedField prolong2(const VectorField& q);

}  // namespace wavesym
