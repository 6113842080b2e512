#pragma once

#include <array>
#include <string>

#include "wavesym/jets.hpp"
#include "wavesym/zero.hpp"

namespace wavesym {

class InvalidMember : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One equation u_tt = f(x,u) u_xx + g(x,u) of the class.
struct ClassMember {
  Expr f;
  Expr g;
  Chart chart;

  // Validates f != 0 and (f_u, g_uu) != (0,0); LikelyZero counts as zero.
  static ClassMember make(const Expr& f, const Expr& g, const Chart& chart = {});
  // No validation (used for intermediate results and negative tests).
  static ClassMember unchecked(const Expr& f, const Expr& g, const Chart& chart = {});

  std::string fingerprint() const;
};

// Not projectable or not affine in u; carries the offending derivative.
class NotProjectable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Left minus right of the five determining equations.
std::array<Expr, 5> invariance_residuals(const VectorField& q, const ClassMember& th,
                                         const ZeroOptions& opt = {});

// Full criterion on the jet space with u_tt -> f u_xx + g substituted.
Expr criterion_residual(const VectorField& q, const ClassMember& th);

struct SymmetryVerdict {
  bool symmetric = false;
  std::array<ZeroResult, 5> residuals;
  ZeroResult direct;

  bool exact() const;
  std::string str() const;
};

SymmetryVerdict is_symmetry(const VectorField& q, const ClassMember& th, const ZeroOptions& opt = {});

}  // namespace wavesym
