#pragma once

#include <map>
#include <string>

#include "wavesym/expr.hpp"

namespace wavesym {

using Point = std::map<std::string, Rational>;

// Working precision in decimal digits; WAVESYM_PRECISION overrides the
// default of 50.
int default_digits();

struct Value {
  bool exact = false;
  Rational q;      // valid when exact
  Real approx;     // always valid (rounded copy of q when exact)
  Real bound;      // absolute error bound of approx (0 when exact)

  bool is_zero_exact() const { return exact && q == 0; }
  std::string str(int digits = 20) const;
};

class UnboundSymbolError : public std::runtime_error {
 public:
  explicit UnboundSymbolError(const std::string& name)
      : std::runtime_error("unbound symbol '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class SingularError : public DomainError {
 public:
  SingularError(const std::string& what, const Expr& where)
      : DomainError(what + " in " + render(where)), where_(where) {}
  const Expr& where() const { return where_; }

 private:
  Expr where_;
};

// Exact when only rational operations are involved; otherwise evaluates at
// digits+30 and digits+60 and reports their difference as the error bound.
Value eval(const Expr& e, const Point& point, int digits = default_digits());

// Single evaluation at the given bit precision (no error bound).
Value eval_at_bits(const Expr& e, const Point& point, mpfr_prec_t bits);

}  // namespace wavesym
