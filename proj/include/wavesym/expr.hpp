#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavesym/real.hpp"

namespace wavesym {

enum class Kind : std::uint8_t { Const, Symbol, Func, Pow, Mul, Add };

enum class Fn : std::uint8_t { Exp, Ln, Sin, Cos, Tan, Sinh, Cosh, Abs, Sign, ArcTan, ArcTanh };

const char* fn_name(Fn f);

struct Node;

// Immutable expression handle. Construction through the free functions below
// applies the automatic rewrites (flattening, like-term collection, constant
// folding); full canonical form additionally needs simplify().
class Expr {
 public:
  Expr();
  Expr(int v);
  Expr(long v);
  Expr(const Rational& q);

  static Expr symbol(const std::string& name);

  Kind kind() const;
  const Rational& value() const;
  const std::string& name() const;
  Fn fn() const;
  const std::vector<Expr>& args() const;
  const Expr& arg(std::size_t i) const { return args()[i]; }
  std::size_t hash() const;
  std::uint64_t symbol_mask() const;

  bool is_const() const { return kind() == Kind::Const; }
  bool is_symbol() const { return kind() == Kind::Symbol; }
  bool is_zero() const;
  bool is_one() const;
  bool is_integer() const;

  const Node* node() const { return p_.get(); }

  bool operator==(const Expr& o) const;
  bool operator!=(const Expr& o) const { return !(*this == o); }

  std::string str() const;

 private:
  explicit Expr(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
  friend struct NodeFactory;
};

struct ExprHash {
  std::size_t operator()(const Expr& e) const { return e.hash(); }
};

// Structural total order used for canonical sorting.
int compare(const Expr& a, const Expr& b);
struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

std::uint64_t symbol_bit(const std::string& name);

// Construction with automatic rewrites.
Expr add(std::vector<Expr> terms);
Expr mul(std::vector<Expr> factors);
Expr pow(const Expr& base, const Expr& exponent);
Expr func(Fn f, const Expr& a);

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr& operator+=(Expr& a, const Expr& b);
Expr& operator-=(Expr& a, const Expr& b);
Expr& operator*=(Expr& a, const Expr& b);

Expr exp(const Expr& a);
Expr ln(const Expr& a);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr tan(const Expr& a);
Expr sinh(const Expr& a);
Expr cosh(const Expr& a);
Expr abs(const Expr& a);
Expr sign(const Expr& a);
Expr arctan(const Expr& a);
Expr arctanh(const Expr& a);
Expr sqrt(const Expr& a);

Expr sym(const std::string& name);
Expr rat(long num, long den = 1);

// Split a term into rational coefficient and the remaining factor.
std::pair<Rational, Expr> split_coeff(const Expr& e);
// Split a factor into (base, exponent).
std::pair<Expr, Expr> split_power(const Expr& e);

// True when the expression is positive under the local chart convention
// (symbols, exponentials and even powers are taken positive).
bool assumed_positive(const Expr& e);

// Full expansion followed by trigonometric normalization; the result is the
// canonical form used for structural zero tests and equality. Past a fixed
// work budget the input is returned unchanged.
Expr simplify(const Expr& e);
Expr expand(const Expr& e);

// Clears denominators: returns an expanded numerator N such that e = N / D
// with D a product of powers of atoms and non-polynomial sums.
Expr numerator_form(const Expr& e);

// Simultaneous substitution of symbols (no canonicalization).
Expr subs_raw(const Expr& e, const std::map<std::string, Expr>& b);
// Simultaneous substitution followed by simplify().
Expr substitute(const Expr& e, const std::map<std::string, Expr>& b);

// Partial derivative; diff_raw skips the final canonicalization.
Expr diff_raw(const Expr& e, const std::string& v);
Expr differentiate(const Expr& e, const std::string& v);

std::set<std::string> free_symbols(const Expr& e);
bool depends_on(const Expr& e, const std::string& v);

// Text I/O.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& msg);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

Expr parse(const std::string& text);
std::string render(const Expr& e);

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wavesym

template <>
struct std::hash<wavesym::Expr> {
  std::size_t operator()(const wavesym::Expr& e) const { return e.hash(); }
};
