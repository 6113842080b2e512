#pragma once

#include "wavesym/expr.hpp"

namespace wavesym {

struct Node {
  Kind kind = Kind::Const;
  Fn fn = Fn::Exp;
  Rational value;
  std::string name;
  std::vector<Expr> args;
  std::size_t hash = 0;
  std::uint64_t mask = 0;
};

// Raw node construction; bypasses every rewrite rule.
struct NodeFactory {
  static Expr make_const(const Rational& q);
  static Expr make_symbol(const std::string& name);
  static Expr make(Kind k, Fn f, std::vector<Expr> args);
};

}  // namespace wavesym
