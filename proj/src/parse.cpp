#include <cctype>
#include <optional>

#include "wavesym/expr.hpp"

namespace wavesym {

namespace {

std::optional<Fn> lookup_fn(const std::string& s) {
  static const std::pair<const char*, Fn> table[] = {
      {"exp", Fn::Exp},   {"ln", Fn::Ln},       {"sin", Fn::Sin},       {"cos", Fn::Cos},
      {"tan", Fn::Tan},   {"sinh", Fn::Sinh},   {"cosh", Fn::Cosh},     {"abs", Fn::Abs},
      {"sign", Fn::Sign}, {"arctan", Fn::ArcTan}, {"arctanh", Fn::ArcTanh},
  };
  for (const auto& [n, f] : table)
    if (s == n) return f;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (i_ != s_.size()) fail({"operator", "end of input"}, "unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) {
    std::string msg = "parse error at offset " + std::to_string(i_) + ": " + what + "; expected one of:";
    for (const auto& x : expected) msg += " " + x;
    throw ParseError(i_, std::move(expected), msg);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  // Accepts ASCII '-' and U+2212.
  bool accept_minus() {
    skip();
    if (accept('-')) return true;
    if (s_.compare(i_, 3, "\xE2\x88\x92") == 0) {
      i_ += 3;
      return true;
    }
    return false;
  }

  Expr expr() {
    std::vector<Expr> terms{term()};
    for (;;) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept_minus()) {
        terms.push_back(-term());
      } else {
        break;
      }
    }
    return terms.size() == 1 ? terms[0] : add(std::move(terms));
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) {
        e = e * unary();
      } else if (accept('/')) {
        std::size_t at = i_;
        Expr d = unary();
        if (d.is_zero()) {
          i_ = at;
          throw DomainError("division by zero in literal");
        }
        e = e / d;
      } else {
        break;
      }
    }
    return e;
  }

  Expr unary() {
    if (accept_minus()) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    skip();
    bool euler = false;
    Expr base = primary(euler);
    if (accept('^')) {
      Expr ex = unary();
      return euler ? exp(ex) : pow(base, ex);
    }
    return euler ? exp(Expr(1)) : base;
  }

  Expr primary(bool& euler) {
    skip();
    if (i_ >= s_.size()) fail({"number", "identifier", "("}, "unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Expr e = expr();
      if (!accept(')')) fail({")"}, "unbalanced parenthesis");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string id = s_.substr(start, i_ - start);
      skip();
      if (i_ < s_.size() && s_[i_] == '(') {
        auto f = lookup_fn(id);
        if (!f && id != "sqrt") {
          i_ = start;
          fail({"exp", "ln", "sin", "cos", "tan", "sinh", "cosh", "abs", "sign", "arctan", "arctanh"},
               "unknown function '" + id + "'");
        }
        ++i_;
        Expr a = expr();
        if (!accept(')')) fail({")"}, "unterminated argument list");
        return f ? func(*f, a) : sqrt(a);
      }
      if (id == "e") {
        euler = true;
        return Expr(1);
      }
      return sym(id);
    }
    fail({"number", "identifier", "("}, std::string("unexpected character '") + c + "'");
  }

  Expr number() {
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string whole = s_.substr(start, i_ - start);
    std::string frac;
    if (i_ < s_.size() && s_[i_] == '.') {
      ++i_;
      std::size_t fs = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      frac = s_.substr(fs, i_ - fs);
      if (whole.empty() && frac.empty()) {
        i_ = start;
        fail({"digit"}, "malformed number");
      }
    }
    mpz_class num(whole.empty() ? std::string("0") : whole + frac, 10);
    mpz_class den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    return Expr(Rational(num, den));
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

Expr parse(const std::string& text) {
  Parser p(text);
  return p.run();
}

}  // namespace wavesym
