#include "wavesym/expr.hpp"

namespace wavesym {

namespace {

std::string rat_str(const Rational& q) { return q.get_str(); }

bool atomic(const Expr& e) {
  switch (e.kind()) {
    case Kind::Symbol:
    case Kind::Func:
      return true;
    case Kind::Const:
      return e.value() >= 0 && e.value().get_den() == 1;
    default:
      return false;
  }
}

std::string wrap(const Expr& e) { return atomic(e) ? render(e) : "(" + render(e) + ")"; }

std::string factor_str(const Expr& f) {
  if (f.kind() == Kind::Add || f.kind() == Kind::Mul) return "(" + render(f) + ")";
  if (f.kind() == Kind::Const && f.value() < 0) return "(" + render(f) + ")";
  return render(f);
}

}  // namespace

std::string render(const Expr& e) {
  switch (e.kind()) {
    case Kind::Const:
      return rat_str(e.value());
    case Kind::Symbol:
      return e.name();
    case Kind::Func:
      return std::string(fn_name(e.fn())) + "(" + render(e.arg(0)) + ")";
    case Kind::Pow: {
      const Expr& x = e.arg(1);
      std::string xs = (x.kind() == Kind::Symbol || (x.is_integer() && x.value() >= 0)) ? render(x)
                                                                                         : "(" + render(x) + ")";
      return wrap(e.arg(0)) + "^" + xs;
    }
    case Kind::Mul: {
      std::string out;
      std::size_t i = 0;
      const auto& a = e.args();
      if (a[0].kind() == Kind::Const) {
        const Rational& c = a[0].value();
        if (c == -1) {
          out = "-";
        } else {
          out = rat_str(c) + "*";
        }
        i = 1;
      }
      for (std::size_t k = i; k < a.size(); ++k) {
        if (k > i) out += "*";
        out += factor_str(a[k]);
      }
      return out;
    }
    case Kind::Add: {
      std::string out;
      bool first = true;
      for (const auto& t : e.args()) {
        auto [c, r] = split_coeff(t);
        if (first) {
          out = render(t);
          first = false;
        } else if (c < 0) {
          out += " - " + render(mul({Expr(Rational(-c)), r}));
        } else {
          out += " + " + render(t);
        }
      }
      return out;
    }
  }
  return "?";
}

}  // namespace wavesym
