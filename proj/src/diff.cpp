#include <unordered_map>

#include "node.hpp"
#include "wavesym/expr.hpp"

namespace wavesym {

namespace {

struct Differ {
  std::string v;
  std::unordered_map<const Node*, std::pair<Expr, Expr>> memo;

  Expr d(const Expr& e) {
    if (!depends_on(e, v)) return Expr(0);
    if (e.kind() == Kind::Symbol) return Expr(1);
    auto it = memo.find(e.node());
    if (it != memo.end()) return it->second.second;
    Expr r = compute(e);
    memo.emplace(e.node(), std::make_pair(e, r));
    return r;
  }

  Expr compute(const Expr& e) {
    switch (e.kind()) {
      case Kind::Add: {
        std::vector<Expr> ts;
        for (const auto& a : e.args()) ts.push_back(d(a));
        return add(std::move(ts));
      }
      case Kind::Mul: {
        const auto& a = e.args();
        std::vector<Expr> ts;
        for (std::size_t i = 0; i < a.size(); ++i) {
          Expr di = d(a[i]);
          if (di.is_zero()) continue;
          std::vector<Expr> fs;
          fs.reserve(a.size());
          for (std::size_t j = 0; j < a.size(); ++j) fs.push_back(j == i ? di : a[j]);
          ts.push_back(mul(std::move(fs)));
        }
        return add(std::move(ts));
      }
      case Kind::Pow: {
        const Expr& b = e.arg(0);
        const Expr& x = e.arg(1);
        if (!depends_on(x, v)) return mul({x, pow(b, add({x, Expr(-1)})), d(b)});
        // b^x (x' ln b + x b'/b)
        Expr t1 = mul({d(x), ln(b)});
        Expr t2 = depends_on(b, v) ? mul({x, d(b), pow(b, Expr(-1))}) : Expr(0);
        return mul({e, add({t1, t2})});
      }
      case Kind::Func: {
        const Expr& a = e.arg(0);
        Expr da = d(a);
        switch (e.fn()) {
          case Fn::Exp: return mul({e, da});
          case Fn::Ln: return mul({da, pow(a, Expr(-1))});
          case Fn::Sin: return mul({cos(a), da});
          case Fn::Cos: return mul({Expr(-1), sin(a), da});
          case Fn::Tan: return mul({pow(cos(a), Expr(-2)), da});
          case Fn::Sinh: return mul({cosh(a), da});
          case Fn::Cosh: return mul({sinh(a), da});
          case Fn::Abs: return mul({sign(a), da});
          case Fn::Sign: return Expr(0);
          case Fn::ArcTan: return mul({da, pow(add({Expr(1), pow(a, Expr(2))}), Expr(-1))});
          case Fn::ArcTanh: return mul({da, pow(add({Expr(1), mul({Expr(-1), pow(a, Expr(2))})}), Expr(-1))});
        }
        return Expr(0);
      }
      default:
        return Expr(0);
    }
  }
};

}  // namespace

Expr diff_raw(const Expr& e, const std::string& v) {
  Differ df{v, {}};
  return df.d(e);
}

Expr differentiate(const Expr& e, const std::string& v) { return simplify(diff_raw(e, v)); }

}  // namespace wavesym
