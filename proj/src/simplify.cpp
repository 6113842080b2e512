#include <unordered_map>

#include "node.hpp"
#include "wavesym/expr.hpp"

namespace wavesym {

namespace {

using Memo = std::unordered_map<const Node*, std::pair<Expr, Expr>>;

// Thrown when a rewrite exceeds its work budget; compositions such as
// sin(arctan(..)) can otherwise expand without bound.
struct OverBudget {};

constexpr std::size_t kWorkBudget = 20000;

class Simplifier {
 public:
  Expr full(const Expr& e) {
    if (e.kind() == Kind::Const || e.kind() == Kind::Symbol) return e;
    auto it = memo_.find(e.node());
    if (it != memo_.end()) return it->second.second;
    charge(1);
    Expr r = expand_top(e);
    for (int i = 0; i < 32; ++i) {
      Expr t = trig_top(r);
      if (t == r) break;
      r = expand_top(t);
    }
    memo_.emplace(e.node(), std::make_pair(e, r));
    return r;
  }

  // Numerator after bringing everything over a common denominator. The
  // denominator is tracked as base -> positive rational exponent.
  struct Frac {
    Expr num;
    std::map<Expr, Rational, ExprLess> den;
  };

  Frac together(const Expr& e) {
    switch (e.kind()) {
      case Kind::Const:
      case Kind::Symbol:
      case Kind::Func:
        return {full(e), {}};
      case Kind::Pow: {
        const Expr& b = e.arg(0);
        const Expr& x = e.arg(1);
        if (x.kind() != Kind::Const) return {full(e), {}};
        const Rational& c = x.value();
        bool integer = c.get_den() == 1;
        if (c < 0) {
          Rational k = -c;
          if (integer && b.kind() == Kind::Add) {
            Frac fb = together(b);
            Frac out{Expr(1), {}};
            std::vector<Expr> nf;
            for (const auto& [base, ex] : fb.den) nf.push_back(pow(base, Expr(ex * k)));
            out.num = expand_top(mul(nf));
            add_den(out.den, fb.num, k);
            return out;
          }
          Frac out{Expr(1), {}};
          add_den(out.den, full(b), k);
          return out;
        }
        if (integer && b.kind() == Kind::Add) {
          Frac fb = together(b);
          Frac out;
          out.num = expand_top(pow(fb.num, x));
          for (const auto& [base, ex] : fb.den) out.den[base] = ex * c;
          return out;
        }
        return {full(e), {}};
      }
      case Kind::Mul: {
        Frac out{Expr(1), {}};
        std::vector<Expr> nums;
        for (const auto& f : e.args()) {
          Frac ff = together(f);
          nums.push_back(ff.num);
          for (const auto& [base, ex] : ff.den) out.den[base] += ex;
        }
        out.num = expand_top(mul(nums));
        return out;
      }
      case Kind::Add: {
        std::vector<Frac> parts;
        std::map<Expr, Rational, ExprLess> dmax;
        for (const auto& t : e.args()) {
          parts.push_back(together(t));
          for (const auto& [base, ex] : parts.back().den) {
            auto it = dmax.find(base);
            if (it == dmax.end() || it->second < ex) dmax[base] = ex;
          }
        }
        std::vector<Expr> terms;
        for (auto& p : parts) {
          std::vector<Expr> f{p.num};
          for (const auto& [base, ex] : dmax) {
            auto it = p.den.find(base);
            Rational have = it == p.den.end() ? Rational(0) : it->second;
            if (ex != have) f.push_back(pow(base, Expr(Rational(ex - have))));
          }
          terms.push_back(expand_top(mul(f)));
        }
        return {expand_top(add(terms)), dmax};
      }
    }
    return {full(e), {}};
  }

 private:
  static void add_den(std::map<Expr, Rational, ExprLess>& den, const Expr& b, const Rational& k) {
    if (b.kind() == Kind::Const) return;  // constant denominators never vanish
    if (b.kind() == Kind::Mul) {
      for (const auto& f : b.args()) add_den(den, f, k);
      return;
    }
    if (b.kind() == Kind::Pow && b.arg(1).kind() == Kind::Const) {
      Rational kk = k * b.arg(1).value();
      if (kk > 0) {
        den[b.arg(0)] += kk;
        return;
      }
    }
    den[b] += k;
  }

  // Product of already-expanded factors, multiplied out.
  Expr distribute(const std::vector<Expr>& factors) {
    std::vector<Expr> terms{Expr(1)};
    std::vector<Expr> scalar;
    for (const auto& f : factors) {
      if (f.kind() != Kind::Add) {
        scalar.push_back(f);
        continue;
      }
      std::vector<Expr> next;
      next.reserve(terms.size() * f.args().size());
      for (const auto& t : terms)
        for (const auto& s : f.args()) next.push_back(mul({t, s}));
      terms = std::move(next);
      charge(terms.size());
    }
    if (!scalar.empty()) {
      Expr s = mul(scalar);
      if (s.kind() == Kind::Add) return distribute({add(terms), s});
      for (auto& t : terms) t = mul({t, s});
    }
    return add(std::move(terms));
  }

  Expr expand_pow(const Expr& b, const Rational& n) {
    // b is an expanded sum, n a positive integer.
    long k = n.get_num().get_si();
    Expr r = b;
    for (long i = 1; i < k; ++i) r = distribute({r, b});
    return r;
  }

  Expr expand_top(const Expr& e) {
    switch (e.kind()) {
      case Kind::Const:
      case Kind::Symbol:
        return e;
      case Kind::Func:
        return func(e.fn(), full(e.arg(0)));
      case Kind::Add: {
        std::vector<Expr> ts;
        ts.reserve(e.args().size());
        for (const auto& a : e.args()) ts.push_back(expand_top(a));
        return add(std::move(ts));
      }
      case Kind::Mul: {
        std::vector<Expr> fs;
        fs.reserve(e.args().size());
        for (const auto& a : e.args()) fs.push_back(expand_top(a));
        Expr m = mul(fs);
        if (m.kind() != Kind::Mul) return m.kind() == Kind::Pow ? expand_top(m) : m;
        return distribute(m.args());
      }
      case Kind::Pow: {
        Expr b = full(e.arg(0));
        Expr x = full(e.arg(1));
        if (b.kind() == Kind::Add && x.kind() == Kind::Const && x.value() > 1) {
          const Rational& c = x.value();
          if (c.get_den() == 1) return expand_pow(b, c);
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
          Expr frac = NodeFactory::make(Kind::Pow, Fn::Exp, {b, Expr(Rational(c - Rational(q)))});
          return distribute({expand_pow(b, Rational(q)), frac});
        }
        Expr p = pow(b, x);
        if (p.kind() == Kind::Mul) {
          std::vector<Expr> fs;
          for (const auto& f : p.args()) {
            if (f.kind() == Kind::Pow && f.arg(0).kind() == Kind::Add && f.arg(1).kind() == Kind::Const &&
                f.arg(1).value() > 1) {
              fs.push_back(expand_top(f));
            } else {
              fs.push_back(f);
            }
          }
          return distribute(fs);
        }
        if (p.kind() == Kind::Add) return p;
        if (p.kind() == Kind::Pow && p.arg(0).kind() == Kind::Add && p.arg(1).kind() == Kind::Const &&
            p.arg(1).value() > 1 && !(p == e))
          return expand_top(p);
        return p;
      }
    }
    return e;
  }

  // cos(a)^n -> cos(a)^(n-2) (1 - sin(a)^2) for integer n >= 2.
  static bool is_cos_pow(const Expr& f) {
    return f.kind() == Kind::Pow && f.arg(0).kind() == Kind::Func && f.arg(0).fn() == Fn::Cos &&
           f.arg(1).is_integer() && f.arg(1).value() >= 2;
  }
  static Expr reduce_factor(const Expr& f) {
    if (!is_cos_pow(f)) return f;
    const Expr& c = f.arg(0);
    Expr s = func(Fn::Sin, c.arg(0));
    Rational n = f.arg(1).value();
    return mul({pow(c, Expr(Rational(n - 2))), add({Expr(1), mul({Expr(-1), pow(s, Expr(2))})})});
  }
  Expr trig_top(const Expr& e) {
    if (is_cos_pow(e)) return reduce_factor(e);
    if (e.kind() == Kind::Mul) {
      bool any = false;
      std::vector<Expr> fs;
      for (const auto& f : e.args()) {
        if (is_cos_pow(f)) any = true;
        fs.push_back(reduce_factor(f));
      }
      return any ? mul(fs) : e;
    }
    if (e.kind() == Kind::Add) {
      bool any = false;
      std::vector<Expr> ts;
      for (const auto& t : e.args()) {
        Expr r = trig_top(t);
        if (!(r == t)) any = true;
        ts.push_back(r);
      }
      return any ? add(ts) : e;
    }
    return e;
  }

  void charge(std::size_t n) {
    work_ += n;
    if (work_ > kWorkBudget) throw OverBudget{};
  }

  Memo memo_;
  std::size_t work_ = 0;
};

}  // namespace

Expr simplify(const Expr& e) {
  Simplifier s;
  try {
    return s.full(e);
  } catch (const OverBudget&) {
    return e;
  }
}

Expr expand(const Expr& e) { return simplify(e); }

Expr numerator_form(const Expr& e) {
  Simplifier s;
  try {
    auto fr = s.together(s.full(e));
    return s.full(fr.num);
  } catch (const OverBudget&) {
    throw DomainError("numerator form: work budget exceeded");
  }
}

namespace {

struct Subst {
  const std::map<std::string, Expr>& b;
  std::uint64_t mask = 0;
  std::unordered_map<const Node*, std::pair<Expr, Expr>> memo;

  Expr run(const Expr& e) {
    if ((e.symbol_mask() & mask) == 0) return e;
    if (e.kind() == Kind::Symbol) {
      auto it = b.find(e.name());
      return it == b.end() ? e : it->second;
    }
    auto it = memo.find(e.node());
    if (it != memo.end()) return it->second.second;
    std::vector<Expr> a;
    a.reserve(e.args().size());
    for (const auto& x : e.args()) a.push_back(run(x));
    Expr r;
    switch (e.kind()) {
      case Kind::Func: r = func(e.fn(), a[0]); break;
      case Kind::Pow: r = pow(a[0], a[1]); break;
      case Kind::Mul: r = mul(std::move(a)); break;
      case Kind::Add: r = add(std::move(a)); break;
      default: r = e;
    }
    memo.emplace(e.node(), std::make_pair(e, r));
    return r;
  }
};

}  // namespace

Expr subs_raw(const Expr& e, const std::map<std::string, Expr>& b) {
  Subst s{b, 0, {}};
  for (const auto& [k, v] : b) s.mask |= symbol_bit(k);
  return s.run(e);
}

Expr substitute(const Expr& e, const std::map<std::string, Expr>& b) { return simplify(subs_raw(e, b)); }

}  // namespace wavesym
