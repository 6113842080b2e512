#include "wavesym/expr.hpp"

#include <algorithm>
#include <cassert>

#include "node.hpp"

namespace wavesym {

const char* fn_name(Fn f) {
  switch (f) {
    case Fn::Exp: return "exp";
    case Fn::Ln: return "ln";
    case Fn::Sin: return "sin";
    case Fn::Cos: return "cos";
    case Fn::Tan: return "tan";
    case Fn::Sinh: return "sinh";
    case Fn::Cosh: return "cosh";
    case Fn::Abs: return "abs";
    case Fn::Sign: return "sign";
    case Fn::ArcTan: return "arctan";
    case Fn::ArcTanh: return "arctanh";
  }
  return "?";
}

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 3);
  std::size_t n = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < n; ++i) h = mix(h, mpz_getlimbn(z.get_mpz_t(), i));
  return h;
}

}  // namespace

std::uint64_t symbol_bit(const std::string& name) {
  return std::uint64_t{1} << (std::hash<std::string>{}(name) % 64);
}

Expr NodeFactory::make_const(const Rational& q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = q;
  n->hash = mix(mix(11, hash_mpz(q.get_num())), hash_mpz(q.get_den()));
  n->mask = 0;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr NodeFactory::make_symbol(const std::string& name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Symbol;
  n->name = name;
  n->hash = mix(23, std::hash<std::string>{}(name));
  n->mask = symbol_bit(name);
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr NodeFactory::make(Kind k, Fn f, std::vector<Expr> args) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->fn = f;
  std::size_t h = mix(37, static_cast<std::size_t>(k));
  if (k == Kind::Func) h = mix(h, static_cast<std::size_t>(f) + 101);
  std::uint64_t m = 0;
  for (const auto& a : args) {
    h = mix(h, a.hash());
    m |= a.symbol_mask();
  }
  n->hash = h;
  n->mask = m;
  n->args = std::move(args);
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

namespace {

const Expr& zero_expr() {
  static const Expr z = NodeFactory::make_const(Rational(0));
  return z;
}
const Expr& one_expr() {
  static const Expr o = NodeFactory::make_const(Rational(1));
  return o;
}

const std::vector<Expr>& no_args() {
  static const std::vector<Expr> v;
  return v;
}

}  // namespace

Expr::Expr() : p_(zero_expr().p_) {}
Expr::Expr(int v) : Expr(Rational(v)) {}
Expr::Expr(long v) : Expr(Rational(v)) {}
Expr::Expr(const Rational& q0) {
  Rational q = q0;
  q.canonicalize();
  if (q == 0) {
    p_ = zero_expr().p_;
  } else if (q == 1) {
    p_ = one_expr().p_;
  } else {
    p_ = NodeFactory::make_const(q).p_;
  }
}

Expr Expr::symbol(const std::string& name) { return NodeFactory::make_symbol(name); }

Kind Expr::kind() const { return p_->kind; }
const Rational& Expr::value() const { return p_->value; }
const std::string& Expr::name() const { return p_->name; }
Fn Expr::fn() const { return p_->fn; }
const std::vector<Expr>& Expr::args() const { return p_->args.empty() ? no_args() : p_->args; }
std::size_t Expr::hash() const { return p_->hash; }
std::uint64_t Expr::symbol_mask() const { return p_->mask; }
bool Expr::is_zero() const { return kind() == Kind::Const && value() == 0; }
bool Expr::is_one() const { return kind() == Kind::Const && value() == 1; }
bool Expr::is_integer() const { return kind() == Kind::Const && value().get_den() == 1; }

bool Expr::operator==(const Expr& o) const {
  if (p_ == o.p_) return true;
  if (p_->hash != o.p_->hash || p_->kind != o.p_->kind) return false;
  switch (p_->kind) {
    case Kind::Const: return p_->value == o.p_->value;
    case Kind::Symbol: return p_->name == o.p_->name;
    default: break;
  }
  if (p_->kind == Kind::Func && p_->fn != o.p_->fn) return false;
  if (p_->args.size() != o.p_->args.size()) return false;
  for (std::size_t i = 0; i < p_->args.size(); ++i)
    if (!(p_->args[i] == o.p_->args[i])) return false;
  return true;
}

std::string Expr::str() const { return render(*this); }

int compare(const Expr& a, const Expr& b) {
  if (a.node() == b.node()) return 0;
  if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Kind::Const: {
      int c = cmp(a.value(), b.value());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Kind::Symbol: {
      int c = a.name().compare(b.name());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Kind::Func:
      if (a.fn() != b.fn()) return static_cast<int>(a.fn()) < static_cast<int>(b.fn()) ? -1 : 1;
      return compare(a.arg(0), b.arg(0));
    case Kind::Pow: {
      int c = compare(a.arg(0), b.arg(0));
      return c != 0 ? c : compare(a.arg(1), b.arg(1));
    }
    case Kind::Mul:
    case Kind::Add: {
      const auto& x = a.args();
      const auto& y = b.args();
      // Compare from the most significant (last) element so that terms
      // sort by their leading factor rather than their coefficient.
      std::size_t n = std::min(x.size(), y.size());
      for (std::size_t i = 0; i < n; ++i) {
        int c = compare(x[x.size() - 1 - i], y[y.size() - 1 - i]);
        if (c != 0) return c;
      }
      if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

Expr sym(const std::string& name) { return Expr::symbol(name); }
Expr rat(long num, long den) { return Expr(Rational(num, den)); }

// ---------------------------------------------------------------------------
// helpers

std::pair<Rational, Expr> split_coeff(const Expr& e) {
  if (e.kind() == Kind::Const) return {e.value(), Expr(1)};
  if (e.kind() == Kind::Mul && e.arg(0).kind() == Kind::Const) {
    const auto& a = e.args();
    if (a.size() == 2) return {a[0].value(), a[1]};
    std::vector<Expr> rest(a.begin() + 1, a.end());
    return {a[0].value(), NodeFactory::make(Kind::Mul, Fn::Exp, std::move(rest))};
  }
  return {Rational(1), e};
}

std::pair<Expr, Expr> split_power(const Expr& e) {
  if (e.kind() == Kind::Pow) return {e.arg(0), e.arg(1)};
  return {e, Expr(1)};
}

bool assumed_positive(const Expr& e) {
  switch (e.kind()) {
    case Kind::Const: return e.value() > 0;
    case Kind::Symbol: return true;
    case Kind::Func: return e.fn() == Fn::Exp || e.fn() == Fn::Cosh || e.fn() == Fn::Abs;
    case Kind::Pow: {
      const Expr& x = e.arg(1);
      if (x.is_integer() && x.value().get_num() % 2 == 0) return true;
      return assumed_positive(e.arg(0));
    }
    case Kind::Mul:
    case Kind::Add:
      for (const auto& a : e.args())
        if (!assumed_positive(a)) return false;
      return true;
  }
  return false;
}

namespace {

Expr make_term(const Rational& c, const Expr& rest) {
  if (c == 1) return rest;
  if (rest.is_one()) return Expr(c);
  std::vector<Expr> f;
  f.emplace_back(c);
  if (rest.kind() == Kind::Mul) {
    f.insert(f.end(), rest.args().begin(), rest.args().end());
  } else {
    f.push_back(rest);
  }
  return NodeFactory::make(Kind::Mul, Fn::Exp, std::move(f));
}

// Leading non-constant term has a negative coefficient.
bool negative_form(const Expr& a) {
  switch (a.kind()) {
    case Kind::Const: return a.value() < 0;
    case Kind::Mul: return a.arg(0).kind() == Kind::Const && a.arg(0).value() < 0;
    case Kind::Add:
      for (const auto& t : a.args())
        if (t.kind() != Kind::Const) return negative_form(t);
      return false;
    default: return false;
  }
}

bool perfect_root(const mpz_class& z, unsigned long m, mpz_class& out) {
  if (z < 0) {
    if (m % 2 == 0) return false;
    mpz_class pos = -z;
    if (!perfect_root(pos, m, out)) return false;
    out = -out;
    return true;
  }
  return mpz_root(out.get_mpz_t(), z.get_mpz_t(), m) != 0;
}

Rational rat_pow_int(const Rational& b, const mpz_class& k) {
  if (!k.fits_slong_p()) throw DomainError("exponent too large");
  long n = k.get_si();
  mpz_class num, den;
  unsigned long an = static_cast<unsigned long>(n < 0 ? -n : n);
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), an);
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), an);
  Rational r;
  if (n >= 0) {
    r = Rational(num, den);
  } else {
    if (num == 0) throw DomainError("division by zero");
    r = Rational(den, num);
  }
  r.canonicalize();
  return r;
}

Expr const_pow(const Rational& b, const Rational& e) {
  if (b == 0) {
    if (e > 0) return Expr(0);
    throw DomainError("division by zero");
  }
  if (b == 1) return Expr(1);
  if (e.get_den() == 1) return Expr(rat_pow_int(b, e.get_num()));
  if (b < 0) return NodeFactory::make(Kind::Pow, Fn::Exp, {Expr(b), Expr(e)});
  // b^(q + r) with integer q = floor(e), 0 < r < 1.
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), e.get_num_mpz_t(), e.get_den_mpz_t());
  Rational r = e - Rational(q);
  Rational whole = rat_pow_int(b, q);
  // Try an exact root of b^r.
  if (!r.get_den().fits_ulong_p()) return Expr(whole) * NodeFactory::make(Kind::Pow, Fn::Exp, {Expr(b), Expr(r)});
  unsigned long m = r.get_den().get_ui();
  Rational br = rat_pow_int(b, r.get_num());
  mpz_class nr, dr;
  if (perfect_root(br.get_num(), m, nr) && perfect_root(br.get_den(), m, dr)) {
    Rational v(nr, dr);
    v.canonicalize();
    return Expr(whole * v);
  }
  Expr atom = NodeFactory::make(Kind::Pow, Fn::Exp, {Expr(b), Expr(r)});
  if (whole == 1) return atom;
  return NodeFactory::make(Kind::Mul, Fn::Exp, {Expr(whole), atom});
}

}  // namespace

// ---------------------------------------------------------------------------
// add

Expr add(std::vector<Expr> terms) {
  Rational c = 0;
  std::vector<std::pair<Expr, Rational>> items;
  items.reserve(terms.size() + 4);
  auto take = [&](const Expr& t) {
    if (t.kind() == Kind::Const) {
      c += t.value();
      return;
    }
    auto [k, r] = split_coeff(t);
    items.emplace_back(r, k);
  };
  for (const auto& t : terms) {
    if (t.kind() == Kind::Add) {
      for (const auto& s : t.args()) take(s);
    } else {
      take(t);
    }
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  std::vector<Expr> out;
  out.reserve(items.size() + 1);
  if (c != 0) out.emplace_back(c);
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i + 1;
    Rational k = items[i].second;
    while (j < items.size() && items[j].first == items[i].first) {
      k += items[j].second;
      ++j;
    }
    if (k != 0) out.push_back(make_term(k, items[i].first));
    i = j;
  }
  if (out.empty()) return Expr(0);
  if (out.size() == 1) return out[0];
  return NodeFactory::make(Kind::Add, Fn::Exp, std::move(out));
}

// ---------------------------------------------------------------------------
// mul

Expr mul(std::vector<Expr> factors) {
  for (int round = 0; round < 8; ++round) {
    Rational c = 1;
    std::vector<std::pair<Expr, Expr>> items;
    std::vector<Expr> exp_args;
    items.reserve(factors.size() + 4);
    bool zero = false;
    auto take = [&](const Expr& f) {
      if (f.kind() == Kind::Const) {
        c *= f.value();
        if (c == 0) zero = true;
      } else if (f.kind() == Kind::Func && f.fn() == Fn::Exp) {
        exp_args.push_back(f.arg(0));
      } else {
        items.push_back(split_power(f));
      }
    };
    for (const auto& f : factors) {
      if (f.kind() == Kind::Mul) {
        for (const auto& g : f.args()) take(g);
      } else {
        take(f);
      }
    }
    if (zero) return Expr(0);
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
    std::vector<Expr> out;
    out.reserve(items.size() + 2);
    bool changed = false;
    auto emit = [&](const Expr& p, const Expr& base) {
      if (p.kind() == Kind::Const) {
        c *= p.value();
        if (c == 0) zero = true;
        return;
      }
      if (p.kind() == Kind::Mul || (p.kind() == Kind::Func && p.fn() == Fn::Exp)) {
        changed = true;
        out.push_back(p);
        return;
      }
      if (!(split_power(p).first == base)) changed = true;
      out.push_back(p);
    };
    for (std::size_t i = 0; i < items.size();) {
      std::size_t j = i + 1;
      while (j < items.size() && items[j].first == items[i].first) ++j;
      Expr e;
      if (j == i + 1) {
        e = items[i].second;
      } else {
        std::vector<Expr> ex;
        for (std::size_t k = i; k < j; ++k) ex.push_back(items[k].second);
        e = add(std::move(ex));
      }
      if (j == i + 1 && e.is_one()) {
        out.push_back(items[i].first);
      } else if (j == i + 1 && !(e.is_one())) {
        out.push_back(NodeFactory::make(Kind::Pow, Fn::Exp, {items[i].first, e}));
      } else {
        emit(pow(items[i].first, e), items[i].first);
      }
      i = j;
    }
    if (zero) return Expr(0);
    if (!exp_args.empty()) {
      Expr ex = exp_args.size() == 1 ? func(Fn::Exp, exp_args[0]) : func(Fn::Exp, add(exp_args));
      if (ex.kind() == Kind::Const) {
        c *= ex.value();
      } else {
        if (!(ex.kind() == Kind::Func && ex.fn() == Fn::Exp)) changed = true;
        out.push_back(ex);
      }
    }
    if (changed) {
      out.emplace_back(c);
      factors = std::move(out);
      continue;
    }
    if (c == 0) return Expr(0);
    std::sort(out.begin(), out.end(), ExprLess{});
    if (out.empty()) return Expr(c);
    if (c == 1 && out.size() == 1) return out[0];
    std::vector<Expr> f;
    f.reserve(out.size() + 1);
    if (c != 1) f.emplace_back(c);
    f.insert(f.end(), out.begin(), out.end());
    return NodeFactory::make(Kind::Mul, Fn::Exp, std::move(f));
  }
  throw DomainError("product normalization did not converge");
}

// ---------------------------------------------------------------------------
// pow

Expr pow(const Expr& b, const Expr& e) {
  if (e.is_zero()) return Expr(1);
  if (e.is_one()) return b;
  if (b.is_one()) return Expr(1);
  if (e.kind() == Kind::Const) {
    const Rational& r = e.value();
    bool integer = r.get_den() == 1;
    if (b.kind() == Kind::Const) return const_pow(b.value(), r);
    if (b.kind() == Kind::Func && b.fn() == Fn::Exp) return func(Fn::Exp, mul({e, b.arg(0)}));
    if (b.kind() == Kind::Pow) {
      if (integer || assumed_positive(b.arg(0))) {
        Expr ne = mul({b.arg(1), e});
        return pow(b.arg(0), ne);
      }
    }
    if (b.kind() == Kind::Mul) {
      bool all_pos = true;
      for (const auto& f : b.args())
        if (!assumed_positive(f)) all_pos = false;
      if (integer || all_pos) {
        std::vector<Expr> fs;
        for (const auto& f : b.args()) fs.push_back(pow(f, e));
        return mul(std::move(fs));
      }
    }
    if (b.kind() == Kind::Func && b.fn() == Fn::Abs && integer && r.get_num() % 2 == 0)
      return pow(b.arg(0), e);
    return NodeFactory::make(Kind::Pow, Fn::Exp, {b, e});
  }
  if (b.is_zero()) return NodeFactory::make(Kind::Pow, Fn::Exp, {b, e});
  if (b.kind() == Kind::Func && b.fn() == Fn::Exp) return func(Fn::Exp, mul({e, b.arg(0)}));
  if (b.kind() == Kind::Pow && assumed_positive(b.arg(0))) return pow(b.arg(0), mul({b.arg(1), e}));
  if (b.kind() == Kind::Mul && assumed_positive(b)) {
    std::vector<Expr> fs;
    for (const auto& f : b.args()) fs.push_back(pow(f, e));
    return mul(std::move(fs));
  }
  return NodeFactory::make(Kind::Pow, Fn::Exp, {b, e});
}

// ---------------------------------------------------------------------------
// functions

Expr func(Fn f, const Expr& a) {
  auto node = [&](Fn g, const Expr& x) { return NodeFactory::make(Kind::Func, g, {x}); };
  switch (f) {
    case Fn::Exp: {
      if (a.is_zero()) return Expr(1);
      if (a.kind() == Kind::Func && a.fn() == Fn::Ln) return a.arg(0);
      auto log_part = [](const Expr& t, Expr& base, Rational& k) {
        auto [c, r] = split_coeff(t);
        if (r.kind() == Kind::Func && r.fn() == Fn::Ln) {
          base = r.arg(0);
          k = c;
          return true;
        }
        return false;
      };
      Expr base;
      Rational k;
      if (a.kind() == Kind::Mul && log_part(a, base, k)) return pow(base, Expr(k));
      if (a.kind() == Kind::Add) {
        std::vector<Expr> rest;
        std::vector<Expr> pows;
        for (const auto& t : a.args()) {
          if (log_part(t, base, k)) {
            pows.push_back(pow(base, Expr(k)));
          } else {
            rest.push_back(t);
          }
        }
        if (!pows.empty()) {
          pows.push_back(func(Fn::Exp, add(rest)));
          return mul(std::move(pows));
        }
      }
      return node(Fn::Exp, a);
    }
    case Fn::Ln: {
      if (a.is_one()) return Expr(0);
      if (a.kind() == Kind::Const && a.value() <= 0) throw DomainError("log of non-positive constant");
      if (a.kind() == Kind::Func && a.fn() == Fn::Exp) return a.arg(0);
      if (a.kind() == Kind::Pow && assumed_positive(a.arg(0))) return mul({a.arg(1), func(Fn::Ln, a.arg(0))});
      if (a.kind() == Kind::Mul && assumed_positive(a)) {
        std::vector<Expr> ts;
        for (const auto& x : a.args()) ts.push_back(func(Fn::Ln, x));
        return add(std::move(ts));
      }
      return node(Fn::Ln, a);
    }
    case Fn::Sin:
      if (a.is_zero()) return Expr(0);
      if (negative_form(a)) return -node(Fn::Sin, -a);
      return node(Fn::Sin, a);
    case Fn::Cos:
      if (a.is_zero()) return Expr(1);
      if (negative_form(a)) return node(Fn::Cos, -a);
      return node(Fn::Cos, a);
    case Fn::Tan:
      return mul({func(Fn::Sin, a), pow(func(Fn::Cos, a), Expr(-1))});
    case Fn::Sinh:
      return mul({Expr(Rational(1, 2)), add({func(Fn::Exp, a), -func(Fn::Exp, -a)})});
    case Fn::Cosh:
      return mul({Expr(Rational(1, 2)), add({func(Fn::Exp, a), func(Fn::Exp, -a)})});
    case Fn::Abs: {
      if (a.kind() == Kind::Const) return Expr(Rational(::abs(a.value())));
      if (a.kind() == Kind::Func && (a.fn() == Fn::Exp || a.fn() == Fn::Abs)) return a;
      if (a.kind() == Kind::Pow && a.arg(1).is_integer() && a.arg(1).value().get_num() % 2 == 0) return a;
      auto [c, r] = split_coeff(a);
      if (c != 1) return mul({Expr(Rational(::abs(c))), func(Fn::Abs, r)});
      return node(Fn::Abs, a);
    }
    case Fn::Sign: {
      if (a.kind() == Kind::Const) return Expr(sgn(a.value()));
      if (a.kind() == Kind::Func && (a.fn() == Fn::Exp || a.fn() == Fn::Abs)) return Expr(1);
      auto [c, r] = split_coeff(a);
      if (c != 1) return mul({Expr(sgn(c)), func(Fn::Sign, r)});
      return node(Fn::Sign, a);
    }
    case Fn::ArcTan:
    case Fn::ArcTanh:
      if (a.is_zero()) return Expr(0);
      if (negative_form(a)) return -node(f, -a);
      return node(f, a);
  }
  return node(f, a);
}

Expr operator+(const Expr& a, const Expr& b) { return add({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return add({a, mul({Expr(-1), b})}); }
Expr operator*(const Expr& a, const Expr& b) { return mul({a, b}); }
Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return mul({a, pow(b, Expr(-1))});
}
Expr operator-(const Expr& a) { return mul({Expr(-1), a}); }
Expr& operator+=(Expr& a, const Expr& b) { return a = a + b; }
Expr& operator-=(Expr& a, const Expr& b) { return a = a - b; }
Expr& operator*=(Expr& a, const Expr& b) { return a = a * b; }

Expr exp(const Expr& a) { return func(Fn::Exp, a); }
Expr ln(const Expr& a) { return func(Fn::Ln, a); }
Expr sin(const Expr& a) { return func(Fn::Sin, a); }
Expr cos(const Expr& a) { return func(Fn::Cos, a); }
Expr tan(const Expr& a) { return func(Fn::Tan, a); }
Expr sinh(const Expr& a) { return func(Fn::Sinh, a); }
Expr cosh(const Expr& a) { return func(Fn::Cosh, a); }
Expr abs(const Expr& a) { return func(Fn::Abs, a); }
Expr sign(const Expr& a) { return func(Fn::Sign, a); }
Expr arctan(const Expr& a) { return func(Fn::ArcTan, a); }
Expr arctanh(const Expr& a) { return func(Fn::ArcTanh, a); }
Expr sqrt(const Expr& a) { return pow(a, Expr(Rational(1, 2))); }

// ---------------------------------------------------------------------------
// symbols

namespace {
void collect_symbols(const Expr& e, std::set<std::string>& out) {
  if (e.kind() == Kind::Symbol) {
    out.insert(e.name());
    return;
  }
  for (const auto& a : e.args()) collect_symbols(a, out);
}
}  // namespace

std::set<std::string> free_symbols(const Expr& e) {
  std::set<std::string> s;
  collect_symbols(e, s);
  return s;
}

bool depends_on(const Expr& e, const std::string& v) {
  if ((e.symbol_mask() & symbol_bit(v)) == 0) return false;
  if (e.kind() == Kind::Symbol) return e.name() == v;
  for (const auto& a : e.args())
    if (depends_on(a, v)) return true;
  return false;
}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& msg)
    : std::runtime_error(msg), offset_(offset), expected_(std::move(expected)) {}

}  // namespace wavesym
