#include "wavesym/zero.hpp"

#include <unordered_map>

#include "node.hpp"

namespace wavesym {

int Chart::sign_of(const std::string& s) const {
  auto it = signs.find(s);
  return it == signs.end() ? 1 : it->second;
}

Interval Chart::interval_for(const std::string& s) const {
  auto it = ranges.find(s);
  if (it != ranges.end()) return it->second;
  if (sign_of(s) < 0) return {Rational(-10), Rational(0)};
  return {Rational(0), Rational(10)};
}

Chart& Chart::positive(const std::string& s) {
  signs[s] = 1;
  return *this;
}
Chart& Chart::negative(const std::string& s) {
  signs[s] = -1;
  return *this;
}
Chart& Chart::range(const std::string& s, Rational lo, Rational hi) {
  ranges[s] = {std::move(lo), std::move(hi)};
  return *this;
}

Point sample_point(const std::set<std::string>& symbols, const Chart& chart, std::mt19937_64& rng) {
  Point p;
  std::uniform_int_distribution<long> qd(1, 100);
  for (const auto& s : symbols) {
    Interval iv = chart.interval_for(s);
    for (int tries = 0;; ++tries) {
      long q = qd(rng);
      Rational lo = iv.lo * q;
      Rational hi = iv.hi * q;
      mpz_class kmin, kmax;
      mpz_fdiv_q(kmin.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
      kmin += 1;
      mpz_cdiv_q(kmax.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
      kmax -= 1;
      if (kmin > kmax) {
        if (tries > 1000) throw DomainError("empty sampling interval for '" + s + "'");
        continue;
      }
      long a = kmin.get_si(), b = kmax.get_si();
      long k = std::uniform_int_distribution<long>(a, b)(rng);
      Rational v(k, q);
      v.canonicalize();
      p[s] = v;
      break;
    }
  }
  return p;
}

namespace {

class ChartApplier {
 public:
  ChartApplier(const Chart& c, std::uint64_t seed) : chart_(c), rng_(seed) {}

  Expr walk(const Expr& e) {
    if (e.kind() == Kind::Const || e.kind() == Kind::Symbol) return e;
    auto it = memo_.find(e.node());
    if (it != memo_.end()) return it->second.second;
    std::vector<Expr> a;
    for (const auto& x : e.args()) a.push_back(walk(x));
    Expr r;
    switch (e.kind()) {
      case Kind::Func:
        if (e.fn() == Fn::Abs || e.fn() == Fn::Sign) {
          int s = sign_estimate(a[0]);
          if (s != 0) {
            r = e.fn() == Fn::Sign ? Expr(s) : (s > 0 ? a[0] : -a[0]);
            break;
          }
        }
        r = func(e.fn(), a[0]);
        break;
      case Kind::Pow:
        if (a[0].kind() == Kind::Pow && sign_estimate(a[0].arg(0)) > 0) {
          r = pow(a[0].arg(0), mul({a[0].arg(1), a[1]}));
        } else {
          r = pow(a[0], a[1]);
        }
        break;
      case Kind::Mul: r = mul(std::move(a)); break;
      case Kind::Add: r = add(std::move(a)); break;
      default: r = e;
    }
    memo_.emplace(e.node(), std::make_pair(e, r));
    return r;
  }

 private:
  int sign_estimate(const Expr& a) {
    if (a.kind() == Kind::Const) return sgn(a.value());
    if (a.kind() == Kind::Symbol) return chart_.sign_of(a.name());
    auto syms = free_symbols(a);
    int seen = 0, valid = 0;
    for (int i = 0; i < 24 && valid < 8; ++i) {
      Point p = sample_point(syms, chart_, rng_);
      try {
        Value v = eval_at_bits(a, p, 200);
        int s = v.exact ? sgn(v.q) : v.approx.sign();
        if (s == 0) return 0;
        if (seen != 0 && s != seen) return 0;
        seen = s;
        ++valid;
      } catch (const DomainError&) {
      }
    }
    return valid >= 3 ? seen : 0;
  }

  const Chart& chart_;
  std::mt19937_64 rng_;
  std::unordered_map<const Node*, std::pair<Expr, Expr>> memo_;
};

}  // namespace

Expr apply_chart(const Expr& e, const Chart& chart, std::uint64_t seed) {
  ChartApplier ap(chart, seed);
  Expr r = ap.walk(e);
  std::map<std::string, Expr> neg;
  for (const auto& [s, sg] : chart.signs)
    if (sg < 0) neg[s] = -sym(s + "__neg");
  return neg.empty() ? r : subs_raw(r, neg);
}

std::string ZeroResult::str() const {
  switch (verdict) {
    case Verdict::ProvenZero: return "ProvenZero";
    case Verdict::LikelyZero:
      return "LikelyZero(" + std::to_string(samples) + ", " + (exact_samples ? "exact" : "float") + ")";
    case Verdict::NonZero: {
      std::string s = "NonZero at {";
      bool first = true;
      for (const auto& [k, v] : witness) {
        s += (first ? "" : ", ") + k + "=" + v.get_str();
        first = false;
      }
      return s + "}: " + witness_value;
    }
  }
  return "?";
}

ZeroResult is_zero(const Expr& e, const Chart& chart, const ZeroOptions& opt) {
  ZeroResult res;
  if (e.is_zero()) return res;
  if (opt.symbolic) {
    try {
      Expr c = apply_chart(e, chart, opt.seed);
      Expr s = simplify(c);
      if (s.is_zero()) return res;
      if (numerator_form(s).is_zero()) return res;
    } catch (const DomainError&) {
      // fall through to sampling
    }
  }
  auto syms = free_symbols(e);
  std::mt19937_64 rng(opt.seed ^ e.hash());
  Real tol = pow10(opt.tolerance_exp, Real::digits_to_bits(opt.digits + 60));
  int needed = syms.empty() ? 1 : opt.samples;
  int attempts = 0;
  res.verdict = Verdict::LikelyZero;
  while (res.samples < needed) {
    if (attempts++ >= needed * 10)
      throw DomainError("zero test: too many singular sample points for " + render(e));
    Point p = sample_point(syms, chart, rng);
    Value v;
    try {
      v = eval(e, p, opt.digits);
    } catch (const SingularError&) {
      continue;
    }
    if (v.exact) {
      if (v.q != 0) {
        res.verdict = Verdict::NonZero;
        res.witness = p;
        res.witness_value = v.q.get_str();
        return res;
      }
    } else {
      res.exact_samples = false;
      if (!(abs(v.approx) <= tol + v.bound)) {
        // Confirm at higher precision before reporting.
        Value w = eval(e, p, opt.digits + 40);
        if (!(abs(w.approx) <= tol + w.bound)) {
          res.verdict = Verdict::NonZero;
          res.witness = p;
          res.witness_value = w.str(25);
          return res;
        }
      }
    }
    ++res.samples;
  }
  return res;
}

}  // namespace wavesym
