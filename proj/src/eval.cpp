#include "wavesym/eval.hpp"

#include <cstdlib>
#include <unordered_map>

#include "node.hpp"

namespace wavesym {

int default_digits() {
  static const int d = [] {
    const char* s = std::getenv("WAVESYM_PRECISION");
    if (s != nullptr) {
      int v = std::atoi(s);
      if (v >= 10 && v <= 10000) return v;
    }
    return 50;
  }();
  return d;
}

std::string Value::str(int digits) const {
  if (exact) return q.get_str();
  return approx.str(digits) + " +- " + bound.str(3);
}

namespace {

struct Val {
  bool exact = false;
  Rational q;
  Real r;
};

bool exact_root(const Rational& b, const Rational& x, Rational& out) {
  // b^(k/m) with b >= 0
  if (!x.get_den().fits_ulong_p() || !x.get_num().fits_slong_p()) return false;
  unsigned long m = x.get_den().get_ui();
  mpz_class n, d;
  if (mpz_root(n.get_mpz_t(), b.get_num_mpz_t(), m) == 0) return false;
  if (mpz_root(d.get_mpz_t(), b.get_den_mpz_t(), m) == 0) return false;
  long k = x.get_num().get_si();
  unsigned long ak = static_cast<unsigned long>(k < 0 ? -k : k);
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), n.get_mpz_t(), ak);
  mpz_pow_ui(pd.get_mpz_t(), d.get_mpz_t(), ak);
  out = k < 0 ? Rational(pd, pn) : Rational(pn, pd);
  out.canonicalize();
  return true;
}

class Evaluator {
 public:
  Evaluator(const Point& p, mpfr_prec_t bits) : p_(p), bits_(bits) {}

  Val run(const Expr& e) {
    if (e.kind() == Kind::Const) return exact(e.value());
    if (e.kind() == Kind::Symbol) {
      auto it = p_.find(e.name());
      if (it == p_.end()) throw UnboundSymbolError(e.name());
      return exact(it->second);
    }
    auto it = memo_.find(e.node());
    if (it != memo_.end()) return it->second;
    Val v = compute(e);
    if (!v.exact && !v.r.is_finite()) throw SingularError("non-finite value", e);
    memo_.emplace(e.node(), v);
    return v;
  }

 private:
  Val exact(const Rational& q) const {
    Val v;
    v.exact = true;
    v.q = q;
    v.r = Real(q, bits_);
    return v;
  }
  Val real(Real r) const {
    Val v;
    v.exact = false;
    v.r = std::move(r);
    return v;
  }
  Real fresh() const { return Real(bits_); }

  Val compute(const Expr& e) {
    switch (e.kind()) {
      case Kind::Add: {
        bool ex = true;
        Rational q = 0;
        Real r(Rational(0), bits_);
        for (const auto& a : e.args()) {
          Val v = run(a);
          if (v.exact && ex) q += v.q;
          ex = ex && v.exact;
          r = r + v.r;
        }
        return ex ? exact(q) : real(r);
      }
      case Kind::Mul: {
        bool ex = true;
        Rational q = 1;
        Real r(Rational(1), bits_);
        for (const auto& a : e.args()) {
          Val v = run(a);
          if (v.exact && ex) q *= v.q;
          ex = ex && v.exact;
          r = r * v.r;
        }
        return ex ? exact(q) : real(r);
      }
      case Kind::Pow: return power(e);
      case Kind::Func: return function(e);
      default: break;
    }
    throw SingularError("unexpected node", e);
  }

  Val power(const Expr& e) {
    Val b = run(e.arg(0));
    Val x = run(e.arg(1));
    if (b.exact && x.exact) {
      const Rational& bq = b.q;
      const Rational& xq = x.q;
      if (bq == 0) {
        if (xq > 0) return exact(Rational(0));
        throw SingularError("division by zero", e);
      }
      if (xq.get_den() == 1 && xq.get_num().fits_slong_p()) {
        long k = xq.get_num().get_si();
        mpz_class n, d;
        unsigned long ak = static_cast<unsigned long>(k < 0 ? -k : k);
        if (ak <= 100000) {
          mpz_pow_ui(n.get_mpz_t(), bq.get_num_mpz_t(), ak);
          mpz_pow_ui(d.get_mpz_t(), bq.get_den_mpz_t(), ak);
          Rational out = k < 0 ? Rational(d, n) : Rational(n, d);
          out.canonicalize();
          return exact(out);
        }
      }
      if (bq < 0) {
        if (xq.get_den() % 2 == 0) throw SingularError("negative base with even-root exponent", e);
        Rational out;
        if (exact_root(Rational(-bq), xq, out)) {
          bool odd = xq.get_num() % 2 != 0;
          return exact(odd ? Rational(-out) : out);
        }
        Real m(Rational(-bq), bits_);
        Real r = fresh();
        mpfr_pow(r.get(), m.get(), x.r.get(), MPFR_RNDN);
        return real(xq.get_num() % 2 != 0 ? -r : r);
      }
      Rational out;
      if (exact_root(bq, xq, out)) return exact(out);
    }
    int s = b.exact ? sgn(b.q) : b.r.sign();
    if (s == 0) {
      if (x.exact && x.q > 0) return exact(Rational(0));
      throw SingularError("zero base with non-positive exponent", e);
    }
    if (s < 0) {
      if (!x.exact) throw SingularError("negative base with non-rational exponent", e);
      if (x.q.get_den() % 2 == 0) throw SingularError("negative base with even-root exponent", e);
      Real r = fresh();
      Real m = -b.r;
      mpfr_pow(r.get(), m.get(), x.r.get(), MPFR_RNDN);
      return real(x.q.get_num() % 2 != 0 ? -r : r);
    }
    Real r = fresh();
    mpfr_pow(r.get(), b.r.get(), x.r.get(), MPFR_RNDN);
    return real(r);
  }

  Val function(const Expr& e) {
    Val a = run(e.arg(0));
    Real r = fresh();
    const Fn f = e.fn();
    if (a.exact && a.q == 0) {
      switch (f) {
        case Fn::Exp:
        case Fn::Cos:
        case Fn::Cosh:
          return exact(Rational(1));
        case Fn::Sin:
        case Fn::Tan:
        case Fn::Sinh:
        case Fn::ArcTan:
        case Fn::ArcTanh:
        case Fn::Abs:
          return exact(Rational(0));
        case Fn::Sign:
          throw SingularError("sign of zero", e);
        case Fn::Ln:
          break;
      }
    }
    switch (f) {
      case Fn::Exp: mpfr_exp(r.get(), a.r.get(), MPFR_RNDN); break;
      case Fn::Ln: {
        int s = a.exact ? sgn(a.q) : a.r.sign();
        if (s <= 0) throw SingularError("log of non-positive value", e);
        if (a.exact && a.q == 1) return exact(Rational(0));
        mpfr_log(r.get(), a.r.get(), MPFR_RNDN);
        break;
      }
      case Fn::Sin: mpfr_sin(r.get(), a.r.get(), MPFR_RNDN); break;
      case Fn::Cos: mpfr_cos(r.get(), a.r.get(), MPFR_RNDN); break;
      case Fn::Tan: {
        Real c = fresh();
        mpfr_cos(c.get(), a.r.get(), MPFR_RNDN);
        if (c.is_zero()) throw SingularError("tan at a pole", e);
        mpfr_tan(r.get(), a.r.get(), MPFR_RNDN);
        break;
      }
      case Fn::Sinh: mpfr_sinh(r.get(), a.r.get(), MPFR_RNDN); break;
      case Fn::Cosh: mpfr_cosh(r.get(), a.r.get(), MPFR_RNDN); break;
      case Fn::Abs:
        if (a.exact) return exact(Rational(::abs(a.q)));
        mpfr_abs(r.get(), a.r.get(), MPFR_RNDN);
        break;
      case Fn::Sign: {
        int s = a.exact ? sgn(a.q) : a.r.sign();
        if (s == 0) throw SingularError("sign of zero", e);
        return exact(Rational(s));
      }
      case Fn::ArcTan: mpfr_atan(r.get(), a.r.get(), MPFR_RNDN); break;
      case Fn::ArcTanh: {
        Real m = abs(a.r);
        if (!(m < Real(Rational(1), bits_))) throw SingularError("arctanh outside (-1,1)", e);
        mpfr_atanh(r.get(), a.r.get(), MPFR_RNDN);
        break;
      }
    }
    return real(r);
  }

  const Point& p_;
  mpfr_prec_t bits_;
  std::unordered_map<const Node*, Val> memo_;
};

}  // namespace

Value eval_at_bits(const Expr& e, const Point& point, mpfr_prec_t bits) {
  Evaluator ev(point, bits);
  Val v = ev.run(e);
  Value out;
  out.exact = v.exact;
  out.q = v.q;
  out.approx = v.r;
  out.bound = Real(Rational(0), bits);
  return out;
}

Value eval(const Expr& e, const Point& point, int digits) {
  Value hi = eval_at_bits(e, point, Real::digits_to_bits(digits + 60));
  if (hi.exact) return hi;
  Value lo = eval_at_bits(e, point, Real::digits_to_bits(digits + 30));
  hi.bound = abs(hi.approx - lo.approx);
  return hi;
}

}  // namespace wavesym
