#include "wavesym/solver.hpp"

#include <cmath>
#include <random>

namespace wavesym {

std::vector<VectorField> ansatz_basis(int degree, const std::vector<std::string>& extra_basis) {
  Expr t = sym("t"), x = sym("x"), u = sym("u");
  std::vector<Expr> mult{Expr(1)};
  for (const auto& e : extra_basis) {
    if (e == "exp2t") {
      mult.push_back(exp(Expr(2) * t));
      mult.push_back(exp(Expr(-2) * t));
    } else if (e == "trig2t") {
      mult.push_back(sin(Expr(2) * t));
      mult.push_back(cos(Expr(2) * t));
    } else {
      throw SolverError("unknown extra basis '" + e + "'");
    }
  }
  std::vector<Expr> mono;
  for (int s = 0; s <= degree; ++s)
    for (int a = s; a >= 0; --a) mono.push_back(pow(t, Expr(a)) * pow(x, Expr(s - a)));
  std::vector<VectorField> out;
  Expr z(0);
  for (int slot = 0; slot < 4; ++slot)
    for (const auto& m : mult)
      for (const auto& p : mono) {
        Expr c = m * p;
        switch (slot) {
          case 0: out.push_back(VectorField::txu(c, z, z)); break;
          case 1: out.push_back(VectorField::txu(z, c, z)); break;
          case 2: out.push_back(VectorField::txu(z, z, c * u)); break;
          default: out.push_back(VectorField::txu(z, z, c)); break;
        }
      }
  return out;
}

namespace {

Point box_point(const Chart& chart, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(1, 70);
  Point p;
  for (const char* s : {"t", "x", "u"}) {
    Rational v(k(rng), 7);
    v.canonicalize();
    if (chart.sign_of(s) < 0) v = -v;
    auto it = chart.ranges.find(s);
    if (it != chart.ranges.end()) {
      // respect explicit ranges by rescaling the box into them
      const Interval& iv = it->second;
      v = iv.lo + (iv.hi - iv.lo) * Rational(k(rng), 71);
      v.canonicalize();
    }
    p[s] = v;
  }
  return p;
}

VectorField reify(const std::vector<VectorField>& basis, const QVector& c) {
  std::vector<Expr> comp(3, Expr(0));
  std::vector<std::vector<Expr>> terms(3);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (c[k] == 0) continue;
    for (std::size_t i = 0; i < 3; ++i)
      if (!basis[k][i].is_zero()) terms[i].push_back(Expr(c[k]) * basis[k][i]);
  }
  for (std::size_t i = 0; i < 3; ++i) comp[i] = simplify(add(terms[i]));
  return VectorField::txu(comp[0], comp[1], comp[2]);
}

struct Attempt {
  std::vector<VectorField> fields;
  bool numeric = false;
  std::size_t equations = 0;
};

Attempt attempt(const ClassMember& th, const std::vector<VectorField>& basis,
                const std::vector<std::array<Expr, 5>>& res, const SolverConfig& cfg, std::uint64_t seed) {
  std::size_t n = basis.size();
  std::size_t npoints = static_cast<std::size_t>(std::ceil(std::max(1.0, cfg.oversample) * static_cast<double>(n)));
  std::mt19937_64 rng(seed);
  mpfr_prec_t bits = Real::digits_to_bits(default_digits() + 30);
  bool exact = cfg.mode != SolveMode::Float;
  IntEchelon ech(n);
  RMatrix rows;
  std::size_t got = 0, tries = 0;
  Attempt out;
  while (got < npoints) {
    if (tries++ > npoints * 10) throw SolverError("solver: too many singular sample points");
    Point p = box_point(th.chart, rng);
    std::vector<std::vector<Value>> vals(5, std::vector<Value>(n));
    try {
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < 5; ++i) vals[i][k] = eval_at_bits(res[k][i], p, bits);
    } catch (const DomainError&) {
      continue;
    }
    for (std::size_t i = 0; i < 5; ++i) {
      bool row_exact = true;
      bool nonzero = false;
      for (std::size_t k = 0; k < n; ++k) {
        row_exact = row_exact && vals[i][k].exact;
        if (!vals[i][k].approx.is_zero()) nonzero = true;
      }
      if (!nonzero) continue;
      if (!row_exact) {
        if (cfg.mode == SolveMode::Exact)
          throw SolverError("exact mode requested but residuals are not rational at rational points");
        exact = false;
      }
      std::vector<Real> rr;
      QVector qr;
      for (std::size_t k = 0; k < n; ++k) {
        rr.push_back(vals[i][k].approx);
        qr.push_back(vals[i][k].q);
      }
      if (exact) ech.add_row(qr);
      rows.push_back(std::move(rr));
      ++out.equations;
    }
    ++got;
  }
  QMatrix ns;
  if (exact) {
    ns = ech.nullspace();
  } else {
    out.numeric = true;
    Real mx(Rational(1), bits);
    for (const auto& r : rows)
      for (const auto& v : r)
        if (mx < abs(v)) mx = abs(v);
    Real tol = mx * pow10(-30, bits);
    auto fns = float_nullspace(rows, n, tol, nullptr);
    mpz_class max_den(1000000);
    for (const auto& v : fns) {
      QVector q;
      for (const auto& e : v) q.push_back(rationalize(e, max_den));
      ns.push_back(primitive(q));
    }
  }
  for (const auto& v : ns) out.fields.push_back(reify(basis, v));
  return out;
}

}  // namespace

SolveResult solve_symmetries(const ClassMember& th, int degree, const SolverConfig& cfg) {
  if (degree < 0) throw SolverError("degree must be non-negative");
  std::vector<VectorField> basis = ansatz_basis(degree, cfg.extra_basis);
  std::vector<std::array<Expr, 5>> res;
  res.reserve(basis.size());
  for (const auto& b : basis) res.push_back(invariance_residuals(b, th, cfg.zero));
  SolveResult out;
  out.unknowns = basis.size();
  for (int round = 0; round <= cfg.max_resample; ++round) {
    Attempt a = attempt(th, basis, res, cfg, cfg.seed + 0x9e3779b9ULL * static_cast<std::uint64_t>(round));
    bool ok = true;
    for (const auto& f : a.fields) {
      if (!is_symmetry(f, th, cfg.zero).symmetric) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    out.fields = a.fields;
    out.numeric = a.numeric;
    out.equations = a.equations;
    SpanOptions so;
    so.chart = th.chart;
    so.seed = cfg.seed;
    so.zero = cfg.zero;
    out.span = LieAlgebraSpan(out.fields, so);
    out.closure = closure_check(out.span);
    return out;
  }
  throw SolverError("solver: symbolic confirmation failed after " + std::to_string(cfg.max_resample) +
                    " re-samples");
}

std::vector<std::size_t> dimension_profile(const ClassMember& th, int d_max, const SolverConfig& cfg) {
  std::vector<std::size_t> dims;
  for (int d = 0; d <= d_max; ++d) dims.push_back(solve_symmetries(th, d, cfg).dim());
  return dims;
}

}  // namespace wavesym
