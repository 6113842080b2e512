#include "wavesym/liealg.hpp"

#include <random>

namespace wavesym {

namespace {

struct EvalMatrix {
  bool exact = true;
  QMatrix q;
  RMatrix r;
  std::size_t cols = 0;
};

mpfr_prec_t float_bits() { return Real::digits_to_bits(default_digits() + 30); }

EvalMatrix evaluate_fields(const std::vector<const VectorField*>& fields, const SpanOptions& opt) {
  EvalMatrix m;
  m.cols = fields.size();
  if (fields.empty()) return m;
  std::set<std::string> syms;
  for (const auto* f : fields)
    for (const auto& c : f->comps())
      for (const auto& s : free_symbols(c)) syms.insert(s);
  std::size_t npoints = std::max<std::size_t>(3 * (fields.size() + 1), 6);
  if (syms.empty()) npoints = 1;
  std::mt19937_64 rng(opt.seed);
  mpfr_prec_t bits = float_bits();
  std::size_t ncomp = fields[0]->size();
  std::size_t got = 0, tries = 0;
  while (got < npoints) {
    if (tries++ > npoints * 10) throw DomainError("field evaluation: too many singular sample points");
    Point p = sample_point(syms, opt.chart, rng);
    std::vector<std::vector<Value>> vals(ncomp, std::vector<Value>(fields.size()));
    try {
      for (std::size_t j = 0; j < fields.size(); ++j)
        for (std::size_t i = 0; i < ncomp; ++i) vals[i][j] = eval_at_bits((*fields[j])[i], p, bits);
    } catch (const DomainError&) {
      continue;
    }
    for (std::size_t i = 0; i < ncomp; ++i) {
      QVector qr;
      std::vector<Real> rr;
      for (std::size_t j = 0; j < fields.size(); ++j) {
        if (!vals[i][j].exact) m.exact = false;
        qr.push_back(vals[i][j].q);
        rr.push_back(vals[i][j].approx);
      }
      m.q.push_back(std::move(qr));
      m.r.push_back(std::move(rr));
    }
    ++got;
  }
  return m;
}

Real float_tol(const RMatrix& r) {
  mpfr_prec_t bits = float_bits();
  Real mx(Rational(1), bits);
  for (const auto& row : r)
    for (const auto& v : row)
      if (mx < abs(v)) mx = abs(v);
  return mx * pow10(-30, bits);
}

std::size_t eval_rank(const EvalMatrix& m) {
  if (m.cols == 0) return 0;
  if (m.exact) return rank(m.q);
  Real tol = float_tol(m.r);
  auto ns = float_nullspace(m.r, m.cols, tol, nullptr);
  return m.cols - ns.size();
}

}  // namespace

std::size_t field_rank(const std::vector<VectorField>& fields, const SpanOptions& opt) {
  std::vector<const VectorField*> ptrs;
  for (const auto& f : fields) ptrs.push_back(&f);
  return eval_rank(evaluate_fields(ptrs, opt));
}

LieAlgebraSpan::LieAlgebraSpan(std::vector<VectorField> basis, SpanOptions opt)
    : basis_(std::move(basis)), opt_(std::move(opt)) {
  for (std::size_t i = 1; i < basis_.size(); ++i)
    if (basis_[i].coords() != basis_[0].coords()) throw CoordinateMismatch("span basis on mixed coordinates");
  for (auto& b : basis_) b = b.simplified();
  if (field_rank(basis_, opt_) != basis_.size()) throw DependentBasis("basis fields are linearly dependent");
}

std::optional<QVector> LieAlgebraSpan::express(const VectorField& q) const {
  if (!basis_.empty() && q.coords() != basis_[0].coords()) throw CoordinateMismatch("field not on span coordinates");
  std::vector<const VectorField*> ptrs;
  for (const auto& b : basis_) ptrs.push_back(&b);
  ptrs.push_back(&q);
  EvalMatrix m = evaluate_fields(ptrs, opt_);
  std::size_t n = basis_.size();
  QVector coef(n, Rational(0));
  if (m.exact) {
    QMatrix a;
    QVector rhs;
    for (const auto& row : m.q) {
      a.emplace_back(row.begin(), row.begin() + n);
      rhs.push_back(row[n]);
    }
    if (n == 0) {
      for (const auto& v : rhs)
        if (v != 0) return std::nullopt;
    } else {
      auto x = solve(a, rhs);
      if (!x) return std::nullopt;
      coef = *x;
    }
  } else {
    Real tol = float_tol(m.r);
    auto ns = float_nullspace(m.r, n + 1, tol, nullptr);
    const std::vector<Real>* hit = nullptr;
    for (const auto& v : ns)
      if (tol < abs(v[n])) hit = &v;
    if (hit == nullptr) return std::nullopt;
    mpz_class max_den("1000000000000");
    for (std::size_t k = 0; k < n; ++k) coef[k] = rationalize(-(*hit)[k] / (*hit)[n], max_den);
  }
  // Symbolic confirmation of the candidate combination.
  VectorField combo = q;
  for (std::size_t k = 0; k < n; ++k)
    if (coef[k] != 0) combo = combo - Expr(coef[k]) * basis_[k];
  for (const auto& c : combo.comps())
    if (!is_zero(c, opt_.chart, opt_.zero).zero()) return std::nullopt;
  return coef;
}

ClosureResult closure_check(const LieAlgebraSpan& span) {
  std::size_t n = span.dim();
  ClosureResult r;
  r.c.assign(n, std::vector<QVector>(n, QVector(n, Rational(0))));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      VectorField br = commutator(span.basis()[i], span.basis()[j]);
      auto x = span.express(br);
      if (!x) {
        r.closed = false;
        r.wi = i;
        r.wj = j;
        r.residual = br;
        return r;
      }
      r.c[i][j] = *x;
      for (std::size_t k = 0; k < n; ++k) r.c[j][i][k] = -(*x)[k];
    }
  }
  r.closed = true;
  return r;
}

AlgebraInvariants algebra_invariants(const StructureConstants& c) {
  std::size_t n = c.size();
  AlgebraInvariants inv;
  inv.dim = n;
  QMatrix derived;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) derived.push_back(c[i][j]);
  inv.derived_dim = rank(derived);
  // center: sum_a x_a c[a][j][k] = 0 for all j, k
  QMatrix cen;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      QVector row(n);
      for (std::size_t a = 0; a < n; ++a) row[a] = c[a][j][k];
      cen.push_back(row);
    }
  inv.center_dim = n - rank(cen);
  QMatrix kill(n, QVector(n, Rational(0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) s += c[a][k][j] * c[b][j][k];
      kill[a][b] = s;
    }
  inv.killing = congruence_signature(kill);
  return inv;
}

AlgebraInvariants algebra_invariants(const LieAlgebraSpan& span) {
  ClosureResult r = closure_check(span);
  if (!r.closed) throw DomainError("algebra invariants of a non-closed span");
  return algebra_invariants(r.c);
}

std::string AlgebraInvariants::str() const {
  return "(dim " + std::to_string(dim) + ", derived " + std::to_string(derived_dim) + ", center " +
         std::to_string(center_dim) + ", killing (" + std::to_string(killing.pos) + "," +
         std::to_string(killing.zero) + "," + std::to_string(killing.neg) + "))";
}

bool subspace_equal(const LieAlgebraSpan& a, const LieAlgebraSpan& b) {
  if (a.dim() != b.dim()) return false;
  for (const auto& q : b.basis())
    if (!a.contains(q)) return false;
  for (const auto& q : a.basis())
    if (!b.contains(q)) return false;
  return true;
}

}  // namespace wavesym
