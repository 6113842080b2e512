#include "wavesym/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wavesym {

namespace {

std::vector<mpz_class> to_integer_row(const QVector& row) {
  mpz_class l = 1;
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> r(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) r[i] = row[i].get_num() * (l / row[i].get_den());
  return r;
}

void remove_content(std::vector<mpz_class>& r) {
  mpz_class g = 0;
  for (const auto& v : r) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : r)
      if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

bool IntEchelon::add_row(const QVector& row) {
  if (row.size() != ncols_) throw std::invalid_argument("row length mismatch");
  std::vector<mpz_class> r = to_integer_row(row);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t c = piv_[i];
    if (r[c] == 0) continue;
    const auto& p = rows_[i];
    mpz_class a = p[c], b = r[c];
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (p[j] == 0) {
        if (r[j] != 0) r[j] *= a;
      } else {
        r[j] = r[j] * a - b * p[j];
      }
    }
    remove_content(r);
  }
  for (std::size_t j = 0; j < ncols_; ++j) {
    if (r[j] != 0) {
      if (r[j] < 0)
        for (auto& v : r) v = -v;
      rows_.push_back(std::move(r));
      piv_.push_back(j);
      return true;
    }
  }
  return false;
}

QMatrix IntEchelon::rref(std::vector<std::size_t>* pivots) const {
  // Sort rows by pivot column, then back-substitute in rationals.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return piv_[a] < piv_[b]; });
  QMatrix m;
  std::vector<std::size_t> pc;
  for (std::size_t i : order) {
    QVector row(ncols_);
    Rational lead(rows_[i][piv_[i]]);
    for (std::size_t j = 0; j < ncols_; ++j) row[j] = Rational(rows_[i][j]) / lead;
    m.push_back(std::move(row));
    pc.push_back(piv_[i]);
  }
  for (std::size_t i = m.size(); i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      Rational f = m[k][pc[i]];
      if (f == 0) continue;
      for (std::size_t j = pc[i]; j < ncols_; ++j)
        if (m[i][j] != 0) m[k][j] -= f * m[i][j];
    }
  }
  if (pivots) *pivots = pc;
  return m;
}

QVector primitive(const QVector& v) {
  mpz_class l = 1, g = 0;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  QVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = v[i] * Rational(l);
    if (r[i] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_num_mpz_t());
  }
  if (g > 1)
    for (auto& q : r) q /= Rational(g);
  return r;
}

QMatrix IntEchelon::nullspace() const {
  std::vector<std::size_t> pc;
  QMatrix m = rref(&pc);
  std::vector<bool> is_piv(ncols_, false);
  for (auto c : pc) is_piv[c] = true;
  QMatrix basis;
  for (std::size_t j = 0; j < ncols_; ++j) {
    if (is_piv[j]) continue;
    QVector v(ncols_, Rational(0));
    v[j] = 1;
    for (std::size_t i = 0; i < m.size(); ++i) v[pc[i]] = -m[i][j];
    basis.push_back(primitive(v));
  }
  return basis;
}

std::size_t rank(const QMatrix& a) {
  if (a.empty()) return 0;
  IntEchelon e(a[0].size());
  for (const auto& r : a) e.add_row(r);
  return e.rank();
}

QMatrix nullspace(const QMatrix& a, std::size_t ncols) {
  IntEchelon e(ncols);
  for (const auto& r : a) e.add_row(r);
  return e.nullspace();
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  std::size_t n = a.empty() ? 0 : a[0].size();
  IntEchelon e(n + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    QVector r = a[i];
    r.push_back(b[i]);
    e.add_row(r);
  }
  std::vector<std::size_t> pc;
  QMatrix m = e.rref(&pc);
  QVector x(n, Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (pc[i] == n) return std::nullopt;  // inconsistent
    x[pc[i]] = m[i][n];
  }
  return x;
}

Signature congruence_signature(QMatrix a) {
  std::size_t n = a.size();
  Signature s;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < n && a[j][j] == 0) ++j;
      if (j < n) {
        std::swap(a[k], a[j]);
        for (auto& row : a) std::swap(row[k], row[j]);
      } else {
        j = k + 1;
        while (j < n && a[k][j] == 0) ++j;
        if (j == n) {
          ++s.zero;
          continue;
        }
        // row/col k += row/col j makes the diagonal 2 a_kj + a_jj = 2 a_kj != 0
        for (std::size_t c = 0; c < n; ++c) a[k][c] += a[j][c];
        for (std::size_t r = 0; r < n; ++r) a[r][k] += a[r][j];
      }
    }
    Rational p = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / p;
      for (std::size_t c = k; c < n; ++c) a[i][c] -= f * a[k][c];
      for (std::size_t r = k; r < n; ++r) a[r][i] -= f * a[r][k];
    }
    if (p > 0) {
      ++s.pos;
    } else {
      ++s.neg;
    }
  }
  return s;
}

std::vector<std::vector<Real>> float_nullspace(RMatrix a, std::size_t ncols, const Real& tol, Real* min_pivot) {
  std::size_t m = a.size();
  mpfr_prec_t bits = tol.bits();
  std::vector<std::size_t> pc;
  std::size_t row = 0;
  Real minp(bits);
  bool have_min = false;
  for (std::size_t c = 0; c < ncols && row < m; ++c) {
    std::size_t best = row;
    for (std::size_t i = row + 1; i < m; ++i)
      if (abs(a[best][c]) < abs(a[i][c])) best = i;
    if (abs(a[best][c]) <= tol) continue;
    std::swap(a[row], a[best]);
    Real p = a[row][c];
    if (!have_min || abs(p) < minp) {
      minp = abs(p);
      have_min = true;
    }
    for (std::size_t j = c; j < ncols; ++j) a[row][j] = a[row][j] / p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][c].is_zero()) continue;
      Real f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j) a[i][j] = a[i][j] - f * a[row][j];
    }
    pc.push_back(c);
    ++row;
  }
  if (min_pivot) *min_pivot = have_min ? minp : Real(Rational(0), bits);
  std::vector<bool> is_piv(ncols, false);
  for (auto c : pc) is_piv[c] = true;
  std::vector<std::vector<Real>> basis;
  for (std::size_t j = 0; j < ncols; ++j) {
    if (is_piv[j]) continue;
    std::vector<Real> v(ncols, Real(Rational(0), bits));
    v[j] = Real(Rational(1), bits);
    for (std::size_t i = 0; i < pc.size(); ++i) v[pc[i]] = -a[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace wavesym
