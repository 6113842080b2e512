#pragma once

#include <optional>
#include <vector>

#include "wavesym/real.hpp"

namespace wavesym {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

// Row echelon form over Z built one row at a time (fraction-free updates with
// content removal), so large sampled systems keep small entries.
class IntEchelon {
 public:
  explicit IntEchelon(std::size_t ncols) : ncols_(ncols) {}

  // Returns true if the row was independent of those already present.
  bool add_row(const QVector& row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }

  // Basis of {v : A v = 0} as primitive integer vectors.
  QMatrix nullspace() const;
  // Reduced row echelon form (rank x ncols) and pivot columns.
  QMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;

 private:
  std::size_t ncols_;
  std::vector<std::vector<mpz_class>> rows_;
  std::vector<std::size_t> piv_;
};

std::size_t rank(const QMatrix& a);
QMatrix nullspace(const QMatrix& a, std::size_t ncols);
// Some solution of A x = b, or nullopt.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

struct Signature {
  int pos = 0;
  int zero = 0;
  int neg = 0;
  bool operator==(const Signature& o) const { return pos == o.pos && zero == o.zero && neg == o.neg; }
};

// Inertia of a symmetric rational matrix by congruence diagonalization.
Signature congruence_signature(QMatrix a);

using RMatrix = std::vector<std::vector<Real>>;

// Float nullspace by Gauss-Jordan with partial pivoting; entries with
// magnitude below tol count as zero. Returns basis vectors normalized so the
// free coordinate is 1, plus the smallest accepted pivot magnitude.
std::vector<std::vector<Real>> float_nullspace(RMatrix a, std::size_t ncols, const Real& tol, Real* min_pivot);

QVector primitive(const QVector& v);

}  // namespace wavesym
