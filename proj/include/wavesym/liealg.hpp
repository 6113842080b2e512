#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wavesym/jets.hpp"
#include "wavesym/linalg.hpp"
#include "wavesym/zero.hpp"

namespace wavesym {

class DependentBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpanOptions {
  Chart chart;
  std::uint64_t seed = 0x11e;
  ZeroOptions zero;
};

// Rank of a family of fields with function coefficients, from evaluations at
// sampled rational points (exact when every entry is rational).
std::size_t field_rank(const std::vector<VectorField>& fields, const SpanOptions& opt = {});

class LieAlgebraSpan {
 public:
  LieAlgebraSpan() = default;
  explicit LieAlgebraSpan(std::vector<VectorField> basis, SpanOptions opt = {});

  const std::vector<VectorField>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  const SpanOptions& options() const { return opt_; }

  // Coefficients of q in the basis; a candidate found from evaluations is
  // confirmed with is_zero before being returned.
  std::optional<QVector> express(const VectorField& q) const;
  bool contains(const VectorField& q) const { return express(q).has_value(); }

 private:
  std::vector<VectorField> basis_;
  SpanOptions opt_;
};

using StructureConstants = std::vector<std::vector<QVector>>;  // c[i][j][k]

struct ClosureResult {
  bool closed = false;
  StructureConstants c;
  std::size_t wi = 0, wj = 0;  // offending pair when not closed
  VectorField residual;        // their commutator
};

ClosureResult closure_check(const LieAlgebraSpan& span);

struct AlgebraInvariants {
  std::size_t dim = 0;
  std::size_t derived_dim = 0;
  std::size_t center_dim = 0;
  Signature killing;

  bool operator==(const AlgebraInvariants& o) const {
    return dim == o.dim && derived_dim == o.derived_dim && center_dim == o.center_dim && killing == o.killing;
  }
  std::string str() const;
};

AlgebraInvariants algebra_invariants(const StructureConstants& c);
AlgebraInvariants algebra_invariants(const LieAlgebraSpan& span);

bool subspace_equal(const LieAlgebraSpan& a, const LieAlgebraSpan& b);

}  // namespace wavesym
