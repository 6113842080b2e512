#pragma once

#include <string>
#include <vector>

#include "wavesym/deteq.hpp"
#include "wavesym/liealg.hpp"

namespace wavesym {

enum class SolveMode { Auto, Exact, Float };

struct SolverConfig {
  std::uint64_t seed = 1;
  double oversample = 3.0;
  SolveMode mode = SolveMode::Auto;
  // Optional multipliers of the polynomial ansatz: "exp2t" (e^{2t}, e^{-2t})
  // and "trig2t" (sin 2t, cos 2t).
  std::vector<std::string> extra_basis;
  int max_resample = 3;
  ZeroOptions zero;
};

struct SolveResult {
  std::vector<VectorField> fields;
  LieAlgebraSpan span;
  ClosureResult closure;
  bool numeric = false;  // float elimination was used
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t dim() const { return fields.size(); }
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The ansatz: tau, xi, eta1, eta0 polynomials of total degree <= d in (t,x),
// each monomial optionally multiplied by the extra basis functions.
std::vector<VectorField> ansatz_basis(int degree, const std::vector<std::string>& extra_basis);

SolveResult solve_symmetries(const ClassMember& th, int degree, const SolverConfig& cfg = {});

std::vector<std::size_t> dimension_profile(const ClassMember& th, int d_max, const SolverConfig& cfg = {});

}  // namespace wavesym
