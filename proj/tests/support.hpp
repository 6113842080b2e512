#pragma once
#include <random>
#include <string>
#include <vector>

#include "wavesym/catalog.hpp"

namespace wavesym::fixtures {

// Random expressions over x, y; ln and fractional powers only on positive
// subterms so the positivity convention of the simplifier applies.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}
  Expr positive(int depth);
  Expr any(int depth);
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

 private:
  std::mt19937_64 rng_;
};

// Polynomial with small integer coefficients in the given variables.
Expr random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int degree, int terms = 4);
VectorField random_txu_field(std::mt19937_64& rng, int degree = 2);

// Outcome of a property suite: number of cases and failures, first failure.
struct SuiteResult {
  int cases = 0;
  int failures = 0;
  std::string first;
  void fail(const std::string& what) {
    if (failures++ == 0) first = what;
  }
  bool ok() const { return failures == 0; }
};

SuiteResult eval_simplify_agreement(int n, std::uint64_t seed);
SuiteResult prolongation_linearity(int n, std::uint64_t seed);
SuiteResult jacobi_identity(int n, std::uint64_t seed);

// Polynomial solutions (tau, xi) of degree <= d of tau_t = xi_x, xi_t = eps tau_x,
// from a plain elimination over the monomial coefficients.
std::size_t liouville_oracle_count(int d, int eps);

struct Stored {
  std::string name;
  AdmissibleTransformation T;
};
std::vector<Stored> stored_transformations();
// Random (instance, law) draws among inverse admissibility, T^-1 o T = id,
// id o T = T and self-composition.
SuiteResult groupoid_laws(int n, std::uint64_t seed);

// Commutation relations for zeta, chi in {1, x, x^2, x^3}, plus the
// vanishing of every other pair.
SuiteResult commutation_table();
// The five adjoint-action formulas on random polynomial parameters.
SuiteResult adjoint_actions(int instances, std::uint64_t seed);

// Three-dimensional symmetry algebras of u_tt = eps u_xx + e^u + g1(x),
// realizing p(1,1), e(2), sl(2) and o(3).
struct Realization {
  std::string name;
  ClassMember member;
  std::vector<VectorField> basis;
};
std::vector<Realization> three_dim_realizations();

}  // namespace wavesym::fixtures
