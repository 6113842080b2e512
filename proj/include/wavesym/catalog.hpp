#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wavesym/deteq.hpp"
#include "wavesym/equiv.hpp"
#include "wavesym/liealg.hpp"
#include "wavesym/ptrans.hpp"
#include "wavesym/solver.hpp"

namespace wavesym {

// Parameter and function-slot values, as expression text. A function slot
// value is written in the placeholder variable s.
using Binding = std::map<std::string, std::string>;

struct Instantiation {
  std::string label;
  Binding bind;
  Chart chart;
};

struct FieldTemplate {
  std::string tau, xi, eta;
};

// One term coef * G(param) of an equivalence-algebra element.
struct GenTerm {
  std::string coef;
  GenKind kind;
  std::string param = "0";
};
using GenCombo = std::vector<GenTerm>;

class ConstraintViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CatalogCase {
  std::string id;
  std::string citation;
  std::string f, g;
  std::map<std::string, std::string> slot_args;  // function slot -> its argument
  std::vector<FieldTemplate> basis;              // extension of d_t
  // Finite part checked for closure when the algebra is infinite-dimensional.
  std::vector<FieldTemplate> closure_slice;
  std::vector<std::string> constraints;  // "p != 0", "q > 1/2", ...
  std::vector<std::string> metadata;     // recorded without mechanized check
  std::vector<Instantiation> instances;
  bool regular = false;
  std::vector<GenCombo> subalgebra;  // regular: extension of P^t
  int witness = -1;                  // singular: basis index of the witness
  int probe_degree = -1;             // solver maximality probe, -1 = skipped
  std::vector<std::string> probe_extra;
  std::string probe_note;
};

struct FamilyInstance {
  std::string label;
  Binding bind;
  Chart source_chart;
  Chart target_chart;
  bool float_mode = false;
};

struct TransformationFamily {
  std::string id;
  std::string citation;
  std::string f, g, tf, tg;  // source and target arbitrary elements
  std::map<std::string, std::string> slot_args;
  std::array<std::string, 3> map, inv;
  std::string domain;
  std::vector<FamilyInstance> instances;
  // The map as printed, when it differs from the stored one.
  std::optional<std::array<std::string, 3>> printed;
  std::string printed_note;
};

struct EquivalenceArrow {
  std::string id;
  std::string family;
  std::string source_case;
  std::string target_case;
  std::vector<Binding> source_binds;
  Binding relabel;              // target binding, in the source binding's symbols
  Binding map_bind;             // family parameters
  bool flip_u_argument = false;  // source taken with u -> -u in f and g
  Chart source_chart;
  Chart target_chart;
  std::string citation;
};

struct SubalgebraEntry {
  std::string id;
  std::string citation;
  std::vector<GenCombo> gens;    // basis of s
  Binding samples;               // parameter values
  std::string case_id;           // corresponding table row, empty if none
  Binding case_bind;
  Chart chart;
  bool expect_appropriate = true;  // false for negative controls
};

struct Catalog {
  std::vector<CatalogCase> cases;
  std::vector<TransformationFamily> families;
  std::vector<EquivalenceArrow> arrows;
  std::vector<SubalgebraEntry> subalgebras;

  const CatalogCase& find_case(const std::string& id) const;
  const TransformationFamily& find_family(const std::string& id) const;
  std::size_t family_instance_count() const;
};

const Catalog& load_catalog();

// Instantiated objects.
Expr instantiate_expr(const std::string& tmpl, const Binding& bind, const std::map<std::string, std::string>& slot_args);
ClassMember case_member(const CatalogCase& c, const Instantiation& in);
std::vector<VectorField> case_basis(const CatalogCase& c, const Binding& bind, bool closure_slice = false);
VectorField combo_field(const GenCombo& combo, const Binding& bind);
PointMap family_map(const TransformationFamily& fam, const Binding& bind, bool printed = false);
void check_constraints(const std::vector<std::string>& constraints, const Binding& bind);

// Does the 5-coordinate field preserve the surface f = th.f, g = th.g?
bool preserves_member(const VectorField& q5, const ClassMember& th, const ZeroOptions& opt = {});

struct CheckRecord {
  std::string id;
  std::string citation;
  bool pass = false;
  bool exact = true;
  double millis = 0;
  std::string witness;  // first failing item, if any
  std::string detail;
};

struct CaseReport {
  std::string id, label;
  std::vector<std::pair<std::string, SymmetryVerdict>> fields;
  bool closed = false;
  std::optional<AlgebraInvariants> invariants;
  bool probe_ran = false;
  std::size_t probe_dim = 0;
  bool probe_equal = false;
  bool structure_ok = true;  // regular projection or singular witness
  std::string structure_detail;
  bool pass = false;
  bool exact = true;
  std::string failure;
};

struct VerifyOptions {
  ZeroOptions zero;
  SolverConfig solver;
  bool probe = true;
};

CaseReport verify_case(const CatalogCase& c, const Instantiation& in, const VerifyOptions& opt = {});

struct FamilyReport {
  std::string id, label;
  bool inverse_ok = false;
  ConditionReport conditions;
  bool image_ok = false;  // pushforward_theta matches the target template
  bool pass = false;
  bool exact = true;
  std::string failure;
};

FamilyReport verify_family(const TransformationFamily& fam, const FamilyInstance& in, const VerifyOptions& opt = {});

struct ArrowReport {
  std::string id;
  std::string source, target;  // canonical forms
  std::string image;
  bool pass = false;
  bool exact = true;
  std::string failure;
};

std::vector<ArrowReport> verify_additional_equivalences(const VerifyOptions& opt = {});
ArrowReport verify_arrow(const EquivalenceArrow& a, const VerifyOptions& opt = {});

// Symmetries pushed forward by a transformation stay symmetries of the image:
// the source case basis for an arrow, d_t plus the degree-1 solver fields of
// the source for a family instance.
struct ConjugationReport {
  std::string id;
  std::size_t fields = 0;
  bool pass = false;
  bool exact = true;
  std::string failure;
};
ConjugationReport verify_arrow_conjugation(const EquivalenceArrow& a, const VerifyOptions& opt = {});
ConjugationReport verify_family_conjugation(const TransformationFamily& fam, const FamilyInstance& in,
                                            const VerifyOptions& opt = {});

struct SubalgebraReport {
  std::string id;
  bool closed = false;
  bool intersections_ok = false;  // the trivial-intersection conditions
  bool projection_checked = false;
  bool projection_ok = false;
  bool pass = false;
  std::string failure;
};

// Trivial intersection with <D^u, Z(chi)> and with <D^t>, chi over the
// probe slice {1, x, x^2, x^3}.
bool intersections_trivial(const std::vector<VectorField>& gens5, std::string* why = nullptr);
SubalgebraReport verify_subalgebra(const SubalgebraEntry& e, const VerifyOptions& opt = {});
std::vector<SubalgebraReport> verify_subalgebra_lists(const VerifyOptions& opt = {});

// Kernel algebras of u_tt = eps u^-4 u_xx + mu(x) u^-3 + sigma u.
std::vector<VectorField> kernel_algebra(int sigma);
struct KernelReport {
  bool symmetries_ok = false;
  bool conjugation_ok = false;
  bool pass = false;
  std::string failure;
};
KernelReport verify_kernel_algebras(const VerifyOptions& opt = {});

// The normalized-subclass group action t~ = Moebius(t), x~ = b1 x + b0.
struct MoebiusSample {
  Rational a0, a1, a2, a3, b0, b1;
  int eps;
  std::string mu;  // in x
};
bool verify_moebius_action(const MoebiusSample& s, const ZeroOptions& opt = {});
std::vector<MoebiusSample> moebius_samples();

// Singular witness: no element of the probe slice {P^t, D^t, D^u, D(x^k),
// Z(x^k), k = 0..3} projects onto the field while preserving the member.
bool witness_is_singular(const VectorField& w, const ClassMember& th, std::string* why = nullptr,
                         const ZeroOptions& opt = {});

struct CatalogSummary {
  std::vector<CheckRecord> records;  // sorted by id
  std::size_t cases = 0, family_instances = 0, arrows = 0;
  bool all_pass() const;
  std::string headline() const;
};

CatalogSummary verify_catalog(unsigned jobs = 0, const VerifyOptions& opt = {});

}  // namespace wavesym
