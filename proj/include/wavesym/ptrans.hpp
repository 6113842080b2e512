#pragma once

#include <map>
#include <string>
#include <vector>

#include "wavesym/deteq.hpp"
#include "wavesym/jets.hpp"

namespace wavesym {

// Point map on an ordered coordinate list. fwd[i] gives the i-th new
// coordinate in terms of the old ones; inv[i] gives the i-th old coordinate in
// terms of the new ones, with the new coordinates carrying the same names.
struct PointMap {
  std::vector<std::string> coords;
  std::vector<Expr> fwd;
  std::vector<Expr> inv;

  static PointMap identity(const std::vector<std::string>& coords = {"t", "x", "u"});
  static PointMap txu(const Expr& T, const Expr& X, const Expr& U);
  static PointMap txu(const Expr& T, const Expr& X, const Expr& U, const Expr& Ti, const Expr& Xi, const Expr& Ui);

  bool has_inverse() const { return !inv.empty(); }
  const Expr& T() const { return fwd[0]; }
  const Expr& X() const { return fwd[1]; }
  const Expr& U() const { return fwd[2]; }

  std::map<std::string, Expr> forward_binding() const;
  std::map<std::string, Expr> inverse_binding() const;
  PointMap inverted() const;
  std::string str() const;
};

class MissingInverse : public std::runtime_error {
 public:
  MissingInverse() : std::runtime_error("point map carries no inverse") {}
};

class NotAdmissible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// second o first; the new coordinates of first become the old ones of second.
PointMap compose(const PointMap& first, const PointMap& second);

Expr jacobian(const PointMap& m);

// inv(fwd(p)) == p on the chart, componentwise.
bool check_inverse(const PointMap& m, const Chart& chart = {}, const ZeroOptions& opt = {});

struct ConditionReport {
  struct Item {
    std::string name;
    ZeroResult result;
  };
  std::vector<Item> items;
  bool ok = true;

  bool exact() const;
  std::string str() const;
};

// Fiber preservation, affineness in u and the split residual system.
ConditionReport verify_admissible(const ClassMember& source, const PointMap& map, const ClassMember& target,
                                  const ZeroOptions& opt = {});

// Target arbitrary elements of the image of `source` under `map`.
ClassMember pushforward_theta(const PointMap& map, const ClassMember& source, const Chart& target_chart = {},
                              const ZeroOptions& opt = {});

// Push-forward of a vector field, components in the new coordinates.
VectorField pushforward_field(const PointMap& map, const VectorField& q);

struct AdmissibleTransformation {
  ClassMember source;
  PointMap map;
  ClassMember target;
};

bool same_member(const ClassMember& a, const ClassMember& b, const ZeroOptions& opt = {});
bool same_map(const PointMap& a, const PointMap& b, const Chart& chart = {}, const ZeroOptions& opt = {});

AdmissibleTransformation identity_at(const ClassMember& th);
AdmissibleTransformation compose_admissible(const AdmissibleTransformation& a, const AdmissibleTransformation& b,
                                            const ZeroOptions& opt = {});
AdmissibleTransformation invert_admissible(const AdmissibleTransformation& a);

// Raw identity check of the transformed equation on the jet space (used as a
// cross-check of the split system).
Expr raw_transformed_residual(const ClassMember& source, const PointMap& map, const ClassMember& target);

}  // namespace wavesym
