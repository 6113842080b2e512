#include "wavesym/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <regex>
#include <sstream>
#include <thread>

namespace wavesym {

namespace {

const std::set<std::string> kCoords = {"t", "x", "u"};

Expr parse_bound(const std::string& text, const std::map<std::string, Expr>& b) { return subs_raw(parse(text), b); }

std::map<std::string, Expr> param_binding(const Binding& bind, const std::map<std::string, std::string>& slot_args) {
  std::map<std::string, Expr> params;
  for (const auto& [k, v] : bind)
    if (!slot_args.count(k)) params[k] = parse(v);
  std::map<std::string, Expr> all = params;
  for (const auto& [k, v] : bind) {
    auto it = slot_args.find(k);
    if (it == slot_args.end()) continue;
    Expr arg = parse_bound(it->second, params);
    all[k] = subs_raw(parse(v), {{"s", arg}});
  }
  return all;
}

Rational rational_value(const std::string& text) {
  Value v = eval(parse(text), {});
  if (!v.exact) throw DomainError("constraint value '" + text + "' is not rational");
  return v.q;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(' ');
  auto b = s.find_last_not_of(' ');
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

VectorField d_t() { return VectorField::txu(Expr(1), Expr(0), Expr(0)); }

std::vector<VectorField> probe_slice() {
  std::vector<VectorField> p = {generator(GenKind::Pt), generator(GenKind::Dt), generator(GenKind::Du)};
  for (const char* c : {"1", "x", "x^2", "x^3"}) p.push_back(generator(GenKind::D, parse(c)));
  for (const char* c : {"1", "x", "x^2", "x^3"}) p.push_back(generator(GenKind::Z, parse(c)));
  return p;
}

std::vector<VectorField> projected(const std::vector<VectorField>& fs) {
  std::vector<VectorField> out;
  for (const auto& f : fs) out.push_back(f.project(3).simplified());
  return out;
}

std::string label_of(const Binding& b) {
  std::string s;
  for (const auto& [k, v] : b) s += (s.empty() ? "" : ",") + k + "=" + v;
  return s;
}

ClassMember member_from(const std::string& f, const std::string& g, const Binding& bind,
                        const std::map<std::string, std::string>& slots, const Chart& chart) {
  return ClassMember::make(instantiate_expr(f, bind, slots), instantiate_expr(g, bind, slots), chart);
}

}  // namespace

Expr instantiate_expr(const std::string& tmpl, const Binding& bind, const std::map<std::string, std::string>& slot_args) {
  Expr e = simplify(subs_raw(parse(tmpl), param_binding(bind, slot_args)));
  for (const auto& s : free_symbols(e))
    if (!kCoords.count(s)) throw DomainError("unbound parameter '" + s + "' in " + tmpl);
  return e;
}

void check_constraints(const std::vector<std::string>& constraints, const Binding& bind) {
  static const std::regex ne(R"(^\s*(\w+)\s*!=\s*(.+)$)");
  static const std::regex gt(R"(^\s*(\w+)\s*>\s*(.+)$)");
  static const std::regex in(R"(^\s*(\w+)\s+in\s+\{(.+)\}\s*$)");
  for (const auto& c : constraints) {
    std::smatch m;
    auto value = [&](const std::string& name) {
      auto it = bind.find(name);
      if (it == bind.end()) throw ConstraintViolation("'" + c + "': parameter " + name + " is unbound");
      return rational_value(it->second);
    };
    bool ok;
    if (std::regex_match(c, m, ne)) {
      ok = value(m[1]) != rational_value(m[2]);
    } else if (std::regex_match(c, m, gt)) {
      ok = value(m[1]) > rational_value(m[2]);
    } else if (std::regex_match(c, m, in)) {
      Rational v = value(m[1]);
      ok = false;
      std::stringstream ss(m[2].str());
      std::string item;
      while (std::getline(ss, item, ','))
        if (rational_value(trim(item)) == v) ok = true;
    } else {
      throw DomainError("unreadable constraint '" + c + "'");
    }
    if (!ok) throw ConstraintViolation("constraint '" + c + "' violated by " + label_of(bind));
  }
}

ClassMember case_member(const CatalogCase& c, const Instantiation& in) {
  check_constraints(c.constraints, in.bind);
  return member_from(c.f, c.g, in.bind, c.slot_args, in.chart);
}

// Full algebra basis, d_t first.
std::vector<VectorField> case_basis(const CatalogCase& c, const Binding& bind, bool closure_slice) {
  const auto& src = closure_slice && !c.closure_slice.empty() ? c.closure_slice : c.basis;
  std::vector<VectorField> out{d_t()};
  for (const auto& b : src)
    out.push_back(VectorField::txu(instantiate_expr(b.tau, bind, c.slot_args), instantiate_expr(b.xi, bind, c.slot_args),
                                   instantiate_expr(b.eta, bind, c.slot_args)));
  return out;
}

VectorField combo_field(const GenCombo& combo, const Binding& bind) {
  VectorField q = generator(GenKind::Pt);
  q = Expr(0) * q;
  for (const auto& term : combo) {
    Expr coef = instantiate_expr(term.coef, bind, {});
    Expr param = instantiate_expr(term.param, bind, {});
    q = q + coef * generator(term.kind, param);
  }
  return q.simplified();
}

PointMap family_map(const TransformationFamily& fam, const Binding& bind, bool printed) {
  const auto& fwd = printed && fam.printed ? *fam.printed : fam.map;
  auto e = [&](const std::string& s) { return instantiate_expr(s, bind, fam.slot_args); };
  return PointMap::txu(e(fwd[0]), e(fwd[1]), e(fwd[2]), e(fam.inv[0]), e(fam.inv[1]), e(fam.inv[2]));
}

bool preserves_member(const VectorField& q5, const ClassMember& th, const ZeroOptions& opt) {
  std::map<std::string, Expr> on{{"f", th.f}, {"g", th.g}};
  auto comp = [&](const char* c) { return subs_raw(q5.component(c), on); };
  Expr xi = comp("x"), eta = comp("u");
  for (auto [name, val] : {std::pair{"f", th.f}, std::pair{"g", th.g}}) {
    Expr r = comp(name) - xi * differentiate(val, "x") - eta * differentiate(val, "u");
    if (!is_zero(r, th.chart, opt).zero()) return false;
  }
  return true;
}

bool witness_is_singular(const VectorField& w, const ClassMember& th, std::string* why, const ZeroOptions& opt) {
  auto probe = probe_slice();
  SpanOptions so;
  so.chart = th.chart;
  so.zero = opt;
  LieAlgebraSpan span(projected(probe), so);
  auto c = span.express(w);
  if (!c) {
    if (why) *why = "outside the projected probe slice";
    return true;
  }
  VectorField q = Expr(0) * probe[0];
  for (std::size_t i = 0; i < probe.size(); ++i) q = q + Expr((*c)[i]) * probe[i];
  bool preserved = preserves_member(q.simplified(), th, opt);
  if (why) *why = preserved ? "projection of an equivalence generator" : "unique preimage does not preserve the member";
  return !preserved;
}

CaseReport verify_case(const CatalogCase& c, const Instantiation& in, const VerifyOptions& opt) {
  CaseReport r;
  r.id = c.id;
  r.label = in.label;
  try {
    ClassMember th = case_member(c, in);
    auto basis = case_basis(c, in.bind);
    bool all_sym = true;
    for (const auto& q : basis) {
      auto v = is_symmetry(q, th, opt.zero);
      all_sym = all_sym && v.symmetric;
      r.exact = r.exact && v.exact();
      if (!v.symmetric && r.failure.empty()) r.failure = "not a symmetry: " + q.str();
      r.fields.emplace_back(q.str(), std::move(v));
    }
    SpanOptions so;
    so.chart = in.chart;
    so.zero = opt.zero;
    LieAlgebraSpan full(basis, so);
    LieAlgebraSpan slice(case_basis(c, in.bind, true), so);
    auto cl = closure_check(slice);
    r.closed = cl.closed;
    if (cl.closed) {
      r.invariants = algebra_invariants(cl.c);
    } else if (r.failure.empty()) {
      r.failure = "not closed: [" + slice.basis()[cl.wi].str() + ", " + slice.basis()[cl.wj].str() + "]";
    }
    if (c.regular) {
      std::vector<VectorField> proj{d_t()};
      for (const auto& combo : c.subalgebra) {
        VectorField q5 = combo_field(combo, in.bind);
        if (!preserves_member(q5, th, opt.zero)) {
          r.structure_ok = false;
          r.structure_detail = "generator does not preserve the member: " + q5.str();
        }
        proj.push_back(q5.project(3).simplified());
      }
      if (r.structure_ok) {
        LieAlgebraSpan ps(proj, so);
        r.structure_ok = subspace_equal(ps, full);
        r.structure_detail = r.structure_ok ? "projection of the listed subalgebra plus d_t" : "projection span differs";
      }
    } else if (c.witness >= 0) {
      std::string why;
      r.structure_ok = witness_is_singular(basis[c.witness + 1], th, &why, opt.zero);
      r.structure_detail = "witness " + basis[c.witness + 1].str() + ": " + why;
    }
    if (!r.structure_ok && r.failure.empty()) r.failure = r.structure_detail;
    if (opt.probe && c.probe_degree >= 0) {
      SolverConfig cfg = opt.solver;
      cfg.extra_basis = c.probe_extra;
      auto res = solve_symmetries(th, c.probe_degree, cfg);
      r.probe_ran = true;
      r.probe_dim = res.dim();
      r.probe_equal = res.dim() == full.dim() && subspace_equal(res.span, full);
      if (!r.probe_equal && r.failure.empty())
        r.failure = "solver found dimension " + std::to_string(res.dim()) + " at degree " +
                    std::to_string(c.probe_degree) + ", table lists " + std::to_string(full.dim());
    }
    r.pass = all_sym && r.closed && r.structure_ok && (!r.probe_ran || r.probe_equal);
  } catch (const std::exception& e) {
    r.pass = false;
    r.failure = e.what();
  }
  return r;
}

FamilyReport verify_family(const TransformationFamily& fam, const FamilyInstance& in, const VerifyOptions& opt) {
  FamilyReport r;
  r.id = fam.id;
  r.label = in.label;
  try {
    ClassMember src = member_from(fam.f, fam.g, in.bind, fam.slot_args, in.source_chart);
    ClassMember tgt = member_from(fam.tf, fam.tg, in.bind, fam.slot_args, in.target_chart);
    PointMap m = family_map(fam, in.bind);
    r.inverse_ok = check_inverse(m, in.source_chart, opt.zero);
    r.conditions = verify_admissible(src, m, tgt, opt.zero);
    ClassMember img = pushforward_theta(m, src, in.target_chart, opt.zero);
    r.image_ok = same_member(img, tgt, opt.zero);
    r.exact = r.conditions.exact() && !in.float_mode;
    r.pass = r.inverse_ok && r.conditions.ok && r.image_ok;
    if (!r.inverse_ok) r.failure = "inverse does not invert the map";
    else if (!r.conditions.ok) r.failure = r.conditions.str();
    else if (!r.image_ok) r.failure = "image " + render(img.f) + ", " + render(img.g) + " differs from the target";
  } catch (const std::exception& e) {
    r.pass = false;
    r.failure = e.what();
  }
  return r;
}

namespace {

// Source member (with u -> -u when the arrow says so) and relabeled target.
std::pair<ClassMember, ClassMember> arrow_members(const EquivalenceArrow& a, const Binding& sb) {
  const Catalog& cat = load_catalog();
  ClassMember src = case_member(cat.find_case(a.source_case), {label_of(sb), sb, a.source_chart});
  if (a.flip_u_argument) {
    std::map<std::string, Expr> flip{{"u", -sym("u")}};
    src = ClassMember::make(simplify(apply_chart(subs_raw(src.f, flip), a.source_chart)),
                            simplify(apply_chart(subs_raw(src.g, flip), a.source_chart)), a.source_chart);
  }
  Binding tb = sb;
  std::map<std::string, Expr> sv;
  for (const auto& [k, v] : sb) sv[k] = parse(v);
  for (const auto& [k, v] : a.relabel) tb[k] = render(simplify(subs_raw(parse(v), sv)));
  ClassMember tgt = case_member(cat.find_case(a.target_case), {label_of(tb), tb, a.target_chart});
  return {src, tgt};
}

// Pushes every field forward and tests it against the target member.
void push_fields(const PointMap& m, const std::vector<VectorField>& fields, const ClassMember& tgt,
                 const std::string& tag, const ZeroOptions& opt, ConjugationReport& r) {
  for (const auto& q : fields) {
    VectorField img = pushforward_field(m, q.size() > 3 ? q.project(3) : q);
    SymmetryVerdict v = is_symmetry(img, tgt, opt);
    ++r.fields;
    r.exact = r.exact && v.exact();
    if (!v.symmetric && r.pass) {
      r.pass = false;
      r.failure = "[" + tag + "] image of " + q.str() + " is not a symmetry";
    }
  }
}

}  // namespace

ConjugationReport verify_arrow_conjugation(const EquivalenceArrow& a, const VerifyOptions& opt) {
  const Catalog& cat = load_catalog();
  ConjugationReport r;
  r.id = a.id;
  r.pass = true;
  try {
    const auto& sc = cat.find_case(a.source_case);
    PointMap m = family_map(cat.find_family(a.family), a.map_bind);
    for (const auto& sb : a.source_binds) {
      auto [src, tgt] = arrow_members(a, sb);
      std::vector<VectorField> basis = case_basis(sc, sb);
      // the u -> -u reflection carries the source basis to the flipped member
      if (a.flip_u_argument) {
        Expr t = sym("t"), x = sym("x"), u = sym("u");
        PointMap refl = PointMap::txu(t, x, -u, t, x, -u);
        for (auto& q : basis) q = pushforward_field(refl, q.size() > 3 ? q.project(3) : q);
      }
      push_fields(m, basis, tgt, label_of(sb), opt.zero, r);
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.failure = e.what();
  }
  return r;
}

ConjugationReport verify_family_conjugation(const TransformationFamily& fam, const FamilyInstance& in,
                                            const VerifyOptions& opt) {
  ConjugationReport r;
  r.id = fam.id + " " + in.label;
  r.pass = true;
  try {
    ClassMember src = member_from(fam.f, fam.g, in.bind, fam.slot_args, in.source_chart);
    ClassMember tgt = member_from(fam.tf, fam.tg, in.bind, fam.slot_args, in.target_chart);
    std::vector<VectorField> fields{d_t()};
    if (!in.float_mode) {
      // polynomial symmetries of the source beyond d_t, where the solver applies
      try {
        SolverConfig cfg = opt.solver;
        cfg.mode = SolveMode::Exact;
        fields = solve_symmetries(src, 1, cfg).fields;
      } catch (const SolverError&) {
      }
    }
    push_fields(family_map(fam, in.bind), fields, tgt, in.label, opt.zero, r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.failure = e.what();
  }
  return r;
}

ArrowReport verify_arrow(const EquivalenceArrow& a, const VerifyOptions& opt) {
  const Catalog& cat = load_catalog();
  ArrowReport r;
  r.id = a.id;
  r.pass = true;
  try {
    const auto& fam = cat.find_family(a.family);
    PointMap m = family_map(fam, a.map_bind);
    for (const auto& sb : a.source_binds) {
      auto [src, tgt] = arrow_members(a, sb);
      ClassMember img = pushforward_theta(m, src, a.target_chart, opt.zero);
      auto cond = verify_admissible(src, m, tgt, opt.zero);
      bool same = same_member(img, tgt, opt.zero);
      if (r.source.empty()) {
        r.source = "(" + render(src.f) + ", " + render(src.g) + ")";
        r.target = "(" + render(tgt.f) + ", " + render(tgt.g) + ")";
        r.image = "(" + render(img.f) + ", " + render(img.g) + ")";
      }
      r.exact = r.exact && cond.exact();
      if (!(cond.ok && same)) {
        r.pass = false;
        r.failure = "[" + label_of(sb) + "] " + (cond.ok ? "image " + render(img.f) + ", " + render(img.g) : cond.str());
        break;
      }
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.failure = e.what();
  }
  return r;
}

std::vector<ArrowReport> verify_additional_equivalences(const VerifyOptions& opt) {
  std::vector<ArrowReport> out;
  for (const auto& a : load_catalog().arrows) out.push_back(verify_arrow(a, opt));
  return out;
}

bool intersections_trivial(const std::vector<VectorField>& gens5, std::string* why) {
  std::vector<VectorField> a{generator(GenKind::Du)};
  for (const char* c : {"1", "x", "x^2", "x^3"}) a.push_back(generator(GenKind::Z, parse(c)));
  std::size_t rs = field_rank(gens5);
  auto with = [&](const std::vector<VectorField>& extra) {
    auto all = gens5;
    all.insert(all.end(), extra.begin(), extra.end());
    return field_rank(all);
  };
  if (with(a) != rs + a.size()) {
    if (why) *why = "meets <D^u, Z(chi)>";
    return false;
  }
  if (with({generator(GenKind::Dt)}) != rs + 1) {
    if (why) *why = "meets <D^t>";
    return false;
  }
  return true;
}

SubalgebraReport verify_subalgebra(const SubalgebraEntry& e, const VerifyOptions& opt) {
  SubalgebraReport r;
  r.id = e.id;
  try {
    std::vector<VectorField> gens;
    for (const auto& c : e.gens) gens.push_back(combo_field(c, e.samples));
    r.closed = closure_check(LieAlgebraSpan(gens)).closed;
    std::string why;
    r.intersections_ok = intersections_trivial(gens, &why);
    if (!e.case_id.empty()) {
      const auto& c = load_catalog().find_case(e.case_id);
      ClassMember th = case_member(c, {label_of(e.case_bind), e.case_bind, e.chart});
      r.projection_checked = true;
      r.projection_ok = true;
      std::vector<VectorField> proj{d_t()};
      for (const auto& g : gens) {
        if (!preserves_member(g, th, opt.zero)) r.projection_ok = false;
        proj.push_back(g.project(3).simplified());
      }
      SpanOptions so;
      so.chart = e.chart;
      if (r.projection_ok) r.projection_ok = subspace_equal(LieAlgebraSpan(proj, so), LieAlgebraSpan(case_basis(c, e.case_bind), so));
    }
    if (e.expect_appropriate) {
      r.pass = r.closed && r.intersections_ok && (!r.projection_checked || r.projection_ok);
      if (!r.closed) r.failure = "not closed";
      else if (!r.intersections_ok) r.failure = why;
      else if (!r.pass) r.failure = "projection does not give case " + e.case_id;
    } else {
      r.pass = !r.intersections_ok;
      if (!r.pass) r.failure = "negative control passed the intersection test";
    }
  } catch (const std::exception& ex) {
    r.pass = false;
    r.failure = ex.what();
  }
  return r;
}

std::vector<SubalgebraReport> verify_subalgebra_lists(const VerifyOptions& opt) {
  std::vector<SubalgebraReport> out;
  for (const auto& e : load_catalog().subalgebras) out.push_back(verify_subalgebra(e, opt));
  return out;
}

std::vector<VectorField> kernel_algebra(int sigma) {
  Expr t = sym("t"), u = sym("u");
  std::vector<VectorField> k{d_t()};
  switch (sigma) {
    case 0:
      k.push_back(VectorField::txu(Expr(2) * t, Expr(0), u));
      k.push_back(VectorField::txu(t * t, Expr(0), t * u));
      break;
    case 1:
      k.push_back(VectorField::txu(exp(Expr(2) * t), Expr(0), exp(Expr(2) * t) * u));
      k.push_back(VectorField::txu(exp(Expr(-2) * t), Expr(0), -exp(Expr(-2) * t) * u));
      break;
    case -1:
      k.push_back(VectorField::txu(cos(Expr(2) * t), Expr(0), -sin(Expr(2) * t) * u));
      k.push_back(VectorField::txu(sin(Expr(2) * t), Expr(0), cos(Expr(2) * t) * u));
      break;
    default: throw DomainError("sigma must be -1, 0 or 1");
  }
  return k;
}

KernelReport verify_kernel_algebras(const VerifyOptions& opt) {
  KernelReport r;
  r.symmetries_ok = true;
  try {
    for (int sigma : {0, 1, -1})
      for (int eps : {1, -1})
        for (const char* mu : {"x", "x^3", "x+1/x"}) {
          Expr g = parse(mu) * pow(sym("u"), Expr(-3)) + Expr(sigma) * sym("u");
          auto th = ClassMember::make(Expr(eps) * pow(sym("u"), Expr(-4)), g);
          for (const auto& q : kernel_algebra(sigma))
            if (!is_symmetry(q, th, opt.zero).symmetric) {
              r.symmetries_ok = false;
              r.failure = "sigma=" + std::to_string(sigma) + ", mu=" + mu + ": " + q.str();
            }
        }
    const Catalog& cat = load_catalog();
    r.conjugation_ok = true;
    for (auto [fid, sigma] : {std::pair{"T2a", 0}, std::pair{"T2b", 1}, std::pair{"T2c", -1}}) {
      const auto& fam = cat.find_family(fid);
      const auto& in = fam.instances.front();
      PointMap m = family_map(fam, in.bind);
      std::vector<VectorField> img;
      for (const auto& q : kernel_algebra(sigma)) img.push_back(pushforward_field(m, q).simplified());
      SpanOptions so;
      so.chart = in.target_chart;
      if (!subspace_equal(LieAlgebraSpan(img, so), LieAlgebraSpan(kernel_algebra(0), so))) {
        r.conjugation_ok = false;
        r.failure = std::string(fid) + " does not carry the kernel onto the sigma = 0 kernel";
      }
    }
  } catch (const std::exception& e) {
    r.failure = e.what();
    r.conjugation_ok = false;
  }
  r.pass = r.symmetries_ok && r.conjugation_ok;
  return r;
}

std::vector<MoebiusSample> moebius_samples() {
  auto q = [](long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
  };
  return {{q(0), q(1), q(1), q(1), q(1), q(1, 4), 1, "x"}, {q(1), q(2), q(3), q(1), q(1), q(2), -1, "x^3"}};
}

bool verify_moebius_action(const MoebiusSample& s, const ZeroOptions& opt) {
  Rational det = s.a1 * s.a2 - s.a0 * s.a3;
  if (det <= 0 || s.b1 == 0) throw DomainError("Moebius sample needs a1 a2 - a0 a3 > 0 and b1 != 0");
  Expr t = sym("t"), x = sym("x"), u = sym("u");
  Expr A0(s.a0), A1(s.a1), A2(s.a2), A3(s.a3), B0(s.b0), B1(s.b1), D(det);
  Expr T = (A1 * t + A0) / (A3 * t + A2);
  Expr U = sqrt(D / (B1 * pow(A3 * t + A2, Expr(2)))) * u;
  PointMap m = PointMap::txu(T, B1 * x + B0, U, (A2 * t - A0) / (A1 - A3 * t), (x - B0) / B1,
                             u * sqrt(B1 * D) / (A1 - A3 * t));
  Expr mu = parse(s.mu);
  // Source chart t > 0 keeps a3 t + a2 > 0; the target chart is the image box.
  Chart src;
  Chart tgt;
  auto tv = [&](const Rational& tt) -> Rational { return (s.a1 * tt + s.a0) / (s.a3 * tt + s.a2); };
  auto span_of = [](Rational a, Rational b) { return a < b ? Interval{a, b} : Interval{b, a}; };
  Interval ti = span_of(tv(Rational(1, 10)), tv(Rational(10)));
  Interval xi = span_of(Rational(s.b1 / 10 + s.b0), Rational(s.b1 * 10 + s.b0));
  tgt.range("t", ti.lo, ti.hi);
  tgt.range("x", xi.lo, xi.hi);
  src.range("t", Rational(1, 10), Rational(10));
  auto th = ClassMember::make(Expr(s.eps) * pow(u, Expr(-4)), mu * pow(u, Expr(-3)), src);
  Expr tmu = pow(B1, Expr(-2)) * subs_raw(mu, {{"x", (x - B0) / B1}});
  auto target = ClassMember::make(Expr(s.eps) * pow(u, Expr(-4)), simplify(tmu * pow(u, Expr(-3))), tgt);
  if (!check_inverse(m, src, opt)) return false;
  if (!verify_admissible(th, m, target, opt).ok) return false;
  return same_member(pushforward_theta(m, th, tgt, opt), target, opt);
}

bool CatalogSummary::all_pass() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

std::string CatalogSummary::headline() const {
  std::size_t ok = std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
  std::size_t exact = std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass && r.exact; });
  std::ostringstream os;
  os << ok << "/" << records.size() << " checks passed (" << exact << " exact, " << ok - exact << " sampled); "
     << cases << " classification cases, " << family_instances << " family instances, " << arrows << " additional equivalences";
  return os.str();
}

CatalogSummary verify_catalog(unsigned jobs, const VerifyOptions& opt) {
  const Catalog& cat = load_catalog();
  CatalogSummary sum;
  sum.cases = cat.cases.size();
  sum.family_instances = cat.family_instance_count();
  sum.arrows = cat.arrows.size();

  using Task = std::function<CheckRecord()>;
  std::vector<Task> tasks;
  for (const auto& c : cat.cases)
    for (const auto& in : c.instances)
      tasks.push_back([&c, &in, &opt] {
        auto r = verify_case(c, in, opt);
        CheckRecord rec{"case " + c.id + " [" + in.label + "]", c.citation, r.pass, r.exact, 0, r.failure, {}};
        if (r.invariants) rec.detail = r.invariants->str();
        if (r.probe_ran) rec.detail += (rec.detail.empty() ? "" : "; ") + std::string("probe dim ") + std::to_string(r.probe_dim);
        return rec;
      });
  for (const auto& f : cat.families)
    for (const auto& in : f.instances)
      tasks.push_back([&f, &in, &opt] {
        auto r = verify_family(f, in, opt);
        return CheckRecord{"family " + f.id + " [" + in.label + "]", f.citation, r.pass, r.exact, 0, r.failure, {}};
      });
  for (const auto& a : cat.arrows)
    tasks.push_back([&a, &opt] {
      auto r = verify_arrow(a, opt);
      return CheckRecord{"equivalence " + a.id, a.citation, r.pass, r.exact, 0, r.failure, r.image};
    });
  for (const auto& e : cat.subalgebras)
    tasks.push_back([&e, &opt] {
      auto r = verify_subalgebra(e, opt);
      return CheckRecord{"subalgebra " + e.id, e.citation, r.pass, true, 0, r.failure, {}};
    });
  tasks.push_back([&opt] {
    auto r = verify_kernel_algebras(opt);
    return CheckRecord{"kernel algebras", "kernel algebras of the u^-4 subclass", r.pass, false, 0, r.failure, {}};
  });
  auto ms = moebius_samples();
  for (std::size_t i = 0; i < ms.size(); ++i)
    tasks.push_back([s = ms[i], i, &opt] {
      bool ok = false;
      std::string why;
      try {
        ok = verify_moebius_action(s, opt.zero);
      } catch (const std::exception& e) {
        why = e.what();
      }
      return CheckRecord{"moebius action sample " + std::to_string(i + 1), "normalized subclass group", ok, true, 0, why, {}};
    });

  std::vector<CheckRecord> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        out[i] = tasks[i]();
      } catch (const std::exception& e) {
        out[i].id = "task " + std::to_string(i);
        out[i].witness = e.what();
      }
      out[i].millis = ms_since(t0);
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(out.begin(), out.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  sum.records = std::move(out);
  return sum;
}

}  // namespace wavesym
