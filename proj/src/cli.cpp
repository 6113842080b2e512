#include "wavesym/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "wavesym/catalog.hpp"
#include "wavesym/json_io.hpp"

namespace wavesym {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string f, g, target_f, target_g, map, inverse, mode = "auto", format = "json";
  std::vector<std::string> fields, negative, ranges, extra;
  int degree = 2;
  std::uint64_t seed = 1;
  unsigned jobs = 0;
  bool json = false;
};

// Splits "a=1, b=f(x,y)" at top-level commas.
std::map<std::string, std::string> split_assignments(const std::string& text) {
  std::map<std::string, std::string> out;
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  for (const auto& p : parts) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw UsageError("expected coord=expr, got '" + p + "'");
    std::string k = p.substr(0, eq);
    k.erase(0, k.find_first_not_of(' '));
    k.erase(k.find_last_not_of(' ') + 1);
    if (out.count(k)) throw UsageError("component '" + k + "' given twice");
    out[k] = p.substr(eq + 1);
  }
  return out;
}

// Omitted components default to `fallback(coord)`.
std::vector<Expr> components(const std::string& text, const std::vector<std::string>& coords,
                             const std::function<Expr(const std::string&)>& fallback) {
  auto a = split_assignments(text);
  for (const auto& [k, v] : a)
    if (std::find(coords.begin(), coords.end(), k) == coords.end()) throw UsageError("unknown coordinate '" + k + "'");
  std::vector<Expr> out;
  for (const auto& c : coords) {
    auto it = a.find(c);
    out.push_back(it == a.end() ? fallback(c) : parse(it->second));
  }
  return out;
}

const std::vector<std::string> kTxu = {"t", "x", "u"};

VectorField parse_field(const std::string& text) {
  auto c = components(text, kTxu, [](const std::string&) { return Expr(0); });
  return VectorField::txu(c[0], c[1], c[2]);
}

Rational parse_rational(const std::string& s) {
  Value v = eval(parse(s), {});
  if (!v.exact) throw UsageError("range bound '" + s + "' is not rational");
  return v.q;
}

Chart make_chart(const Options& o) {
  Chart c;
  for (const auto& s : o.negative) c.negative(s);
  for (const auto& r : o.ranges) {
    auto eq = r.find('=');
    auto colon = r.find(':');
    if (eq == std::string::npos || colon == std::string::npos || colon < eq)
      throw UsageError("expected --range sym=lo:hi, got '" + r + "'");
    Rational lo = parse_rational(r.substr(eq + 1, colon - eq - 1)), hi = parse_rational(r.substr(colon + 1));
    if (!(lo < hi)) throw UsageError("empty range '" + r + "'");
    c.range(r.substr(0, eq), lo, hi);
  }
  return c;
}

ZeroOptions zero_options(const Options& o) {
  ZeroOptions z;
  z.seed ^= o.seed * 0x9e3779b97f4a7c15ULL;
  if (o.mode == "float") z.symbolic = false;
  return z;
}

SolverConfig solver_config(const Options& o) {
  SolverConfig cfg;
  cfg.seed = o.seed;
  cfg.mode = o.mode == "exact" ? SolveMode::Exact : o.mode == "float" ? SolveMode::Float : SolveMode::Auto;
  cfg.extra_basis = o.extra;
  cfg.zero = zero_options(o);
  return cfg;
}

ClassMember member(const std::string& f, const std::string& g, const Chart& chart) {
  if (f.empty() || g.empty()) throw UsageError("both f and g are required");
  return ClassMember::make(parse(f), parse(g), chart);
}

PointMap point_map(const Options& o) {
  if (o.map.empty()) throw UsageError("--map is required");
  auto id = [](const std::string& c) { return sym(c); };
  auto fwd = components(o.map, kTxu, id);
  if (o.inverse.empty()) return PointMap::txu(fwd[0], fwd[1], fwd[2]);
  auto inv = components(o.inverse, kTxu, id);
  return PointMap::txu(fwd[0], fwd[1], fwd[2], inv[0], inv[1], inv[2]);
}

std::vector<VectorField> field_list(const Options& o) {
  if (o.fields.empty()) throw UsageError("at least one --field is required");
  std::vector<VectorField> out;
  for (const auto& f : o.fields) out.push_back(parse_field(f));
  return out;
}

std::string member_str(const ClassMember& th) { return "u_tt = (" + render(th.f) + ") u_xx + " + render(th.g); }

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
  if (o.json)
    out << j.dump(2) << "\n";
  else
    out << text;
}

int cmd_check(const Options& o, std::ostream& out) {
  Chart chart = make_chart(o);
  auto th = member(o.f, o.g, chart);
  auto fields = field_list(o);
  bool all = true;
  json j{{"member", to_json(th)}, {"fields", json::array()}};
  std::ostringstream os;
  for (const auto& q : fields) {
    auto v = is_symmetry(q, th, zero_options(o));
    all = all && v.symmetric;
    json e = to_json(v);
    e["field"] = to_json(q);
    j["fields"].push_back(e);
    os << (v.symmetric ? "PASS " : "FAIL ") << q.str() << "  " << v.str() << "\n";
  }
  j["verdict"] = all ? "PASS" : "FAIL";
  emit(out, o, j, os.str());
  return all ? 0 : 1;
}

int cmd_solve(const Options& o, std::ostream& out) {
  auto th = member(o.f, o.g, make_chart(o));
  auto res = solve_symmetries(th, o.degree, solver_config(o));
  json j{{"member", to_json(th)}, {"degree", o.degree}, {"dim", res.dim()}, {"mode", res.numeric ? "float" : "exact"},
         {"unknowns", res.unknowns}, {"equations", res.equations}, {"fields", json::array()},
         {"closed", res.closure.closed}};
  std::ostringstream os;
  os << member_str(th) << "\n";
  os << "dimension " << res.dim() << " at degree " << o.degree << " (" << (res.numeric ? "float" : "exact") << ")\n";
  for (const auto& q : res.fields) {
    j["fields"].push_back(to_json(q));
    os << "  " << q.str() << "\n";
  }
  if (res.closure.closed) {
    auto inv = algebra_invariants(res.closure.c);
    j["invariants"] = to_json(inv);
    os << "closed; invariants " << inv.str() << "\n";
  } else {
    os << "not closed at this degree\n";
  }
  emit(out, o, j, os.str());
  return 0;
}

int cmd_profile(const Options& o, std::ostream& out) {
  auto th = member(o.f, o.g, make_chart(o));
  auto dims = dimension_profile(th, o.degree, solver_config(o));
  json j{{"member", to_json(th)}, {"profile", dims}};
  std::ostringstream os;
  os << member_str(th) << "\n";
  for (std::size_t d = 0; d < dims.size(); ++d) os << "degree " << d << ": " << dims[d] << "\n";
  emit(out, o, j, os.str());
  return 0;
}

int cmd_pushforward(const Options& o, std::ostream& out) {
  Chart chart = make_chart(o);
  auto th = member(o.f, o.g, chart);
  auto m = point_map(o);
  auto img = pushforward_theta(m, th, {}, zero_options(o));
  json j{{"source", to_json(th)}, {"map", to_json(m)}, {"image", to_json(img)}};
  std::ostringstream os;
  os << "image: f~ = " << render(img.f) << ", g~ = " << render(img.g) << "\n";
  if (!o.fields.empty()) {
    j["fields"] = json::array();
    for (const auto& q : field_list(o)) {
      auto p = pushforward_field(m, q).simplified();
      j["fields"].push_back(to_json(p));
      os << "  " << q.str() << " -> " << p.str() << "\n";
    }
  }
  emit(out, o, j, os.str());
  return 0;
}

int cmd_verify_admissible(const Options& o, std::ostream& out) {
  Chart chart = make_chart(o);
  auto src = member(o.f, o.g, chart);
  auto tgt = ClassMember::make(parse(o.target_f.empty() ? o.f : o.target_f), parse(o.target_g.empty() ? o.g : o.target_g));
  auto m = point_map(o);
  auto z = zero_options(o);
  auto rep = verify_admissible(src, m, tgt, z);
  bool ok = rep.ok;
  json j{{"source", to_json(src)}, {"target", to_json(tgt)}, {"map", to_json(m)}, {"conditions", to_json(rep)}};
  std::ostringstream os;
  os << rep.str() << "\n";
  if (m.has_inverse()) {
    bool inv = check_inverse(m, chart, z);
    ok = ok && inv;
    j["inverse_ok"] = inv;
    os << "inverse " << (inv ? "ok" : "FAILS") << "\n";
  }
  j["verdict"] = ok ? "PASS" : "FAIL";
  os << (ok ? "PASS" : "FAIL") << "\n";
  emit(out, o, j, os.str());
  return ok ? 0 : 1;
}

int cmd_verify_catalog(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  vo.zero = zero_options(o);
  vo.solver = solver_config(o);
  auto s = verify_catalog(o.jobs, vo);
  std::ostringstream os;
  for (const auto& r : s.records) {
    os << (r.pass ? "PASS " : "FAIL ") << r.id << "  [" << (r.exact ? "exact" : "float") << ", " << static_cast<long>(r.millis)
       << " ms]";
    if (!r.witness.empty()) os << "  " << r.witness;
    os << "\n";
  }
  os << s.cases << " cases, " << s.family_instances << " family instances, " << s.arrows
     << " additional equivalences: " << (s.all_pass() ? "all PASS" : "FAILURES") << "\n"
     << s.headline() << "\n";
  emit(out, o, to_json(s), os.str());
  return s.all_pass() ? 0 : 1;
}

int cmd_commutators(const Options& o, std::ostream& out) {
  auto fs = field_list(o);
  json j{{"fields", json::array()}, {"commutators", json::array()}};
  std::ostringstream os;
  for (const auto& q : fs) j["fields"].push_back(to_json(q));
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = a + 1; b < fs.size(); ++b) {
      auto c = commutator(fs[a], fs[b]);
      j["commutators"].push_back({{"i", a}, {"j", b}, {"value", to_json(c)}});
      os << "[Q" << a + 1 << ", Q" << b + 1 << "] = " << c.str() << "\n";
    }
  emit(out, o, j, os.str());
  return 0;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  SpanOptions so;
  so.chart = make_chart(o);
  so.zero = zero_options(o);
  LieAlgebraSpan span(field_list(o), so);
  auto cl = closure_check(span);
  json j{{"dim", span.dim()}, {"closed", cl.closed}};
  std::ostringstream os;
  if (!cl.closed) {
    j["witness"] = {{"i", cl.wi}, {"j", cl.wj}, {"commutator", to_json(cl.residual)}};
    os << "not closed: [Q" << cl.wi + 1 << ", Q" << cl.wj + 1 << "] = " << cl.residual.str() << "\n";
    emit(out, o, j, os.str());
    return 1;
  }
  auto inv = algebra_invariants(cl.c);
  j["invariants"] = to_json(inv);
  json sc = json::array();
  for (std::size_t a = 0; a < cl.c.size(); ++a)
    for (std::size_t b = a + 1; b < cl.c.size(); ++b) {
      json row = json::array();
      for (const auto& v : cl.c[a][b]) row.push_back(v.get_str());
      sc.push_back({{"i", a}, {"j", b}, {"coefficients", row}});
    }
  j["structure_constants"] = sc;
  os << "closed; invariants " << inv.str() << "\n";
  emit(out, o, j, os.str());
  return 0;
}

int cmd_export(const Options& o, std::ostream& out) {
  if (o.format != "json") throw UsageError("only --format json is supported");
  out << to_json(load_catalog()).dump(2) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lie symmetries of u_tt = f(x,u) u_xx + g(x,u)", "wavesym"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* s) {
    s->add_option("--seed", o.seed, "random seed");
    s->add_flag("--json", o.json, "JSON output");
    s->add_option("--mode", o.mode, "exact | float | auto")->check(CLI::IsMember({"exact", "float", "auto"}));
    s->add_option("--negative", o.negative, "symbols taken negative on the chart");
    s->add_option("--range", o.ranges, "sampling range sym=lo:hi");
  };
  auto theta = [&](CLI::App* s, bool required) {
    auto* f = s->add_option("--f", o.f, "coefficient of u_xx");
    auto* g = s->add_option("--g", o.g, "source term");
    if (required) {
      f->required();
      g->required();
    }
  };

  auto* check = app.add_subcommand("check-invariance", "test fields against the determining equations");
  theta(check, true);
  check->add_option("--field", o.fields, "field, e.g. \"t=2*t, x=0, u=u\"")->required();
  common(check);

  auto* solve = app.add_subcommand("solve", "polynomial-ansatz symmetry solver");
  theta(solve, true);
  solve->add_option("--degree", o.degree, "ansatz degree")->check(CLI::Range(0, 8));
  solve->add_option("--extra", o.extra, "extra multipliers: exp2t, trig2t");
  common(solve);

  auto* profile = app.add_subcommand("profile", "dimensions for degrees 0..d");
  theta(profile, true);
  profile->add_option("--degree", o.degree, "largest degree")->check(CLI::Range(0, 8));
  profile->add_option("--extra", o.extra, "extra multipliers: exp2t, trig2t");
  common(profile);

  auto* push = app.add_subcommand("pushforward", "image of a member (and fields) under a point map");
  theta(push, true);
  push->add_option("--map", o.map, "\"t=..., x=..., u=...\"")->required();
  push->add_option("--inverse", o.inverse, "inverse map");
  push->add_option("--field", o.fields, "fields to push forward");
  common(push);

  auto* adm = app.add_subcommand("verify-admissible", "check an admissible transformation");
  theta(adm, true);
  adm->add_option("--map", o.map, "\"t=..., x=..., u=...\"")->required();
  adm->add_option("--inverse", o.inverse, "inverse map");
  adm->add_option("--target-f", o.target_f, "target f (default: source f)");
  adm->add_option("--target-g", o.target_g, "target g (default: source g)");
  common(adm);

  auto* cat = app.add_subcommand("verify-catalog", "re-verify every catalog entry");
  cat->add_option("--jobs", o.jobs, "worker threads (default: available parallelism)");
  common(cat);

  auto* comm = app.add_subcommand("commutators", "pairwise commutators");
  comm->add_option("--field", o.fields, "fields")->required();
  common(comm);

  auto* inv = app.add_subcommand("algebra-invariants", "closure and structural invariants of a span");
  inv->add_option("--field", o.fields, "basis fields")->required();
  common(inv);

  auto* catalog = app.add_subcommand("catalog", "catalog data");
  catalog->require_subcommand(1);
  auto* exp = catalog->add_subcommand("export", "print the catalog");
  exp->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'wavesym --help' for usage\n";
    return 2;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*profile) return cmd_profile(o, out);
    if (*push) return cmd_pushforward(o, out);
    if (*adm) return cmd_verify_admissible(o, out);
    if (*cat) return cmd_verify_catalog(o, out);
    if (*comm) return cmd_commutators(o, out);
    if (*inv) return cmd_invariants(o, out);
    if (*exp) return cmd_export(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const InvalidMember& e) {
    err << "invalid member: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace wavesym
