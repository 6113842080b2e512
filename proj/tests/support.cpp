#include "support.hpp"

#include "wavesym/equiv.hpp"
#include "wavesym/eval.hpp"
#include "wavesym/jets.hpp"
#include "wavesym/ptrans.hpp"
#include "wavesym/zero.hpp"

namespace wavesym::fixtures {

Expr ExprGen::positive(int depth) {
  switch (pick(depth <= 0 ? 3 : 6)) {
    case 0: return sym("x");
    case 1: return sym("y");
    case 2: return Expr(Rational(pick(9) + 1, pick(4) + 1));
    case 3: return exp(any(depth - 1) / Expr(4));
    case 4: return positive(depth - 1) * positive(depth - 1);
    default: return Expr(1) + pow(any(depth - 1), Expr(2));
  }
}

Expr ExprGen::any(int depth) {
  if (depth <= 0) return positive(0);
  switch (pick(9)) {
    case 0: return any(depth - 1) + any(depth - 1);
    case 1: return any(depth - 1) - any(depth - 1);
    case 2: return any(depth - 1) * any(depth - 1);
    case 3: return any(depth - 1) / positive(depth - 1);
    case 4: return pow(positive(depth - 1), Expr(Rational(pick(5) - 2, pick(2) + 1)));
    case 5: return sin(any(depth - 1));
    case 6: return cos(any(depth - 1)) * cosh(Expr(1) / positive(depth - 1));
    case 7: return ln(positive(depth - 1));
    default: return pow(any(depth - 1), Expr(pick(3) + 1));
  }
}

Expr random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int degree, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5), var(0, static_cast<int>(vars.size()) - 1), deg(0, degree);
  Expr out(0);
  for (int k = 0; k < terms; ++k) {
    Expr m(coef(rng));
    int d = deg(rng);
    for (int i = 0; i < d; ++i) m = m * sym(vars[var(rng)]);
    out = out + m;
  }
  return simplify(out);
}

VectorField random_txu_field(std::mt19937_64& rng, int degree) {
  std::vector<std::string> v{"t", "x", "u"};
  return VectorField::txu(random_poly(rng, v, degree), random_poly(rng, v, degree), random_poly(rng, v, degree));
}

// Draws until n expressions evaluate at their sample point; a draw whose
// unsimplified form is undefined or overflows there is skipped.
SuiteResult eval_simplify_agreement(int n, std::uint64_t seed) {
  ExprGen gen(seed);
  std::mt19937_64 rng(seed ^ 0x5a5a);
  SuiteResult res;
  while (res.cases < n) {
    Expr e = gen.any(3);
    Point p{{"x", Rational(std::uniform_int_distribution<int>(1, 40)(rng), 7)},
            {"y", Rational(std::uniform_int_distribution<int>(1, 40)(rng), 11)}};
    Value a;
    try {
      a = eval(e, p, 40);
    } catch (const std::exception&) {
      continue;
    }
    Expr s = simplify(e);
    ++res.cases;
    try {
      Value b = eval(s, p, 40);
      Real scale = abs(a.approx) + Real(Rational(1), a.approx.bits());
      Real tol = pow10(-25, a.approx.bits()) * scale;
      if (!(abs(a.approx - b.approx) <= tol))
        res.fail(render(e) + " -> " + render(s) + ": " + a.str() + " vs " + b.str());
    } catch (const std::exception& ex) {
      res.fail(render(e) + " -> " + render(s) + ": " + ex.what());
    }
  }
  return res;
}

SuiteResult prolongation_linearity(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> c(-4, 4);
  SuiteResult res;
  for (int i = 0; i < n; ++i) {
    VectorField q1 = random_txu_field(rng), q2 = random_txu_field(rng);
    Expr a(Rational(c(rng), 1 + (i % 3))), b(c(rng));
    ProlongedField lhs = prolong2(a * q1 + b * q2);
    ProlongedField p1 = prolong2(q1), p2 = prolong2(q2);
    auto lin = [&](const Expr& l, const Expr& x1, const Expr& x2) { return simplify(l - a * x1 - b * x2).is_zero(); };
    ++res.cases;
    if (!(lin(lhs.eta_t, p1.eta_t, p2.eta_t) && lin(lhs.eta_x, p1.eta_x, p2.eta_x) &&
          lin(lhs.eta_tt, p1.eta_tt, p2.eta_tt) && lin(lhs.eta_tx, p1.eta_tx, p2.eta_tx) &&
          lin(lhs.eta_xx, p1.eta_xx, p2.eta_xx)))
      res.fail(q1.str() + " / " + q2.str());
  }
  return res;
}

SuiteResult jacobi_identity(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult res;
  for (int i = 0; i < n; ++i) {
    VectorField a = random_txu_field(rng), b = random_txu_field(rng), c = random_txu_field(rng);
    VectorField j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    bool ok = true;
    for (std::size_t k = 0; k < 3; ++k) ok = ok && simplify(j[k]).is_zero();
    ++res.cases;
    if (!ok) res.fail(a.str() + " | " + b.str() + " | " + c.str());
  }
  return res;
}

namespace {

// Plain Gaussian elimination; independent of the library's echelon code.
std::size_t brute_rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational k = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t liouville_oracle_count(int d, int eps) {
  std::vector<std::pair<int, int>> mono;  // t^i x^j
  for (int s = 0; s <= d; ++s)
    for (int i = 0; i <= s; ++i) mono.push_back({i, s - i});
  const std::size_t n = mono.size();
  auto idx = [&](int i, int j) -> long {
    for (std::size_t k = 0; k < n; ++k)
      if (mono[k] == std::make_pair(i, j)) return static_cast<long>(k);
    return -1;
  };
  // unknowns a_k (tau) then b_k (xi); one row per monomial t^i x^j of each equation
  std::vector<std::vector<Rational>> rows;
  for (int s = 0; s < d; ++s)
    for (int i = 0; i <= s; ++i) {
      int j = s - i;
      std::vector<Rational> e1(2 * n, 0), e2(2 * n, 0);
      if (long k = idx(i + 1, j); k >= 0) e1[k] += i + 1;
      if (long k = idx(i, j + 1); k >= 0) e1[n + k] -= j + 1;
      if (long k = idx(i + 1, j); k >= 0) e2[n + k] += i + 1;
      if (long k = idx(i, j + 1); k >= 0) e2[k] -= eps * (j + 1);
      rows.push_back(e1);
      rows.push_back(e2);
    }
  return 2 * n - brute_rank(rows);
}

std::vector<Stored> stored_transformations() {
  std::vector<Stored> out;
  for (const auto& fam : load_catalog().families)
    for (const auto& in : fam.instances) {
      ClassMember src = ClassMember::make(instantiate_expr(fam.f, in.bind, fam.slot_args),
                                          instantiate_expr(fam.g, in.bind, fam.slot_args), in.source_chart);
      ClassMember tgt = ClassMember::make(instantiate_expr(fam.tf, in.bind, fam.slot_args),
                                          instantiate_expr(fam.tg, in.bind, fam.slot_args), in.target_chart);
      out.push_back({fam.id + " " + in.label, {src, family_map(fam, in.bind), tgt}});
    }
  return out;
}

SuiteResult groupoid_laws(int n, std::uint64_t seed) {
  auto all = stored_transformations();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> pick_law(0, 3);
  SuiteResult res;
  for (int i = 0; i < n; ++i) {
    const Stored& s = all[pick(rng)];
    const AdmissibleTransformation& T = s.T;
    bool ok = false;
    std::string law;
    try {
      switch (pick_law(rng)) {
        case 0: {
          law = "inverse admissible";
          AdmissibleTransformation I = invert_admissible(T);
          ok = verify_admissible(I.source, I.map, I.target).ok && same_member(I.target, T.source);
          break;
        }
        case 1: {
          law = "T^-1 o T = id";
          AdmissibleTransformation c = compose_admissible(T, invert_admissible(T));
          ok = same_map(c.map, PointMap::identity(), T.source.chart) && same_member(c.target, T.source);
          break;
        }
        case 2: {
          law = "id o T = T";
          AdmissibleTransformation c = compose_admissible(identity_at(T.source), T);
          AdmissibleTransformation d = compose_admissible(T, identity_at(T.target));
          ok = same_map(c.map, T.map, T.source.chart) && same_map(d.map, T.map, T.source.chart);
          break;
        }
        default: {
          law = "self-composition";
          // T o T where source and target coincide, else T o T^-1 o T
          AdmissibleTransformation c = same_member(T.source, T.target)
                                           ? compose_admissible(T, {T.target, T.map, T.target})
                                           : compose_admissible(compose_admissible(T, invert_admissible(T)), T);
          ok = verify_admissible(c.source, c.map, c.target).ok;
          break;
        }
      }
    } catch (const std::exception& e) {
      law += std::string(" threw ") + e.what();
    }
    ++res.cases;
    if (!ok) res.fail(s.name + ": " + law);
  }
  return res;
}

namespace {

using G = GenKind;

VectorField gen(G k, const std::string& p = "0") { return generator(k, parse(p)); }

bool same_field(const VectorField& a, const VectorField& b, const Chart& chart = {}) { return (a - b).is_zero(chart); }

}  // namespace

SuiteResult commutation_table() {
  const std::vector<std::string> polys{"1", "x", "x^2", "x^3"};
  SuiteResult res;
  auto check = [&](bool ok, const std::string& what) {
    ++res.cases;
    if (!ok) res.fail(what);
  };
  auto commute = [](const VectorField& a, const VectorField& b) { return commutator(a, b).is_zero(); };
  check(same_field(commutator(gen(G::Pt), gen(G::Dt)), gen(G::Pt)), "[Pt,Dt] = Pt");
  check(commute(gen(G::Pt), gen(G::Du)), "[Pt,Du] = 0");
  check(commute(gen(G::Dt), gen(G::Du)), "[Dt,Du] = 0");
  for (const auto& a : polys) {
    check(same_field(commutator(gen(G::Z, a), gen(G::Du)), gen(G::Z, a)), "[Z,Du] = Z, chi=" + a);
    for (G k : {G::Pt, G::Dt, G::Du}) check(commute(gen(k), gen(G::D, a)), "[., D] = 0, zeta=" + a);
    for (G k : {G::Pt, G::Dt}) check(commute(gen(k), gen(G::Z, a)), "[., Z] = 0, chi=" + a);
    for (const auto& b : polys) {
      Expr z1 = parse(a), z2 = parse(b);
      Expr dd = simplify(z1 * differentiate(z2, "x") - differentiate(z1, "x") * z2);
      check(same_field(commutator(gen(G::D, a), gen(G::D, b)), generator(G::D, dd)), "[D,D] " + a + ", " + b);
      Expr dz = simplify(z1 * differentiate(z2, "x") - rat(1, 2) * differentiate(z1, "x") * z2);
      check(same_field(commutator(gen(G::D, a), gen(G::Z, b)), generator(G::Z, dz)), "[D,Z] " + a + ", " + b);
      check(commute(gen(G::Z, a), gen(G::Z, b)), "[Z,Z] = 0 " + a + ", " + b);
    }
  }
  return res;
}

SuiteResult adjoint_actions(int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(1, 4), kpick(1, 3), ci(-5, 5);
  Chart chart;
  chart.range("x", Rational(1), Rational(10));
  SuiteResult res;
  for (int i = 0; i < instances; ++i) {
    Expr psi = random_poly(rng, {"x"}, 3);
    Expr chi = random_poly(rng, {"x"}, 3);
    Expr zeta = random_poly(rng, {"x"}, 3);
    int c = ci(rng);
    Rational c2(c == 0 ? 3 : c, small(rng));
    Rational a(small(rng), small(rng)), b(-small(rng) + 1, small(rng));
    int k = kpick(rng);
    Expr x = sym("x");
    // phi = a x^k + b with b <= 0 is increasing and invertible on x >= 1
    Expr phi = simplify(Expr(a) * pow(x, Expr(k)) + Expr(b));
    Expr phi_hat = simplify(pow((x - Expr(b)) / Expr(a), Expr(Rational(1, k))));
    Expr phi_hat_x = differentiate(phi_hat, "x");
    auto at_hat = [&](const Expr& e) { return simplify(subs_raw(e, {{"x", phi_hat}})); };
    std::string tag = " [psi=" + render(psi) + ", chi=" + render(chi) + ", zeta=" + render(zeta) +
                      ", phi=" + render(phi) + "]";
    auto check = [&](bool ok, const std::string& what) {
      ++res.cases;
      if (!ok) res.fail(what + tag);
    };
    check(same_field(adjoint_on_generator(Elementary::Z(psi), gen(G::Du)), gen(G::Du) - generator(G::Z, psi)),
          "Z*(psi) Du = Du - Z(psi)");
    check(same_field(adjoint_on_generator(Elementary::Du(c2), generator(G::Z, chi)), generator(G::Z, Expr(c2) * chi)),
          "Du*(c2) Z(chi) = c2 Z(chi)");
    Expr mix = simplify(zeta * differentiate(psi, "x") - rat(1, 2) * differentiate(zeta, "x") * psi);
    check(same_field(adjoint_on_generator(Elementary::Z(psi), generator(G::D, zeta)),
                     generator(G::D, zeta) + generator(G::Z, mix)),
          "Z*(psi) D(zeta) = D(zeta) + Z(zeta psi_x - zeta_x psi / 2)");
    check(same_field(adjoint_on_generator(Elementary::D(phi, phi_hat), generator(G::Z, chi)),
                     generator(G::Z, simplify(pow(phi_hat_x, rat(-1, 2)) * at_hat(chi))), chart),
          "D*(phi) Z(chi) = Z(|phi^_x|^(-1/2) chi(phi^))");
    check(same_field(adjoint_on_generator(Elementary::D(phi, phi_hat), generator(G::D, zeta)),
                     generator(G::D, simplify(at_hat(zeta) / phi_hat_x)), chart),
          "D*(phi) D(zeta) = D(zeta(phi^) / phi^_x)");
  }
  return res;
}

namespace {

VectorField field(const std::string& tau, const std::string& xi, const std::string& eta) {
  return VectorField::txu(parse(tau), parse(xi), parse(eta));
}

// Phi_x d_t + Phi_t d_x - 2 Phi_tx d_u
VectorField r_field(const std::string& phi) {
  Expr p = parse(phi);
  return VectorField::txu(differentiate(p, "x"), differentiate(p, "t"),
                          simplify(Expr(-2) * differentiate(differentiate(p, "t"), "x")));
}

}  // namespace

std::vector<Realization> three_dim_realizations() {
  const std::string nu = "2";
  return {
      {"p(1,1)", ClassMember::make(Expr(1), parse("exp(u) + " + nu)),
       {field("1", "0", "0"), field("0", "1", "0"), field("x", "t", "0")}},
      {"e(2)", ClassMember::make(Expr(-1), parse("exp(u) + " + nu)),
       {field("1", "0", "0"), field("0", "1", "0"), field("x", "-t", "0")}},
      {"sl(2)", ClassMember::make(Expr(1), parse("exp(u) + " + nu + "*x^(-2)")),
       {field("1", "0", "0"), field("t", "x", "-2"), field("t^2 + x^2", "2*t*x", "-4*t")}},
      {"o(3)", ClassMember::make(Expr(-1), parse("exp(u) - " + nu + "*cosh(x)^(-2)")),
       {field("1", "0", "0"), r_field("cos(t)*cosh(x)"), r_field("sin(t)*cosh(x)")}},
  };
}

}  // namespace wavesym::fixtures
