#include <stdexcept>

#include "wavesym/catalog.hpp"

namespace wavesym {

namespace {

FieldTemplate F(std::string tau, std::string xi, std::string eta) { return {std::move(tau), std::move(xi), std::move(eta)}; }

// R(phi) = phi_x d_t + phi_t d_x
FieldTemplate R(const std::string& phi) {
  Expr p = parse(phi);
  return {render(differentiate(p, "x")), render(differentiate(p, "t")), "0"};
}

Chart box(std::initializer_list<std::tuple<const char*, Rational, Rational>> rs) {
  Chart c;
  for (const auto& [s, lo, hi] : rs) c.range(s, lo, hi);
  return c;
}

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

GenTerm T(std::string coef, GenKind k, std::string param = "0") { return {std::move(coef), k, std::move(param)}; }

using K = GenKind;

const std::map<std::string, std::string> kSlotU = {{"fhat", "u"}, {"ghat", "u"}};
const std::map<std::string, std::string> kSlotX = {{"fhat", "x"}, {"ghat", "x"}};
const std::map<std::string, std::string> kSlotMu = {{"mu", "x"}};

// The three bases of the t-kernel for sigma = 0, 1, -1.
const std::vector<FieldTemplate> kSigma0 = {F("2*t", "0", "u"), F("t^2", "0", "t*u")};
const std::vector<FieldTemplate> kSigma1 = {F("exp(2*t)", "0", "exp(2*t)*u"), F("exp(-2*t)", "0", "-exp(-2*t)*u")};
const std::vector<FieldTemplate> kSigmaM = {F("cos(2*t)", "0", "-sin(2*t)*u"), F("sin(2*t)", "0", "cos(2*t)*u")};

std::vector<FieldTemplate> plus(std::vector<FieldTemplate> a, const std::vector<FieldTemplate>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string cite_case(const std::string& id) { return "classification table, case " + id; }

void add_cases(Catalog& cat) {
  auto& cs = cat.cases;
  auto add = [&](CatalogCase c) {
    c.citation = cite_case(c.id);
    cs.push_back(std::move(c));
  };
  const Chart x32 = box({{"x", q(0), q(3, 2)}});
  const std::vector<std::string> eps = {"eps in {-1,1}"};
  const std::vector<std::string> eps2 = {"eps in {-1,1}", "epsp in {-1,1}"};
  const char* maxnote = "hat functions must satisfy the maximality conditions for the listed algebra";

  {
    CatalogCase c;
    c.id = "1";
    c.f = "fhat*abs(u)^p";
    c.g = "ghat*abs(u)^p*u";
    c.slot_args = {{"fhat", "x - delta*ln(abs(u))"}, {"ghat", "x - delta*ln(abs(u))"}};
    c.basis = {F("-p*t", "2*delta", "2*u")};
    c.constraints = {"p != 0", "delta in {0,1}"};
    c.metadata = {maxnote};
    c.instances = {{"delta=0,p=2", {{"delta", "0"}, {"p", "2"}, {"fhat", "s^2+1"}, {"ghat", "s"}}, {}},
                   {"delta=1,p=3", {{"delta", "1"}, {"p", "3"}, {"fhat", "s"}, {"ghat", "1"}}, {}}};
    c.regular = true;
    c.subalgebra = {{T("2", K::Du), T("-p", K::Dt), T("2", K::D, "delta")}};
    c.probe_note = "arbitrary functions of a log-twisted argument are outside the polynomial ansatz";
    add(c);
  }
  {
    CatalogCase c;
    c.id = "2";
    c.f = "fhat*exp(x)";
    c.g = "ghat*exp(x)";
    c.slot_args = kSlotU;
    c.basis = {F("t", "-2", "0")};
    c.metadata = {maxnote};
    c.instances = {{"fhat=u^2,ghat=u^3", {{"fhat", "s^2"}, {"ghat", "s^3"}}, {}},
                   {"fhat=u^2+1,ghat=u", {{"fhat", "s^2+1"}, {"ghat", "s"}}, {}}};
    c.regular = true;
    c.subalgebra = {{T("1", K::Dt), T("-1", K::D, "2")}};
    add(c);
  }
  {
    CatalogCase c;
    c.id = "3";
    c.f = "fhat*exp(u)";
    c.g = "ghat*exp(u)";
    c.slot_args = kSlotX;
    c.basis = {F("t", "0", "-2")};
    c.metadata = {maxnote};
    c.instances = {{"fhat=x^2+1,ghat=x", {{"fhat", "s^2+1"}, {"ghat", "s"}}, {}},
                   {"fhat=x,ghat=x^3", {{"fhat", "s"}, {"ghat", "s^3"}}, {}}};
    c.regular = true;
    c.subalgebra = {{T("1", K::Dt), T("-1", K::Z, "2")}};
    add(c);
  }
  {
    CatalogCase c;
    c.id = "4";
    c.f = "fhat";
    c.g = "ghat";
    c.slot_args = kSlotU;
    c.basis = {F("0", "1", "0")};
    c.metadata = {"fhat is not constant", maxnote};
    c.instances = {{"fhat=u^2+1,ghat=u^3", {{"fhat", "s^2+1"}, {"ghat", "s^3"}}, {}},
                   {"fhat=u,ghat=u^2+u^3", {{"fhat", "s"}, {"ghat", "s^2+s^3"}}, {}}};
    c.regular = true;
    c.subalgebra = {{T("1", K::D, "1")}};
    c.probe_degree = 1;
    add(c);
  }

  // Two-dimensional extensions with f constant.
  auto gcase = [&](const std::string& id, const std::string& f, const std::string& g, std::vector<FieldTemplate> basis,
                   int witness, Chart chart, bool with_eps) {
    CatalogCase c;
    c.id = id;
    c.f = f;
    c.g = g;
    c.slot_args = {{"ghat", "u"}};
    c.basis = std::move(basis);
    if (with_eps) c.constraints = eps;
    c.metadata = {maxnote};
    if (with_eps) {
      c.instances = {{"eps=1,ghat=u^3+u", {{"eps", "1"}, {"ghat", "s^3+s"}}, chart},
                     {"eps=-1,ghat=u^2+1", {{"eps", "-1"}, {"ghat", "s^2+1"}}, chart}};
    } else {
      c.instances = {{"ghat=u^3+u", {{"ghat", "s^3+s"}}, chart}, {"ghat=u^2+1", {{"ghat", "s^2+1"}}, chart}};
    }
    c.witness = witness;
    return c;
  };
  {
    auto c = gcase("5a", "eps", "ghat", {F("0", "1", "0"), F("x", "eps*t", "0")}, 1, {}, true);
    c.probe_degree = 1;
    add(c);
  }
  add(gcase("5b", "1", "ghat*exp(-2*x)", {R("exp(x+t)"), R("exp(x-t)")}, 0, {}, false));
  add(gcase("5c", "-1", "ghat*exp(-2*x)", {R("exp(x)*cos(t)"), R("exp(x)*sin(t)")}, 0, {}, false));
  {
    auto c = gcase("6a", "eps", "ghat*x^(-2)", {F("t", "x", "0"), F("t^2+eps*x^2", "2*t*x", "0")}, 1, {}, true);
    c.probe_degree = 2;
    add(c);
  }
  add(gcase("6b", "1", "ghat*cos(x)^(-2)", {R("cos(t)*cos(x)"), R("sin(t)*cos(x)")}, 0, x32, false));
  add(gcase("6c", "1", "-ghat*cosh(x)^(-2)", {R("exp(t)*cosh(x)"), R("exp(-t)*cosh(x)")}, 0, {}, false));
  add(gcase("6d", "1", "ghat*sinh(x)^(-2)", {R("exp(t)*sinh(x)"), R("exp(-t)*sinh(x)")}, 0, {}, false));
  add(gcase("6e", "-1", "ghat*cos(x)^(-2)", {R("exp(t)*cos(x)"), R("exp(-t)*cos(x)")}, 0, x32, false));
  add(gcase("6f", "-1", "ghat*sinh(x)^(-2)", {R("cos(t)*sinh(x)"), R("sin(t)*sinh(x)")}, 0, {}, false));
  add(gcase("7", "-1", "ghat*cosh(x)^(-2)", {R("cos(t)*cosh(x)"), R("sin(t)*cosh(x)")}, 0, {}, false));

  auto mucase = [&](const std::string& id, const std::string& sigma, const std::vector<FieldTemplate>& kern) {
    CatalogCase c;
    c.id = id;
    c.f = "eps*u^(-4)";
    c.g = "mu*u^(-3)" + sigma;
    c.slot_args = kSlotMu;
    c.basis = kern;
    c.constraints = eps;
    c.metadata = {"mu_x != 0", maxnote};
    c.instances = {{"eps=1,mu=x", {{"eps", "1"}, {"mu", "s"}}, {}}, {"eps=-1,mu=x^3", {{"eps", "-1"}, {"mu", "s^3"}}, {}}};
    c.witness = id == "8a" ? 1 : 0;
    return c;
  };
  {
    auto c = mucase("8a", "", kSigma0);
    c.probe_degree = 2;
    add(c);
  }
  add(mucase("8b", "+u", kSigma1));
  add(mucase("8c", "-u", kSigmaM));

  {
    CatalogCase c;
    c.id = "9";
    c.f = "eps*exp(x)*abs(u)^p";
    c.g = "nu*exp(x)*abs(u)^p*u";
    c.basis = {F("0", "p", "-u"), F("t", "-2", "0")};
    c.constraints = {"eps in {-1,1}", "p != 0", "nu != 0"};
    c.instances = {{"eps=1,p=2,nu=1", {{"eps", "1"}, {"p", "2"}, {"nu", "1"}}, {}},
                   {"eps=-1,p=-3,nu=2", {{"eps", "-1"}, {"p", "-3"}, {"nu", "2"}}, {}}};
    c.regular = true;
    c.subalgebra = {{T("1", K::Du), T("-1", K::D, "p")}, {T("1", K::Dt), T("-1", K::D, "2")}};
    add(c);
  }
  {
    CatalogCase c;
    c.id = "10";
    c.f = "eps*x^2*exp(u)";
    c.g = "nu*exp(u)";
    c.basis = {F("0", "x", "0"), F("t", "0", "-2")};
    c.constraints = {"eps in {-1,1}", "nu != 0"};
    c.instances = {{"eps=1,nu=1", {{"eps", "1"}, {"nu", "1"}}, {}}, {"eps=-1,nu=-2", {{"eps", "-1"}, {"nu", "-2"}}, {}}};
    c.regular = true;
    c.subalgebra = {{T("1", K::Du), T("-2", K::D, "x")}, {T("1", K::Dt), T("-1", K::Z, "2")}};
    add(c);
  }
  {
    CatalogCase c;
    c.id = "11";
    c.f = "fhat";
    c.g = "0";
    c.slot_args = {{"fhat", "u"}};
    c.basis = {F("0", "1", "0"), F("t", "x", "0")};
    c.metadata = {"fhat is neither a power nor an exponential nor of the form (u+b)^-4 up to equivalence", maxnote};
    c.instances = {{"fhat=u^2+1", {{"fhat", "s^2+1"}}, {}}, {"fhat=u^3+u", {{"fhat", "s^3+s"}}, {}}};
    c.regular = true;
    c.subalgebra = {{T("-1", K::Du), T("2", K::Dt), T("2", K::D, "x")}, {T("1", K::D, "1")}};
    c.probe_degree = 1;
    add(c);
  }
  {
    CatalogCase c;
    c.id = "12";
    c.f = "eps*exp(u)";
    c.g = "epsp*exp(q*u)";
    c.basis = {F("0", "1", "0"), F("q*t", "(q-1)*x", "-2")};
    c.constraints = eps2;
    c.instances = {{"eps=1,epsp=1,q=2", {{"eps", "1"}, {"epsp", "1"}, {"q", "2"}}, {}},
                   {"eps=-1,epsp=-1,q=3", {{"eps", "-1"}, {"epsp", "-1"}, {"q", "3"}}, {}}};
    c.regular = true;
    c.subalgebra = {{T("1-q", K::Du), T("2*q", K::Dt), T("-2*(1-q)", K::D, "x"), T("-1", K::Z, "4")},
                    {T("1", K::D, "1")}};
    add(c);
  }
  {
    CatalogCase c;
    c.id = "13";
    c.f = "eps*abs(u)^p";
    c.g = "epsp*abs(u)^q";
    c.basis = {F("0", "1", "0"), F("(1-q)*t", "(1+p-q)*x", "2*u")};
    c.constraints = {"eps in {-1,1}", "epsp in {-1,1}", "p != 0"};
    c.instances = {{"p=2,q=3,eps=1,epsp=1", {{"p", "2"}, {"q", "3"}, {"eps", "1"}, {"epsp", "1"}}, {}},
                   {"p=-1,q=2,eps=-1,epsp=1", {{"p", "-1"}, {"q", "2"}, {"eps", "-1"}, {"epsp", "1"}}, {}}};
    c.regular = true;
    c.subalgebra = {{T("3-p+q", K::Du), T("2*(1-q)", K::Dt), T("2*(1+p-q)", K::D, "x")}, {T("1", K::D, "1")}};
    c.probe_degree = 1;
    add(c);
  }

  auto u4case = [&](const std::string& id, const std::string& g, const std::vector<FieldTemplate>& basis,
                    const std::string& extra, bool with_nu) {
    CatalogCase c;
    c.id = id;
    c.f = "eps*u^(-4)";
    c.g = g;
    c.basis = basis;
    if (with_nu) {
      c.constraints = {"eps in {-1,1}", "nu != 0"};
      c.instances = {{"eps=1,nu=1", {{"eps", "1"}, {"nu", "1"}}, {}}, {"eps=-1,nu=-2", {{"eps", "-1"}, {"nu", "-2"}}, {}}};
    } else if (g.find("epsp") != std::string::npos) {
      c.constraints = eps2;
      c.instances = {{"eps=1,epsp=1", {{"eps", "1"}, {"epsp", "1"}}, {}},
                     {"eps=-1,epsp=1", {{"eps", "-1"}, {"epsp", "1"}}, {}}};
    } else {
      c.constraints = eps;
      c.instances = {{"eps=1", {{"eps", "1"}}, {}}, {"eps=-1", {{"eps", "-1"}}, {}}};
    }
    c.witness = extra.empty() ? 1 : 0;
    c.probe_extra = extra.empty() ? std::vector<std::string>{} : std::vector<std::string>{extra};
    return c;
  };
  {
    auto c = u4case("14a", "epsp*u^(-3)", plus(kSigma0, {F("0", "1", "0")}), "", false);
    c.probe_degree = 2;
    add(c);
  }
  add(u4case("14b", "epsp*u^(-3)+u", plus(kSigma1, {F("0", "1", "0")}), "exp2t", false));
  add(u4case("14c", "epsp*u^(-3)-u", plus(kSigmaM, {F("0", "1", "0")}), "trig2t", false));
  {
    CatalogCase c;
    c.id = "14d";
    c.f = "eps*u^4";
    c.g = "epsp*u";
    c.basis = {F("0", "1", "0"), F("0", "2*x", "u"), F("0", "x^2", "x*u")};
    c.constraints = eps2;
    c.instances = {{"eps=1,epsp=1", {{"eps", "1"}, {"epsp", "1"}}, {}},
                   {"eps=-1,epsp=1", {{"eps", "-1"}, {"epsp", "1"}}, {}}};
    c.regular = true;
    c.subalgebra = {{T("1", K::D, "1")}, {T("1", K::D, "x")}, {T("1", K::D, "x^2")}};
    c.probe_degree = 2;
    add(c);
  }
  {
    auto c = u4case("15a", "nu*x^(-2)*u^(-3)", plus(kSigma0, {F("0", "2*x", "-u")}), "", true);
    c.probe_degree = 2;
    add(c);
  }
  add(u4case("15b", "nu*x^(-2)*u^(-3)+u", plus(kSigma1, {F("0", "2*x", "-u")}), "exp2t", true));
  add(u4case("15c", "nu*x^(-2)*u^(-3)-u", plus(kSigmaM, {F("0", "2*x", "-u")}), "trig2t", true));
  {
    CatalogCase c;
    c.id = "16";
    c.f = "eps*abs(u)^p";
    c.g = "0";
    c.basis = {F("0", "1", "0"), F("t", "x", "0"), F("0", "p*x", "2*u")};
    c.constraints = {"eps in {-1,1}", "p != 0", "p != 4", "p != -4"};
    c.instances = {{"p=1,eps=1", {{"p", "1"}, {"eps", "1"}}, {}}, {"p=-2,eps=-1", {{"p", "-2"}, {"eps", "-1"}}, {}}};
    c.regular = true;
    c.subalgebra = {{T("p-4", K::Du), T("-2*p", K::D, "x")}, {T("p-4", K::Dt), T("-4", K::D, "x")}, {T("1", K::D, "1")}};
    c.probe_degree = 1;
    add(c);
  }
  {
    CatalogCase c;
    c.id = "17";
    c.f = "eps*exp(u)";
    c.g = "0";
    c.basis = {F("0", "1", "0"), F("t", "x", "0"), F("0", "x", "2")};
    c.constraints = eps;
    c.instances = {{"eps=1", {{"eps", "1"}}, {}}, {"eps=-1", {{"eps", "-1"}}, {}}};
    c.regular = true;
    c.subalgebra = {{T("1", K::Du), T("-2", K::D, "x"), T("-1", K::Z, "4")},
                    {T("1", K::Dt), T("-1", K::Z, "2")},
                    {T("1", K::D, "1")}};
    add(c);
  }
  {
    CatalogCase c;
    c.id = "18a";
    c.f = "eps";
    c.g = "epsp*abs(u)^q";
    c.basis = {F("0", "1", "0"), F("eps*x", "t", "0"), F("(q-1)*t", "(q-1)*x", "-2*u")};
    c.constraints = {"eps in {-1,1}", "epsp in {-1,1}", "q != 0", "q != 1"};
    c.instances = {{"q=3,eps=1,epsp=1", {{"q", "3"}, {"eps", "1"}, {"epsp", "1"}}, {}},
                   {"q=2,eps=-1,epsp=-1", {{"q", "2"}, {"eps", "-1"}, {"epsp", "-1"}}, {}}};
    c.witness = 1;
    c.probe_degree = 1;
    add(c);
  }
  auto c18 = [&](const std::string& id, const std::string& f, std::vector<FieldTemplate> basis) {
    CatalogCase c;
    c.id = id;
    c.f = f;
    c.g = "epsp*abs(u)^q*exp(-2*x)";
    basis.push_back(F("0", "q-1", "2*u"));
    c.basis = std::move(basis);
    c.constraints = {"epsp in {-1,1}", "q != 0", "q != 1"};
    c.instances = {{"q=3,epsp=1", {{"q", "3"}, {"epsp", "1"}}, {}}, {"q=2,epsp=-1", {{"q", "2"}, {"epsp", "-1"}}, {}}};
    c.witness = 0;
    return c;
  };
  add(c18("18b", "1", {R("exp(x+t)"), R("exp(x-t)")}));
  add(c18("18c", "-1", {R("exp(x)*cos(t)"), R("exp(x)*sin(t)")}));
  {
    auto c = u4case("19a", "0", plus(kSigma0, {F("0", "1", "0"), F("0", "2*x", "-u")}), "", false);
    c.probe_degree = 2;
    add(c);
  }
  add(u4case("19b", "u", plus(kSigma1, {F("0", "1", "0"), F("0", "2*x", "-u")}), "exp2t", false));
  add(u4case("19c", "-u", plus(kSigmaM, {F("0", "1", "0"), F("0", "2*x", "-u")}), "trig2t", false));
  {
    CatalogCase c;
    c.id = "19d";
    c.f = "eps*u^4";
    c.g = "0";
    c.basis = {F("0", "1", "0"), F("t", "x", "0"), F("0", "2*x", "u"), F("0", "x^2", "x*u")};
    c.constraints = eps;
    c.instances = {{"eps=1", {{"eps", "1"}}, {}}, {"eps=-1", {{"eps", "-1"}}, {}}};
    c.regular = true;
    c.subalgebra = {{T("1", K::D, "1")}, {T("1", K::D, "x")}, {T("1", K::D, "x^2")}, {T("1", K::Du), T("-2", K::Dt)}};
    c.probe_degree = 2;
    add(c);
  }
  {
    CatalogCase c;
    c.id = "20";
    c.f = "eps";
    c.g = "epsp*exp(u)";
    // (tau, xi) solutions of tau_t = xi_x, xi_t = eps tau_x up to degree 3;
    // eta = -2 tau_t.
    c.basis = {F("0", "1", "0"),
               F("t", "x", "-2"),
               F("x", "eps*t", "0"),
               F("t^2+eps*x^2", "2*t*x", "-4*t"),
               F("2*t*x", "x^2+eps*t^2", "-4*x"),
               F("t^3+3*eps*t*x^2", "3*t^2*x+eps*x^3", "-6*t^2-6*eps*x^2"),
               F("3*t^2*x+eps*x^3", "3*t*x^2+eps*t^3", "-12*t*x")};
    c.closure_slice = {c.basis.begin(), c.basis.begin() + 5};
    c.constraints = eps2;
    c.metadata = {"the algebra is infinite-dimensional; (tau, xi) runs through all solutions of tau_t = xi_x, "
                  "xi_t = eps tau_x"};
    c.instances = {{"eps=1,epsp=1", {{"eps", "1"}, {"epsp", "1"}}, {}},
                   {"eps=-1,epsp=1", {{"eps", "-1"}, {"epsp", "1"}}, {}},
                   {"eps=-1,epsp=-1", {{"eps", "-1"}, {"epsp", "-1"}}, {}}};
    c.witness = 3;
    c.probe_note = "infinite-dimensional algebra, no finite probe degree is maximal";
    add(c);
  }
  for (auto& c : cs) {
    if (c.probe_degree < 0 && c.probe_note.empty()) {
      bool rfield = false;
      for (const auto& b : c.basis)
        if (b.tau.find("exp") != std::string::npos || b.tau.find("cos") != std::string::npos ||
            b.tau.find("sin") != std::string::npos)
          rfield = true;
      c.probe_note = rfield ? "non-polynomial basis fields are outside the probe ansatz"
                            : "not probed; the listed fields are verified directly";
    }
  }
}

void add_families(Catalog& cat) {
  auto& fs = cat.families;
  auto cite = [](const std::string& id) { return "generating set, family " + id; };
  auto fam = [&](std::string id, std::string f, std::string g, std::string tf, std::string tg,
                 std::array<std::string, 3> map, std::array<std::string, 3> inv) {
    TransformationFamily t;
    t.id = std::move(id);
    t.citation = cite(t.id);
    t.f = std::move(f);
    t.g = std::move(g);
    t.tf = std::move(tf);
    t.tg = std::move(tg);
    t.map = std::move(map);
    t.inv = std::move(inv);
    return t;
  };
  const Chart t32 = box({{"t", q(0), q(3, 2)}});
  const Chart x32 = box({{"x", q(0), q(3, 2)}});
  const Chart xt = box({{"x", q(2), q(3)}, {"t", q(0), q(1)}});
  const Chart tx = box({{"t", q(2), q(3)}, {"x", q(0), q(1)}});
  {
    auto t = fam("T1", "fhat", "ghat", "1/fhat", "-ghat/fhat", {"x", "t", "u"}, {"x", "t", "u"});
    t.slot_args = kSlotU;
    t.domain = "f_x = g_x = 0, f_u != 0 or f = 1";
    t.instances = {{"fhat=u^2,ghat=u^3", {{"fhat", "s^2"}, {"ghat", "s^3"}}, {}, {}, false},
                   {"fhat=e^u,ghat=e^2u", {{"fhat", "exp(s)"}, {"ghat", "exp(2*s)"}}, {}, {}, false},
                   {"fhat=1,ghat=u^3", {{"fhat", "1"}, {"ghat", "s^3"}}, {}, {}, false}};
    fs.push_back(t);
  }
  auto t2 = [&](const std::string& id, const std::string& sigma, std::array<std::string, 3> map,
                std::array<std::string, 3> inv, const Chart& src) {
    auto t = fam(id, "eps*u^(-4)", "mu*u^(-3)" + sigma, "eps*u^(-4)", "mu*u^(-3)", std::move(map), std::move(inv));
    t.slot_args = kSlotMu;
    t.domain = "mu_x != 0";
    t.instances = {{"eps=1,mu=x", {{"eps", "1"}, {"mu", "s"}}, src, {}, false},
                   {"eps=-1,mu=x^3", {{"eps", "-1"}, {"mu", "s^3"}}, src, {}, false}};
    return t;
  };
  fs.push_back(t2("T2a", "", {"1/t", "x", "u/t"}, {"1/t", "x", "u/t"}, {}));
  fs.push_back(t2("T2b", "+u", {"exp(2*t)/2", "x", "exp(t)*u"}, {"ln(2*t)/2", "x", "u*(2*t)^(-1/2)"}, {}));
  {
    auto t = t2("T2c", "-u", {"tan(t)", "x", "u/cos(t)"}, {"arctan(t)", "x", "u*(1+t^2)^(-1/2)"}, t32);
    t.printed = std::array<std::string, 3>{"tan(t)", "x", "u*cos(t)"};
    t.printed_note = "with u~ = u cos t the image has f~ = eps u~^-4 cos(t)^8, not a member of the target";
    fs.push_back(t);
  }
  auto g2 = [&](std::string id, std::string f, std::string g, std::string tg, std::array<std::string, 3> map,
                std::array<std::string, 3> inv, const Chart& src, const Chart& tgt) {
    auto t = fam(std::move(id), f, std::move(g), f, std::move(tg), std::move(map), std::move(inv));
    t.slot_args = {{"g2", "u"}};
    t.domain = "g2 arbitrary";
    t.instances = {{"g2=u^3", {{"g2", "s^3"}}, src, tgt, false}, {"g2=e^u", {{"g2", "exp(s)"}}, src, tgt, false}};
    return t;
  };
  fs.push_back(g2("T3", "1", "exp(-2*x)*g2", "g2", {"exp(-x)*sinh(t)", "exp(-x)*cosh(t)", "u"},
                  {"arctanh(t/x)", "-ln(x^2-t^2)/2", "u"}, {}, xt));
  fs.push_back(g2("T4a", "1", "x^(-2)*g2", "x^(-2)*g2", {"t/(x^2-t^2)", "x/(x^2-t^2)", "u"},
                  {"t/(x^2-t^2)", "x/(x^2-t^2)", "u"}, xt, xt));
  fs.push_back(g2("T4b", "1", "cos(x)^(-2)*g2", "x^(-2)*g2",
                  {"cos(t)/(sin(t)+sin(x))", "cos(x)/(sin(t)+sin(x))", "u"},
                  {"arctan(1/(t+x))-arctan(t-x)", "arctan(1/(t+x))+arctan(t-x)", "u"},
                  box({{"t", q(0), q(3, 2)}, {"x", q(0), q(3, 2)}}), tx));
  fs.push_back(g2("T4c", "1", "-cosh(x)^(-2)*g2", "x^(-2)*g2", {"exp(t)*sinh(x)", "exp(t)*cosh(x)", "u"},
                  {"ln(x^2-t^2)/2", "arctanh(t/x)", "u"}, {}, xt));
  fs.push_back(g2("T4d", "1", "sinh(x)^(-2)*g2", "x^(-2)*g2", {"exp(t)*cosh(x)", "exp(t)*sinh(x)", "u"},
                  {"ln(t^2-x^2)/2", "arctanh(x/t)", "u"}, {}, tx));
  fs.push_back(g2("T5", "-1", "exp(-2*x)*g2", "g2", {"exp(-x)*sin(t)", "exp(-x)*cos(t)", "u"},
                  {"arctan(t/x)", "-ln(t^2+x^2)/2", "u"}, t32, {}));
  fs.push_back(g2("T6a", "-1", "x^(-2)*g2", "x^(-2)*g2", {"t/(x^2+t^2)", "x/(x^2+t^2)", "u"},
                  {"t/(x^2+t^2)", "x/(x^2+t^2)", "u"}, {}, {}));
  fs.push_back(g2("T6b", "-1", "cos(x)^(-2)*g2", "x^(-2)*g2", {"exp(t)*sin(x)", "exp(t)*cos(x)", "u"},
                  {"ln(t^2+x^2)/2", "arctan(t/x)", "u"}, x32, {}));
  fs.push_back(g2("T6c", "-1", "sinh(x)^(-2)*g2", "x^(-2)*g2",
                  {"sin(t)/(cos(t)+cosh(x))", "sinh(x)/(cos(t)+cosh(x))", "u"},
                  {"arctan(2*t/(1-x^2-t^2))", "ln(((1+x)^2+t^2)/((1-x)^2+t^2))/2", "u"}, t32,
                  box({{"t", q(1, 10), q(3, 10)}, {"x", q(1, 10), q(9, 10)}})));
  {
    const Chart half = box({{"t", q(-1, 2), q(1, 2)}, {"x", q(-1, 2), q(1, 2)}});
    auto t = fam("T7", "-1", "g2*cosh(x)^(-2)", "-1", "g2*cosh(x)^(-2)",
                 {"arctan((sin(gamma)*sinh(x)+cos(gamma)*sin(t))/cos(t))",
                  "arctanh((cos(gamma)*sinh(x)-sin(gamma)*sin(t))/cosh(x))", "u"},
                 {"arctan((-sin(gamma)*sinh(x)+cos(gamma)*sin(t))/cos(t))",
                  "arctanh((cos(gamma)*sinh(x)+sin(gamma)*sin(t))/cosh(x))", "u"});
    t.slot_args = {{"g2", "u"}};
    t.domain = "gamma in (0, 2 pi)";
    t.instances = {{"gamma=1", {{"gamma", "1"}, {"g2", "s^3"}}, half, half, true},
                   {"gamma=2", {{"gamma", "2"}, {"g2", "exp(s)"}}, half, half, true},
                   {"gamma=1/2", {{"gamma", "1/2"}, {"g2", "s^2"}}, half, half, true}};
    fs.push_back(t);
  }
  {
    auto t = fam("T8a", "1", "g2", "1", "g2", {"t*cosh(gamma)+x*sinh(gamma)", "t*sinh(gamma)+x*cosh(gamma)", "u"},
                 {"t*cosh(gamma)-x*sinh(gamma)", "-t*sinh(gamma)+x*cosh(gamma)", "u"});
    t.slot_args = {{"g2", "u"}};
    t.domain = "gamma != 0";
    t.instances = {{"gamma=1", {{"gamma", "1"}, {"g2", "s^3"}}, {}, {}, false},
                   {"gamma=-1/2", {{"gamma", "-1/2"}, {"g2", "exp(s)"}}, {}, {}, false}};
    fs.push_back(t);
  }
  {
    auto t = fam("T8b", "-1", "g2", "-1", "g2", {"t*cos(gamma)-x*sin(gamma)", "t*sin(gamma)+x*cos(gamma)", "u"},
                 {"t*cos(gamma)+x*sin(gamma)", "-t*sin(gamma)+x*cos(gamma)", "u"});
    t.slot_args = {{"g2", "u"}};
    t.domain = "gamma in (0, 2 pi)";
    t.instances = {{"gamma=1", {{"gamma", "1"}, {"g2", "s^3"}}, {}, {}, false},
                   {"gamma=3", {{"gamma", "3"}, {"g2", "exp(s)"}}, {}, {}, false}};
    fs.push_back(t);
  }
  {
    // (T, X) and the inverse are carried by each instance.
    auto t = fam("T9", "eps", "epsp*exp(u)", "eps", "epsp*exp(u)", {"TT", "XX", "UU"}, {"TI", "XI", "UI"});
    t.domain = "T_t = X_x, X_t = eps T_x, (T_tt, T_x) != (0,0); epsp = 1 if eps = 1";
    t.printed = std::array<std::string, 3>{"TT", "XX", "UP"};
    t.printed_note = "with u~ = u + ln|T_t^2 - eps T_x^2| the transformed equation keeps a term 2 D(ln|T_t^2 - eps T_x^2|)";
    t.instances = {
        {"eps=1,T=t^2+x^2",
         {{"eps", "1"},
          {"epsp", "1"},
          {"TT", "t^2+x^2"},
          {"XX", "2*t*x"},
          {"UU", "u-ln(4*t^2-4*x^2)"},
          {"UP", "u+ln(4*t^2-4*x^2)"},
          {"TI", "((t+x)^(1/2)+(t-x)^(1/2))/2"},
          {"XI", "((t+x)^(1/2)-(t-x)^(1/2))/2"},
          {"UI", "u+ln(4*(t^2-x^2)^(1/2))"}},
         tx,
         box({{"t", q(6), q(9)}, {"x", q(0), q(5)}}),
         false},
        {"eps=-1,T=t^2-x^2",
         {{"eps", "-1"},
          {"epsp", "-1"},
          {"TT", "t^2-x^2"},
          {"XX", "2*t*x"},
          {"UU", "u-ln(4*t^2+4*x^2)"},
          {"UP", "u+ln(4*t^2+4*x^2)"},
          {"TI", "(((t^2+x^2)^(1/2)+t)/2)^(1/2)"},
          {"XI", "(((t^2+x^2)^(1/2)-t)/2)^(1/2)"},
          {"UI", "u+ln(4*(t^2+x^2)^(1/2))"}},
         tx,
         box({{"t", q(1), q(5)}, {"x", q(1), q(5)}}),
         false},
        {"eps=1,T=t^3+3tx^2",
         {{"eps", "1"},
          {"epsp", "1"},
          {"TT", "t^3+3*t*x^2"},
          {"XX", "3*t^2*x+x^3"},
          {"UU", "u-ln(9*(t^2-x^2)^2)"},
          {"UP", "u+ln(9*(t^2-x^2)^2)"},
          {"TI", "((t+x)^(1/3)+(t-x)^(1/3))/2"},
          {"XI", "((t+x)^(1/3)-(t-x)^(1/3))/2"},
          {"UI", "u+ln(9*(t^2-x^2)^(2/3))"}},
         tx,
         box({{"t", q(20), q(30)}, {"x", q(0), q(10)}}),
         false}};
    fs.push_back(t);
  }
}

void add_arrows(Catalog& cat) {
  auto& as = cat.arrows;
  auto arrow = [&](std::string fam, std::string src, std::string tgt, std::vector<Binding> binds, Binding relabel,
                   bool flip = false) {
    EquivalenceArrow a;
    a.family = std::move(fam);
    a.source_case = std::move(src);
    a.target_case = std::move(tgt);
    a.id = a.family + ": " + a.source_case + " -> " + a.target_case;
    a.citation = "additional equivalence " + a.id;
    a.source_binds = std::move(binds);
    a.relabel = std::move(relabel);
    a.flip_u_argument = flip;
    const auto& f = cat.find_family(a.family);
    a.source_chart = f.instances.front().source_chart;
    a.target_chart = f.instances.front().target_chart;
    as.push_back(std::move(a));
  };
  const Binding e11 = {{"eps", "1"}, {"epsp", "1"}};
  const Binding em1 = {{"eps", "-1"}, {"epsp", "1"}};
  arrow("T1", "4", "4", {{{"fhat", "s^2+1"}, {"ghat", "s^3"}}, {{"fhat", "s"}, {"ghat", "s^2+s^3"}}},
        {{"fhat", "1/fhat"}, {"ghat", "-ghat/fhat"}});
  arrow("T1", "5a", "5a", {{{"eps", "1"}, {"ghat", "s^3+s"}}, {{"eps", "1"}, {"ghat", "s^2+1"}}}, {{"ghat", "-ghat"}});
  arrow("T1", "11", "11", {{{"fhat", "s^2+1"}}, {{"fhat", "s^3+s"}}}, {{"fhat", "1/fhat"}});
  arrow("T1", "12", "12",
        {{{"q", "2"}, {"eps", "1"}, {"epsp", "1"}}, {{"q", "3"}, {"eps", "-1"}, {"epsp", "1"}}},
        {{"q", "1-q"}, {"epsp", "-eps*epsp"}}, true);
  arrow("T1", "13", "13",
        {{{"p", "2"}, {"q", "3"}, {"eps", "1"}, {"epsp", "1"}}, {{"p", "-1"}, {"q", "2"}, {"eps", "-1"}, {"epsp", "1"}}},
        {{"p", "-p"}, {"q", "q-p"}, {"epsp", "-eps*epsp"}});
  arrow("T1", "14d", "14a", {e11, em1}, {{"epsp", "-eps*epsp"}});
  arrow("T1", "16", "16", {{{"p", "1"}, {"eps", "1"}}, {{"p", "-2"}, {"eps", "-1"}}}, {{"p", "-p"}});
  arrow("T1", "18a", "18a",
        {{{"q", "3"}, {"eps", "1"}, {"epsp", "1"}}, {{"q", "2"}, {"eps", "-1"}, {"epsp", "-1"}}},
        {{"epsp", "-eps*epsp"}});
  arrow("T1", "19d", "19a", {{{"eps", "1"}}, {{"eps", "-1"}}}, {});
  arrow("T1", "20", "20", {e11, em1}, {{"epsp", "-eps*epsp"}});
  const std::vector<Binding> mu = {{{"eps", "1"}, {"mu", "s"}}, {{"eps", "-1"}, {"mu", "s^3"}}};
  const std::vector<Binding> epsp = {e11, {{"eps", "-1"}, {"epsp", "-1"}}};
  const std::vector<Binding> nu = {{{"eps", "1"}, {"nu", "1"}}, {{"eps", "-1"}, {"nu", "-2"}}};
  const std::vector<Binding> e = {{{"eps", "1"}}, {{"eps", "-1"}}};
  for (const char* fam : {"T2b", "T2c"}) {
    std::string v = fam == std::string("T2b") ? "b" : "c";
    arrow(fam, "8" + v, "8a", mu, {});
    arrow(fam, "14" + v, "14a", epsp, {});
    arrow(fam, "15" + v, "15a", nu, {});
    arrow(fam, "19" + v, "19a", e, {});
  }
  const std::vector<Binding> gh = {{{"ghat", "s^3+s"}}, {{"ghat", "s^2+1"}}};
  const std::vector<Binding> q18 = {{{"q", "3"}, {"epsp", "1"}}, {{"q", "2"}, {"epsp", "-1"}}};
  arrow("T3", "5b", "5a", gh, {{"eps", "1"}});
  arrow("T3", "18b", "18a", q18, {{"eps", "1"}});
  arrow("T4b", "6b", "6a", gh, {{"eps", "1"}});
  arrow("T4c", "6c", "6a", gh, {{"eps", "1"}});
  arrow("T4d", "6d", "6a", gh, {{"eps", "1"}});
  arrow("T5", "5c", "5a", gh, {{"eps", "-1"}});
  arrow("T5", "18c", "18a", q18, {{"eps", "-1"}});
  arrow("T6b", "6e", "6a", gh, {{"eps", "-1"}});
  arrow("T6c", "6f", "6a", gh, {{"eps", "-1"}});
}

void add_subalgebras(Catalog& cat) {
  auto& ss = cat.subalgebras;
  auto sub = [&](std::string id, std::vector<GenCombo> gens, Binding samples, std::string case_id = {},
                 Binding case_bind = {}, bool appropriate = true) {
    SubalgebraEntry s;
    s.id = std::move(id);
    s.citation = "appropriate subalgebras, " + s.id;
    s.gens = std::move(gens);
    s.samples = std::move(samples);
    s.case_id = std::move(case_id);
    s.case_bind = std::move(case_bind);
    s.expect_appropriate = appropriate;
    ss.push_back(std::move(s));
  };
  sub("1d: 2Du - qDt + 2D(delta)", {{T("2", K::Du), T("-q", K::Dt), T("2", K::D, "delta")}},
      {{"q", "1"}, {"delta", "1"}}, "1", {{"p", "1"}, {"delta", "1"}, {"fhat", "s"}, {"ghat", "s^2"}});
  sub("1d: 2Du - qDt + 2D(delta), delta=0", {{T("2", K::Du), T("-q", K::Dt), T("2", K::D, "delta")}},
      {{"q", "2"}, {"delta", "0"}}, "1", {{"p", "2"}, {"delta", "0"}, {"fhat", "s^2+1"}, {"ghat", "s"}});
  sub("1d: Dt - D(2)", {{T("1", K::Dt), T("-1", K::D, "2")}}, {}, "2", {{"fhat", "s^2"}, {"ghat", "s^3"}});
  sub("1d: Dt - Z(2)", {{T("1", K::Dt), T("-1", K::Z, "2")}}, {}, "3", {{"fhat", "s^2+1"}, {"ghat", "s"}});
  sub("1d: D(1)", {{T("1", K::D, "1")}}, {}, "4", {{"fhat", "s^2+1"}, {"ghat", "s^3"}});
  sub("2d: Du - D(p), Dt - D(2)", {{T("1", K::Du), T("-1", K::D, "p")}, {T("1", K::Dt), T("-1", K::D, "2")}},
      {{"p", "2"}}, "9", {{"eps", "1"}, {"p", "2"}, {"nu", "1"}});
  sub("2d: Du - 2D(x), Dt - Z(2)", {{T("1", K::Du), T("-2", K::D, "x")}, {T("1", K::Dt), T("-1", K::Z, "2")}}, {},
      "10", {{"eps", "1"}, {"nu", "1"}});
  sub("2d: a1Du + a2Dt + a3D(x) + Z(delta), D(1), case 13, p=-2",
      {{T("a1", K::Du), T("a2", K::Dt), T("a3", K::D, "x"), T("1", K::Z, "delta")}, {T("1", K::D, "1")}},
      {{"a1", "1"}, {"a2", "1"}, {"a3", "0"}, {"delta", "0"}}, "13",
      {{"p", "-2"}, {"q", "-1"}, {"eps", "1"}, {"epsp", "1"}});
  sub("2d: a1Du + a2Dt + a3D(x) + Z(delta), D(1), case 13, p=2",
      {{T("a1", K::Du), T("a2", K::Dt), T("a3", K::D, "x"), T("1", K::Z, "delta")}, {T("1", K::D, "1")}},
      {{"a1", "4"}, {"a2", "-4"}, {"a3", "0"}, {"delta", "0"}}, "13",
      {{"p", "2"}, {"q", "3"}, {"eps", "1"}, {"epsp", "1"}});
  sub("3d: Du + p1D(x), Dt + p2D(x), D(1)",
      {{T("1", K::Du), T("p1", K::D, "x")}, {T("1", K::Dt), T("p2", K::D, "x")}, {T("1", K::D, "1")}},
      {{"p1", "2/3"}, {"p2", "4/3"}}, "16", {{"p", "1"}, {"eps", "1"}});
  sub("3d: Du + p1D(x), Dt + p2D(x), D(1), p2=2",
      {{T("1", K::Du), T("p1", K::D, "x")}, {T("1", K::Dt), T("p2", K::D, "x")}, {T("1", K::D, "1")}},
      {{"p1", "2"}, {"p2", "2"}}, "16", {{"p", "2"}, {"eps", "-1"}});
  sub("3d: Du - 2D(x) + Z(d), Dt - Z(2), D(1)",
      {{T("1", K::Du), T("-2", K::D, "x"), T("1", K::Z, "d")}, {T("1", K::Dt), T("-1", K::Z, "2")}, {T("1", K::D, "1")}},
      {{"d", "-4"}}, "17", {{"eps", "1"}});
  sub("control: Dt", {{T("1", K::Dt)}}, {}, {}, {}, false);
  sub("control: Du + Z(x)", {{T("1", K::Du), T("1", K::Z, "x")}}, {}, {}, {}, false);
}

}  // namespace

const Catalog& load_catalog() {
  static const Catalog cat = [] {
    Catalog c;
    add_cases(c);
    add_families(c);
    add_arrows(c);
    add_subalgebras(c);
    return c;
  }();
  return cat;
}

const CatalogCase& Catalog::find_case(const std::string& id) const {
  for (const auto& c : cases)
    if (c.id == id) return c;
  throw std::out_of_range("no catalog case '" + id + "'");
}

const TransformationFamily& Catalog::find_family(const std::string& id) const {
  for (const auto& f : families)
    if (f.id == id) return f;
  throw std::out_of_range("no transformation family '" + id + "'");
}

std::size_t Catalog::family_instance_count() const {
  std::size_t n = 0;
  for (const auto& f : families) n += f.instances.size();
  return n;
}

}  // namespace wavesym
