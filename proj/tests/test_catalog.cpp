#include <gtest/gtest.h>

#include <set>

#include "wavesym/catalog.hpp"

using namespace wavesym;

namespace {

const Instantiation& first_instance(const std::string& id) { return load_catalog().find_case(id).instances.at(0); }

}  // namespace

TEST(Data, Counts) {
  const Catalog& cat = load_catalog();
  EXPECT_EQ(cat.cases.size(), 39u);
  EXPECT_EQ(cat.family_instance_count(), 37u);
  EXPECT_EQ(cat.arrows.size(), 27u);
  EXPECT_EQ(cat.families.size(), 17u);
}

TEST(Data, IdsUniqueAndInstancesPresent) {
  const Catalog& cat = load_catalog();
  std::set<std::string> ids;
  for (const auto& c : cat.cases) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_GE(c.instances.size(), 2u) << c.id;
    EXPECT_FALSE(c.citation.empty()) << c.id;
    EXPECT_TRUE(c.regular != (c.witness >= 0)) << c.id;
    if (c.probe_degree < 0) {
      EXPECT_FALSE(c.probe_note.empty()) << c.id;
    }
  }
  for (const auto& a : cat.arrows) {
    EXPECT_NO_THROW(cat.find_case(a.source_case)) << a.id;
    EXPECT_NO_THROW(cat.find_case(a.target_case)) << a.id;
    EXPECT_NO_THROW(cat.find_family(a.family)) << a.id;
  }
  EXPECT_THROW(cat.find_case("99z"), std::out_of_range);
}

TEST(Instantiation, SlotsAndParameters) {
  const CatalogCase& c = load_catalog().find_case("13");
  auto basis = case_basis(c, {{"p", "2"}, {"q", "3"}, {"eps", "1"}, {"epsp", "1"}});
  ASSERT_EQ(basis.size(), 3u);
  // (1-q) t d_t + (1+p-q) x d_x + 2u d_u at p=2, q=3
  VectorField want = VectorField::txu(parse("-2*t"), Expr(0), parse("2*u"));
  EXPECT_TRUE((basis[2] - want).is_zero());
  EXPECT_EQ(instantiate_expr("fhat", {{"fhat", "s^2+1"}}, {{"fhat", "u"}}), simplify(parse("u^2+1")));
  EXPECT_THROW(instantiate_expr("eps*u", {}, {}), DomainError);
}

TEST(Instantiation, ConstraintViolation) {
  EXPECT_THROW(check_constraints({"p != 0"}, {{"p", "0"}}), ConstraintViolation);
  EXPECT_THROW(check_constraints({"eps in {-1,1}"}, {{"eps", "2"}}), ConstraintViolation);
  EXPECT_THROW(check_constraints({"q > 1/2"}, {{"q", "1/3"}}), ConstraintViolation);
  EXPECT_NO_THROW(check_constraints({"p != 0", "eps in {-1,1}"}, {{"p", "2"}, {"eps", "-1"}}));
  const CatalogCase& c = load_catalog().find_case("13");
  EXPECT_THROW(case_member(c, {"bad", {{"p", "0"}, {"q", "3"}, {"eps", "1"}, {"epsp", "1"}}, {}}),
               ConstraintViolation);
}

TEST(Cases, RegularAndSingularRows) {
  VerifyOptions opt;
  for (const char* id : {"13", "16", "18a", "19d", "20"}) {
    const CatalogCase& c = load_catalog().find_case(id);
    CaseReport r = verify_case(c, c.instances.at(0), opt);
    EXPECT_TRUE(r.pass) << id << ": " << r.failure;
    EXPECT_TRUE(r.closed) << id;
  }
}

TEST(Cases, SingularWitness) {
  const CatalogCase& c = load_catalog().find_case("18a");
  ClassMember th = case_member(c, first_instance("18a"));
  auto basis = case_basis(c, first_instance("18a").bind);
  EXPECT_TRUE(witness_is_singular(basis.at(c.witness + 1), th));
  // d_x comes from D(1), so it is not a witness
  EXPECT_FALSE(witness_is_singular(basis.at(1), th));
}

TEST(Families, VerifyWithAlternativeVariants) {
  const Catalog& cat = load_catalog();
  for (const char* id : {"T1", "T2c", "T9"}) {
    const auto& fam = cat.find_family(id);
    FamilyReport r = verify_family(fam, fam.instances.at(0));
    EXPECT_TRUE(r.pass) << id << ": " << r.failure;
  }
}

TEST(Arrows, RelabelingCase13) {
  const Catalog& cat = load_catalog();
  for (const auto& a : cat.arrows) {
    if (a.source_case != "13") continue;
    EXPECT_EQ(a.relabel.at("p"), "-p");
    EXPECT_EQ(a.relabel.at("q"), "q-p");
    ArrowReport r = verify_arrow(a);
    EXPECT_TRUE(r.pass) << r.failure;
  }
}

TEST(Subalgebras, ListsAndNegativeControls) {
  std::size_t controls = 0;
  for (const auto& r : verify_subalgebra_lists()) {
    EXPECT_TRUE(r.pass) << r.id << ": " << r.failure;
    if (r.id.rfind("control", 0) == 0) {
      ++controls;
      EXPECT_FALSE(r.intersections_ok) << r.id;
    }
  }
  EXPECT_EQ(controls, 2u);
  std::vector<VectorField> dt{generator(GenKind::Dt)};
  EXPECT_FALSE(intersections_trivial(dt));
  std::vector<VectorField> d1{generator(GenKind::D, Expr(1))};
  EXPECT_TRUE(intersections_trivial(d1));
}

TEST(Kernel, AlgebrasAndMoebiusAction) {
  KernelReport k = verify_kernel_algebras();
  EXPECT_TRUE(k.pass) << k.failure;
  for (const auto& s : moebius_samples()) EXPECT_TRUE(verify_moebius_action(s)) << s.mu;
}

// Push-forwards of symmetries stay symmetries of the image member.
TEST(Conjugation, SelectedArrowsAndFamilies) {
  const Catalog& cat = load_catalog();
  std::size_t arrows = 0;
  for (const auto& a : cat.arrows) {
    if (a.source_case != "12" && a.source_case != "13" && a.family != "T2b") continue;
    ConjugationReport r = verify_arrow_conjugation(a);
    EXPECT_TRUE(r.pass) << r.id << ": " << r.failure;
    EXPECT_GT(r.fields, 0u);
    ++arrows;
  }
  EXPECT_GE(arrows, 3u);
  for (const char* id : {"T1", "T3", "T9"}) {
    const auto& fam = cat.find_family(id);
    ConjugationReport r = verify_family_conjugation(fam, fam.instances.at(0));
    EXPECT_TRUE(r.pass) << r.id << ": " << r.failure;
  }
}

TEST(Conjugation, NonSymmetryIsReported) {
  // the source basis of case 13 pushed by the identity is not a symmetry of case 16
  EquivalenceArrow a = load_catalog().arrows.at(0);
  for (const auto& x : load_catalog().arrows)
    if (x.source_case == "13") a = x;
  a.target_case = "16";
  a.relabel = {{"p", "1"}, {"eps", "1"}};
  EXPECT_FALSE(verify_arrow_conjugation(a).pass);
}
