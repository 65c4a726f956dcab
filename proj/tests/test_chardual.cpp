#include "skewcat/chardual/chardual.hpp"
#include "skewcat/io/instance.hpp"

#include <gtest/gtest.h>

using namespace skewcat;

namespace {

template <class K = Fp>
Instance<K> fixture(const std::string& name) {
  return load_instance<K>(std::string(SKEWCAT_FIXTURE_DIR) + "/" + name + ".json");
}

template <class K>
CrossedTriple<K> crossed(const Instance<K>& in) {
  return build_crossed(in.triple, in.group, in.action, in.factors);
}

std::vector<std::uint64_t> values_of(const std::vector<Fp>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& x : v) out.push_back(x.value());
  return out;
}

}  // namespace

TEST(Characters, CyclicOfOrderTwo) {
  auto g = FiniteGroup::abelian({2});
  auto cg = character_group<Fp>(g, FieldSpec::prime(3));
  EXPECT_TRUE(cg.report.passed());
  EXPECT_EQ(cg.zeta, Fp(2, 3));
  ASSERT_EQ(cg.order(), 2u);
  // the only homomorphisms Z/2 -> {1,2}
  std::set<std::vector<std::uint64_t>> got{values_of(cg.values[0]), values_of(cg.values[1])};
  std::set<std::vector<std::uint64_t>> want{{1, 1}, {1, 2}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(values_of(cg.values[0]), (std::vector<std::uint64_t>{1, 1}));
}

TEST(Characters, TrivialGroup) {
  auto cg = character_group<Fp>(FiniteGroup::trivial(), FieldSpec::prime(2));
  ASSERT_EQ(cg.order(), 1u);
  EXPECT_TRUE(cg.report.passed());
}

TEST(Characters, CyclicOfOrderFour) {
  auto g = FiniteGroup::abelian({4});
  auto cg = character_group<Fp>(g, FieldSpec::prime(5), Fp(2, 5));
  EXPECT_EQ(cg.order(), 4u);
  EXPECT_TRUE(cg.report.passed());
  // chi(s)^4 = 1 and the values of a generator run over all four roots
  std::set<std::uint64_t> at_gen;
  for (const auto& chi : cg.values)
    for (std::size_t s = 0; s < g.order(); ++s) {
      EXPECT_EQ(chi[s].pow(4), Fp(1, 5));
      if (g.element_order(s) == 4) at_gen.insert(chi[s].value());
    }
  EXPECT_EQ(at_gen, (std::set<std::uint64_t>{1, 2, 3, 4}));
}

TEST(Characters, KleinFour) {
  // exponent 2 but order 4: F_3 lacks a primitive 4th root, F_5 has one
  EXPECT_THROW(character_group<Fp>(FiniteGroup::abelian({2, 2}), FieldSpec::prime(3)), precondition_error);
  auto cg = character_group<Fp>(FiniteGroup::abelian({2, 2}), FieldSpec::prime(5));
  EXPECT_EQ(cg.order(), 4u);
  EXPECT_TRUE(cg.report.passed());
  for (const auto& chi : cg.values)
    for (const auto& v : chi) EXPECT_TRUE(v == Fp(1, 5) || v == Fp(4, 5));
}

TEST(Characters, Preconditions) {
  EXPECT_THROW(character_group<Fp>(FiniteGroup::abelian({2}), FieldSpec::prime(2)), precondition_error);
  EXPECT_THROW(character_group<Fp>(FiniteGroup::abelian({4}), FieldSpec::prime(5), Fp(4, 5)), precondition_error);
  EXPECT_THROW(character_group<Fp>(FiniteGroup::abelian({3}), FieldSpec::prime(5)), precondition_error);
  // S_3 as permutations of {0,1,2}
  std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::size_t> mult(36);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      mult[a * 6 + b] = std::find(perms.begin(), perms.end(), c) - perms.begin();
    }
  FiniteGroup s3({"1", "a", "b", "c", "d", "e"}, mult);
  EXPECT_THROW(character_group<Fp>(s3, FieldSpec::prime(7)), precondition_error);
}

TEST(Characters, RationalSign) {
  auto cg = character_group<Rational>(FiniteGroup::abelian({2}), FieldSpec::rational());
  EXPECT_EQ(cg.order(), 2u);
  EXPECT_TRUE(cg.report.passed());
}

TEST(HatAction, ScalesTaggedComponents) {
  auto ct = crossed(fixture("point3_z2triv"));
  auto cg = character_group<Fp>(ct.group, FieldSpec::prime(3));
  auto act = hat_action(ct, cg);
  EXPECT_TRUE(validate_action(ct.tg, cg.group, act).passed());
  const std::size_t g = 1 - ct.group.unit();
  Vec<Fp> tagged = ct.tag_hom(0, 0, g, ct.base.cat.id(0));
  for (std::size_t chi = 0; chi < 2; ++chi) {
    Vec<Fp> img = act.act_hom(ct.tg, chi, 0, 0, tagged);
    EXPECT_EQ(img, scaled(cg.at(chi, g), tagged));
  }
  // chi_1 sends [g] to -[g]
  const std::size_t chi1 = cg.at(0, g).is_one() ? 1 : 0;
  EXPECT_EQ(act.act_hom(ct.tg, chi1, 0, 0, tagged), scaled(Fp(2, 3), tagged));
}

TEST(Idempotents, OrderTwoOverF3) {
  auto ct = crossed(fixture("point3_z2triv"));
  auto cd = char_double<Fp>(ct);
  const std::size_t one = ct.group.unit(), g = 1 - one;
  // e_1 = 2[chi0] + 2[chi1], e_g = 2[chi0] + [chi1] with chi0 trivial
  const std::size_t chi0 = cd.chars.at(0, g).is_one() ? 0 : 1, chi1 = 1 - chi0;
  auto coeff = [&](const Vec<Fp>& e, std::size_t chi) {
    Vec<Fp> c = cd.dbl.hom_component(0, 0, chi, e);  // in TG(*,*)
    EXPECT_TRUE(ct.hom_component(0, 0, g, c)[0].is_zero());
    return ct.hom_component(0, 0, one, c)[0].value();
  };
  EXPECT_EQ(coeff(cd.e[0][one], chi0), 2u);
  EXPECT_EQ(coeff(cd.e[0][one], chi1), 2u);
  EXPECT_EQ(coeff(cd.e[0][g], chi0), 2u);
  EXPECT_EQ(coeff(cd.e[0][g], chi1), 1u);
}

TEST(CharDouble, PassesOnAbelianFixtures) {
  for (const char* name : {"point3_z2triv", "point3_z2tw", "point5_z4", "point5_v4tw", "dual3_z2", "swap_double", "ARdual_z2"}) {
    auto ct = crossed(fixture(name));
    auto cd = char_double<Fp>(ct);
    EXPECT_TRUE(cd.report.passed()) << name;
    EXPECT_EQ(cd.report.status_of("theta/dense"), Status::pass) << name;
    EXPECT_EQ(cd.report.status_of("theta/fully faithful"), Status::pass) << name;
    EXPECT_EQ(cd.report.status_of("theta/elements bijective"), Status::pass) << name;
  }
}

TEST(CharDouble, DimensionsOnPoint) {
  auto ct = crossed(fixture("point3_z2triv"));
  auto cd = char_double<Fp>(ct);
  EXPECT_EQ(cd.dbl.tg.dim(0, 0), 4u);
  EXPECT_EQ(add_hom_basis(cd.dbl.tg.cat, cd.theta.obj[0], cd.theta.obj[0]).size(), 1u);
}

TEST(CharDouble, TrivialGroup) {
  auto in = fixture("point3");
  auto g = FiniteGroup::trivial();
  auto act = trivial_action(in.triple, g);
  auto ct = build_crossed(in.triple, g, act, trivial_factors(in.triple, g, act));
  auto cd = char_double<Fp>(ct);
  EXPECT_TRUE(cd.report.passed());
  EXPECT_EQ(cd.e[0][0], cd.dbl.tg.cat.id(0));
}

TEST(CharDouble, Preconditions) {
  EXPECT_THROW(char_double<Fp>(crossed(fixture("point3_z2_f2"))), precondition_error);
  EXPECT_THROW(char_double<Fp>(crossed(fixture("v4_mixed"))), precondition_error);
}
