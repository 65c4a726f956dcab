#include "skewcat/centersep/center.hpp"
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

Fp f3(std::int64_t v) { return Fp(v, 3); }

template <class K>
ElObject<K> el(const Triple<K>& t, Sum s, Vec<K> x) {
  return ElObject<K>{AddObject<K>::plain(t.cat, std::move(s)), std::move(x)};
}

const char* kGroupFixtures[] = {"point3_z2triv", "point3_z2tw", "dual3_z2", "ARdual_z2", "swap_double", "v4_mixed", "point5_v4tw", "point5_z4"};

}  // namespace

TEST(ElHom, ScalarsOnThePoint) {
  auto t = fixture("point3").triple;
  EXPECT_EQ(el_hom_basis(t, el(t, {0}, {f3(0)}), el(t, {0}, {f3(0)})).size(), 1u);
  EXPECT_EQ(el_hom_basis(t, el(t, {0}, {f3(1)}), el(t, {0}, {f3(0)})).size(), 0u);
}

TEST(ElHom, JordanBlockCommutant) {
  auto t = fixture("point3").triple;
  // J = [[0,1],[0,0]] as blocks (i,j) in Hom(S_j, S_i)
  ElObject<Fp> j = el(t, {0, 0}, {f3(0), f3(1), f3(0), f3(0)});
  auto b = el_hom_basis(t, j, j);
  EXPECT_EQ(b.size(), 2u);
  // brute force: matrices over F_3 commuting with J
  std::size_t count = 0;
  for (int v = 0; v < 81; ++v) {
    Vec<Fp> a{f3(v % 3), f3(v / 3 % 3), f3(v / 9 % 3), f3(v / 27)};
    if (is_el_morphism(t, j, j, a)) ++count;
  }
  EXPECT_EQ(count, 9u);
  for (const auto& a : b) EXPECT_TRUE(is_el_morphism(t, j, j, a));
}

TEST(ElHom, DerivationEntersTheEquation) {
  // with d = 0 on dual numbers nothing changes; a random triple must still
  // give only solutions of the equation
  auto t = fixture("ARdual").triple;
  for (const auto& x : generate_el_objects(t, 8, 7))
    for (const auto& y : generate_el_objects(t, 4, 9))
      for (const auto& a : el_hom_basis(t, x, y)) EXPECT_TRUE(is_el_morphism(t, x, y, a));
}

TEST(InducedAction, SignOnDualNumbers) {
  auto in = fixture("dual3_z2");
  ElObject<Fp> x = el(in.triple, {0}, {f3(0), f3(1)});
  EXPECT_EQ(act_el(in.triple, in.action, 1, x).elem, (Vec<Fp>{f3(0), f3(-1)}));
  EXPECT_EQ(act_el(in.triple, in.action, 0, x).elem, x.elem);
}

TEST(InducedAction, ValidOnGeneratedFragments) {
  for (const char* name : kGroupFixtures) {
    auto in = fixture(name);
    auto objs = generate_el_objects(in.triple, 6, 3);
    Report r = validate_induced_action(in.triple, in.group, in.action, in.factors, objs);
    EXPECT_TRUE(r.passed()) << name;
  }
}

TEST(Phi, ZeroAndUnitOnZ2Triv) {
  auto in = fixture("point3_z2triv");
  auto ct = crossed(in);
  ElObject<Fp> zero = el(in.triple, {0}, {f3(0)}), one = el(in.triple, {0}, {f3(1)});
  EXPECT_EQ(phi_object(ct, zero).elem, (Vec<Fp>{f3(0), f3(0)}));
  EXPECT_EQ(el_hom_basis(ct.tg, phi_object(ct, one), phi_object(ct, one)).size(), 2u);
  EXPECT_EQ(el_group_hom_basis(ct, one, one).size(), 2u);
  EXPECT_TRUE(check_phi_full_faithful(ct, one, one).passed());
}

TEST(Phi, FullyFaithfulOnGeneratedPairs) {
  for (const char* name : kGroupFixtures) {
    auto in = fixture(name);
    auto ct = crossed(in);
    auto objs = generate_el_objects(in.triple, 5, 11);
    for (const auto& x : objs)
      for (const auto& y : objs) EXPECT_TRUE(check_phi_full_faithful(ct, x, y).passed()) << name;
  }
}

TEST(Psi, UnitOnZ2TrivIsIdentity) {
  auto in = fixture("point3_z2triv");
  auto ct = crossed(in);
  ElObject<Fp> xi = el(ct.tg, {0}, {f3(1), f3(0)});
  ElObject<Fp> p = psi_object(ct, xi);
  EXPECT_EQ(p.carrier.summands, (Sum{0, 0}));
  EXPECT_EQ(p.elem, (Vec<Fp>{f3(1), f3(0), f3(0), f3(1)}));
  ElObject<Fp> z = psi_object(ct, el(ct.tg, {0}, {f3(0), f3(0)}));
  EXPECT_TRUE(is_zero_vec(z.elem));
}

TEST(Psi, OffDiagonalComponentsFollowTheFormula) {
  // xi = a[1] + b[g] on the twisted point: block (1,g) is b^1 lam(1,g) = b,
  // block (g,1) is b^g lam(g,g) = -b, diagonal blocks a
  auto in = fixture("point3_z2tw");
  auto ct = crossed(in);
  ElObject<Fp> p = psi_object(ct, el(ct.tg, {0}, {f3(1), f3(2)}));
  EXPECT_EQ(p.elem, (Vec<Fp>{f3(1), f3(2), f3(-2), f3(1)}));
}

TEST(Psi, MorphismsGoToMorphisms) {
  for (const char* name : kGroupFixtures) {
    auto in = fixture(name);
    auto ct = crossed(in);
    auto objs = generate_el_objects(ct.tg, 4, 5);
    for (const auto& x : objs)
      for (const auto& y : objs) {
        ElObject<Fp> px = psi_object(ct, x), py = psi_object(ct, y);
        ASSERT_TRUE(is_el_object(ct.base, px)) << name;
        for (const auto& a : el_hom_basis(ct.tg, x, y)) EXPECT_TRUE(is_el_morphism(ct.base, px, py, psi_morphism(ct, x, y, a))) << name;
      }
  }
}

TEST(Adjunction, MutuallyInverseOnAllFixtures) {
  for (const char* name : kGroupFixtures) {
    auto in = fixture(name);
    auto ct = crossed(in);
    auto xs = generate_el_objects(in.triple, 4, 21);
    auto etas = generate_el_objects(ct.tg, 4, 22);
    for (const auto& x : xs)
      for (const auto& eta : etas) {
        Report r = check_adjunction(ct, x, eta);
        EXPECT_TRUE(r.passed()) << name << " " << r.get("dimension")->detail;
      }
  }
}

TEST(Adjunction, UnitMorphismOfTheZeroObject) {
  // x = 0, eta = 0: alpha = 1[1] gives beta = (1, 0); alpha = 1[g] gives
  // beta_g = 1^g lam(g,g) = -1
  auto in = fixture("point3_z2tw");
  auto ct = crossed(in);
  ElObject<Fp> x = el(in.triple, {0}, {f3(0)});
  ElObject<Fp> eta = el(ct.tg, {0}, {f3(0), f3(0)});
  Vec<Fp> beta = adjoint_forward(ct, x, eta, ct.tg.cat.id(0));
  EXPECT_EQ(beta, (Vec<Fp>{f3(1), f3(0)}));
  EXPECT_EQ(adjoint_backward(ct, x, eta, beta), ct.tg.cat.id(0));
  Vec<Fp> g{f3(0), f3(1)};
  EXPECT_EQ(adjoint_forward(ct, x, eta, g), (Vec<Fp>{f3(0), f3(2)}));
  EXPECT_EQ(adjoint_backward(ct, x, eta, Vec<Fp>{f3(0), f3(2)}), g);
  EXPECT_TRUE(is_zero_vec(adjoint_backward(ct, x, eta, Vec<Fp>{f3(0), f3(0)})));
}

TEST(Adjunction, RandomMorphismsRoundTrip) {
  auto in = fixture("ARdual_z2");
  auto ct = crossed(in);
  std::mt19937_64 rng(50);
  auto xs = generate_el_objects(in.triple, 10, 1);
  auto etas = generate_el_objects(ct.tg, 10, 2);
  std::size_t tried = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const auto& x = xs[k];
    const auto& eta = etas[k];
    auto basis = el_hom_basis(ct.tg, phi_object(ct, x), eta);
    const std::size_t n = hom_layout(ct.tg.cat, x.carrier.summands, eta.carrier.summands).total;
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<Fp> c;
      for (std::size_t i = 0; i < basis.size(); ++i) c.push_back(random_scalar<Fp>(in.field, rng));
      Vec<Fp> a = combine(basis, c, n);
      EXPECT_EQ(adjoint_backward(ct, x, eta, adjoint_forward(ct, x, eta, a)), a);
      ++tried;
    }
  }
  EXPECT_EQ(tried, 50u);
}

TEST(SummandWitness, HalfOnZ2Triv) {
  auto in = fixture("point3_z2triv");
  auto ct = crossed(in);
  CenterElement<Fp> alpha{{{f3(2)}}};
  EXPECT_EQ(trace(ct, alpha), center_one(in.triple.cat));
  for (const auto& xi : generate_el_objects(ct.tg, 10, 4)) {
    auto w = summand_witness(ct, xi, alpha);
    EXPECT_TRUE(w.report.passed());
  }
}

TEST(SummandWitness, EverySeparableFixture) {
  for (const char* name : kGroupFixtures) {
    auto in = fixture(name);
    auto ct = crossed(in);
    auto alpha = is_separable(ct);
    ASSERT_TRUE(alpha.has_value()) << name;
    for (const auto& xi : generate_el_objects(ct.tg, 6, 8)) EXPECT_TRUE(summand_witness(ct, xi, *alpha).report.passed()) << name;
  }
}

TEST(SummandWitness, RefusedInCharacteristicTwo) {
  auto in = fixture("point3_z2_f2");
  auto ct = crossed(in);
  EXPECT_FALSE(is_separable(ct).has_value());
}

TEST(ElRational, HomAndAdjunctionOverQ) {
  auto in = fixture<Rational>("dualQ_z2");
  auto ct = crossed(in);
  for (const auto& x : generate_el_objects(in.triple, 3, 1))
    for (const auto& eta : generate_el_objects(ct.tg, 3, 2)) EXPECT_TRUE(check_adjunction(ct, x, eta).passed());
}
