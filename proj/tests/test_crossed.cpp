#include "skewcat/crossed/crossed.hpp"
#include "skewcat/io/instance.hpp"

#include <gtest/gtest.h>

using namespace skewcat;

namespace {

Instance<Fp> fixture(const std::string& name) { return load_instance<Fp>(std::string(SKEWCAT_FIXTURE_DIR) + "/" + name + ".json"); }

CrossedTriple<Fp> crossed(const Instance<Fp>& in) { return build_crossed(in.triple, in.group, in.action, in.factors); }

Fp f3(std::int64_t v) { return Fp(v, 3); }

}  // namespace

TEST(Crossed, DimensionsAreSumsOverTheGroup) {
  for (const char* name : {"point3_z2triv", "dual3_z2", "ARdual_z2", "swap_double", "v4_mixed", "point5_v4tw"}) {
    auto in = fixture(name);
    auto ct = crossed(in);
    for (std::size_t x = 0; x < in.triple.n(); ++x)
      for (std::size_t y = 0; y < in.triple.n(); ++y) {
        std::size_t d = 0, b = 0;
        for (std::size_t s = 0; s < in.group.order(); ++s) {
          d += in.triple.dim(in.action.obj(s, x), y);
          b += in.triple.bdim(in.action.obj(s, x), y);
        }
        EXPECT_EQ(ct.tg.dim(x, y), d) << name;
        EXPECT_EQ(ct.tg.bdim(x, y), b) << name;
      }
    EXPECT_TRUE(check_associativity(ct).passed()) << name;
  }
}

TEST(Crossed, GroupAlgebraOfPoint) {
  auto ct = crossed(fixture("point3_z2triv"));
  EXPECT_EQ(ct.tg.dim(0, 0), 2u);
  EXPECT_EQ(ct.tg.cat.basis[0], (std::vector<std::string>{"1[1]", "1[g]"}));
  Vec<Fp> one = ct.tg.cat.id(0);
  EXPECT_EQ(ct.compose(0, 0, 0, one, one), one);
}

TEST(Crossed, TwistedSquareIsMinusOne) {
  auto ct = crossed(fixture("point3_z2tw"));
  Vec<Fp> g{f3(0), f3(1)};
  EXPECT_EQ(ct.compose(0, 0, 0, g, g), (Vec<Fp>{f3(2), f3(0)}));
  // x^2 + 1 irreducible over F_3: no element squares to -1 in F_3 itself
  for (int a = 0; a < 3; ++a) EXPECT_NE((a * a + 1) % 3, 0);
  EXPECT_TRUE(check_associativity(ct).passed());
}

TEST(Crossed, SignActionCommutation) {
  auto ct = crossed(fixture("dual3_z2"));
  ASSERT_EQ(ct.tg.dim(0, 0), 4u);
  // basis: 1[1], t[1], 1[g], t[g]
  Vec<Fp> g = ct.tag_hom(0, 0, 1, {f3(1), f3(0)});
  Vec<Fp> t = ct.embed_hom(0, 0, {f3(0), f3(1)});
  Vec<Fp> tg = ct.tag_hom(0, 0, 1, {f3(0), f3(1)});
  EXPECT_EQ(ct.compose(0, 0, 0, g, t), scaled(f3(-1), tg));
  EXPECT_EQ(ct.compose(0, 0, 0, t, g), tg);
  EXPECT_TRUE(is_zero_vec(ct.compose(0, 0, 0, t, t)));
  EXPECT_TRUE(check_associativity(ct).passed());
}

TEST(Crossed, EmbeddingIsMultiplicative) {
  auto in = fixture("ARdual_z2");
  auto ct = crossed(in);
  const auto& c = in.triple.cat;
  for (std::size_t x = 0; x < c.n(); ++x) {
    EXPECT_EQ(ct.embed_hom(x, x, c.id(x)), ct.tg.cat.id(x));
    for (std::size_t y = 0; y < c.n(); ++y)
      for (std::size_t z = 0; z < c.n(); ++z)
        for (std::size_t j = 0; j < c.dim(y, z); ++j)
          for (std::size_t i = 0; i < c.dim(x, y); ++i) {
            Vec<Fp> b = unit_vec<Fp>(c.field, c.dim(y, z), j), a = unit_vec<Fp>(c.field, c.dim(x, y), i);
            EXPECT_EQ(ct.compose(x, y, z, ct.embed_hom(y, z, b), ct.embed_hom(x, y, a)), ct.embed_hom(x, z, c.compose(x, y, z, b, a)));
            EXPECT_EQ(ct.tg.act_left(x, y, z, ct.embed_hom(y, z, b), ct.embed_bim(x, y, a)),
                      ct.embed_bim(x, z, in.triple.act_left(x, y, z, b, a)));
          }
  }
}

TEST(Crossed, ZeroFactorBreaksAssociativityCheck) {
  auto in = fixture("point3_z2tw");
  in.factors.at(1, 1, 0) = {f3(0)};
  EXPECT_FALSE(validate_factor_system(in.triple, in.group, in.action, in.factors).passed());
  Report r = check_associativity(crossed(in));
  EXPECT_FALSE(r.passed());
}

TEST(Crossed, CocycleIffAssociativeUnderPerturbation) {
  for (const char* name : {"point3_z2triv", "point3_z2tw", "point5_v4tw"}) {
    auto in = fixture(name);
    const std::uint64_t p = in.field.p;
    for (std::size_t s = 0; s < in.group.order(); ++s)
      for (std::size_t u = 0; u < in.group.order(); ++u)
        for (std::uint64_t c = 0; c < p; ++c) {
          auto mod = in;
          mod.factors.at(s, u, 0) = {Fp(c, p)};
          bool cocycle = validate_factor_system(mod.triple, mod.group, mod.action, mod.factors).passed();
          bool assoc = check_associativity(crossed(mod)).passed();
          EXPECT_EQ(cocycle, assoc) << name << " (" << s << "," << u << ") = " << c;
        }
  }
}

TEST(Crossed, OutputRoundTrips) {
  auto ct = crossed(fixture("ARdual_z2"));
  auto back = parse_instance<Fp>(json::parse(triple_json(ct.tg, "x").dump()));
  EXPECT_EQ(back.triple.cat.comp, ct.tg.cat.comp);
  EXPECT_EQ(back.triple.bim.left, ct.tg.bim.left);
  EXPECT_TRUE(validate_triple(back.triple).passed());
}
