#include "skewcat/fincat/bifunctor.hpp"
#include "skewcat/fincat/double.hpp"
#include "skewcat/io/instance.hpp"

#include <gtest/gtest.h>

using namespace skewcat;

namespace {

Instance<Fp> fixture(const std::string& name) { return load_instance<Fp>(std::string(SKEWCAT_FIXTURE_DIR) + "/" + name + ".json"); }

Fp f3(std::int64_t v) { return Fp(v, 3); }
FieldSpec F3() { return FieldSpec::prime(3); }

}  // namespace

TEST(Category, PointAndA2Pass) {
  EXPECT_TRUE(validate_category(fixture("point3").triple.cat).passed());
  const auto a2 = fixture("A2").triple.cat;
  EXPECT_EQ(a2.dim(0, 1), 1u);
  EXPECT_EQ(a2.dim(1, 0), 0u);
  EXPECT_TRUE(validate_category(a2).passed());
}

TEST(Category, CorruptedIdentityFails) {
  auto c = fixture("point3").triple.cat;
  c.ids[0] = {f3(2)};
  Report r = validate_category(c);
  EXPECT_EQ(r.status_of("identity"), Status::fail);
  EXPECT_FALSE(r.get("identity")->violations.empty());
}

TEST(Category, ZeroedCompositionDetected) {
  auto c = fixture("dual3").triple.cat;
  // t o 1 = 0
  c.set_compose_basis(0, 0, 0, 1, 0, {f3(0), f3(0)});
  EXPECT_FALSE(validate_category(c).passed());
}

TEST(Triple, ZeroDerivationPasses) {
  EXPECT_TRUE(validate_triple(fixture("point3").triple).passed());
  EXPECT_TRUE(validate_triple(fixture("dual3").triple).passed());
  EXPECT_TRUE(validate_triple(fixture("ARdual").triple).passed());
}

TEST(Triple, FormalDerivativeOnDualNumbersFailsLeibnizAtTT) {
  Report r = validate_triple(fixture("dual3_bad_derivation").triple);
  const Check* c = r.get("differentiation/leibniz");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::fail);
  bool named = false;
  for (const auto& v : c->violations) named = named || v.find("(t:*->*, t:*->*)") != std::string::npos;
  EXPECT_TRUE(named) << c->violations.front();
}

TEST(Triple, NonzeroDerivativeOfIdentityFails) {
  auto t = fixture("dual3").triple;
  t.diff[0](1, 0) = f3(1);  // d(1) = t
  Report r = validate_triple(t);
  EXPECT_EQ(r.status_of("differentiation/unit"), Status::fail);
}

TEST(Additive, ComposeMatchesMatrixProduct) {
  const auto c = fixture("point3").triple.cat;
  Sum s{0, 0};
  Vec<Fp> a{f3(1), f3(2), f3(0), f3(1)}, b{f3(2), f3(1), f3(1), f3(1)};
  Mat<Fp> ma = Mat<Fp>::from_rows(2, {{f3(1), f3(2)}, {f3(0), f3(1)}});
  Mat<Fp> mb = Mat<Fp>::from_rows(2, {{f3(2), f3(1)}, {f3(1), f3(1)}});
  Mat<Fp> p = ma * mb;
  Vec<Fp> got = add_compose(c, s, s, s, a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(got[i * 2 + j], p(i, j));
}

TEST(Additive, IdentityAndA2Composition) {
  const auto c = fixture("A2").triple.cat;
  Vec<Fp> a{f3(1)};
  EXPECT_EQ(add_compose(c, Sum{0}, Sum{0}, Sum{1}, a, add_identity(c, Sum{0})), a);
  EXPECT_EQ(add_compose(c, Sum{0}, Sum{1}, Sum{1}, add_identity(c, Sum{1}), a), a);
}

TEST(Additive, SplitIdempotents) {
  const auto c = fixture("point3").triple.cat;
  Sum s{0, 0};
  AddObject<Fp> x = AddObject<Fp>::plain(c, s);
  Vec<Fp> e{f3(1), f3(0), f3(0), f3(0)};
  auto sp = split_idempotent(c, x, e);
  EXPECT_EQ(add_compose(c, s, s, s, sp.pi, sp.iota), sp.image.idem);  // pi iota = 1_Y
  EXPECT_EQ(add_compose(c, s, s, s, sp.iota, sp.pi), e);
  auto whole = split_idempotent(c, x, add_identity(c, s));
  EXPECT_EQ(whole.image, x);
  auto zero = split_idempotent(c, x, Vec<Fp>(4, f3(0)));
  EXPECT_TRUE(zero.image.is_zero());
  EXPECT_THROW(split_idempotent(c, x, Vec<Fp>{f3(1), f3(1), f3(1), f3(1)}), std::invalid_argument);
}

TEST(Double, HomDimensionsOfPoint) {
  const auto c = fixture("point3").triple.cat;
  Triple<Fp> d = double_bimodule(c);
  EXPECT_TRUE(validate_triple(d).passed());
  EXPECT_EQ(d.n(), 1u);
  EXPECT_EQ(d.dim(0, 0), 2u);
  // Hom(x, y) = {(a, a') : a' x = y a}, written as a kernel
  auto hom_dim = [&](std::int64_t x, std::int64_t y) {
    Mat<Fp> m = Mat<Fp>::from_rows(2, {{f3(-y), f3(x)}});
    return kernel_basis(m, F3()).size();
  };
  EXPECT_EQ(hom_dim(1, 0), 1u);
  EXPECT_EQ(hom_dim(1, 1), 1u);
  // the symbolic action must agree: (a,a') acting on x = 1 from the left gives a'
  Vec<Fp> act = d.act_left(0, 0, 0, {f3(0), f3(1)}, {f3(1)});
  EXPECT_EQ(act[0], f3(1));
  act = d.act_left(0, 0, 0, {f3(1), f3(0)}, {f3(1)});
  EXPECT_TRUE(act[0].is_zero());
}

TEST(Double, DoubleOfEveryFixturePasses) {
  for (const char* n : {"A2", "dual3", "ARdual"}) EXPECT_TRUE(validate_triple(double_bimodule(fixture(n).triple.cat)).passed()) << n;
  FinCat<Fp> empty(F3(), {});
  empty.allocate();
  Triple<Fp> d = double_bimodule(empty);
  EXPECT_EQ(d.n(), 0u);
}

TEST(Equivalence, IdentityOnPointPasses) {
  const auto t = fixture("point3").triple;
  Report r = is_equivalence(identity_bifunctor(t), t, t);
  EXPECT_TRUE(r.passed()) << r.checks().size();
}

TEST(Equivalence, IdentityOnARdualPasses) {
  const auto t = fixture("ARdual").triple;
  Report r = is_equivalence(identity_bifunctor(t), t, t);
  EXPECT_TRUE(r.passed());
}

TEST(Schema, ErrorsNameTheLocation) {
  json j = read_json_file(std::string(SKEWCAT_FIXTURE_DIR) + "/point3_z2triv.json");
  json bad = j;
  bad["factors"] = json::array({{{"s", "h"}, {"t", "g"}, {"value", "1"}}});
  try {
    parse_instance<Fp>(bad);
    FAIL();
  } catch (const schema_error& e) {
    EXPECT_NE(std::string(e.what()).find("factors[0].s"), std::string::npos) << e.what();
  }
  bad = j;
  bad["category"]["compose"] = json::array({{{"f", "1"}, {"g", "1"}, {"=", {{"nope", "1"}}}}});
  EXPECT_THROW(parse_instance<Fp>(bad), schema_error);
  bad = j;
  bad["field"]["p"] = 4;
  EXPECT_THROW(parse_instance<Fp>(bad), schema_error);
}

TEST(Schema, TripleRoundTrip) {
  auto in = fixture("ARdual");
  json j = json::parse(triple_json(in.triple, "ARdual").dump());
  auto back = parse_instance<Fp>(j);
  EXPECT_EQ(back.triple.cat.comp, in.triple.cat.comp);
  EXPECT_EQ(back.triple.bim.left, in.triple.bim.left);
  EXPECT_EQ(back.triple.bim.right, in.triple.bim.right);
  EXPECT_TRUE(validate_triple(back.triple).passed());
}
