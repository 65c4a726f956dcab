#include "skewcat/exactla/matrix.hpp"
#include "skewcat/exactla/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace skewcat;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec Q = FieldSpec::rational();

using M3 = Mat<Fp>;

}  // namespace

TEST(Scalar, PrimeFieldArithmetic) {
  Fp a(2, 3), b(2, 3);
  EXPECT_EQ((a * b).value(), 1u);
  EXPECT_EQ((a + b).value(), 1u);
  EXPECT_EQ(a.inverse().value(), 2u);
  EXPECT_EQ(Fp(-1, 7).value(), 6u);
  EXPECT_EQ(Fp(3, 7).pow(6).value(), 1u);
  EXPECT_THROW(Fp(0, 5).inverse(), field_error);
  EXPECT_THROW(Fp(1, 3) + Fp(1, 5), field_error);
}

TEST(Scalar, UnboundZeroAdoptsModulus) {
  Fp z;
  z += Fp(4, 5);
  EXPECT_EQ(z.modulus(), 5u);
  EXPECT_EQ(z.value(), 4u);
}

TEST(Scalar, FieldSpecRejectsComposite) {
  EXPECT_THROW(FieldSpec::prime(4), field_error);
  EXPECT_THROW(FieldSpec::prime(1), field_error);
  EXPECT_THROW(FieldSpec::prime(1ull << 31), field_error);
  EXPECT_NO_THROW(FieldSpec::prime(2147483647));
}

TEST(Scalar, Parse) {
  EXPECT_EQ(scalar_traits<Fp>::parse(F3, "-1").value(), 2u);
  EXPECT_EQ(scalar_traits<Fp>::parse(F3, "1/2").value(), 2u);
  EXPECT_THROW(scalar_traits<Fp>::parse(F3, "1/3"), field_error);
  EXPECT_THROW(scalar_traits<Fp>::parse(F3, "x"), field_error);
  Rational q = scalar_traits<Rational>::parse(Q, "4/6");
  EXPECT_EQ(to_string(q), "2/3");
  EXPECT_THROW(scalar_traits<Rational>::parse(Q, "1/0"), field_error);
}

TEST(Solve, IdentityReturnsRhs) {
  M3 i = M3::identity(F3, 2);
  M3 b = M3::from_ints(F3, 2, 1, {2, 1});
  auto x = solve(i, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
}

TEST(Solve, InconsistentOverF3) {
  M3 a = M3::from_ints(F3, 2, 2, {1, 1, 2, 2});
  M3 b = M3::from_ints(F3, 2, 1, {0, 1});
  EXPECT_FALSE(solve(a, b).has_value());
}

TEST(Solve, ZeroSystem) {
  M3 a(2, 2), b(2, 1);
  auto x = solve(a, b);
  ASSERT_TRUE(x);
  EXPECT_TRUE(x->is_zero());
}

TEST(Solve, DimensionMismatchThrows) {
  EXPECT_THROW(solve(M3(2, 2), M3(3, 1)), dimension_error);
}

TEST(Solve, FreeVariablesAreZero) {
  // x + y = 1 -> (1, 0)
  M3 a = M3::from_ints(F3, 1, 2, {1, 1});
  auto x = solve(a, M3::from_ints(F3, 1, 1, {1}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, M3::from_ints(F3, 2, 1, {1, 0}));
}

TEST(Kernel, Cases) {
  EXPECT_TRUE(kernel_basis(M3::identity(F3, 3), F3).empty());
  EXPECT_EQ(kernel_basis(M3(2, 3), F3).size(), 3u);
  auto k = kernel_basis(M3::from_ints(F3, 1, 2, {1, 2}), F3);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vec<Fp>{Fp(1, 3), Fp(1, 3)}));
}

TEST(Inverse, Cases) {
  EXPECT_TRUE(is_invertible(M3::identity(F3, 2)));
  EXPECT_EQ(inverse(M3::identity(F3, 2), F3), M3::identity(F3, 2));
  EXPECT_FALSE(is_invertible(Mat<Fp>::from_ints(F2, 2, 2, {1, 1, 1, 1})));
  M3 a = M3::from_ints(F3, 2, 2, {0, 1, 2, 0});
  ASSERT_TRUE(is_invertible(a));
  EXPECT_EQ(inverse(a, F3), M3::from_ints(F3, 2, 2, {0, 2, 1, 0}));
  EXPECT_THROW(inverse(Mat<Fp>::from_ints(F2, 2, 2, {1, 1, 1, 1}), F2), std::domain_error);
}

TEST(MinPoly, Cases) {
  auto z = min_poly(M3(3, 3), F3);
  EXPECT_EQ(z, (std::vector<Fp>{Fp(0, 3), Fp(1, 3)}));
  auto i = min_poly(M3::identity(F3, 2), F3);
  EXPECT_EQ(i, (std::vector<Fp>{Fp(2, 3), Fp(1, 3)}));
  // companion matrix of t^2 + 1
  auto c = min_poly(M3::from_ints(F3, 2, 2, {0, 2, 1, 0}), F3);
  EXPECT_EQ(c, (std::vector<Fp>{Fp(1, 3), Fp(0, 3), Fp(1, 3)}));
}

TEST(MinPoly, RationalJordanBlock) {
  Mat<Rational> a(2, 2);
  a(0, 0) = Rational(3);
  a(1, 1) = Rational(3);
  a(0, 1) = Rational(1);
  auto m = min_poly(a, Q);
  // (t-3)^2 = t^2 - 6t + 9
  EXPECT_EQ(m, (std::vector<Rational>{Rational(9), Rational(-6), Rational(1)}));
}

TEST(Properties, RandomSolveKernelInverse) {
  std::mt19937_64 rng(7);
  const FieldSpec f = FieldSpec::prime(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Mat<Fp> a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = Fp(rng() % 3 == 0 ? 0 : rng() % 5, 5);
    Mat<Fp> x(c, 1);
    for (std::size_t j = 0; j < c; ++j) x(j, 0) = Fp(rng() % 5, 5);
    Mat<Fp> b = a * x;
    auto s = solve(a, b);
    ASSERT_TRUE(s);
    EXPECT_EQ(a * *s, b);
    auto k = kernel_basis(a, f);
    EXPECT_EQ(k.size(), c - rank(a));
    for (const auto& v : k) EXPECT_TRUE(is_zero_vec(a.apply(v)));
    if (!k.empty()) {
      EXPECT_EQ(rank(Mat<Fp>::from_rows(c, k)), k.size());
    }
    if (r == c && is_invertible(a)) {
      EXPECT_EQ(inverse(a, f) * a, Mat<Fp>::identity(f, r));
      EXPECT_EQ(a * inverse(a, f), Mat<Fp>::identity(f, r));
    }
    // determinism
    EXPECT_EQ(kernel_basis(a, f), k);
  }
}

TEST(Properties, RandomMinPolyAnnihilates) {
  std::mt19937_64 rng(11);
  const FieldSpec f = FieldSpec::prime(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + rng() % 4;
    Mat<Fp> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Fp(rng() % 7, 7);
    auto m = min_poly(a, f);
    Mat<Fp> acc(n, n), pw = Mat<Fp>::identity(f, n);
    for (const auto& c : m) {
      acc = acc + c * pw;
      pw = pw * a;
    }
    EXPECT_TRUE(acc.is_zero());
    EXPECT_TRUE(m.back().is_one());
  }
}

TEST(Subspace, IntersectAndContain) {
  Subspace<Fp> u(3, {Vec<Fp>{Fp(1, 3), Fp(0, 3), Fp(0, 3)}, Vec<Fp>{Fp(0, 3), Fp(1, 3), Fp(0, 3)}});
  Subspace<Fp> w(3, {Vec<Fp>{Fp(0, 3), Fp(1, 3), Fp(1, 3)}, Vec<Fp>{Fp(0, 3), Fp(0, 3), Fp(1, 3)}});
  Subspace<Fp> i = u.intersect(w, F3);
  EXPECT_EQ(i.dim(), 1u);
  EXPECT_TRUE(u.contains(i));
  EXPECT_TRUE(w.contains(i));
  EXPECT_EQ(u.sum(w).dim(), 3u);
}

TEST(Poly, SplitLinearRoots) {
  // (t-1)(t-2) over F_5 = t^2 - 3t + 2
  Poly<Fp> p{Fp(2, 5), Fp(-3, 5), Fp(1, 5)};
  auto r = split_linear_roots(p, FieldSpec::prime(5));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].value(), 1u);
  EXPECT_EQ(r[1].value(), 2u);
  // t^2+1 over F_3 does not split
  EXPECT_THROW(split_linear_roots(Poly<Fp>{Fp(1, 3), Fp(0, 3), Fp(1, 3)}, F3), std::domain_error);
}

TEST(Poly, SplitLinearRootsLargePrime) {
  const std::uint32_t p = 1000003;
  const FieldSpec f = FieldSpec::prime(p);
  Poly<Fp> q{Fp(1, p)};
  for (std::int64_t root : {5, 17, 999999, 31337}) q = poly_mul(q, Poly<Fp>{Fp(-root, p), Fp(1, p)});
  auto r = split_linear_roots(q, f);
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r[0].value(), 5u);
  EXPECT_EQ(r[1].value(), 17u);
  EXPECT_EQ(r[2].value(), 31337u);
  EXPECT_EQ(r[3].value(), 999999u);
}
