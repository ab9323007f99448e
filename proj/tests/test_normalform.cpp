#include <gtest/gtest.h>

#include <random>

#include "qf2/error.hpp"
#include "qf2/normalform.hpp"
#include "qf2/oracle.hpp"
#include "support.hpp"

using namespace qf2;

namespace {

Vec E(std::initializer_list<std::uint64_t> c) {
  Vec v;
  for (auto x : c) v.emplace_back(x);
  return v;
}

TEST(NormalForm, RealizeMatchesFormulaAtM1) {
  Field F;
  Pencil p = realize(F, E({0, 1, 1, 1}), E({0, 0}));
  QuadraticForm q0(3), q1(3);
  q0.set(1, 1, Elem{1});
  q0.set(1, 2, Elem{1});
  q1.set(0, 0, Elem{1});
  q1.set(1, 1, Elem{1});
  q1.set(0, 2, Elem{1});
  EXPECT_EQ(p.q0(), q0);
  EXPECT_EQ(p.q1(), q1);
}

TEST(NormalForm, ExtractFromNormalFormIsIdentity) {
  Field F;
  for (auto [a, r] : {std::pair{E({0, 1, 1, 1}), E({0, 0})}, std::pair{E({0, 1, 1, 1}), E({1, 1})},
                      std::pair{E({0, 1, 1, 1, 1, 1}), E({1, 0, 1, 1})},
                      std::pair{E({1, 0, 0, 0, 0, 0, 0, 1}), E({0, 1, 0, 0, 1, 1})}}) {
    NormalForm nf = extract_normal_form(realize(F, a, r));
    EXPECT_EQ(nf.a, a);
    EXPECT_EQ(nf.r, r);
    EXPECT_EQ(nf.basis.matrix(), Matrix::identity(a.size() - 1));
  }
}

TEST(NormalForm, CanonicalWSpansCommonSingularPlane) {
  Field F;
  QuadraticForm q0(3), q1(3);
  q0.set(0, 0, Elem{1});
  q0.set(1, 2, Elem{1});
  q1.set(1, 1, Elem{1});
  q1.set(0, 2, Elem{1});
  Pencil p(F, q0, q1);
  ASSERT_TRUE(is_regular(p));
  auto w = canonical_w(p);
  auto planes = oracle::common_singular_planes_n3(p);
  ASSERT_EQ(planes.size(), 1u);
  EXPECT_EQ(span_basis(F, w, 3), planes[0]);
  KroneckerBasis kb = complete_kronecker(p, w);
  EXPECT_TRUE(check_kronecker(p, kb));
}

TEST(NormalForm, RejectsIrregular) {
  Field F;
  Pencil p = realize_unchecked(F, E({0, 0, 1, 1}), E({0, 0}));
  try {
    extract_normal_form(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "not_regular");
  }
}

TEST(NormalForm, RandomPencilsSatisfyBasicEquations) {
  std::mt19937_64 rng(21);
  for (int k : {1, 2, 3})
    for (std::size_t n : {3u, 5u, 7u}) {
      Field F = Field::with_degree(k);
      for (int t = 0; t < 15; ++t) {
        Pencil p = gen::random_regular_pencil(F, n, rng);
        NormalForm nf = extract_normal_form(p);
        EXPECT_TRUE(check_kronecker(p, nf.basis));
        EXPECT_EQ(nf.a, half_discriminant(p).coeffs());
        EXPECT_EQ(p.pullback(nf.basis.matrix()), realize(F, nf.a, nf.r));
      }
    }
}

TEST(NormalForm, CanonicalWIsEquivariant) {
  std::mt19937_64 rng(22);
  for (int k : {1, 2}) {
    Field F = Field::with_degree(k);
    for (int t = 0; t < 100; ++t) {
      Pencil p = gen::random_regular_pencil(F, 5, rng);
      Matrix g = gen::random_invertible(F, 5, rng);
      // p o g has W' = g^{-1} W.
      auto w = canonical_w(p);
      auto wg = canonical_w(p.pullback(g));
      std::vector<Vec> moved;
      for (const auto& x : wg) moved.push_back(mul(F, g, x));
      EXPECT_EQ(span_basis(F, moved, 5), span_basis(F, w, 5));
    }
  }
}

TEST(NormalForm, SwapReversesA) {
  std::mt19937_64 rng(23);
  Field F = Field::with_degree(2);
  for (int t = 0; t < 20; ++t) {
    Pencil p = gen::random_regular_pencil(F, 5, rng);
    NormalForm nf = extract_normal_form(p);
    NormalForm sw = extract_normal_form(change_pencil_basis(p, mat2_swap()));
    Vec rev(nf.a.rbegin(), nf.a.rend());
    EXPECT_EQ(sw.a, rev);
  }
}

}  // namespace
