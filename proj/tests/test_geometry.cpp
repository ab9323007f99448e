#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qf2/autos.hpp"
#include "qf2/error.hpp"
#include "qf2/geometry.hpp"
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

const Vec kDelPezzoA = E({0, 1, 1, 1, 1, 1});

TEST(Geometry, PointsOnX) {
  Field F;
  Field F4 = Field::with_degree(2);
  const Pencil p = realize(F, E({0, 1, 1, 1}), E({0, 0}));
  const auto pts = points_on_X(p, F4);
  EXPECT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts, oracle::points_full_scan(p.map(embedding(F, F4))));
  const Pencil dp = realize(F, kDelPezzoA, E({0, 0, 0, 0}));
  const auto dpts = points_on_X(dp, F);
  EXPECT_NE(std::find(dpts.begin(), dpts.end(), E({0, 1, 1, 0, 0})), dpts.end());
  for (const auto& x : dpts) {
    EXPECT_TRUE(dp.q0().eval(F, x).is_zero());
    EXPECT_TRUE(dp.q1().eval(F, x).is_zero());
  }
  EXPECT_THROW(points_on_X(realize(F, E({1, 0, 0, 0, 0, 0, 0, 1}), E({0, 0, 0, 0, 0, 0})), Field::with_degree(16)),
               Error);
}

TEST(Geometry, SmoothnessExamples) {
  Field F;
  EXPECT_TRUE(smoothness_oracle(realize(F, E({0, 1, 1, 1}), E({0, 0})), 3));
  EXPECT_TRUE(smoothness_oracle(realize(F, kDelPezzoA, E({0, 0, 0, 0})), 4));
  // Delta(1, T) = T^2 (T + 1): a double root.
  QuadraticForm q0(3), q1(3);
  q0.set(0, 1, Elem{1});
  q1.set(0, 1, Elem{1});
  q1.set(2, 2, Elem{1});
  q0.set(2, 2, Elem{1});
  q1.set(1, 1, Elem{1});
  const Pencil bad(F, q0, q1);
  if (!is_regular(bad)) EXPECT_FALSE(smoothness_oracle(bad, 4));
}

TEST(Geometry, SmoothnessAgainstFullScan) {
  std::mt19937_64 rng(60);
  Field F;
  for (int t = 0; t < 150; ++t) {
    const Pencil p = gen::random_pencil(F, 3, rng);
    const bool fast = smoothness_oracle(p, 3);
    EXPECT_EQ(fast, !oracle::singular_point_full_scan(p, 3));
    EXPECT_EQ(fast, is_regular(p));
  }
  Field F4 = Field::with_degree(2);
  for (int t = 0; t < 20; ++t) {
    const Pencil p = gen::random_pencil(F4, 5, rng);
    EXPECT_EQ(smoothness_oracle(p, 2), !oracle::singular_point_full_scan(p, 2));
  }
}

TEST(Geometry, CanonicalPlaneExample) {
  Field F;
  const Pencil p = realize(F, kDelPezzoA, E({0, 0, 0, 0}));
  const CanonicalPlane cp = canonical_plane(p);
  ASSERT_EQ(cp.point_basis.size(), 1u);
  EXPECT_EQ(normalize_projective(F, cp.point_basis[0]), E({0, 1, 1, 0, 0}));
  EXPECT_EQ(cp.l0, E({0, 1, 1}));
  EXPECT_EQ(cp.l1, E({1, 1, 1}));
  EXPECT_THROW(canonical_plane(realize(F, E({0, 1, 1, 1}), E({0, 0}))), Error);
}

TEST(Geometry, CanonicalPlaneIsEquivariant) {
  std::mt19937_64 rng(61);
  for (int k : {1, 2})
    for (std::size_t n : {5, 7}) {
      Field F = Field::with_degree(k);
      for (int t = 0; t < 3; ++t) {
        const Pencil p = gen::random_regular_pencil(F, n, rng);
        const CanonicalPlane cp = canonical_plane(p);
        EXPECT_EQ(cp.point_basis.size(), p.m() - 1);
        const Matrix g = gen::random_invertible(F, n, rng);
        const CanonicalPlane moved = canonical_plane(p.pullback(g));
        // X(p o g) = g^-1 X(p).
        std::vector<Vec> img;
        for (const auto& v : moved.point_basis) img.push_back(mul(F, g, v));
        EXPECT_EQ(make_subspace(F, img, n), make_subspace(F, cp.point_basis, n));
      }
    }
}

TEST(Geometry, QuasiSplitOver) {
  Field F;
  const auto r0 = quasi_split_over(realize(F, E({0, 1, 1, 1}), E({0, 0})));
  EXPECT_EQ(r0.degree, 1);
  EXPECT_EQ(r0.s, E({0, 0, 0}));
  const auto r1 = quasi_split_over(realize(F, E({0, 1, 1, 1}), E({0, 1})));
  EXPECT_EQ(r1.degree, 4);
  EXPECT_EQ(splitting_degree(realize(F, E({0, 1, 1, 1}), E({0, 1}))), 2);
  EXPECT_EQ(splitting_degree(realize(F, kDelPezzoA, E({0, 0, 0, 0}))), 4);
}

TEST(Geometry, GeneratorsM1AreThePoints) {
  Field F;
  Field F4 = Field::with_degree(2);
  const Pencil p = realize(F, E({0, 1, 1, 1}), E({1, 0}));
  const auto gens = enumerate_generators(p, F4);
  ASSERT_EQ(gens.size(), 4u);
  std::vector<Vec> pts;
  for (const auto& g : gens) pts.push_back(normalize_projective(F4, g.basis[0]));
  std::sort(pts.begin(), pts.end());
  EXPECT_EQ(pts, points_on_X(p, F4));
  EXPECT_THROW(enumerate_generators(p, F), Error);
  EXPECT_THROW(enumerate_generators(realize(F, E({0, 1, 1, 1}), E({0, 1})), F4), Error);
}

TEST(Geometry, DelPezzoHasSixteenLines) {
  Field F;
  Field F16 = Field::with_degree(4);
  const Pencil p = realize(F, kDelPezzoA, E({0, 0, 0, 0}));
  const auto gens = enumerate_generators(p, F16);
  ASSERT_EQ(gens.size(), 16u);
  const Pencil P = p.map(embedding(F, F16));
  for (const auto& g : gens) {
    EXPECT_TRUE(is_totally_isotropic(F16, P.q0(), g.basis));
    EXPECT_TRUE(is_totally_isotropic(F16, P.q1(), g.basis));
  }
  const auto lines = oracle::lines_through_point_pairs(P);
  EXPECT_EQ(lines.size(), 16u);
  for (const auto& l : lines) {
    const Generator g{l};
    EXPECT_NE(std::find(gens.begin(), gens.end(), g), gens.end());
  }
}

}  // namespace
