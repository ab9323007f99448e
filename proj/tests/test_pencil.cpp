#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "qf2/error.hpp"
#include "qf2/normalform.hpp"
#include "qf2/oracle.hpp"
#include "qf2/pencil.hpp"
#include "support.hpp"

using namespace qf2;

namespace {

Vec E(std::initializer_list<std::uint64_t> c) {
  Vec v;
  for (auto x : c) v.emplace_back(x);
  return v;
}

TEST(Pencil, ConstructorRejectsBadInput) {
  Field F;
  QuadraticForm q(3);
  q.set(0, 1, Elem{1});
  try {
    Pencil(F, q, q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "proportional_pair");
    EXPECT_EQ(e.kind(), ErrorKind::malformed);
  }
  EXPECT_THROW(Pencil(F, QuadraticForm(4), QuadraticForm(4)), Error);
  EXPECT_THROW(Pencil(F, q, QuadraticForm(3)), Error);
}

TEST(Pencil, RadicalMapOfNormalForm) {
  Field F;
  Pencil p = realize(F, E({0, 1, 1, 1}), E({0, 0}));
  auto om = radical_map(p);
  ASSERT_EQ(om.w.size(), 2u);
  EXPECT_EQ(om.w[0], E({1, 0, 0}));
  EXPECT_EQ(om.w[1], E({0, 1, 0}));
  Pencil p2 = realize(F, E({0, 1, 1, 1, 1, 1}), E({0, 0, 0, 0}));
  auto om2 = radical_map(p2);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(om2.w[i], unit_vector(5, i));
}

TEST(Pencil, RadicalMapSpecializes) {
  std::mt19937_64 rng(8);
  Field F = Field::with_degree(2);
  for (int t = 0; t < 30; ++t) {
    Pencil p = gen::random_pencil(F, 5, rng);
    auto om = radical_map(p);
    for (Elem l : F.elements())
      for (Elem mu : F.elements())
        EXPECT_EQ(om.eval(F, l, mu), pfaffian_vector(F, p.member(l, mu).polar()));
  }
}

TEST(Pencil, HalfDiscriminantExamples) {
  Field F;
  for (auto r : {E({0, 0}), E({1, 0}), E({1, 1})}) {
    Pencil p = realize(F, E({0, 1, 1, 1}), r);
    EXPECT_EQ(half_discriminant(p).coeffs(), E({0, 1, 1, 1}));
    EXPECT_TRUE(is_regular(p));
  }
  EXPECT_THROW(realize(F, E({0, 0, 1, 1}), E({0, 0})), Error);
  EXPECT_FALSE(is_regular(realize_unchecked(F, E({0, 0, 1, 1}), E({0, 0}))));
}

TEST(Pencil, DeltaIdentityOnRandomPencils) {
  std::mt19937_64 rng(9);
  for (int k : {1, 2, 3})
    for (std::size_t n : {3u, 5u, 7u, 9u}) {
      Field F = Field::with_degree(k);
      for (int t = 0; t < 8; ++t) {
        Pencil p = gen::random_pencil(F, n, rng);
        BinaryForm d = half_discriminant(p);
        for (Elem l : F.elements())
          for (Elem mu : F.elements()) EXPECT_EQ(d.eval(F, l, mu), half_disc(F, p.member(l, mu)));
      }
    }
}

TEST(Pencil, RegularityAgreesWithFullScanN3) {
  std::mt19937_64 rng(10);
  Field F;
  for (int t = 0; t < 300; ++t) {
    Pencil p = gen::random_pencil(F, 3, rng);
    EXPECT_EQ(is_regular(p), !oracle::singular_point_full_scan(p, 4));
  }
}

TEST(Pencil, ChangeBasis) {
  Field F;
  Pencil p = realize(F, E({0, 1, 1, 1}), E({0, 1}));
  EXPECT_EQ(change_pencil_basis(p, mat2_identity()), p);
  Pencil s = change_pencil_basis(p, mat2_swap());
  EXPECT_EQ(s.q0(), p.q1());
  EXPECT_EQ(half_discriminant(s).coeffs(), E({1, 1, 1, 0}));
  Pencil c = change_pencil_basis(p, {Elem{1}, Elem{0}, Elem{1}, Elem{1}});
  EXPECT_EQ(c.q0(), p.member(Elem{1}, Elem{1}));
  EXPECT_EQ(half_discriminant(c).coeff(3), half_discriminant(p).coeff(3));
  EXPECT_THROW(change_pencil_basis(p, {Elem{1}, Elem{1}, Elem{1}, Elem{1}}), Error);
}

TEST(Pencil, ChangeBasisTransformsDelta) {
  std::mt19937_64 rng(12);
  Field F = Field::with_degree(3);
  for (int t = 0; t < 40; ++t) {
    Pencil p = gen::random_pencil(F, 5, rng);
    Mat2 g;
    do {
      for (auto& e : g) e = gen::random_elem(F, rng);
    } while (F.add(F.mul(g[0], g[3]), F.mul(g[1], g[2])).is_zero());
    Pencil pg = change_pencil_basis(p, g);
    EXPECT_EQ(half_discriminant(pg), half_discriminant(p).substitute(F, g));
    EXPECT_EQ(is_regular(pg), is_regular(p));
  }
}

TEST(Pencil, EnsureAnNonzero) {
  Field F;
  auto r1 = ensure_an_nonzero(realize(F, E({0, 1, 1, 1}), E({0, 0})));
  EXPECT_EQ(r1.g, mat2_identity());
  auto r2 = ensure_an_nonzero(realize(F, E({1, 1, 1, 0}), E({0, 0})));
  EXPECT_EQ(r2.g, mat2_swap());
  EXPECT_EQ(half_discriminant(r2.pencil).coeffs(), E({0, 1, 1, 1}));
  // Delta = t0 t1 (t0 + t1): every point of P^1(GF(2)) is a root.
  try {
    ensure_an_nonzero(realize(F, E({0, 1, 1, 0}), E({0, 0})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "no_rational_nonroot");
    EXPECT_EQ(e.extension_degree(), 2);
  }
}

TEST(Pencil, CorankProfile) {
  Field F, F4 = Field::with_degree(2);
  Pencil p = realize(F, E({0, 1, 1, 1}), E({1, 0}));
  auto prof = corank_profile(p, embedding(F, F4));
  ASSERT_EQ(prof.size(), 3u);
  for (const auto& e : prof) EXPECT_EQ(e.corank, 1u);
  EXPECT_THROW(corank_profile(p, embedding(F, F)), Error);
}

TEST(Pencil, RootsAreExactlyDegenerateMembers) {
  std::mt19937_64 rng(13);
  Field F;
  for (int t = 0; t < 20; ++t) {
    Pencil p = gen::random_regular_pencil(F, 5, rng);
    BinaryForm d = half_discriminant(p);
    // Splitting field: lcm of factor degrees of Delta(1,T) (and the root at infinity is rational).
    int deg = 1;
    Polynomial f = d.dehomogenize_t0(F);
    if (f.degree() > 0)
      for (const auto& fc : factor(f)) deg = std::lcm(deg, fc.poly.degree());
    Field K = Field::with_degree(deg);
    auto e = embedding(F, K);
    auto rts = projective_roots(d, e);
    EXPECT_EQ(rts.size(), 5u);
    Pencil pk = p.map(e);
    for (const auto& rt : rts) EXPECT_TRUE(half_disc(K, pk.member(rt.first, rt.second)).is_zero());
  }
}

}  // namespace
