#include <gtest/gtest.h>

#include <random>

#include "qf2/autos.hpp"
#include "qf2/error.hpp"
#include "qf2/invariants.hpp"
#include "qf2/oracle.hpp"
#include "support.hpp"

using namespace qf2;

namespace {

Vec E(std::initializer_list<std::uint64_t> c) {
  Vec v;
  for (auto x : c) v.emplace_back(x);
  return v;
}

TEST(Autos, PhiExamples) {
  Field F;
  const NormalForm nf = extract_normal_form(realize(F, E({0, 1, 1, 1}), E({0, 0})));
  const EtaleAlgebra A(F, nf.a);
  EXPECT_EQ(phi(A, A.zero(), nf.basis).matrix, Matrix::identity(3));
  EXPECT_EQ(phi(A, A.one(), nf.basis).matrix, Matrix::identity(3));
  const AutomorphismRep g = phi(A, A.d_basis()[0], nf.basis);
  // v_0 -> v_0 + w_0, w fixed.
  Matrix want = Matrix::identity(3);
  want(0, 2) = Elem{1};
  EXPECT_EQ(g.kronecker, want);
  EXPECT_EQ(g.catalecticant.rows(), 2u);
  EXPECT_EQ(g.catalecticant(0, 0), Elem{1});
  EXPECT_EQ(g.catalecticant(1, 0), Elem{0});
}

TEST(Autos, PhiIsAHomomorphismWithKernelK) {
  std::mt19937_64 rng(50);
  for (int k : {1, 2})
    for (std::size_t n : {3, 5, 7}) {
      Field F = Field::with_degree(k);
      for (int t = 0; t < 3; ++t) {
        std::optional<AnNonzero> an;
        try {
          an = ensure_an_nonzero(gen::random_regular_pencil(F, n, rng));
        } catch (const Error&) {
          continue;
        }
        const NormalForm nf = extract_normal_form(an->pencil);
        const EtaleAlgebra A(F, nf.a);
        const Vec s = gen::random_vec(F, n, rng), u = gen::random_vec(F, n, rng);
        const Matrix gs = phi(A, s, nf.basis).matrix, gu = phi(A, u, nf.basis).matrix;
        EXPECT_EQ(phi(A, A.add(s, u), nf.basis).matrix, mul(F, gs, gu));
        EXPECT_EQ(phi(A, A.constant(gen::random_elem(F, rng)), nf.basis).matrix, Matrix::identity(n));
        // phi(s) preserves both polar forms.
        const Pencil& p = an->pencil;
        EXPECT_EQ(p.q0().pullback(F, gs).polar().gram(), p.q0().polar().gram());
        EXPECT_EQ(p.q1().pullback(F, gs).polar().gram(), p.q1().polar().gram());
      }
    }
}

TEST(Autos, GroupOrders) {
  Field F;
  // f irreducible: trivial group.
  EXPECT_EQ(automorphism_group(realize(F, E({1, 1, 0, 1}), E({0, 0}))).size(), 1u);
  // f = T (T^2 + T + 1): order 2.
  const Pencil p = realize(F, E({0, 1, 1, 1}), E({0, 0}));
  const auto gl3 = oracle::general_linear_group(F, 3);
  EXPECT_EQ(automorphism_group(p).size(), 2u);
  EXPECT_EQ(oracle::stabilizer_order(p, gl3), 2u);
  // Split over GF(4): order 2^(2m) = 4.
  Field F4 = Field::with_degree(2);
  EXPECT_EQ(automorphism_group(p.map(embedding(F, F4))).size(), 4u);
}

TEST(Autos, GroupAgainstStabilizerOverGF2) {
  Field F;
  const auto gl3 = oracle::general_linear_group(F, 3);
  std::mt19937_64 rng(51);
  for (int t = 0; t < 40; ++t) {
    const Pencil p = gen::random_regular_pencil(F, 3, rng);
    const auto group = automorphism_group(p);
    EXPECT_EQ(group.size(), oracle::stabilizer_order(p, gl3));
    for (const auto& g : group) EXPECT_TRUE(preserves(p, g.matrix));
  }
}

TEST(Autos, ReflectionsM1) {
  Field F;
  Field F4 = Field::with_degree(2);
  const Pencil p = realize(F, E({0, 1, 1, 1}), E({1, 0}));
  const auto refl = reflections(p, F4);
  ASSERT_EQ(refl.size(), 3u);
  const Pencil P = p.map(embedding(F, F4));
  Matrix prod = Matrix::identity(3);
  for (const auto& r : refl) {
    EXPECT_EQ(mul(F4, r.matrix, r.matrix), Matrix::identity(3));
    EXPECT_TRUE(preserves(P, r.matrix));
    prod = mul(F4, prod, r.matrix);
  }
  EXPECT_EQ(prod, Matrix::identity(3));
  const auto eps = idempotent_automorphisms(p, F4);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(eps[i], refl[i].matrix);
  EXPECT_THROW(reflections(p, F), Error);
}

TEST(Autos, ReflectionsM2) {
  Field F;
  Field F16 = Field::with_degree(4);
  const Pencil p = realize(F, E({0, 1, 1, 1, 1, 1}), E({1, 0, 0, 1}));
  const auto refl = reflections(p, F16);
  ASSERT_EQ(refl.size(), 5u);
  const auto eps = idempotent_automorphisms(p, F16);
  Matrix prod = Matrix::identity(5);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(eps[i], refl[i].matrix);
    for (std::size_t j = 0; j < 5; ++j)
      EXPECT_EQ(mul(F16, refl[i].matrix, refl[j].matrix), mul(F16, refl[j].matrix, refl[i].matrix));
    prod = mul(F16, prod, refl[i].matrix);
  }
  EXPECT_EQ(prod, Matrix::identity(5));
}

TEST(Autos, AutXMatchesPointSetStabilizer) {
  Field F;
  for (int k : {2, 3}) {
    Field K = Field::with_degree(k);
    // Delta(1, T) = T (T^2 + T + 1) splits over GF(4) but not GF(8).
    const Pencil p = realize(F, E({0, 1, 1, 1}), E({0, 0}));
    if (k == 3) {
      const auto g = aut_X(p, K);
      EXPECT_EQ(g.elements.size(), g.r.size() * g.g.size());
      continue;
    }
    const auto g = aut_X(p, K);
    EXPECT_EQ(g.r.size(), 4u);
    EXPECT_EQ(g.g.size(), 6u);
    const auto pts = oracle::points_full_scan(p.map(embedding(F, K)));
    ASSERT_EQ(pts.size(), 4u);
    EXPECT_EQ(g.elements.size(), oracle::pgl3_point_set_stabilizer(K, pts));
    EXPECT_EQ(g.table.size(), g.elements.size());
  }
  EXPECT_THROW(aut_X(realize(F, E({0, 1, 1, 1}), E({0, 1})), F), Error);
}

}  // namespace
