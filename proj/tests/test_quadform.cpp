#include <gtest/gtest.h>

#include <random>

#include "qf2/error.hpp"
#include "qf2/oracle.hpp"
#include "qf2/quadform.hpp"
#include "support.hpp"

using namespace qf2;

namespace {

QuadraticForm form(std::size_t n, std::initializer_list<std::tuple<int, int, std::uint64_t>> terms) {
  QuadraticForm q(n);
  for (auto [i, j, c] : terms) q.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), Elem{c});
  return q;
}

TEST(QuadForm, PolarExamples) {
  Field F;
  auto b = form(2, {{0, 1, 1}}).polar();
  EXPECT_EQ(b.gram()(0, 1), Elem{1});
  EXPECT_EQ(b.gram()(1, 0), Elem{1});
  EXPECT_TRUE(form(2, {{0, 0, 1}}).polar().gram().is_zero());
  auto b3 = form(3, {{0, 0, 1}, {1, 1, 1}, {0, 1, 1}, {1, 2, 1}}).polar();
  EXPECT_EQ(b3.gram()(0, 1), Elem{1});
  EXPECT_EQ(b3.gram()(1, 2), Elem{1});
  EXPECT_EQ(b3.gram()(0, 2), Elem{0});
}

TEST(QuadForm, PolarIsBilinearDefect) {
  Field F = Field::with_degree(3);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    auto q = gen::random_form(F, 5, rng);
    auto v = gen::random_vec(F, 5, rng), w = gen::random_vec(F, 5, rng);
    EXPECT_EQ(q.polar().eval(F, v, w), F.add(q.eval(F, add(F, v, w)), F.add(q.eval(F, v), q.eval(F, w))));
    const Elem c = gen::random_elem(F, rng);
    EXPECT_EQ(q.eval(F, scale(F, c, v)), F.mul(F.sqr(c), q.eval(F, v)));
  }
}

TEST(QuadForm, PfaffianSmall) {
  Field F = Field::with_degree(2);
  Matrix g(2, 2);
  g(0, 1) = g(1, 0) = Elem{3};
  EXPECT_EQ(pfaffian(F, AlternatingForm(g)), Elem{3});
  EXPECT_EQ(pfaffian(F, AlternatingForm(Matrix(0, 0))), Elem{1});
  EXPECT_THROW(pfaffian(F, AlternatingForm(Matrix(3, 3))), Error);
  EXPECT_THROW(pfaffian_vector(F, AlternatingForm(Matrix(4, 4))), Error);
}

TEST(QuadForm, PfaffianMatchesMatchingSumAndSquaresToDet) {
  std::mt19937_64 rng(3);
  for (int k : {1, 2, 3}) {
    Field F = Field::with_degree(k);
    for (std::size_t n = 2; n <= 10; n += 2)
      for (int t = 0; t < 20; ++t) {
        Matrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = gen::random_elem(F, rng);
        const Elem pf = pfaffian(F, AlternatingForm(g));
        EXPECT_EQ(pf, oracle::pfaffian_matching(F, g));
        EXPECT_EQ(F.sqr(pf), det(F, g));
      }
  }
}

TEST(QuadForm, PfaffianVectorExamples) {
  Field F;
  Matrix g(3, 3);
  g(0, 1) = g(1, 0) = Elem{1};  // b12
  g(1, 2) = g(2, 1) = Elem{1};  // b23
  Vec w = pfaffian_vector(F, AlternatingForm(g));
  EXPECT_EQ(w, (Vec{Elem{1}, Elem{0}, Elem{1}}));
  EXPECT_TRUE(is_zero(pfaffian_vector(F, AlternatingForm(Matrix(3, 3)))));
}

TEST(QuadForm, PfaffianVectorSpansRadical) {
  std::mt19937_64 rng(4);
  for (int k : {1, 2}) {
    Field F = Field::with_degree(k);
    for (std::size_t n : {3u, 5u, 7u})
      for (int t = 0; t < 50; ++t) {
        auto b = gen::random_form(F, n, rng).polar();
        Vec w = pfaffian_vector(F, b);
        EXPECT_TRUE(is_zero(mul(F, b.gram(), w)));
        const std::size_t c = corank(F, b);
        EXPECT_EQ(c % 2, n % 2);
        EXPECT_EQ(!is_zero(w), c == 1);
        EXPECT_EQ(radical_basis(F, b).size(), c);
      }
  }
}

TEST(QuadForm, HalfDiscMatchesExplicitN3Formula) {
  std::mt19937_64 rng(5);
  for (int k : {1, 2}) {
    Field F = Field::with_degree(k);
    for (int t = 0; t < 1000; ++t) {
      auto q = gen::random_form(F, 3, rng);
      EXPECT_EQ(half_disc(F, q), oracle::half_disc_n3(F, q));
    }
  }
  Field F;
  EXPECT_EQ(half_disc(F, form(3, {{0, 1, 1}, {2, 2, 1}})), Elem{1});
  EXPECT_EQ(half_disc(F, form(3, {{0, 0, 1}, {1, 1, 1}})), Elem{0});
  EXPECT_THROW(half_disc(F, QuadraticForm(4)), Error);
}

TEST(QuadForm, Corank) {
  Field F;
  EXPECT_EQ(corank(F, QuadraticForm(3).polar()), 3u);
  EXPECT_EQ(corank(F, form(3, {{0, 1, 1}}).polar()), 1u);
}

TEST(QuadForm, SingularAndIsotropic) {
  Field F;
  const Vec e1{Elem{1}, Elem{0}};
  EXPECT_TRUE(is_totally_isotropic(F, form(2, {{0, 1, 1}}), {e1}));
  EXPECT_TRUE(is_totally_singular(F, form(2, {{0, 0, 1}}), {e1}));
  EXPECT_FALSE(is_totally_isotropic(F, form(2, {{0, 0, 1}}), {e1}));
  EXPECT_THROW(is_totally_singular(F, form(2, {{0, 0, 1}}), {e1, e1}), Error);
}

TEST(QuadForm, PullbackMatchesEvaluation) {
  Field F = Field::with_degree(2);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 50; ++t) {
    auto q = gen::random_form(F, 5, rng);
    Matrix g = gen::random_invertible(F, 5, rng);
    auto qg = q.pullback(F, g);
    auto v = gen::random_vec(F, 5, rng);
    EXPECT_EQ(qg.eval(F, v), q.eval(F, mul(F, g, v)));
  }
}

}  // namespace
