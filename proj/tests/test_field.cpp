#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qf2/error.hpp"
#include "qf2/field.hpp"

using namespace qf2;

namespace {

const Elem u{2};

TEST(Field, Gf2Basics) {
  Field F;
  EXPECT_EQ(F.size(), 2u);
  EXPECT_EQ(F.arith(Elem{1}, Elem{1}, ArithOp::add), Elem{0});
  EXPECT_EQ(F.arith(Elem{1}, Elem{1}, ArithOp::div), Elem{1});
  EXPECT_EQ(F.sqrt(Elem{1}), Elem{1});
  EXPECT_EQ(F.trace(Elem{1}), 1);
}

TEST(Field, Gf4MultiplicationReducesByModulus) {
  Field F = Field::with_degree(2);
  EXPECT_EQ(F.modulus(), 0x7u);
  EXPECT_EQ(F.arith(u, u, ArithOp::mul), Elem{3});
}

TEST(Field, Gf4SquareRootAndTrace) {
  Field F = Field::with_degree(2);
  EXPECT_EQ(F.sqrt(u), Elem{3});
  EXPECT_EQ(F.sqrt(Elem{0}), Elem{0});
  EXPECT_EQ(F.trace(Elem{1}), 0);
  EXPECT_EQ(F.trace(u), 1);
}

TEST(Field, DivisionByZeroThrows) {
  Field F = Field::with_degree(3);
  try {
    F.arith(Elem{3}, Elem{0}, ArithOp::div);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "division_by_zero");
  }
}

TEST(Field, ForeignElementThrows) {
  Field F = Field::with_degree(2);
  EXPECT_THROW(F.arith(Elem{5}, Elem{1}, ArithOp::mul), Error);
  EXPECT_THROW(F.element(4), Error);
}

TEST(Field, ReducibleModulusRejected) {
  EXPECT_THROW(Field::from_modulus(0x5), Error);  // x^2 + 1
  EXPECT_THROW(Field::with_degree(0), Error);
  EXPECT_THROW(Field::with_degree(33), Error);
  EXPECT_NO_THROW(Field::from_modulus(0xB));
}

TEST(Field, AxiomsExhaustiveSmallFields) {
  for (int k = 1; k <= 5; ++k) {
    Field F = Field::with_degree(k);
    for (Elem a : F.elements()) {
      EXPECT_EQ(F.add(a, a), Elem{0});
      EXPECT_EQ(F.sqr(F.sqrt(a)), a);
      EXPECT_EQ(F.sqrt(F.sqr(a)), a);
      EXPECT_EQ(F.trace(F.sqr(a)), F.trace(a));
      if (!a.is_zero()) EXPECT_EQ(F.mul(a, F.inv(a)), Elem{1});
      for (Elem b : F.elements()) {
        EXPECT_EQ(F.sqr(F.add(a, b)), F.add(F.sqr(a), F.sqr(b)));
        EXPECT_EQ(F.trace(F.add(a, b)), F.trace(a) ^ F.trace(b));
      }
    }
  }
}

TEST(Field, HalfOfElementsHaveTraceZero) {
  for (int k = 1; k <= 10; ++k) {
    Field F = Field::with_degree(k);
    std::uint64_t zeros = 0;
    for (Elem a : F.elements()) zeros += F.trace(a) == 0;
    EXPECT_EQ(zeros, F.size() / 2) << "k=" << k;
  }
}

TEST(Field, LargeDegreeWithoutTables) {
  Field F = Field::with_degree(20);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Elem a{rng() & (F.size() - 1)}, b{rng() & (F.size() - 1)}, c{rng() & (F.size() - 1)};
    EXPECT_EQ(F.mul(a, F.mul(b, c)), F.mul(F.mul(a, b), c));
    EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
    if (!a.is_zero()) EXPECT_EQ(F.mul(a, F.inv(a)), Elem{1});
  }
}

TEST(Field, EmbeddingIsRingHomomorphism) {
  Field F4 = Field::with_degree(2), F16 = Field::with_degree(4);
  FieldEmbedding e = embedding(F4, F16);
  EXPECT_EQ(e(Elem{0}), Elem{0});
  EXPECT_EQ(e(Elem{1}), Elem{1});
  const Elem img = e(u);
  EXPECT_EQ(F16.add(F16.sqr(img), F16.add(img, Elem{1})), Elem{0});
  for (Elem a : F4.elements())
    for (Elem b : F4.elements()) {
      EXPECT_EQ(e(F4.add(a, b)), F16.add(e(a), e(b)));
      EXPECT_EQ(e(F4.mul(a, b)), F16.mul(e(a), e(b)));
    }
  EXPECT_THROW(embedding(F4, Field::with_degree(3)), Error);
  EXPECT_THROW(e(Elem{4}), Error);
}

TEST(Field, EmbeddingsCompose) {
  Field F2, F4 = Field::with_degree(2), F16 = Field::with_degree(4);
  FieldEmbedding direct = embedding(F2, F16);
  FieldEmbedding two_step = compose(embedding(F4, F16), embedding(F2, F4));
  for (Elem a : F2.elements()) EXPECT_EQ(direct(a), two_step(a));
  FieldEmbedding d2 = embedding(F4, Field::with_degree(8));
  FieldEmbedding t2 = compose(embedding(F16, Field::with_degree(8)), embedding(F4, F16));
  for (Elem a : F4.elements()) {
    const Elem x = t2(a);
    EXPECT_EQ(Field::with_degree(8).pow(x, 4), x);  // lies in the GF(4) subfield
  }
  (void)d2;
}

TEST(Field, ElementsEnumeratedOnce) {
  Field F = Field::with_degree(6);
  auto els = F.elements();
  std::set<Elem> s(els.begin(), els.end());
  EXPECT_EQ(s.size(), 64u);
}

}  // namespace
