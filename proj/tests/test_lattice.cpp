#include <gtest/gtest.h>

#include "qf2/autos.hpp"
#include "qf2/error.hpp"
#include "qf2/lattice.hpp"
#include "qf2/normalform.hpp"

using namespace qf2;

namespace {

Vec E(std::initializer_list<std::uint64_t> c) {
  Vec v;
  for (auto x : c) v.emplace_back(x);
  return v;
}

TEST(Lattice, IntersectionNumbers) {
  Field F;
  const Generator a{{E({1, 0, 0, 0, 0}), E({0, 1, 0, 0, 0})}};
  const Generator b{{E({1, 0, 0, 0, 0}), E({0, 0, 1, 0, 0})}};
  const Generator c{{E({0, 0, 0, 1, 0}), E({0, 0, 0, 0, 1})}};
  EXPECT_EQ(intersection_number(F, a, a, 2), -1);
  EXPECT_EQ(intersection_number(F, a, b, 2), 1);
  EXPECT_EQ(intersection_number(F, a, c, 2), 0);
  EXPECT_THROW(intersection_number(F, a, Generator{{E({1, 0, 0, 0, 0})}}, 2), Error);
}

TEST(Lattice, IntegerDet) {
  EXPECT_EQ(integer_det({{2, -1}, {-1, 2}}), 3);
  EXPECT_EQ(integer_det({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(integer_det(expected_root_gram(2)), -4);  // det(-C(D5)) = -4
  EXPECT_EQ(integer_det(expected_root_gram(3)), 4);
}

TEST(Lattice, DelPezzo) {
  Field F;
  const Pencil p = realize(F, E({0, 1, 1, 1, 1, 1}), E({0, 0, 0, 0}));
  const CycleLattice L = build_lattice(p, Field::with_degree(4));
  ASSERT_EQ(L.generators.size(), 16u);
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(L.generator_gram[i][i], -1);
    int ones = 0;
    for (std::size_t j = 0; j < 16; ++j)
      if (j != i && L.generator_gram[i][j] == 1) ++ones;
    EXPECT_EQ(ones, 5);
  }
  for (std::size_t i = 1; i <= 5; ++i) EXPECT_EQ(L.gram[i][i], -1);
  EXPECT_EQ(L.root_gram, expected_root_gram(2));
  const auto k = del_pezzo_canonical_class();
  EXPECT_EQ(pair(L.gram, k, k), 4);
  for (auto x : L.eta_root_pairing) EXPECT_EQ(x, 0);
}

TEST(Lattice, SevenDimensional) {
  Field F;
  const Pencil p = realize(F, E({1, 0, 0, 0, 0, 0, 0, 1}), E({0, 0, 0, 0, 0, 0}));
  const CycleLattice L = build_lattice(p, Field::with_degree(3));
  ASSERT_EQ(L.generators.size(), 64u);
  EXPECT_EQ(L.root_gram, expected_root_gram(3));
  for (auto x : L.eta_root_pairing) EXPECT_EQ(x, 0);
  // ([L_I] - [L_J])^2 = 2 (-1)^(m-1) when the intersection is a point.
  for (std::size_t i = 0; i < 64; ++i)
    for (std::size_t j = 0; j < 64; ++j)
      if (L.generator_gram[i][j] == 1 && i != j)
        EXPECT_EQ(L.generator_gram[i][i] + L.generator_gram[j][j] - 2 * L.generator_gram[i][j], 2);
}

}  // namespace
