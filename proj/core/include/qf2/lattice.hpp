#pragma once

#include <cstdint>
#include <vector>

#include "qf2/geometry.hpp"

namespace qf2 {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// [L1].[L2] = (-1)^r (floor(r/2) + 1) with r the projective dimension of
/// L1 n L2, and 0 for disjoint subspaces. Both must have dimension m.
std::int64_t intersection_number(const Field& F, const Generator& a, const Generator& b, std::size_t m);

/// Classes on a split, quasi-split X of dimension 2m - 1.
///   e_0 = eta^(m-1) - [L_0], e_i = [rho_i(L_0)] (i = 1..2m+1),
///   alpha_0 = -e_0 + [L_0] + e_2m + e_2m+1, alpha_i = e_i - e_i+1.
/// Pairings use eta^(m-1).eta^(m-1) = 4 and eta^(m-1).[L] = 1.
struct CycleLattice {
  std::size_t m = 0;
  std::vector<Generator> generators;
  IntMatrix generator_gram;            // all 2^(2m) generators
  std::vector<std::size_t> reflected;  // index of rho_i(L_0) in `generators`
  IntMatrix gram;                      // on e_0..e_2m+1
  std::vector<std::int64_t> eta_pairing;  // eta^(m-1).e_i
  // Formal basis (eta^(m-1), [L_0], e_1, ..., e_2m+1) and its pairing.
  IntMatrix formal_gram;
  IntMatrix e_basis;                   // e_i in formal coordinates
  IntMatrix root_basis;                // alpha_i in formal coordinates
  IntMatrix root_gram;
  std::vector<std::int64_t> eta_root_pairing;
  std::int64_t gram_det = 0;
};

/// Throws "not_split" / "not_quasi_split" (from generator enumeration) and
/// "unindexed_generators" if some rho_i(L_0) is not among the generators.
CycleLattice build_lattice(const Pencil& p, const Field& ext);

/// (-1)^(m-1) times the Cartan matrix of D_{2m+1}, nodes ordered
/// alpha_0..alpha_2m as above: a chain alpha_1 - ... - alpha_2m with
/// alpha_0 attached to alpha_{2m-1}.
IntMatrix expected_root_gram(std::size_t m);

std::int64_t integer_det(IntMatrix a);

/// K_X = -3 e_0 + e_1 + ... + e_5 for m = 2, in e-coordinates.
std::vector<std::int64_t> del_pezzo_canonical_class();

std::int64_t pair(const IntMatrix& gram, const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y);

}  // namespace qf2
