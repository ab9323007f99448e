#pragma once

#include <cstdint>
#include <vector>

#include "qf2/pencil.hpp"

namespace qf2 {

/// A linear subspace, stored as its reduced row echelon basis so that equal
/// subspaces compare equal.
struct Generator {
  std::vector<Vec> basis;
  friend bool operator==(const Generator&, const Generator&) = default;
};

Generator make_subspace(const Field& F, const std::vector<Vec>& span, std::size_t dim);

/// Number of points of P^(n-1)(GF(q)), saturating at UINT64_MAX.
std::uint64_t projective_space_size(std::uint64_t q, std::size_t n);

/// All points of X = V(q0, q1) over ext, normalized and sorted. Throws
/// "scan_too_large" above 10^8 candidate points.
std::vector<Vec> points_on_X(const Pencil& p, const Field& ext);

/// False iff X has a point over GF(q^j), j <= max_ext_degree, where
/// b0(x, .) and b1(x, .) are linearly dependent.
bool smoothness_oracle(const Pencil& p, int max_ext_degree);

/// l0 = sum sqrt(a_2i) x_i and l1 = sum sqrt(a_2i+1) x_i on W = span(w_i),
/// and a basis of their common zero set mapped into E.
struct CanonicalPlane {
  std::vector<Vec> w;
  Vec l0, l1;
  std::vector<Vec> point_basis;
};

/// Throws "m_too_small" for m < 2 and "not_regular" for irregular pencils.
CanonicalPlane canonical_plane(const Pencil& p);

struct QuasiSplitting {
  int degree = 1;
  Field field;
  Vec s;  // P(s) + c = r over `field`; empty when a_n = 0 there
};

QuasiSplitting quasi_split_over(const Pencil& p);

/// Least j such that Delta has n roots in P^1(GF(q^j)).
int splitting_degree(const Pencil& p);

/// The 2^(2m) generators over ext, the first from an r = 0 normal form and
/// the rest its images under Aut(q0, q1) in automorphism_group order.
/// Throws "not_split" or "not_quasi_split" naming the needed degree.
std::vector<Generator> enumerate_generators(const Pencil& p, const Field& ext);

}  // namespace qf2
