#pragma once

#include <vector>

#include "qf2/matrix.hpp"
#include "qf2/pencil.hpp"

namespace qf2 {

/// Basis (w_0..w_m, v_0..v_{m-1}) with
///   b0(w_i, v_j) = [i = j+1],  b1(w_i, v_j) = [i = j],
/// and both forms vanishing on pairs inside span(w) and inside span(v).
struct KroneckerBasis {
  std::vector<Vec> w;
  std::vector<Vec> v;
  /// Columns w_0..w_m, v_0..v_{m-1}.
  Matrix matrix() const;
};

/// The data (a_0..a_n; r_0..r_{n-2}) of the normal form together with a
/// basis realizing it: (q0, q1) o basis = realize(a, r).
struct NormalForm {
  Vec a;
  Vec r;
  KroneckerBasis basis;
};

/// Coefficient vectors of the radical map; throws "not_regular".
std::vector<Vec> canonical_w(const Pencil& p);

/// Solves for v_j with the pairings above. Throws "not_regular" if a system
/// has no solution.
KroneckerBasis complete_kronecker(const Pencil& p, const std::vector<Vec>& w);

/// True iff every pairing identity of a Kronecker basis holds.
bool check_kronecker(const Pencil& p, const KroneckerBasis& kb);

NormalForm extract_normal_form(const Pencil& p);

/// The pencil
///   q0 = sum a_{2i} x_i^2 + sum x_{i+1} y_i + sum r_{2i+1} y_i^2
///   q1 = sum a_{2i+1} x_i^2 + sum x_i y_i + sum r_{2i} y_i^2
/// in coordinates x_0..x_m (indices 0..m), y_0..y_{m-1} (indices m+1..2m).
/// Throws "not_regular" if the half-discriminant is not separable, and
/// "bad_length" on inconsistent sizes.
Pencil realize(const Field& F, const Vec& a, const Vec& r);
/// Same, without the regularity check.
Pencil realize_unchecked(const Field& F, const Vec& a, const Vec& r);

}  // namespace qf2
