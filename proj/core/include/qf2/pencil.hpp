#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qf2/field.hpp"
#include "qf2/matrix.hpp"
#include "qf2/poly.hpp"
#include "qf2/quadform.hpp"

namespace qf2 {

/// 2x2 matrix (g00, g01, g10, g11), row-major.
using Mat2 = std::array<Elem, 4>;

inline Mat2 mat2_identity() { return {Elem{1}, Elem{}, Elem{}, Elem{1}}; }
inline Mat2 mat2_swap() { return {Elem{}, Elem{1}, Elem{1}, Elem{}}; }

/// Ordered pair (q0, q1) of quadratic forms on a space of odd dimension
/// n = 2m + 1 >= 3 over a common field. The constructor rejects proportional
/// pairs (including a zero member).
class Pencil {
 public:
  Pencil(Field F, QuadraticForm q0, QuadraticForm q1);

  const Field& field() const { return field_; }
  std::size_t n() const { return q0_.dim(); }
  std::size_t m() const { return (q0_.dim() - 1) / 2; }
  const QuadraticForm& q0() const { return q0_; }
  const QuadraticForm& q1() const { return q1_; }

  /// lambda q0 + mu q1.
  QuadraticForm member(Elem lambda, Elem mu) const;
  /// The pair (q0 o g, q1 o g) for invertible g.
  Pencil pullback(const Matrix& g) const;
  Pencil map(const FieldEmbedding& emb) const;

  friend bool operator==(const Pencil& a, const Pencil& b) {
    return a.field_ == b.field_ && a.q0_ == b.q0_ && a.q1_ == b.q1_;
  }

 private:
  Field field_;
  QuadraticForm q0_, q1_;
};

/// Omega(lambda, mu) = sum_i lambda^(m-i) mu^i w_i.
struct RadicalMap {
  std::size_t m = 0;
  std::vector<BinaryForm> entries;  // n forms of degree m
  std::vector<Vec> w;               // m + 1 coefficient vectors
  Vec eval(const Field& F, Elem lambda, Elem mu) const;
};

RadicalMap radical_map(const Pencil& p);

/// Delta(t0, t1) = sum a_i t0^(n-i) t1^i, a binary form of degree n.
BinaryForm half_discriminant(const Pencil& p);
BinaryForm half_discriminant(const Pencil& p, const RadicalMap& omega);

bool is_regular(const Pencil& p);

/// Projective roots of a binary form over the target of `emb`, each
/// normalized with first nonzero coordinate 1: (1 : alpha) for the roots of
/// Delta(1, T) in ascending order, then (0 : 1) if a_n = 0.
std::vector<std::pair<Elem, Elem>> projective_roots(const BinaryForm& delta, const FieldEmbedding& emb);

struct CorankEntry {
  std::pair<Elem, Elem> root;
  std::size_t corank = 0;
};

/// Corank of each degenerate member over the target of `emb`. Throws
/// "not_regular" or "not_split".
std::vector<CorankEntry> corank_profile(const Pencil& p, const FieldEmbedding& emb);

/// (q_{g(u0)}, q_{g(u1)}): q0' = g00 q0 + g10 q1, q1' = g01 q0 + g11 q1, so
/// that Delta'(t0, t1) = Delta(g00 t0 + g01 t1, g10 t0 + g11 t1) exactly.
/// Throws "singular_matrix".
Pencil change_pencil_basis(const Pencil& p, const Mat2& g);

struct AnNonzero {
  Pencil pencil;
  Mat2 g;
};

/// A GL2-equivalent pencil with a_n != 0. Candidates are tried in order:
/// identity, swap, then [[1, c], [0, 1]] for c != 0 ascending. Throws
/// "not_regular" or "no_rational_nonroot" carrying the least extension
/// degree over which a non-root exists.
AnNonzero ensure_an_nonzero(const Pencil& p);

/// Smallest j with a point of P^1(GF(q^j)) that is not a root of delta.
int nonroot_extension_degree(const Field& F, const BinaryForm& delta);

}  // namespace qf2
