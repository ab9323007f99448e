#pragma once

#include <cstddef>
#include <vector>

#include "qf2/field.hpp"
#include "qf2/matrix.hpp"

namespace qf2 {

/// Alternating bilinear form given by its Gram matrix (symmetric, zero
/// diagonal).
class AlternatingForm {
 public:
  AlternatingForm() = default;
  explicit AlternatingForm(Matrix gram);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Elem eval(const Field& F, const Vec& v, const Vec& w) const;

 private:
  Matrix gram_;
};

/// q(v) = sum_{i<=j} a_ij v_i v_j, stored as an upper-triangular table
/// (entries below the diagonal are ignored and kept zero).
class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(std::size_t n) : coeffs_(n, n) {}
  /// Takes the upper triangle of `table`; throws if anything below the
  /// diagonal is nonzero.
  explicit QuadraticForm(Matrix table);

  std::size_t dim() const { return coeffs_.rows(); }
  Elem coeff(std::size_t i, std::size_t j) const { return coeffs_(i, j); }
  void set(std::size_t i, std::size_t j, Elem c);
  const Matrix& table() const { return coeffs_; }

  Elem eval(const Field& F, const Vec& v) const;
  /// b(v, w) = q(v + w) - q(v) - q(w).
  Elem polar_eval(const Field& F, const Vec& v, const Vec& w) const;
  AlternatingForm polar() const;

  /// q o g, i.e. the form v -> q(g v), for an n x n' matrix g.
  QuadraticForm pullback(const Field& F, const Matrix& g) const;
  QuadraticForm map(const FieldEmbedding& emb) const;
  /// c q + d q'.
  static QuadraticForm combine(const Field& F, Elem c, const QuadraticForm& q, Elem d, const QuadraticForm& q2);

  bool is_zero() const { return coeffs_.is_zero(); }
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  Matrix coeffs_;
};

/// Pfaffian of an even-dimensional alternating form (1 for dimension 0).
/// Throws "odd_dimension" otherwise.
Elem pfaffian(const Field& F, const AlternatingForm& b);

/// Entry i is the Pfaffian of the principal submatrix without row/column i.
/// Throws "even_dimension" for even n.
Vec pfaffian_vector(const Field& F, const AlternatingForm& b);

/// sum_{i<=j} a_ij Pf_i Pf_j = q(omega). Throws "even_dimension" for even n.
Elem half_disc(const Field& F, const QuadraticForm& q);

std::size_t corank(const Field& F, const AlternatingForm& b);
std::vector<Vec> radical_basis(const Field& F, const AlternatingForm& b);

/// The polar form vanishes on the span. Throws "dependent_vectors".
bool is_totally_singular(const Field& F, const QuadraticForm& q, const std::vector<Vec>& span);
/// q vanishes identically on the span. Throws "dependent_vectors".
bool is_totally_isotropic(const Field& F, const QuadraticForm& q, const std::vector<Vec>& span);

}  // namespace qf2
