#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qf2/field.hpp"

namespace qf2 {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over some GF(2^k). Arithmetic takes the Field
/// explicitly; the container itself is field-agnostic.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_col(std::size_t c, const Vec& v);

  Matrix transpose() const;
  bool is_zero() const;

  const std::vector<Elem>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix mul(const Field& F, const Matrix& a, const Matrix& b);
Vec mul(const Field& F, const Matrix& a, const Vec& v);
Matrix add(const Field& F, const Matrix& a, const Matrix& b);
Matrix scale(const Field& F, Elem c, const Matrix& a);
Matrix map(const FieldEmbedding& emb, const Matrix& a);

Vec add(const Field& F, const Vec& a, const Vec& b);
Vec scale(const Field& F, Elem c, const Vec& v);
Elem dot(const Field& F, const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
Vec unit_vector(std::size_t n, std::size_t i);

/// Reduced row echelon form. Pivots are taken at the lowest available column
/// index and scaled to 1. Returns the pivot columns.
std::vector<std::size_t> rref_in_place(const Field& F, Matrix& a);

std::size_t rank(const Field& F, Matrix a);
Elem det(const Field& F, Matrix a);

/// Basis of {x : a x = 0}; one vector per free column, with that free
/// variable set to 1 and the other free variables 0.
std::vector<Vec> nullspace(const Field& F, const Matrix& a);

/// Some solution of a x = b with all free variables set to 0, or nullopt.
std::optional<Vec> solve(const Field& F, const Matrix& a, const Vec& b);

/// Inverse; throws "singular_matrix" if a is not invertible.
Matrix inverse(const Field& F, const Matrix& a);

/// Canonical basis (RREF rows) of the span of the given vectors.
std::vector<Vec> span_basis(const Field& F, const std::vector<Vec>& vectors, std::size_t dim);
std::size_t span_dim(const Field& F, const std::vector<Vec>& vectors, std::size_t dim);
bool independent(const Field& F, const std::vector<Vec>& vectors, std::size_t dim);

/// Projective normalization: scale so the first nonzero entry is 1.
Vec normalize_projective(const Field& F, Vec v);
Matrix normalize_projective(const Field& F, Matrix m);

/// Preimage of x under an embedding, or nullopt if x is not in the image.
std::optional<Elem> descend(const FieldEmbedding& emb, Elem x);
/// Entrywise preimage of a matrix, or nullopt if some entry is not in the image.
std::optional<Matrix> descend(const FieldEmbedding& emb, const Matrix& a);

}  // namespace qf2
