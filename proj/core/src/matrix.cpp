#include "qf2/matrix.hpp"

#include "qf2/error.hpp"

namespace qf2 {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Elem{1};
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail("dimension_mismatch", "row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_col(std::size_t c, const Vec& v) {
  if (v.size() != rows_) fail("dimension_mismatch", "column has wrong length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (Elem e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix mul(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail("dimension_mismatch", "matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(aik, b(k, j)));
    }
  return c;
}

Vec mul(const Field& F, const Matrix& a, const Vec& v) {
  if (a.cols() != v.size()) fail("dimension_mismatch", "matrix-vector shape mismatch");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem acc{};
    for (std::size_t k = 0; k < a.cols(); ++k) acc = F.add(acc, F.mul(a(i, k), v[k]));
    out[i] = acc;
  }
  return out;
}

Matrix add(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail("dimension_mismatch", "matrix sum shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.add(a(i, j), b(i, j));
  return c;
}

Matrix scale(const Field& F, Elem s, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.mul(s, a(i, j));
  return c;
}

Matrix map(const FieldEmbedding& emb, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = emb(a(i, j));
  return c;
}

Vec add(const Field& F, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail("dimension_mismatch", "vector sum shape mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.add(a[i], b[i]);
  return c;
}

Vec scale(const Field& F, Elem s, const Vec& v) {
  Vec c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = F.mul(s, v[i]);
  return c;
}

Elem dot(const Field& F, const Vec& a, const Vec& b) {
  Elem acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
  return acc;
}

bool is_zero(const Vec& v) {
  for (Elem e : v)
    if (!e.is_zero()) return false;
  return true;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Elem{1};
  return v;
}

std::vector<std::size_t> rref_in_place(const Field& F, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Elem s = F.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = F.mul(s, a(r, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Elem f = a(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = F.add(a(i, j), F.mul(f, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& F, Matrix a) { return rref_in_place(F, a).size(); }

Elem det(const Field& F, Matrix a) {
  if (a.rows() != a.cols()) fail("dimension_mismatch", "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Elem d = F.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return F.zero();
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));  // sign is irrelevant in char 2
    d = F.mul(d, a(c, c));
    const Elem s = F.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      const Elem f = F.mul(a(i, c), s);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < n; ++j) a(i, j) = F.add(a(i, j), F.mul(f, a(c, j)));
    }
  }
  return d;
}

std::vector<Vec> nullspace(const Field& F, const Matrix& a) {
  Matrix r = a;
  const auto pivots = rref_in_place(F, r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols());
    v[free] = F.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = r(i, free);  // -x = x
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Field& F, const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) fail("dimension_mismatch", "right-hand side has wrong length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref_in_place(F, aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

Matrix inverse(const Field& F, const Matrix& a) {
  if (a.rows() != a.cols()) fail("singular_matrix", "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F.one();
  }
  const auto pivots = rref_in_place(F, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) fail("singular_matrix", "matrix is not invertible");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Vec> span_basis(const Field& F, const std::vector<Vec>& vectors, std::size_t dim) {
  Matrix m = Matrix::from_rows(vectors, dim);
  const auto pivots = rref_in_place(F, m);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(m.row(i));
  return out;
}

std::size_t span_dim(const Field& F, const std::vector<Vec>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(F, Matrix::from_rows(vectors, dim));
}

bool independent(const Field& F, const std::vector<Vec>& vectors, std::size_t dim) {
  return span_dim(F, vectors, dim) == vectors.size();
}

Vec normalize_projective(const Field& F, Vec v) {
  for (Elem e : v) {
    if (e.is_zero()) continue;
    const Elem s = F.inv(e);
    for (Elem& x : v) x = F.mul(s, x);
    break;
  }
  return v;
}

Matrix normalize_projective(const Field& F, Matrix m) {
  for (Elem e : m.data()) {
    if (e.is_zero()) continue;
    return scale(F, F.inv(e), m);
  }
  return m;
}

std::optional<Elem> descend(const FieldEmbedding& emb, Elem x) {
  emb.target().check(x);
  // GF(2)-elimination against the images of the source power basis.
  const int k = emb.source().degree();
  std::vector<std::uint64_t> img, src;
  for (int b = 0; b < k; ++b) {
    std::uint64_t v = emb(Elem{std::uint64_t{1} << b}).bits, s = std::uint64_t{1} << b;
    for (std::size_t r = 0; r < img.size(); ++r)
      if ((v ^ img[r]) < v) {
        v ^= img[r];
        s ^= src[r];
      }
    if (v) {
      img.push_back(v);
      src.push_back(s);
      // keep sorted by decreasing leading bit so one pass reduces fully
      for (std::size_t r = img.size() - 1; r > 0 && img[r] > img[r - 1]; --r) {
        std::swap(img[r], img[r - 1]);
        std::swap(src[r], src[r - 1]);
      }
    }
  }
  std::uint64_t v = x.bits, s = 0;
  for (std::size_t r = 0; r < img.size(); ++r)
    if ((v ^ img[r]) < v) {
      v ^= img[r];
      s ^= src[r];
    }
  if (v) return std::nullopt;
  return Elem{s};
}

std::optional<Matrix> descend(const FieldEmbedding& emb, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      auto e = descend(emb, a(i, j));
      if (!e) return std::nullopt;
      out(i, j) = *e;
    }
  return out;
}

}  // namespace qf2
