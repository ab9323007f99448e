#include "qf2/quadform.hpp"

#include "qf2/error.hpp"
#include "qf2/pfaffian.hpp"

namespace qf2 {

AlternatingForm::AlternatingForm(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) fail("dimension_mismatch", "gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    if (!gram_(i, i).is_zero()) fail("not_alternating", "gram matrix has a nonzero diagonal");
    for (std::size_t j = i + 1; j < gram_.rows(); ++j)
      if (gram_(i, j) != gram_(j, i)) fail("not_alternating", "gram matrix is not symmetric");
  }
}

Elem AlternatingForm::eval(const Field& F, const Vec& v, const Vec& w) const {
  return dot(F, v, mul(F, gram_, w));
}

QuadraticForm::QuadraticForm(Matrix table) : coeffs_(std::move(table)) {
  if (coeffs_.rows() != coeffs_.cols()) fail("dimension_mismatch", "coefficient table must be square");
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!coeffs_(i, j).is_zero()) fail("not_upper_triangular", "coefficient table has entries below the diagonal");
}

void QuadraticForm::set(std::size_t i, std::size_t j, Elem c) {
  if (i > j) std::swap(i, j);
  coeffs_(i, j) = c;
}

Elem QuadraticForm::eval(const Field& F, const Vec& v) const {
  if (v.size() != dim()) fail("dimension_mismatch", "vector length differs from form dimension");
  Elem acc{};
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    Elem row{};
    for (std::size_t j = i; j < dim(); ++j) row = F.add(row, F.mul(coeffs_(i, j), v[j]));
    acc = F.add(acc, F.mul(v[i], row));
  }
  return acc;
}

Elem QuadraticForm::polar_eval(const Field& F, const Vec& v, const Vec& w) const {
  Elem acc{};
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) {
      const Elem c = coeffs_(i, j);
      if (c.is_zero()) continue;
      acc = F.add(acc, F.mul(c, F.add(F.mul(v[i], w[j]), F.mul(v[j], w[i]))));
    }
  return acc;
}

AlternatingForm QuadraticForm::polar() const {
  Matrix g(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) g(i, j) = g(j, i) = coeffs_(i, j);
  return AlternatingForm(std::move(g));
}

QuadraticForm QuadraticForm::pullback(const Field& F, const Matrix& g) const {
  if (g.rows() != dim()) fail("dimension_mismatch", "pullback matrix has wrong row count");
  const std::size_t n2 = g.cols();
  std::vector<Vec> cols;
  cols.reserve(n2);
  for (std::size_t j = 0; j < n2; ++j) cols.push_back(g.col(j));
  QuadraticForm out(n2);
  for (std::size_t i = 0; i < n2; ++i) {
    out.coeffs_(i, i) = eval(F, cols[i]);
    for (std::size_t j = i + 1; j < n2; ++j) out.coeffs_(i, j) = polar_eval(F, cols[i], cols[j]);
  }
  return out;
}

QuadraticForm QuadraticForm::map(const FieldEmbedding& emb) const {
  QuadraticForm out(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j) out.coeffs_(i, j) = emb(coeffs_(i, j));
  return out;
}

QuadraticForm QuadraticForm::combine(const Field& F, Elem c, const QuadraticForm& q, Elem d, const QuadraticForm& q2) {
  if (q.dim() != q2.dim()) fail("dimension_mismatch", "forms of different dimension");
  QuadraticForm out(q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i; j < q.dim(); ++j)
      out.coeffs_(i, j) = F.add(F.mul(c, q.coeffs_(i, j)), F.mul(d, q2.coeffs_(i, j)));
  return out;
}

namespace {

struct ElemRing {
  using Value = Elem;
  const Field& F;
  const Matrix& gram;
  Elem zero() const { return Elem{}; }
  Elem one() const { return Elem{1}; }
  Elem add(Elem a, Elem b) const { return F.add(a, b); }
  Elem mul(Elem a, Elem b) const { return F.mul(a, b); }
  bool is_zero(Elem a) const { return a.is_zero(); }
  Elem entry(int i, int j) const { return gram(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); }
};

}  // namespace

Elem pfaffian(const Field& F, const AlternatingForm& b) {
  const std::size_t n = b.dim();
  if (n % 2 != 0) fail("odd_dimension", "pfaffian needs an even dimension");
  if (n > 31) fail("bad_dimension", "pfaffian dimension too large");
  ElemRing ring{F, b.gram()};
  PfaffianExpander<ElemRing> pf(ring);
  return pf(n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

Vec pfaffian_vector(const Field& F, const AlternatingForm& b) {
  if (b.dim() % 2 == 0) fail("even_dimension", "pfaffian vector needs an odd dimension");
  ElemRing ring{F, b.gram()};
  return pfaffian_vector(ring, static_cast<int>(b.dim()));
}

Elem half_disc(const Field& F, const QuadraticForm& q) {
  if (q.dim() % 2 == 0) fail("even_dimension", "half-discriminant needs an odd dimension");
  return q.eval(F, pfaffian_vector(F, q.polar()));
}

std::size_t corank(const Field& F, const AlternatingForm& b) { return b.dim() - rank(F, b.gram()); }

std::vector<Vec> radical_basis(const Field& F, const AlternatingForm& b) { return nullspace(F, b.gram()); }

namespace {

void require_independent(const Field& F, const QuadraticForm& q, const std::vector<Vec>& span) {
  for (const auto& v : span)
    if (v.size() != q.dim()) fail("dimension_mismatch", "subspace vector has wrong length");
  if (!independent(F, span, q.dim())) fail("dependent_vectors", "spanning set is linearly dependent");
}

}  // namespace

bool is_totally_singular(const Field& F, const QuadraticForm& q, const std::vector<Vec>& span) {
  require_independent(F, q, span);
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = i + 1; j < span.size(); ++j)
      if (!q.polar_eval(F, span[i], span[j]).is_zero()) return false;
  return true;
}

bool is_totally_isotropic(const Field& F, const QuadraticForm& q, const std::vector<Vec>& span) {
  require_independent(F, q, span);
  for (std::size_t i = 0; i < span.size(); ++i) {
    if (!q.eval(F, span[i]).is_zero()) return false;
    for (std::size_t j = i + 1; j < span.size(); ++j)
      if (!q.eval(F, add(F, span[i], span[j])).is_zero()) return false;
  }
  return true;
}

}  // namespace qf2
