#include "qf2/invariants.hpp"

#include "qf2/autos.hpp"
#include "qf2/error.hpp"

namespace qf2 {

namespace {

Matrix shifted_basis(const Field& F, const NormalForm& nf, const EtaleAlgebra& A, const Vec& s) {
  return mul(F, nf.basis.matrix(), kronecker_phi(A, s));
}

IsoResult iso_by_descent(const Pencil& p1, const Pencil& p2, int j) {
  const Field& F = p1.field();
  const Field K = extension(F, j);
  const FieldEmbedding emb = embedding(F, K);
  const Pencil k1 = p1.map(emb);
  const IsoResult over_k = is_isomorphic(k1, p2.map(emb));
  if (!over_k.isomorphic) return {};
  // Every rational isomorphism is g h0 for an automorphism g over K.
  for (const auto& g : automorphism_group(k1)) {
    const Matrix h = mul(K, g.matrix, *over_k.witness);
    if (auto hd = descend(emb, h)) {
      if (!(p1.pullback(*hd) == p2)) fail_internal("descended isomorphism does not verify");
      return {true, std::move(hd)};
    }
  }
  return {};
}

}  // namespace

RInvariant r_invariant(const Field& F, const NormalForm& nf) {
  EtaleAlgebra A(F, nf.a);
  Vec value = A.from_d_coords(nf.r);
  return {std::move(A), std::move(value)};
}

IsoResult is_isomorphic(const Pencil& p1, const Pencil& p2) {
  if (!(p1.field() == p2.field())) fail("field_mismatch", "pencils are defined over different fields");
  const Field& F = p1.field();
  const BinaryForm d1 = half_discriminant(p1), d2 = half_discriminant(p2);
  if (!is_separable_form(F, d1) || !is_separable_form(F, d2)) fail("not_regular", "pencil is not regular");
  if (p1.n() != p2.n()) return {};
  // Delta(q o g) = det(g)^2 Delta(q), so isomorphic pairs have proportional
  // half-discriminants. Rescale p2 by diag(1/sqrt(c), 1, ..., 1) first.
  std::size_t lead = 0;
  while (d1.coeffs()[lead].is_zero()) ++lead;
  const Elem c = F.div(d2.coeffs()[lead], d1.coeffs()[lead]);
  if (c.is_zero()) return {};
  for (std::size_t i = 0; i < d1.coeffs().size(); ++i)
    if (d2.coeffs()[i] != F.mul(c, d1.coeffs()[i])) return {};
  if (!c.is_one()) {
    Matrix d = Matrix::identity(p1.n());
    d(0, 0) = F.inv(F.sqrt(c));
    const IsoResult res = is_isomorphic(p1, p2.pullback(d));
    if (!res.isomorphic) return {};
    Matrix dinv = Matrix::identity(p1.n());
    dinv(0, 0) = F.sqrt(c);
    const Matrix h = mul(F, *res.witness, dinv);
    if (!(p1.pullback(h) == p2)) fail_internal("rescaled isomorphism witness does not verify");
    return {true, h};
  }

  std::optional<AnNonzero> e1;
  try {
    e1 = ensure_an_nonzero(p1);
  } catch (const Error& e) {
    if (e.code() != "no_rational_nonroot") throw;
    return iso_by_descent(p1, p2, e.extension_degree());
  }
  const Pencil& q1 = e1->pencil;
  const Pencil q2 = change_pencil_basis(p2, e1->g);
  const NormalForm nf1 = extract_normal_form(q1), nf2 = extract_normal_form(q2);
  const EtaleAlgebra A(F, nf1.a);
  const Vec diff = A.add(A.from_d_coords(nf1.r), A.from_d_coords(nf2.r));
  const auto sol = A.solve_artin_schreier(diff);
  if (!sol) return {};
  const Matrix h = mul(F, shifted_basis(F, nf1, A, sol->s), inverse(F, nf2.basis.matrix()));
  if (!(p1.pullback(h) == p2)) fail_internal("isomorphism witness does not verify");
  return {true, h};
}

std::optional<NormalForm> trivialize_r(const Pencil& p, Vec* s) {
  const Field& F = p.field();
  NormalForm nf = extract_normal_form(p);
  const EtaleAlgebra A(F, nf.a);
  const auto sol = A.solve_artin_schreier(A.from_d_coords(nf.r));
  if (!sol) return std::nullopt;
  const Matrix b = shifted_basis(F, nf, A, sol->s);
  const std::size_t m = p.m();
  for (std::size_t i = 0; i < m; ++i) nf.basis.v[i] = b.col(m + 1 + i);
  nf.r.assign(nf.r.size(), Elem{});
  if (!(p.pullback(nf.basis.matrix()) == realize_unchecked(F, nf.a, nf.r)))
    fail_internal("Artin-Schreier shift does not clear r");
  if (s) *s = sol->s;
  return nf;
}

bool is_quasi_split(const Pencil& p) {
  const BinaryForm delta = half_discriminant(p);
  const Pencil model = realize(p.field(), delta.coeffs(), Vec(p.n() - 1));
  return is_isomorphic(p, model).isomorphic;
}

int quasi_split_degree(const Pencil& p) {
  const Field& F = p.field();
  for (int j = 1; F.degree() * j <= 32; ++j) {
    const Field K = extension(F, j);
    if (is_quasi_split(p.map(embedding(F, K)))) return j;
  }
  fail_internal("no quasi-splitting extension of degree up to 32 over GF(2)");
}

bool transformation_law_check(const Field& F, const NormalForm& nf, const Vec& s) {
  const EtaleAlgebra A(F, nf.a);
  const Pencil moved = realize(F, nf.a, nf.r).pullback(kronecker_phi(A, s));
  const NormalForm back = extract_normal_form(moved);
  if (back.a != nf.a) return false;
  Vec want = A.to_d_coords(A.add(A.from_d_coords(nf.r), A.artin_schreier(s)));
  want.pop_back();  // d_{n-1} = a_n is a constant
  return back.r == want;
}

namespace {

Vec qa_eval(const EtaleAlgebra& A, const Pencil& p, const std::vector<Vec>& x) {
  const std::size_t n = p.n();
  const Vec t = A.t();
  Vec acc = A.zero();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Elem c0 = p.q0().coeff(i, j), c1 = p.q1().coeff(i, j);
      if (c0.is_zero() && c1.is_zero()) continue;
      const Vec coef = A.add(A.constant(c0), A.scale(c1, t));
      acc = A.add(acc, A.mul(coef, A.mul(x[i], x[j])));
    }
  return acc;
}

Vec qa_polar(const EtaleAlgebra& A, const Pencil& p, const std::vector<Vec>& x, const std::vector<Vec>& y) {
  std::vector<Vec> s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = A.add(x[i], y[i]);
  return A.add(qa_eval(A, p, s), A.add(qa_eval(A, p, x), qa_eval(A, p, y)));
}

}  // namespace

ArfData arf_invariant(const Field& F, const NormalForm& nf) {
  const EtaleAlgebra A(F, nf.a);
  const Pencil p = realize_unchecked(F, nf.a, nf.r);
  const std::size_t n = p.n(), m = p.m();
  const Vec t = A.t();

  std::vector<std::vector<Vec>> w(m + 1, std::vector<Vec>(n, A.zero()));
  for (std::size_t i = 0; i <= m; ++i) {
    Vec power = A.one();
    for (std::size_t k = i; k <= m; ++k) {
      w[i][k] = power;
      power = A.mul(power, t);
    }
  }
  std::vector<std::vector<Vec>> v(m, std::vector<Vec>(n, A.zero()));
  for (std::size_t i = 0; i < m; ++i) v[i][m + 1 + i] = A.one();

  if (qa_eval(A, p, w[0]) != A.zero()) fail_internal("q_A(w'_0) is not zero");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= m; ++j) {
      const Vec want = j == i + 1 ? A.one() : A.zero();
      if (qa_polar(A, p, v[i], w[j]) != want) fail_internal("b_A(v'_i, w'_j) is not the Kronecker delta");
    }

  ArfData out;
  out.arf = A.zero();
  for (std::size_t i = 0; i < m; ++i) {
    Vec qw = qa_eval(A, p, w[i + 1]);
    Vec qv = qa_eval(A, p, v[i]);
    if (qw != A.d_basis()[2 * i + 1]) fail_internal("q_A(w'_{i+1}) differs from d_{2i+1}");
    if (qv != A.add(A.scale(nf.r[2 * i], t), A.constant(nf.r[2 * i + 1]))) fail_internal("q_A(v'_i) has the wrong value");
    out.arf = A.add(out.arf, A.mul(qw, qv));
    out.qa_w.push_back(std::move(qw));
    out.qa_v.push_back(std::move(qv));
  }
  out.arf_class = A.coset_reduce(out.arf);
  out.matches_r = A.coset_reduce(A.add(out.arf, A.from_d_coords(nf.r))).trivial;
  return out;
}

}  // namespace qf2
