#include "qf2/autos.hpp"

#include <map>

#include "qf2/error.hpp"
#include "qf2/invariants.hpp"

namespace qf2 {

Matrix kronecker_phi(const EtaleAlgebra& A, const Vec& s) {
  const std::size_t n = A.dim(), m = (n - 1) / 2;
  if (n < 3 || n % 2 == 0) fail("bad_dimension", "phi needs an algebra of odd dimension n >= 3");
  const Vec c = A.to_d_coords(s);
  Matrix g = Matrix::identity(n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= m; ++k) g(k, m + 1 + i) = c[i + k];
  return g;
}

AutomorphismRep phi(const EtaleAlgebra& A, const Vec& s, const KroneckerBasis& basis) {
  const Field& F = A.field();
  const std::size_t n = A.dim(), m = (n - 1) / 2;
  AutomorphismRep out;
  out.s = s;
  out.kronecker = kronecker_phi(A, s);
  out.catalecticant = Matrix(m + 1, m);
  for (std::size_t k = 0; k <= m; ++k)
    for (std::size_t i = 0; i < m; ++i) out.catalecticant(k, i) = out.kronecker(k, m + 1 + i);
  const Matrix b = basis.matrix();
  out.matrix = mul(F, mul(F, b, out.kronecker), inverse(F, b));
  return out;
}

bool preserves(const Pencil& p, const Matrix& g) { return p.pullback(g) == p; }

bool preserves_pencil(const Pencil& p, const Matrix& g) {
  const Field& F = p.field();
  const std::size_t nn = p.n() * p.n();
  const Vec c0 = p.q0().table().data(), c1 = p.q1().table().data();
  for (const QuadraticForm& q : {p.q0(), p.q1()}) {
    const Vec c = q.pullback(F, g).table().data();
    if (span_dim(F, {c0, c1, c}, nn) != 2) return false;
  }
  return true;
}

std::vector<AutomorphismRep> automorphism_group(const Pencil& p) {
  const Field& F = p.field();
  std::optional<AnNonzero> an;
  try {
    an = ensure_an_nonzero(p);
  } catch (const Error& e) {
    if (e.code() != "no_rational_nonroot") throw;
    const Field K = extension(F, e.extension_degree());
    const FieldEmbedding emb = embedding(F, K);
    std::vector<AutomorphismRep> out;
    for (const auto& rep : automorphism_group(p.map(emb)))
      if (auto d = descend(emb, rep.matrix)) {
        if (!preserves(p, *d)) fail_internal("descended automorphism does not preserve the pencil");
        AutomorphismRep r;
        r.matrix = std::move(*d);
        out.push_back(std::move(r));
      }
    return out;
  }
  const NormalForm nf = extract_normal_form(an->pencil);
  const EtaleAlgebra A(F, nf.a);
  const auto& eps = A.idempotents();
  const std::size_t l = eps.size();
  std::vector<AutomorphismRep> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (l - 1)); ++mask) {
    Vec s = A.zero();
    for (std::size_t i = 0; i + 1 < l; ++i)
      if ((mask >> i) & 1) s = A.add(s, eps[i]);
    AutomorphismRep rep = phi(A, s, nf.basis);
    if (!preserves(p, rep.matrix)) fail_internal("phi(eps) does not preserve the pencil");
    out.push_back(std::move(rep));
  }
  return out;
}

namespace {

std::vector<std::pair<Elem, Elem>> split_roots(const Pencil& p, const FieldEmbedding& emb) {
  auto roots = projective_roots(half_discriminant(p), emb);
  if (roots.size() != p.n()) fail("not_split", "the half-discriminant does not split over the given field");
  return roots;
}

Matrix reflection_matrix(const Field& K, const Pencil& P, const Vec& z, Elem lambda, Elem mu) {
  const QuadraticForm qu = P.member(lambda, mu);
  const Elem qz = qu.eval(K, z);
  if (qz.is_zero()) fail_internal("q_u vanishes on a radical vector");
  const std::size_t n = P.n();
  Matrix r = Matrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Elem beta = K.div(qu.polar_eval(K, z, unit_vector(n, j)), qz);
    if (beta.is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) r(i, j) = K.add(r(i, j), K.mul(z[i], beta));
  }
  return r;
}

}  // namespace

std::vector<Reflection> reflections(const Pencil& p, const Field& ext) {
  const FieldEmbedding emb = embedding(p.field(), ext);
  const auto roots = split_roots(p, emb);
  const Pencil P = p.map(emb);
  const RadicalMap omega = radical_map(P);
  const BinaryForm delta = half_discriminant(P, omega);

  std::vector<std::pair<Elem, Elem>> aux;
  for (Elem a : ext.elements()) {
    if (!delta.eval(ext, ext.one(), a).is_zero()) aux.emplace_back(ext.one(), a);
    if (aux.size() == 2) break;
  }
  if (aux.size() < 2 && !delta.eval(ext, ext.zero(), ext.one()).is_zero()) aux.emplace_back(ext.zero(), ext.one());
  if (aux.empty()) fail("no_rational_nonroot", "every point of P^1 over the field is a root of the half-discriminant");

  std::vector<Reflection> out;
  for (const auto& root : roots) {
    Reflection r;
    r.root = root;
    r.z = omega.eval(ext, root.first, root.second);
    r.matrix = reflection_matrix(ext, P, r.z, aux[0].first, aux[0].second);
    if (aux.size() > 1 && reflection_matrix(ext, P, r.z, aux[1].first, aux[1].second) != r.matrix)
      fail_internal("reflection depends on the auxiliary member");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Matrix> idempotent_automorphisms(const Pencil& p, const Field& ext) {
  const FieldEmbedding emb = embedding(p.field(), ext);
  const auto roots = split_roots(p, emb);
  const Pencil P = p.map(emb);
  const AnNonzero an = ensure_an_nonzero(P);
  const NormalForm nf = extract_normal_form(an.pencil);
  const EtaleAlgebra A(ext, nf.a);
  if (A.factors().size() != P.n()) fail_internal("split half-discriminant with a nonlinear factor");
  const Mat2& g = an.g;
  std::vector<Matrix> out(P.n());
  std::vector<bool> seen(P.n(), false);
  for (std::size_t i = 0; i < A.factors().size(); ++i) {
    const Elem alpha = A.factors()[i].poly.coeff(0);
    // Root (1 : alpha) of Delta' is g (1, alpha) for Delta.
    Vec pt{ext.add(g[0], ext.mul(g[1], alpha)), ext.add(g[2], ext.mul(g[3], alpha))};
    pt = normalize_projective(ext, pt);
    std::size_t j = 0;
    while (j < roots.size() && !(roots[j].first == pt[0] && roots[j].second == pt[1])) ++j;
    if (j == roots.size() || seen[j]) fail_internal("idempotent does not match a root of Delta");
    seen[j] = true;
    out[j] = phi(A, A.idempotents()[i], nf.basis).matrix;
  }
  return out;
}

std::vector<Mat2> binary_form_stabilizer(const Field& F, const BinaryForm& delta) {
  std::vector<Mat2> out;
  std::size_t lead = 0;
  while (lead < delta.coeffs().size() && delta.coeffs()[lead].is_zero()) ++lead;
  if (lead == delta.coeffs().size()) fail("zero_form", "stabilizer of the zero form");
  const auto els = F.elements();
  auto consider = [&](const Mat2& g) {
    if (F.add(F.mul(g[0], g[3]), F.mul(g[1], g[2])).is_zero()) return;
    const BinaryForm s = delta.substitute(F, g);
    const Elem c = F.div(s.coeffs()[lead], delta.coeffs()[lead]);
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < s.coeffs().size(); ++i)
      if (s.coeffs()[i] != F.mul(c, delta.coeffs()[i])) return;
    out.push_back(g);
  };
  for (Elem b : els)
    for (Elem c : els)
      for (Elem d : els) consider({F.one(), b, c, d});
  for (Elem c : els)
    for (Elem d : els) consider({F.zero(), F.one(), c, d});
  return out;
}

namespace {

std::vector<std::uint64_t> key(const Matrix& m) {
  std::vector<std::uint64_t> k;
  for (Elem e : m.data()) k.push_back(e.bits);
  return k;
}

}  // namespace

AutXGroup aut_X(const Pencil& p, const Field& ext) {
  const FieldEmbedding emb = embedding(p.field(), ext);
  const Pencil P = p.map(emb);
  const Field& K = ext;
  const std::size_t n = P.n(), m = P.m();
  if (!is_quasi_split(P)) {
    const int j = quasi_split_degree(P);
    fail("not_quasi_split",
         "X has no generator over the given field; it becomes quasi-split over the degree-" + std::to_string(j) +
             " extension",
         j);
  }

  AutXGroup out{K, {}, {}, {}, {}, {}};
  for (const auto& rep : automorphism_group(P)) out.r.push_back(rep.matrix);

  const BinaryForm delta = half_discriminant(P);
  const KroneckerBasis kb = complete_kronecker(P, canonical_w(P));
  const Matrix b = kb.matrix(), binv = inverse(K, b);
  std::size_t lead = 0;
  while (delta.coeffs()[lead].is_zero()) ++lead;

  for (const Mat2& g : binary_form_stabilizer(K, delta)) {
    const Elem c = K.div(delta.substitute(K, g).coeffs()[lead], delta.coeffs()[lead]);
    const Pencil pg = change_pencil_basis(P, g);
    // c (q o T) has half-discriminant c Delta: in Kronecker coordinates it is
    // the normal form with a scaled by c.
    Matrix d = Matrix::identity(n);
    for (std::size_t i = 0; i < m; ++i) d(m + 1 + i, m + 1 + i) = K.inv(c);
    const Matrix t = mul(K, mul(K, b, d), binv);
    const Pencil pt = P.pullback(t);
    const Pencil scaled(K, QuadraticForm::combine(K, c, pt.q0(), K.zero(), pt.q0()),
                        QuadraticForm::combine(K, c, pt.q1(), K.zero(), pt.q1()));
    const IsoResult iso = is_isomorphic(scaled, pg);
    if (!iso.isomorphic) fail_internal("no lift for a stabilizer element of a quasi-split pencil");
    const Matrix h = mul(K, t, *iso.witness);
    if (!preserves_pencil(P, h)) fail_internal("lifted element does not preserve the pencil");
    out.g.push_back(g);
    out.lifts.push_back(h);
  }

  std::map<std::vector<std::uint64_t>, std::size_t> index;
  for (const Matrix& r : out.r)
    for (const Matrix& h : out.lifts) {
      Matrix e = normalize_projective(K, mul(K, r, h));
      if (!index.emplace(key(e), out.elements.size()).second) fail_internal("Aut(X) elements coincide");
      out.elements.push_back(std::move(e));
    }
  if (out.elements.size() <= 1024) {
    for (const Matrix& x : out.elements) {
      std::vector<std::size_t> row;
      for (const Matrix& y : out.elements) {
        auto it = index.find(key(normalize_projective(K, mul(K, x, y))));
        if (it == index.end()) fail_internal("Aut(X) is not closed under multiplication");
        row.push_back(it->second);
      }
      out.table.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace qf2
