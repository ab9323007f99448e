#include "qf2/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "qf2/autos.hpp"
#include "qf2/error.hpp"
#include "qf2/invariants.hpp"
#include "qf2/normalform.hpp"

namespace qf2 {

Generator make_subspace(const Field& F, const std::vector<Vec>& span, std::size_t dim) {
  return {span_basis(F, span, dim)};
}

std::uint64_t projective_space_size(std::uint64_t q, std::size_t n) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > UINT64_MAX - power) return UINT64_MAX;
    total += power;
    if (i + 1 < n && power > UINT64_MAX / q) return UINT64_MAX;
    power *= q;
  }
  return total;
}

std::vector<Vec> points_on_X(const Pencil& p, const Field& ext) {
  const std::size_t n = p.n();
  const std::uint64_t count = projective_space_size(ext.size(), n);
  if (count > 100'000'000)
    fail("scan_too_large", "P^" + std::to_string(n - 1) + " over GF(" + std::to_string(ext.size()) + ") has about " +
                               std::to_string(count) + " points; the limit is 10^8");
  const Pencil P = p.map(embedding(p.field(), ext));
  std::vector<Vec> out;
  for (std::size_t lead = 0; lead < n; ++lead) {
    Vec x(n);
    x[lead] = ext.one();
    const std::size_t free = n - 1 - lead;
    // Mixed-radix counter over the coordinates after the leading one.
    for (;;) {
      if (P.q0().eval(ext, x).is_zero() && P.q1().eval(ext, x).is_zero()) out.push_back(x);
      std::size_t i = 0;
      while (i < free) {
        Elem& c = x[lead + 1 + i];
        c = Elem{c.bits + 1};
        if (c.bits < ext.size()) break;
        c = Elem{};
        ++i;
      }
      if (i == free) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// True if some x in rad(b_u) with q0(x) = q1(x) = 0 exists over K.
bool singular_point_in_radical(const Field& K, const Pencil& P, Elem lambda, Elem mu) {
  const std::size_t n = P.n();
  const QuadraticForm qu = P.member(lambda, mu);
  const std::vector<Vec> rad = nullspace(K, qu.polar().gram());
  if (rad.empty()) return false;
  // q_u is the square of x -> sum c_i sqrt(q_u(r_i)) on the radical.
  Matrix ell(1, rad.size());
  for (std::size_t i = 0; i < rad.size(); ++i) ell(0, i) = K.sqrt(qu.eval(K, rad[i]));
  std::vector<Vec> sub;
  for (const Vec& c : nullspace(K, ell)) {
    Vec x(n);
    for (std::size_t i = 0; i < rad.size(); ++i) x = add(K, x, scale(K, c[i], rad[i]));
    sub.push_back(std::move(x));
  }
  if (sub.empty()) return false;
  // Any quadratic form in three or more variables over a finite field is isotropic.
  if (sub.size() >= 3) return true;
  const QuadraticForm& other = mu.is_zero() ? P.q1() : P.q0();
  if (sub.size() == 1) return other.eval(K, sub[0]).is_zero();
  if (other.eval(K, sub[1]).is_zero()) return true;
  for (Elem c : K.elements())
    if (other.eval(K, add(K, sub[0], scale(K, c, sub[1]))).is_zero()) return true;
  return false;
}

}  // namespace

bool smoothness_oracle(const Pencil& p, int max_ext_degree) {
  const Field& F = p.field();
  for (int j = 1; j <= max_ext_degree; ++j) {
    const Field K = extension(F, j);
    const Pencil P = p.map(embedding(F, K));
    if (singular_point_in_radical(K, P, K.zero(), K.one())) return false;
    for (Elem mu : K.elements())
      if (singular_point_in_radical(K, P, K.one(), mu)) return false;
  }
  return true;
}

CanonicalPlane canonical_plane(const Pencil& p) {
  const Field& F = p.field();
  const std::size_t m = p.m(), n = p.n();
  if (m < 2) fail("m_too_small", "the canonical plane is empty for m < 2");
  CanonicalPlane out;
  out.w = canonical_w(p);
  out.l0.resize(m + 1);
  out.l1.resize(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    out.l0[i] = F.sqrt(p.q0().eval(F, out.w[i]));
    out.l1[i] = F.sqrt(p.q1().eval(F, out.w[i]));
  }
  const Matrix l = Matrix::from_rows({out.l0, out.l1}, m + 1);
  if (rank(F, l) != 2) fail_internal("l0 and l1 are proportional for a regular pencil");
  for (const Vec& x : nullspace(F, l)) {
    Vec e(n);
    for (std::size_t i = 0; i <= m; ++i) e = add(F, e, scale(F, x[i], out.w[i]));
    out.point_basis.push_back(std::move(e));
  }
  if (!is_totally_isotropic(F, p.q0(), out.point_basis) || !is_totally_isotropic(F, p.q1(), out.point_basis))
    fail_internal("canonical plane is not contained in X");
  return out;
}

QuasiSplitting quasi_split_over(const Pencil& p) {
  const Field& F = p.field();
  QuasiSplitting out;
  out.degree = quasi_split_degree(p);
  out.field = extension(F, out.degree);
  const Pencil P = p.map(embedding(F, out.field));
  try {
    const AnNonzero an = ensure_an_nonzero(P);
    const NormalForm nf = extract_normal_form(an.pencil);
    const EtaleAlgebra A(out.field, nf.a);
    const auto sol = A.solve_artin_schreier(A.from_d_coords(nf.r));
    if (!sol) fail_internal("quasi-split pencil with a nontrivial r-class");
    out.s = sol->s;
  } catch (const Error& e) {
    if (e.code() != "no_rational_nonroot") throw;
  }
  return out;
}

int splitting_degree(const Pencil& p) {
  const Field& F = p.field();
  const BinaryForm delta = half_discriminant(p);
  if (!is_separable_form(F, delta)) fail("not_regular", "pencil is not regular");
  const Polynomial f(F, delta.coeffs());
  int j = 1;
  if (f.degree() >= 1)
    for (const auto& fc : factor(f.monic())) j = std::lcm(j, fc.poly.degree());
  return j;
}

std::vector<Generator> enumerate_generators(const Pencil& p, const Field& ext) {
  const FieldEmbedding emb = embedding(p.field(), ext);
  const Pencil P = p.map(emb);
  const std::size_t n = P.n(), m = P.m();
  if (projective_roots(half_discriminant(p), emb).size() != n) {
    const int j = splitting_degree(p);
    fail("not_split", "Delta splits over the degree-" + std::to_string(j) + " extension of the base field", j);
  }
  const BinaryForm delta = half_discriminant(P);
  const Pencil model = realize(ext, delta.coeffs(), Vec(n - 1));
  const IsoResult iso = is_isomorphic(model, P);
  if (!iso.isomorphic) {
    const int j = quasi_split_degree(P);
    fail("not_quasi_split", "X has a generator only over the degree-" + std::to_string(j) + " extension of this field",
         j);
  }
  // model o h = P, so the y-coordinate axes of the model pull back to h^-1 e_{m+1+i}.
  const Matrix b = inverse(ext, *iso.witness);
  std::vector<Vec> base;
  for (std::size_t i = 0; i < m; ++i) base.push_back(b.col(m + 1 + i));
  if (!is_totally_isotropic(ext, P.q0(), base) || !is_totally_isotropic(ext, P.q1(), base))
    fail_internal("normal-form generator is not isotropic");

  std::vector<Generator> out;
  for (const auto& g : automorphism_group(P)) {
    std::vector<Vec> img;
    for (const Vec& v : base) img.push_back(mul(ext, g.matrix, v));
    Generator gen = make_subspace(ext, img, n);
    if (std::find(out.begin(), out.end(), gen) != out.end()) fail_internal("automorphism orbit of a generator is not free");
    out.push_back(std::move(gen));
  }
  return out;
}

}  // namespace qf2
