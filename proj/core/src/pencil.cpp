#include "qf2/pencil.hpp"

#include "qf2/error.hpp"
#include "qf2/pfaffian.hpp"

namespace qf2 {

Pencil::Pencil(Field F, QuadraticForm q0, QuadraticForm q1)
    : field_(std::move(F)), q0_(std::move(q0)), q1_(std::move(q1)) {
  const std::size_t n = q0_.dim();
  if (q1_.dim() != n) fail_malformed("dimension_mismatch", "q0 and q1 have different dimensions");
  if (n < 3 || n % 2 == 0) fail_malformed("bad_dimension", "pencil dimension must be odd and at least 3");
  if (n > 31) fail_malformed("bad_dimension", "pencil dimension too large");
  Matrix coeffs(2, n * (n + 1) / 2);
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++c) {
      field_.check(q0_.coeff(i, j));
      field_.check(q1_.coeff(i, j));
      coeffs(0, c) = q0_.coeff(i, j);
      coeffs(1, c) = q1_.coeff(i, j);
    }
  if (rank(field_, coeffs) < 2) fail_malformed("proportional_pair", "q0 and q1 are proportional");
}

QuadraticForm Pencil::member(Elem lambda, Elem mu) const {
  return QuadraticForm::combine(field_, lambda, q0_, mu, q1_);
}

Pencil Pencil::pullback(const Matrix& g) const {
  if (g.rows() != n() || g.cols() != n()) fail("dimension_mismatch", "pullback matrix must be n x n");
  return Pencil(field_, q0_.pullback(field_, g), q1_.pullback(field_, g));
}

Pencil Pencil::map(const FieldEmbedding& emb) const {
  if (!(emb.source() == field_)) fail("no_embedding", "embedding source does not match pencil field");
  return Pencil(emb.target(), q0_.map(emb), q1_.map(emb));
}

Vec RadicalMap::eval(const Field& F, Elem lambda, Elem mu) const {
  Vec out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out[i] = entries[i].eval(F, lambda, mu);
  return out;
}

namespace {

struct FormRing {
  using Value = BinaryForm;
  const Field& F;
  const Matrix& g0;
  const Matrix& g1;
  BinaryForm zero() const { return BinaryForm(); }
  BinaryForm one() const { return BinaryForm::one(); }
  BinaryForm add(const BinaryForm& a, const BinaryForm& b) const { return BinaryForm::add(F, a, b); }
  BinaryForm mul(const BinaryForm& a, const BinaryForm& b) const { return BinaryForm::mul(F, a, b); }
  bool is_zero(const BinaryForm& a) const { return a.degree() < 0 || a.is_zero(); }
  BinaryForm entry(int i, int j) const {
    const auto r = static_cast<std::size_t>(i), c = static_cast<std::size_t>(j);
    return BinaryForm::linear(g0(r, c), g1(r, c));
  }
};

}  // namespace

RadicalMap radical_map(const Pencil& p) {
  const Field& F = p.field();
  const Matrix g0 = p.q0().polar().gram();
  const Matrix g1 = p.q1().polar().gram();
  FormRing ring{F, g0, g1};
  RadicalMap out;
  out.m = p.m();
  const int m = static_cast<int>(out.m);
  out.entries = pfaffian_vector(ring, static_cast<int>(p.n()));
  for (auto& e : out.entries)
    if (e.degree() < 0) e = BinaryForm::zero(m);
  out.w.assign(out.m + 1, Vec(p.n()));
  for (std::size_t i = 0; i < p.n(); ++i)
    for (int k = 0; k <= m; ++k) out.w[static_cast<std::size_t>(k)][i] = out.entries[i].coeff(k);
  return out;
}

BinaryForm half_discriminant(const Pencil& p, const RadicalMap& omega) {
  const Field& F = p.field();
  const std::size_t n = p.n();
  BinaryForm acc = BinaryForm::zero(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Elem c0 = p.q0().coeff(i, j), c1 = p.q1().coeff(i, j);
      if (c0.is_zero() && c1.is_zero()) continue;
      BinaryForm term = BinaryForm::mul(F, BinaryForm::linear(c0, c1),
                                        BinaryForm::mul(F, omega.entries[i], omega.entries[j]));
      acc = BinaryForm::add(F, acc, term);
    }
  return acc;
}

BinaryForm half_discriminant(const Pencil& p) { return half_discriminant(p, radical_map(p)); }

bool is_regular(const Pencil& p) { return is_separable_form(p.field(), half_discriminant(p)); }

std::vector<std::pair<Elem, Elem>> projective_roots(const BinaryForm& delta, const FieldEmbedding& emb) {
  if (delta.degree() < 0 || delta.is_zero()) fail("zero_form", "roots of the zero form");
  const Field& K = emb.target();
  std::vector<std::pair<Elem, Elem>> out;
  const Polynomial f = delta.dehomogenize_t0(emb.source());
  if (f.degree() > 0)
    for (Elem r : roots_in(f, emb)) out.emplace_back(K.one(), r);
  if (delta.coeff(delta.degree()).is_zero()) out.emplace_back(K.zero(), K.one());
  return out;
}

std::vector<CorankEntry> corank_profile(const Pencil& p, const FieldEmbedding& emb) {
  const BinaryForm delta = half_discriminant(p);
  if (!is_separable_form(p.field(), delta)) fail("not_regular", "pencil is not regular");
  const auto rts = projective_roots(delta, emb);
  if (rts.size() != p.n())
    fail("not_split", "half-discriminant does not split over " + emb.target().describe());
  const Pencil pe = p.map(emb);
  std::vector<CorankEntry> out;
  for (const auto& r : rts) out.push_back({r, corank(emb.target(), pe.member(r.first, r.second).polar())});
  return out;
}

Pencil change_pencil_basis(const Pencil& p, const Mat2& g) {
  const Field& F = p.field();
  for (Elem e : g) F.check(e);
  if (F.add(F.mul(g[0], g[3]), F.mul(g[1], g[2])).is_zero()) fail("singular_matrix", "basis change is singular");
  return Pencil(F, p.member(g[0], g[2]), p.member(g[1], g[3]));
}

int nonroot_extension_degree(const Field& F, const BinaryForm& delta) {
  if (delta.is_zero()) fail("zero_form", "every point is a root of the zero form");
  // P^1(GF(q^j)) has q^j + 1 points and delta has at most deg(delta) roots.
  for (int j = 1;; ++j) {
    const Field K = extension(F, j);
    const auto rts = projective_roots(delta, embedding(F, K));
    if (static_cast<std::uint64_t>(rts.size()) < K.size() + 1) return j;
  }
}

AnNonzero ensure_an_nonzero(const Pencil& p) {
  const Field& F = p.field();
  const BinaryForm delta = half_discriminant(p);
  if (!is_separable_form(F, delta)) fail("not_regular", "pencil is not regular");
  auto try_g = [&](const Mat2& g) -> bool { return !delta.eval(F, g[1], g[3]).is_zero(); };
  if (try_g(mat2_identity())) return {p, mat2_identity()};
  if (try_g(mat2_swap())) return {change_pencil_basis(p, mat2_swap()), mat2_swap()};
  for (std::uint64_t c = 1; c < F.size(); ++c) {
    const Mat2 g{F.one(), Elem{c}, F.zero(), F.one()};
    if (try_g(g)) return {change_pencil_basis(p, g), g};
  }
  const int j = nonroot_extension_degree(F, delta);
  fail("no_rational_nonroot",
       "every point of P^1 over the base field is a root of the half-discriminant; "
       "a non-root exists over the degree-" + std::to_string(j) + " extension",
       j);
}

}  // namespace qf2
