#include "qf2/normalform.hpp"

#include "qf2/error.hpp"

namespace qf2 {

Matrix KroneckerBasis::matrix() const {
  std::vector<Vec> cols = w;
  cols.insert(cols.end(), v.begin(), v.end());
  return Matrix::from_columns(cols, cols.empty() ? 0 : cols.front().size());
}

std::vector<Vec> canonical_w(const Pencil& p) {
  const RadicalMap omega = radical_map(p);
  if (!is_separable_form(p.field(), half_discriminant(p, omega))) fail("not_regular", "pencil is not regular");
  if (!independent(p.field(), omega.w, p.n())) fail_internal("radical map coefficients are dependent");
  return omega.w;
}

KroneckerBasis complete_kronecker(const Pencil& p, const std::vector<Vec>& w) {
  const Field& F = p.field();
  const std::size_t n = p.n(), m = p.m();
  if (w.size() != m + 1) fail("bad_length", "expected m + 1 radical vectors");
  const Matrix g0 = p.q0().polar().gram(), g1 = p.q1().polar().gram();
  std::vector<Vec> g0w, g1w;
  for (const auto& wi : w) {
    g0w.push_back(mul(F, g0, wi));
    g1w.push_back(mul(F, g1, wi));
  }

  // (i) b1(w_i, v_j) = [i = j], b0(w_i, v_j) = [i = j + 1].
  Matrix sys(2 * (m + 1), n);
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      sys(2 * i, c) = g1w[i][c];
      sys(2 * i + 1, c) = g0w[i][c];
    }
  std::vector<Vec> v0;
  for (std::size_t j = 0; j < m; ++j) {
    Vec rhs(2 * (m + 1));
    rhs[2 * j] = F.one();
    rhs[2 * (j + 1) + 1] = F.one();
    auto sol = solve(F, sys, rhs);
    if (!sol) fail("not_regular", "no Kronecker completion exists; pencil is not regular");
    v0.push_back(std::move(*sol));
  }

  // (ii) v_j = v0_j + sum_k l_jk w_k with, for i < j,
  //   b0(v0_i, v0_j) + l_{j,i+1} + l_{i,j+1} = 0,
  //   b1(v0_i, v0_j) + l_{j,i} + l_{i,j} = 0.
  const std::size_t unknowns = m * (m + 1);
  auto var = [&](std::size_t j, std::size_t k) { return j * (m + 1) + k; };
  std::vector<Vec> rows;
  Vec rhs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec r0(unknowns), r1(unknowns);
      r0[var(j, i + 1)] = F.add(r0[var(j, i + 1)], F.one());
      r0[var(i, j + 1)] = F.add(r0[var(i, j + 1)], F.one());
      r1[var(j, i)] = F.add(r1[var(j, i)], F.one());
      r1[var(i, j)] = F.add(r1[var(i, j)], F.one());
      rows.push_back(std::move(r0));
      rhs.push_back(dot(F, v0[i], mul(F, g0, v0[j])));
      rows.push_back(std::move(r1));
      rhs.push_back(dot(F, v0[i], mul(F, g1, v0[j])));
    }
  KroneckerBasis kb{w, v0};
  if (!rows.empty()) {
    auto l = solve(F, Matrix::from_rows(rows, unknowns), rhs);
    if (!l) fail("not_regular", "Kronecker correction system is inconsistent; pencil is not regular");
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k <= m; ++k)
        if (!(*l)[var(j, k)].is_zero()) kb.v[j] = add(F, kb.v[j], scale(F, (*l)[var(j, k)], w[k]));
  }
  if (!check_kronecker(p, kb)) fail_internal("Kronecker completion failed its own identities");
  return kb;
}

bool check_kronecker(const Pencil& p, const KroneckerBasis& kb) {
  const Field& F = p.field();
  const auto b0 = p.q0().polar(), b1 = p.q1().polar();
  const std::size_t m = kb.v.size();
  if (kb.w.size() != m + 1) return false;
  auto delta = [&](bool c) { return c ? F.one() : F.zero(); };
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t k = 0; k <= m; ++k) {
      if (!b0.eval(F, kb.w[i], kb.w[k]).is_zero() || !b1.eval(F, kb.w[i], kb.w[k]).is_zero()) return false;
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!b0.eval(F, kb.v[i], kb.v[j]).is_zero() || !b1.eval(F, kb.v[i], kb.v[j]).is_zero()) return false;
    }
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (b0.eval(F, kb.w[i], kb.v[j]) != delta(i == j + 1)) return false;
      if (b1.eval(F, kb.w[i], kb.v[j]) != delta(i == j)) return false;
    }
  return true;
}

NormalForm extract_normal_form(const Pencil& p) {
  const Field& F = p.field();
  const RadicalMap omega = radical_map(p);
  const BinaryForm delta = half_discriminant(p, omega);
  if (!is_separable_form(F, delta)) fail("not_regular", "pencil is not regular");
  if (!independent(F, omega.w, p.n())) fail_internal("radical map coefficients are dependent");
  NormalForm nf;
  nf.basis = complete_kronecker(p, omega.w);
  const std::size_t m = p.m(), n = p.n();
  nf.a.assign(n + 1, Elem{});
  nf.r.assign(n - 1, Elem{});
  for (std::size_t i = 0; i <= m; ++i) {
    nf.a[2 * i] = p.q0().eval(F, nf.basis.w[i]);
    nf.a[2 * i + 1] = p.q1().eval(F, nf.basis.w[i]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    nf.r[2 * i + 1] = p.q0().eval(F, nf.basis.v[i]);
    nf.r[2 * i] = p.q1().eval(F, nf.basis.v[i]);
  }
  if (nf.a != delta.coeffs()) fail_internal("normal form coefficients differ from the half-discriminant");
  const Pencil back = p.pullback(nf.basis.matrix());
  const Pencil model = realize_unchecked(F, nf.a, nf.r);
  if (!(back == model)) fail_internal("pulled-back pencil differs from the realized normal form");
  return nf;
}

Pencil realize_unchecked(const Field& F, const Vec& a, const Vec& r) {
  if (a.size() < 4 || a.size() % 2 != 0) fail("bad_length", "a must have n + 1 entries with n odd and n >= 3");
  const std::size_t n = a.size() - 1, m = (n - 1) / 2;
  if (r.size() != n - 1) fail("bad_length", "r must have n - 1 entries");
  for (Elem e : a) F.check(e);
  for (Elem e : r) F.check(e);
  QuadraticForm q0(n), q1(n);
  auto y = [&](std::size_t j) { return m + 1 + j; };
  for (std::size_t i = 0; i <= m; ++i) {
    q0.set(i, i, a[2 * i]);
    q1.set(i, i, a[2 * i + 1]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    q0.set(i + 1, y(i), F.one());
    q1.set(i, y(i), F.one());
    q0.set(y(i), y(i), r[2 * i + 1]);
    q1.set(y(i), y(i), r[2 * i]);
  }
  return Pencil(F, q0, q1);
}

Pencil realize(const Field& F, const Vec& a, const Vec& r) {
  Pencil p = realize_unchecked(F, a, r);
  if (!is_separable_form(F, BinaryForm(static_cast<int>(a.size() - 1), a)))
    fail("not_regular", "half-discriminant with these coefficients is not separable");
  return p;
}

}  // namespace qf2
