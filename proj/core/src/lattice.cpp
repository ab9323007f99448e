#include "qf2/lattice.hpp"

#include <algorithm>

#include "qf2/autos.hpp"
#include "qf2/error.hpp"

namespace qf2 {

std::int64_t intersection_number(const Field& F, const Generator& a, const Generator& b, std::size_t m) {
  if (a.basis.size() != m || b.basis.size() != m) fail("bad_dimension", "generators must have dimension m");
  if (m == 0 || a.basis[0].size() != b.basis[0].size()) fail("dimension_mismatch", "generators live in different spaces");
  const std::size_t n = a.basis[0].size();
  std::vector<Vec> both = a.basis;
  both.insert(both.end(), b.basis.begin(), b.basis.end());
  const long r = static_cast<long>(2 * m) - static_cast<long>(span_dim(F, both, n)) - 1;
  if (r < 0) return 0;
  const std::int64_t sign = r % 2 == 0 ? 1 : -1;
  return sign * (r / 2 + 1);
}

std::int64_t pair(const IntMatrix& gram, const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) acc += x[i] * gram[i][j] * y[j];
  return acc;
}

namespace {

IntMatrix gram_of(const IntMatrix& formal, const IntMatrix& vecs) {
  IntMatrix g(vecs.size(), std::vector<std::int64_t>(vecs.size()));
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < vecs.size(); ++j) g[i][j] = pair(formal, vecs[i], vecs[j]);
  return g;
}

}  // namespace

CycleLattice build_lattice(const Pencil& p, const Field& ext) {
  CycleLattice out;
  const std::size_t n = p.n(), m = p.m();
  out.m = m;
  out.generators = enumerate_generators(p, ext);
  const std::size_t count = out.generators.size();
  out.generator_gram.assign(count, std::vector<std::int64_t>(count));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i; j < count; ++j)
      out.generator_gram[i][j] = out.generator_gram[j][i] =
          intersection_number(ext, out.generators[i], out.generators[j], m);

  const Generator& base = out.generators[0];
  for (const auto& rho : reflections(p, ext)) {
    std::vector<Vec> img;
    for (const Vec& v : base.basis) img.push_back(mul(ext, rho.matrix, v));
    const Generator g = make_subspace(ext, img, n);
    const auto it = std::find(out.generators.begin(), out.generators.end(), g);
    if (it == out.generators.end()) fail("unindexed_generators", "a reflected generator is missing from the orbit");
    out.reflected.push_back(static_cast<std::size_t>(it - out.generators.begin()));
  }

  // Formal basis: 0 = eta^(m-1), 1 = [L_0], 1 + i = e_i.
  const std::size_t f = n + 2;
  out.formal_gram.assign(f, std::vector<std::int64_t>(f));
  std::vector<std::size_t> idx{0};
  idx.insert(idx.end(), out.reflected.begin(), out.reflected.end());
  out.formal_gram[0][0] = 4;
  for (std::size_t i = 1; i < f; ++i) out.formal_gram[0][i] = out.formal_gram[i][0] = 1;
  for (std::size_t i = 1; i < f; ++i)
    for (std::size_t j = 1; j < f; ++j) out.formal_gram[i][j] = out.generator_gram[idx[i - 1]][idx[j - 1]];

  auto unit = [&](std::size_t i) {
    std::vector<std::int64_t> v(f);
    v[i] = 1;
    return v;
  };
  std::vector<std::int64_t> e0(f);
  e0[0] = 1;
  e0[1] = -1;
  out.e_basis.push_back(e0);
  for (std::size_t i = 1; i <= n; ++i) out.e_basis.push_back(unit(1 + i));

  std::vector<std::int64_t> a0(f);
  for (std::size_t i = 0; i < f; ++i) a0[i] = -e0[i];
  a0[1] += 1;
  a0[1 + 2 * m] += 1;
  a0[2 + 2 * m] += 1;
  out.root_basis.push_back(a0);
  for (std::size_t i = 1; i <= 2 * m; ++i) {
    std::vector<std::int64_t> a = unit(1 + i);
    a[2 + i] -= 1;
    out.root_basis.push_back(a);
  }

  out.gram = gram_of(out.formal_gram, out.e_basis);
  out.root_gram = gram_of(out.formal_gram, out.root_basis);
  for (const auto& e : out.e_basis) out.eta_pairing.push_back(pair(out.formal_gram, unit(0), e));
  for (const auto& a : out.root_basis) out.eta_root_pairing.push_back(pair(out.formal_gram, unit(0), a));
  out.gram_det = integer_det(out.gram);
  return out;
}

IntMatrix expected_root_gram(std::size_t m) {
  const std::size_t r = 2 * m + 1;
  IntMatrix c(r, std::vector<std::int64_t>(r));
  for (std::size_t i = 0; i < r; ++i) c[i][i] = 2;
  for (std::size_t i = 1; i < 2 * m; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  c[0][2 * m - 1] = c[2 * m - 1][0] = -1;
  const std::int64_t sign = (m - 1) % 2 == 0 ? 1 : -1;
  for (auto& row : c)
    for (auto& x : row) x *= sign;
  return c;
}

std::int64_t integer_det(IntMatrix a) {
  // Fraction-free Bareiss elimination.
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return static_cast<std::int64_t>(sign * m[n - 1][n - 1]);
}

std::vector<std::int64_t> del_pezzo_canonical_class() { return {-3, 1, 1, 1, 1, 1}; }

}  // namespace qf2
