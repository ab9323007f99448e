#include "qf2/oracle.hpp"

#include <algorithm>
#include <set>

#include "qf2/error.hpp"

namespace qf2::oracle {
namespace {

Elem matching_sum(const Field& F, const Matrix& g, std::vector<bool>& used) {
  std::size_t i = 0;
  while (i < used.size() && used[i]) ++i;
  if (i == used.size()) return F.one();
  used[i] = true;
  Elem acc{};
  for (std::size_t j = i + 1; j < used.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    acc = F.add(acc, F.mul(g(i, j), matching_sum(F, g, used)));
    used[j] = false;
  }
  used[i] = false;
  return acc;
}

// Direct evaluation: q(x) = sum_{i<=j} a_ij x_i x_j.
Elem eval_form(const Field& F, const QuadraticForm& q, const Vec& x) {
  Elem acc{};
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i; j < q.dim(); ++j) acc = F.add(acc, F.mul(q.coeff(i, j), F.mul(x[i], x[j])));
  return acc;
}

// b(x, e_k) for each k, from the coefficient table.
Vec gradient(const Field& F, const QuadraticForm& q, const Vec& x) {
  const std::size_t n = q.dim();
  Vec g(n);
  for (std::size_t k = 0; k < n; ++k) {
    Elem acc{};
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Elem c = i < k ? q.coeff(i, k) : q.coeff(k, i);
      acc = F.add(acc, F.mul(c, x[i]));
    }
    g[k] = acc;
  }
  return g;
}

bool rank_below_two(const Field& F, const Vec& a, const Vec& b) {
  // Rows are dependent iff every 2x2 minor vanishes.
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!F.add(F.mul(a[i], b[j]), F.mul(a[j], b[i])).is_zero()) return false;
  return true;
}

Elem bilinear(const Field& F, const QuadraticForm& q, const Vec& x, const Vec& y) {
  return F.add(eval_form(F, q, add(F, x, y)), F.add(eval_form(F, q, x), eval_form(F, q, y)));
}

}  // namespace

Elem pfaffian_matching(const Field& F, const Matrix& gram) {
  if (gram.rows() % 2 != 0) fail("odd_dimension", "matching sum needs an even dimension");
  std::vector<bool> used(gram.rows(), false);
  return matching_sum(F, gram, used);
}

Elem half_disc_n3(const Field& F, const QuadraticForm& q) {
  auto a = [&](int i, int j) { return q.coeff(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); };
  Elem r = F.mul(a(1, 1), F.sqr(a(2, 3)));
  r = F.add(r, F.mul(a(2, 2), F.sqr(a(1, 3))));
  r = F.add(r, F.mul(a(3, 3), F.sqr(a(1, 2))));
  r = F.add(r, F.mul(a(1, 2), F.mul(a(2, 3), a(1, 3))));
  return r;
}

bool irreducible_bruteforce(const Polynomial& p) {
  const Field& F = p.field();
  const int d = p.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const int k = F.degree();
  if (k * d <= 24) {
    const Field K = Field::with_degree(k * d);
    const FieldEmbedding e = embedding(F, K);
    Vec img;
    for (Elem c : p.coeffs()) img.push_back(e(c));
    for (std::uint64_t b = 0; b < K.size(); ++b) {
      const Elem x{b};
      Elem v{};
      for (auto it = img.rbegin(); it != img.rend(); ++it) v = K.add(K.mul(v, x), *it);
      if (!v.is_zero()) continue;
      bool in_subfield = false;
      for (int e2 = 1; e2 < d; ++e2) {
        if (d % e2 != 0) continue;
        if (K.pow(x, std::uint64_t{1} << (k * e2)) == x) in_subfield = true;
      }
      if (!in_subfield) return true;
    }
    return false;
  }
  // Trial division by every monic polynomial of degree 1..d/2.
  const std::uint64_t q = F.size();
  for (int e = 1; e <= d / 2; ++e) {
    std::uint64_t count = 1;
    for (int i = 0; i < e; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Vec c(static_cast<std::size_t>(e + 1));
      std::uint64_t t = idx;
      for (int i = 0; i < e; ++i) {
        c[static_cast<std::size_t>(i)] = Elem{t % q};
        t /= q;
      }
      c.back() = F.one();
      if ((p % Polynomial(F, c)).is_zero()) return false;
    }
  }
  return true;
}

void for_each_projective_point(const Field& F, std::size_t n, const std::function<void(const Vec&)>& fn) {
  const std::uint64_t q = F.size();
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t free = n - lead - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) {
      if (total > (std::uint64_t{1} << 40) / q) fail("scan_too_large", "projective scan too large");
      total *= q;
    }
    Vec x(n);
    x[lead] = F.one();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t i = lead + 1; i < n; ++i) {
        x[i] = Elem{t % q};
        t /= q;
      }
      fn(x);
    }
  }
}

std::vector<Vec> points_full_scan(const Pencil& p) {
  const Field& F = p.field();
  std::vector<Vec> out;
  for_each_projective_point(F, p.n(), [&](const Vec& x) {
    if (eval_form(F, p.q0(), x).is_zero() && eval_form(F, p.q1(), x).is_zero()) out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool singular_point_full_scan(const Pencil& p, int max_degree) {
  for (int j = 1; j <= max_degree; ++j) {
    const Field K = extension(p.field(), j);
    const Pencil pe = p.map(embedding(p.field(), K));
    bool found = false;
    for_each_projective_point(K, pe.n(), [&](const Vec& x) {
      if (found) return;
      if (!eval_form(K, pe.q0(), x).is_zero() || !eval_form(K, pe.q1(), x).is_zero()) return;
      if (rank_below_two(K, gradient(K, pe.q0(), x), gradient(K, pe.q1(), x))) found = true;
    });
    if (found) return true;
  }
  return false;
}

std::vector<Matrix> general_linear_group(const Field& F, std::size_t n) {
  const std::uint64_t q = F.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= q;
  if (total > (std::uint64_t{1} << 24)) fail("scan_too_large", "general linear group too large to enumerate");
  std::vector<Matrix> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix g(n, n);
    std::uint64_t t = idx;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        g(i, j) = Elem{t % q};
        t /= q;
      }
    if (rank(F, g) == n) out.push_back(std::move(g));
  }
  return out;
}

namespace {

// Coefficient table of q o g, computed from values on columns and sums.
bool pulls_back_to(const Field& F, const QuadraticForm& q, const Matrix& g, const QuadraticForm& target) {
  const std::size_t n = q.dim();
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(g.col(j));
  for (std::size_t i = 0; i < n; ++i) {
    if (eval_form(F, q, cols[i]) != target.coeff(i, i)) return false;
    for (std::size_t j = i + 1; j < n; ++j)
      if (bilinear(F, q, cols[i], cols[j]) != target.coeff(i, j)) return false;
  }
  return true;
}

}  // namespace

std::optional<Matrix> isomorphism_search(const Pencil& p1, const Pencil& p2, const std::vector<Matrix>& group) {
  const Field& F = p1.field();
  for (const Matrix& g : group)
    if (pulls_back_to(F, p1.q0(), g, p2.q0()) && pulls_back_to(F, p1.q1(), g, p2.q1())) return g;
  return std::nullopt;
}

std::size_t stabilizer_order(const Pencil& p, const std::vector<Matrix>& group) {
  const Field& F = p.field();
  std::size_t count = 0;
  for (const Matrix& g : group)
    if (pulls_back_to(F, p.q0(), g, p.q0()) && pulls_back_to(F, p.q1(), g, p.q1())) ++count;
  return count;
}

namespace {

Vec normalized(const Field& F, Vec v) {
  for (Elem e : v) {
    if (e.is_zero()) continue;
    const Elem s = F.inv(e);
    for (Elem& x : v) x = F.mul(s, x);
    break;
  }
  return v;
}

std::vector<Vec> plane_key(const Field& F, const Vec& a, const Vec& b) {
  Matrix m = Matrix::from_rows({a, b}, a.size());
  rref_in_place(F, m);
  return {m.row(0), m.row(1)};
}

}  // namespace

std::size_t pgl3_point_set_stabilizer(const Field& F, const std::vector<Vec>& points) {
  std::set<Vec> pts;
  for (const auto& x : points) pts.insert(normalized(F, x));
  std::size_t count = 0;
  for (const Matrix& g : general_linear_group(F, 3)) {
    bool ok = true;
    for (const auto& x : pts) {
      if (!pts.count(normalized(F, mul(F, g, x)))) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return count / (F.size() - 1);
}

std::vector<std::vector<Vec>> lines_through_point_pairs(const Pencil& p) {
  const Field& F = p.field();
  const auto pts = points_full_scan(p);
  std::set<std::vector<Vec>> lines;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!bilinear(F, p.q0(), pts[i], pts[j]).is_zero()) continue;
      if (!bilinear(F, p.q1(), pts[i], pts[j]).is_zero()) continue;
      lines.insert(plane_key(F, pts[i], pts[j]));
    }
  return {lines.begin(), lines.end()};
}

std::vector<std::vector<Vec>> common_singular_planes_n3(const Pencil& p) {
  if (p.n() != 3) fail("bad_dimension", "plane search is for n = 3");
  const Field& F = p.field();
  std::set<std::vector<Vec>> planes;
  std::vector<Vec> pts;
  for_each_projective_point(F, 3, [&](const Vec& x) { pts.push_back(x); });
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!bilinear(F, p.q0(), pts[i], pts[j]).is_zero()) continue;
      if (!bilinear(F, p.q1(), pts[i], pts[j]).is_zero()) continue;
      planes.insert(plane_key(F, pts[i], pts[j]));
    }
  return {planes.begin(), planes.end()};
}

void for_each_algebra_element(const EtaleAlgebra& A, const std::function<void(const Vec&)>& fn) {
  const std::uint64_t q = A.field().size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (total > (std::uint64_t{1} << 24) / q) fail("scan_too_large", "algebra too large to enumerate");
    total *= q;
  }
  Vec x(A.dim());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (auto& e : x) {
      e = Elem{t % q};
      t /= q;
    }
    fn(x);
  }
}

std::size_t idempotent_count(const EtaleAlgebra& A) {
  std::size_t count = 0;
  for_each_algebra_element(A, [&](const Vec& x) {
    // x^2 via the polynomial product, reduced by long division.
    const Polynomial p(A.field(), x);
    if (((p * p) % A.modulus()) == p) ++count;
  });
  return count;
}

bool in_coset_space(const EtaleAlgebra& A, const Vec& r) {
  const Field& F = A.field();
  const Polynomial target(F, r);
  bool found = false;
  for_each_algebra_element(A, [&](const Vec& s) {
    if (found) return;
    const Polynomial p(F, s);
    const Polynomial diff = ((p * p) % A.modulus()) + p + target;
    if (diff.degree() <= 0) found = true;  // the difference is a constant
  });
  return found;
}

}  // namespace qf2::oracle
