#include "qf2/algebra.hpp"

#include <bit>

#include "qf2/error.hpp"

namespace qf2 {

std::size_t BitVec::lowest() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size_;
}

EtaleAlgebra::EtaleAlgebra(Field F, Vec a)
    : field_(std::move(F)), n_(a.empty() ? 0 : a.size() - 1), a_(std::move(a)), monic_(field_) {
  if (n_ < 1) fail("bad_length", "algebra needs a polynomial of degree at least 1");
  for (Elem e : a_) field_.check(e);
  if (a_.back().is_zero()) fail("an_zero", "leading coefficient a_n is zero; apply ensure_an_nonzero first");
  const Polynomial f(field_, a_);
  if (!is_separable(f)) fail("not_separable", "f is not separable");
  monic_ = f.monic();

  // Tr(t^i) as the trace of the multiplication matrix.
  basis_traces_.assign(n_, Elem{});
  for (std::size_t i = 0; i < n_; ++i) {
    Elem acc{};
    for (std::size_t j = 0; j < n_; ++j) {
      const Polynomial prod = Polynomial::monomial(field_, field_.one(), static_cast<int>(i + j)) % monic_;
      acc = field_.add(acc, prod.coeff(static_cast<int>(j)));
    }
    basis_traces_[i] = acc;
  }

  fprime_inv_ = inv(from_poly(f.derivative()));

  for (std::size_t i = 0; i < n_; ++i) {
    Vec d(n_);
    for (std::size_t j = 0; j + i + 1 <= n_; ++j) d[j] = a_[i + 1 + j];
    d_.push_back(std::move(d));
  }

  if (n_ == 1) {
    factors_.push_back({monic_, 1});
  } else {
    factors_ = factor(monic_);
  }
  for (const auto& fc : factors_) {
    const Polynomial g = monic_ / fc.poly;
    const auto [one, s, tt] = poly_xgcd(g, fc.poly);
    if (!one.is_one()) fail_internal("cofactors are not coprime");
    idempotents_.push_back(from_poly((s * g) % monic_));
  }
  build_coset_space();
}

Elem EtaleAlgebra::a_at(long i) const {
  if (i < 0 || i > static_cast<long>(n_)) return Elem{};
  return a_[static_cast<std::size_t>(i)];
}

void EtaleAlgebra::check(const Vec& x) const {
  if (x.size() != n_) fail("foreign_element", "algebra element has the wrong length");
  for (Elem e : x) field_.check(e);
}

Vec EtaleAlgebra::one() const { return constant(field_.one()); }

Vec EtaleAlgebra::t() const { return from_poly(Polynomial::variable(field_)); }

Vec EtaleAlgebra::constant(Elem c) const {
  Vec v(n_);
  v[0] = c;
  return v;
}

Vec EtaleAlgebra::from_poly(const Polynomial& p) const {
  const Polynomial r = p % monic_;
  Vec v(n_);
  for (std::size_t i = 0; i < n_; ++i) v[i] = r.coeff(static_cast<int>(i));
  return v;
}

Polynomial EtaleAlgebra::to_poly(const Vec& x) const { return Polynomial(field_, x); }

Vec EtaleAlgebra::add(const Vec& x, const Vec& y) const {
  check(x);
  check(y);
  return qf2::add(field_, x, y);
}

Vec EtaleAlgebra::mul(const Vec& x, const Vec& y) const {
  check(x);
  check(y);
  return from_poly(to_poly(x) * to_poly(y));
}

Vec EtaleAlgebra::scale(Elem c, const Vec& x) const { return qf2::scale(field_, c, x); }

Vec EtaleAlgebra::inv(const Vec& x) const {
  const Polynomial p = to_poly(x);
  if (p.is_zero()) fail("division_by_zero", "inverse of zero in the algebra");
  const auto [g, s, tt] = poly_xgcd(p, monic_);
  if (!g.is_one()) fail("division_by_zero", "element is a zero divisor");
  return from_poly(s);
}

Elem EtaleAlgebra::trace(const Vec& x) const {
  check(x);
  return dot(field_, x, basis_traces_);
}

Matrix EtaleAlgebra::trace_gram() const {
  Matrix g(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const Polynomial p = Polynomial::monomial(field_, field_.one(), static_cast<int>(i + j));
      g(i, j) = trace(from_poly(p));
    }
  return g;
}

Vec EtaleAlgebra::from_d_coords(const Vec& s) const {
  if (s.size() > n_) fail("bad_length", "too many d-coordinates");
  Vec x(n_);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!s[i].is_zero()) x = qf2::add(field_, x, qf2::scale(field_, s[i], d_[i]));
  return x;
}

Vec EtaleAlgebra::to_d_coords(const Vec& x) const {
  Vec y = mul(x, fprime_inv_);
  Vec c(n_);
  const Vec tt = t();
  for (std::size_t j = 0; j < n_; ++j) {
    c[j] = trace(y);
    y = mul(y, tt);
  }
  return c;
}

bool EtaleAlgebra::dual_basis_check(const std::vector<Vec>& d) const {
  if (d.size() != n_) return false;
  const Vec tt = t();
  for (std::size_t i = 0; i < n_; ++i) {
    Vec y = mul(d[i], fprime_inv_);
    for (std::size_t j = 0; j < n_; ++j) {
      const Elem want = i == j ? field_.one() : field_.zero();
      if (trace(y) != want) return false;
      y = mul(y, tt);
    }
  }
  return true;
}

Vec EtaleAlgebra::artin_schreier(const Vec& x) const { return add(sqr(x), x); }

BitVec EtaleAlgebra::to_bits(const Vec& x) const {
  const std::size_t k = static_cast<std::size_t>(field_.degree());
  BitVec b(n_ * k);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if ((x[i].bits >> j) & 1) b.flip(i * k + j);
  return b;
}

Vec EtaleAlgebra::from_bits(const BitVec& b) const {
  const std::size_t k = static_cast<std::size_t>(field_.degree());
  Vec x(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (b.get(i * k + j)) x[i].bits |= std::uint64_t{1} << j;
  return x;
}

void EtaleAlgebra::build_coset_space() {
  const std::size_t k = static_cast<std::size_t>(field_.degree());
  const std::size_t dim = n_ * k;
  const std::size_t gens = dim + k;
  for (std::size_t g = 0; g < gens; ++g) {
    Vec img;
    if (g < dim) {
      Vec e(n_);
      e[g / k] = Elem{std::uint64_t{1} << (g % k)};
      img = artin_schreier(e);
    } else {
      img = constant(Elem{std::uint64_t{1} << (g - dim)});
    }
    BitVec row = to_bits(img);
    BitVec combo(gens);
    combo.flip(g);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (row.get(pivots_[r])) {
        row ^= rows_[r];
        combo ^= combos_[r];
      }
    if (row.none()) continue;
    const std::size_t p = row.lowest();
    // Keep the basis fully reduced so representatives are canonical.
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (rows_[r].get(p)) {
        rows_[r] ^= row;
        combos_[r] ^= combo;
      }
    rows_.push_back(std::move(row));
    combos_.push_back(std::move(combo));
    pivots_.push_back(p);
  }
}

CosetClass EtaleAlgebra::coset_reduce(const Vec& r) const {
  check(r);
  BitVec b = to_bits(r);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (b.get(pivots_[i])) b ^= rows_[i];
  return {from_bits(b), b.none()};
}

std::optional<ArtinSchreierSolution> EtaleAlgebra::solve_artin_schreier(const Vec& r) const {
  check(r);
  const std::size_t k = static_cast<std::size_t>(field_.degree());
  const std::size_t dim = n_ * k;
  BitVec b = to_bits(r);
  BitVec combo(dim + k);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (b.get(pivots_[i])) {
      b ^= rows_[i];
      combo ^= combos_[i];
    }
  if (!b.none()) return std::nullopt;
  ArtinSchreierSolution sol{Vec(n_), Elem{}};
  for (std::size_t g = 0; g < dim + k; ++g) {
    if (!combo.get(g)) continue;
    if (g < dim)
      sol.s[g / k].bits ^= std::uint64_t{1} << (g % k);
    else
      sol.c.bits ^= std::uint64_t{1} << (g - dim);
  }
  if (add(artin_schreier(sol.s), constant(sol.c)) != r) fail_internal("Artin-Schreier solution does not verify");
  return sol;
}

Vec square_in_d_basis(const Field& F, const Vec& a, const Vec& s) {
  const long n = static_cast<long>(a.size()) - 1;
  auto at = [&](long i) { return (i < 0 || i > n) ? Elem{} : a[static_cast<std::size_t>(i)]; };
  Vec r(static_cast<std::size_t>(n));
  for (long kk = 0; kk < n; ++kk) {
    Elem acc{};
    for (long j = 0; j < static_cast<long>(s.size()); ++j)
      acc = F.add(acc, F.mul(F.sqr(s[static_cast<std::size_t>(j)]), at(2 * j + 1 - kk)));
    r[static_cast<std::size_t>(kk)] = acc;
  }
  return r;
}

}  // namespace qf2
