#include "qf2/poly.hpp"

#include <algorithm>
#include <random>

#include "qf2/error.hpp"

namespace qf2 {

Polynomial::Polynomial(Field F, Vec coeffs) : field_(std::move(F)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_) field_.check(c);
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Field& F, Elem c) { return Polynomial(F, Vec{c}); }

Polynomial Polynomial::monomial(const Field& F, Elem c, int degree) {
  Vec v(static_cast<std::size_t>(degree + 1));
  v.back() = c;
  return Polynomial(F, std::move(v));
}

Polynomial Polynomial::variable(const Field& F) { return monomial(F, F.one(), 1); }

Elem Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return Elem{};
  return coeffs_[static_cast<std::size_t>(i)];
}

Elem Polynomial::leading() const { return is_zero() ? Elem{} : coeffs_.back(); }

Elem Polynomial::eval(Elem x) const {
  Elem acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

Polynomial Polynomial::derivative() const {
  Vec d;
  for (int i = 1; i <= degree(); ++i) d.push_back((i & 1) ? coeff(i) : Elem{});
  return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::scaled(Elem c) const {
  Vec v = coeffs_;
  for (Elem& x : v) x = field_.mul(c, x);
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::map(const FieldEmbedding& emb) const {
  if (!(emb.source() == field_)) fail("no_embedding", "embedding source does not match polynomial field");
  return Polynomial(emb.target(), emb(coeffs_));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_)) fail("foreign_element", "polynomials over different fields");
  Vec v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Elem x = i < a.coeffs_.size() ? a.coeffs_[i] : Elem{};
    const Elem y = i < b.coeffs_.size() ? b.coeffs_[i] : Elem{};
    v[i] = a.field_.add(x, y);
  }
  return Polynomial(a.field_, std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_)) fail("foreign_element", "polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  const Field& F = a.field_;
  Vec v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = F.add(v[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return Polynomial(F, std::move(v));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail("division_by_zero", "polynomial division by zero");
  if (!(a.field() == b.field())) fail("foreign_element", "polynomials over different fields");
  const Field& F = a.field();
  Vec r = a.coeffs();
  const int db = b.degree();
  const Elem lead_inv = F.inv(b.leading());
  Vec q(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)));
  for (int d = a.degree(); d >= db; --d) {
    const Elem c = F.mul(r[static_cast<std::size_t>(d)], lead_inv);
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(d - db)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& slot = r[static_cast<std::size_t>(d - db + i)];
      slot = F.add(slot, F.mul(c, b.coeff(i)));
    }
  }
  return {Polynomial(F, std::move(q)), Polynomial(F, std::move(r))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).quotient; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) fail("zero_gcd", "gcd(0, 0) is undefined");
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd poly_xgcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) fail("zero_gcd", "gcd(0, 0) is undefined");
  const Field& F = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(F, F.one()), s1(F);
  Polynomial t0(F), t1 = Polynomial::constant(F, F.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Elem c = F.inv(r0.leading());
  return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

bool is_separable(const Polynomial& p) {
  if (p.is_zero()) fail("zero_polynomial", "separability of the zero polynomial");
  if (p.degree() == 0) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

Polynomial poly_sqrt(const Polynomial& p) {
  const Field& F = p.field();
  Vec v;
  for (int i = 0; i <= p.degree(); ++i) {
    if ((i & 1) && !p.coeff(i).is_zero()) fail_internal("poly_sqrt of a non-square");
    if (!(i & 1)) v.push_back(F.sqrt(p.coeff(i)));
  }
  return Polynomial(F, std::move(v));
}

namespace {

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m) { return (a * b) % m; }

// x^(2^(k*times)) mod m, i.e. `times` applications of the q-Frobenius.
Polynomial frobenius_mod(Polynomial x, int squarings, const Polynomial& m) {
  for (int i = 0; i < squarings; ++i) x = mulmod(x, x, m);
  return x;
}

void squarefree(const Polynomial& f, int mult, std::vector<Factor>& out) {
  // Square-free factorization in characteristic 2.
  const Field& F = f.field();
  const Polynomial one = Polynomial::constant(F, F.one());
  Polynomial c = poly_gcd(f, f.derivative());
  Polynomial w = f.monic() / c;
  int i = 1;
  while (!w.is_one()) {
    Polynomial y = poly_gcd(w, c);
    Polynomial z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i * mult});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree(poly_sqrt(c.monic()), 2 * mult, out);
}

void equal_degree(const Polynomial& g, int d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Field& F = g.field();
  const int k = F.degree();
  const std::uint64_t size = F.size();
  for (;;) {
    Vec v(static_cast<std::size_t>(g.degree()));
    for (Elem& e : v) e = Elem{rng() & (size - 1)};
    Polynomial a(F, std::move(v));
    if (a.degree() < 1) continue;
    // Absolute trace of a in each residue field GF(2^(k d)).
    Polynomial t = a % g;
    Polynomial x = t;
    for (int i = 1; i < k * d; ++i) {
      x = mulmod(x, x, g);
      t = t + x;
    }
    if (t.is_zero()) continue;
    Polynomial h = poly_gcd(g, t);
    if (h.degree() <= 0 || h.degree() >= g.degree()) continue;
    equal_degree(h, d, rng, out);
    equal_degree(g / h, d, rng, out);
    return;
  }
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  for (int i = 0; i <= a.poly.degree(); ++i) {
    if (a.poly.coeff(i) != b.poly.coeff(i)) return a.poly.coeff(i) < b.poly.coeff(i);
  }
  return a.multiplicity < b.multiplicity;
}

}  // namespace

std::vector<Factor> factor(const Polynomial& p) {
  if (p.degree() < 1) fail("constant_polynomial", "factorization of a constant");
  const Field& F = p.field();
  std::vector<Factor> sqf;
  squarefree(p, 1, sqf);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::vector<Factor> out;
  const Polynomial X = Polynomial::variable(F);
  for (const auto& [g0, mult] : sqf) {
    Polynomial g = g0;
    Polynomial h = X % g;
    for (int d = 1; g.degree() >= 2 * d; ++d) {
      h = frobenius_mod(h, F.degree(), g);
      Polynomial part = poly_gcd(g, h - X);
      if (part.degree() > 0) {
        std::vector<Polynomial> pieces;
        equal_degree(part, d, rng, pieces);
        for (auto& piece : pieces) out.push_back({std::move(piece), mult});
        g = g / part;
        h = h % g;
      }
    }
    if (g.degree() > 0) out.push_back({g.monic(), mult});
  }
  // Equal irreducibles may come from different square-free layers only if the
  // layers share a factor, which they do not; sorting is enough.
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

std::vector<Elem> roots_in(const Polynomial& p, const FieldEmbedding& emb) {
  if (p.is_zero()) fail("zero_polynomial", "roots of the zero polynomial");
  const Polynomial q = p.map(emb);
  std::vector<Elem> out;
  const Field& K = emb.target();
  for (std::uint64_t b = 0; b < K.size(); ++b) {
    if (q.eval(Elem{b}).is_zero()) out.emplace_back(b);
    if (static_cast<int>(out.size()) == q.degree()) break;
  }
  return out;
}

std::vector<Elem> roots(const Polynomial& p) { return roots_in(p, embedding(p.field(), p.field())); }

BinaryForm::BinaryForm(int degree, Vec coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree + 1))
    fail("dimension_mismatch", "binary form needs degree+1 coefficients");
}

bool BinaryForm::is_zero() const { return qf2::is_zero(coeffs_); }

Elem BinaryForm::eval(const Field& F, Elem t0, Elem t1) const {
  Elem acc{};
  for (int i = 0; i <= degree_; ++i) {
    const Elem c = coeff(i);
    if (c.is_zero()) continue;
    acc = F.add(acc, F.mul(c, F.mul(F.pow(t0, static_cast<std::uint64_t>(degree_ - i)), F.pow(t1, static_cast<std::uint64_t>(i)))));
  }
  return acc;
}

Polynomial BinaryForm::dehomogenize_t0(const Field& F) const { return Polynomial(F, coeffs_); }

Polynomial BinaryForm::dehomogenize_t1(const Field& F) const {
  Vec v(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(F, std::move(v));
}

BinaryForm BinaryForm::substitute(const Field& F, const std::array<Elem, 4>& g) const {
  if (degree_ < 0) return *this;
  // Expand prod of (g00 t0 + g01 t1)^(d-i) (g10 t0 + g11 t1)^i.
  const BinaryForm l0 = linear(g[0], g[1]);
  const BinaryForm l1 = linear(g[2], g[3]);
  std::vector<BinaryForm> p0{one()}, p1{one()};
  for (int i = 1; i <= degree_; ++i) {
    p0.push_back(mul(F, p0.back(), l0));
    p1.push_back(mul(F, p1.back(), l1));
  }
  BinaryForm acc = zero(degree_);
  for (int i = 0; i <= degree_; ++i) {
    const Elem c = coeff(i);
    if (c.is_zero()) continue;
    BinaryForm term = mul(F, p0[static_cast<std::size_t>(degree_ - i)], p1[static_cast<std::size_t>(i)]);
    for (Elem& e : term.coeffs_) e = F.mul(c, e);
    acc = add(F, acc, term);
  }
  return acc;
}

BinaryForm BinaryForm::map(const FieldEmbedding& emb) const {
  if (degree_ < 0) return *this;
  return BinaryForm(degree_, emb(coeffs_));
}

BinaryForm BinaryForm::add(const Field& F, const BinaryForm& a, const BinaryForm& b) {
  if (a.degree_ < 0) return b;
  if (b.degree_ < 0) return a;
  if (a.degree_ != b.degree_) fail("dimension_mismatch", "sum of binary forms of different degrees");
  Vec v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeffs_[i], b.coeffs_[i]);
  return BinaryForm(a.degree_, std::move(v));
}

BinaryForm BinaryForm::mul(const Field& F, const BinaryForm& a, const BinaryForm& b) {
  if (a.degree_ < 0 || b.degree_ < 0) return BinaryForm();
  Vec v(static_cast<std::size_t>(a.degree_ + b.degree_ + 1));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = F.add(v[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return BinaryForm(a.degree_ + b.degree_, std::move(v));
}

bool is_separable_form(const Field& F, const BinaryForm& form) {
  if (form.degree() < 0 || form.is_zero()) return false;
  const Polynomial f = form.dehomogenize_t0(F);
  if (f.degree() < form.degree() - 1) return false;
  return is_separable(f);
}

}  // namespace qf2
