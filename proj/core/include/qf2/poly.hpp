#pragma once

#include <array>
#include <vector>

#include "qf2/field.hpp"
#include "qf2/matrix.hpp"

namespace qf2 {

/// Univariate polynomial over GF(2^k); coefficient i multiplies T^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  explicit Polynomial(Field F) : field_(std::move(F)) {}
  Polynomial(Field F, Vec coeffs);

  static Polynomial constant(const Field& F, Elem c);
  static Polynomial monomial(const Field& F, Elem c, int degree);
  /// The polynomial T.
  static Polynomial variable(const Field& F);

  const Field& field() const { return field_; }
  const Vec& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  Elem coeff(int i) const;
  Elem leading() const;

  Elem eval(Elem x) const;
  Polynomial monic() const;
  Polynomial derivative() const;
  Polynomial scaled(Elem c) const;
  Polynomial map(const FieldEmbedding& emb) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  Field field_;
  Vec coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; throws "zero_gcd" when both inputs are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// s*a + t*b = g with g the monic gcd.
struct ExtendedGcd {
  Polynomial g, s, t;
};
ExtendedGcd poly_xgcd(const Polynomial& a, const Polynomial& b);

/// gcd(p, p') = 1. Throws "zero_polynomial" for p = 0.
bool is_separable(const Polynomial& p);

/// Square root of a polynomial whose derivative vanishes.
Polynomial poly_sqrt(const Polynomial& p);

struct Factor {
  Polynomial poly;  // monic irreducible
  int multiplicity = 1;
};

/// Complete factorization of a non-constant polynomial into monic
/// irreducibles, sorted by degree and then by coefficients from T^0 upward.
/// Throws "constant_polynomial" for degree < 1.
std::vector<Factor> factor(const Polynomial& p);

/// All roots of p lying in emb.target(), ascending, by exhaustive scan.
std::vector<Elem> roots_in(const Polynomial& p, const FieldEmbedding& emb);
std::vector<Elem> roots(const Polynomial& p);

/// Homogeneous form sum_i c_i t0^(d-i) t1^i of fixed degree d. A
/// default-constructed form has degree -1 and acts as a zero of every degree.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, Vec coeffs);
  static BinaryForm zero(int degree) { return BinaryForm(degree, Vec(static_cast<std::size_t>(degree + 1))); }
  static BinaryForm linear(Elem c0, Elem c1) { return BinaryForm(1, {c0, c1}); }
  static BinaryForm one() { return BinaryForm(0, {Elem{1}}); }

  int degree() const { return degree_; }
  const Vec& coeffs() const { return coeffs_; }
  Elem coeff(int i) const { return (i < 0 || i > degree_) ? Elem{} : coeffs_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  Elem eval(const Field& F, Elem t0, Elem t1) const;
  /// Delta(1, T) = sum c_i T^i.
  Polynomial dehomogenize_t0(const Field& F) const;
  /// Delta(T, 1) = sum c_i T^(d-i).
  Polynomial dehomogenize_t1(const Field& F) const;
  /// (t0, t1) -> (g00 t0 + g01 t1, g10 t0 + g11 t1).
  BinaryForm substitute(const Field& F, const std::array<Elem, 4>& g) const;
  BinaryForm map(const FieldEmbedding& emb) const;

  static BinaryForm add(const Field& F, const BinaryForm& a, const BinaryForm& b);
  static BinaryForm mul(const Field& F, const BinaryForm& a, const BinaryForm& b);

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  int degree_ = -1;
  Vec coeffs_;
};

/// Nonzero with deg(form) distinct projective roots over the closure:
/// Delta(1,T) separable and t0^2 does not divide the form.
bool is_separable_form(const Field& F, const BinaryForm& form);

}  // namespace qf2
