#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qf2 {

/// Element of GF(2^k). Bit i is the coefficient of u^i, where u is the class
/// of x modulo the field's defining polynomial. The same integer is used as
/// the wire encoding.
struct Elem {
  std::uint64_t bits = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint64_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }
  constexpr bool is_one() const { return bits == 1; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

enum class ArithOp { add, mul, div };

/// The finite field GF(2^k) = GF(2)[x]/(g) for an irreducible g of degree k.
///
/// A Field is a cheap handle to immutable shared tables; copies compare equal
/// when they have the same modulus. Elements carry no reference to their
/// field, so every operation goes through the Field object. `arith`,
/// `element` and `check` validate that operands actually live in this field.
class Field {
 public:
  /// GF(2).
  Field();

  /// Field of 2^k elements built from the fixed modulus table (k <= 16) or,
  /// for 16 < k <= 32, the smallest irreducible polynomial of degree k.
  static Field with_degree(int k);

  /// Field defined by an explicit modulus. Throws unless it is irreducible.
  static Field from_modulus(std::uint64_t modulus);

  int degree() const;
  std::uint64_t modulus() const;
  std::uint64_t size() const { return std::uint64_t{1} << degree(); }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// The class of x; equals 1 in GF(2).
  Elem generator() const;

  bool contains(Elem a) const { return a.bits < size(); }
  /// Throws "foreign_element" if `a` is not an element of this field.
  void check(Elem a) const;
  /// Checked construction from the integer encoding.
  Elem element(std::uint64_t bits) const;

  Elem add(Elem a, Elem b) const { return Elem{a.bits ^ b.bits}; }
  Elem sub(Elem a, Elem b) const { return Elem{a.bits ^ b.bits}; }
  Elem mul(Elem a, Elem b) const;
  Elem sqr(Elem a) const { return mul(a, a); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// Unique square root, a^(2^(k-1)).
  Elem sqrt(Elem a) const;
  /// Absolute trace to GF(2): a + a^2 + ... + a^(2^(k-1)).
  int trace(Elem a) const;

  /// Validated binary operation (the public arithmetic contract).
  Elem arith(Elem a, Elem b, ArithOp op) const;

  /// All 2^k elements in increasing integer order.
  std::vector<Elem> elements() const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.impl_ == b.impl_ || a.modulus() == b.modulus();
  }

 private:
  struct Impl;
  static std::shared_ptr<const Impl> make_impl(std::uint64_t modulus);
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Degree-j extension of `base`, as an absolute field GF(2^(k*j)).
Field extension(const Field& base, int j);

/// Carry-less product and remainder on GF(2)[x] bit vectors.
std::uint64_t gf2x_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
bool gf2x_is_irreducible(std::uint64_t poly);

/// A ring embedding src -> dst, determined by the image of src's generator.
class FieldEmbedding {
 public:
  FieldEmbedding(Field src, Field dst, Elem generator_image);

  const Field& source() const { return src_; }
  const Field& target() const { return dst_; }
  Elem generator_image() const { return basis_images_.size() > 1 ? basis_images_[1] : dst_.one(); }

  /// Image of a; checks that a lives in the source field.
  Elem operator()(Elem a) const;
  std::vector<Elem> operator()(const std::vector<Elem>& v) const;

 private:
  Field src_;
  Field dst_;
  std::vector<Elem> basis_images_;  // images of 1, u, u^2, ...
};

/// The embedding src -> dst. Prefers the image of the dst generator raised to
/// (|dst|-1)/(|src|-1), which is compatible across towers when both moduli come
/// from the fixed table; otherwise takes the smallest root of src's modulus.
/// Throws "no_embedding" if deg(src) does not divide deg(dst).
FieldEmbedding embedding(const Field& src, const Field& dst);

/// Composition outer(inner(x)).
FieldEmbedding compose(const FieldEmbedding& outer, const FieldEmbedding& inner);

}  // namespace qf2
