#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qf2/field.hpp"
#include "qf2/matrix.hpp"
#include "qf2/poly.hpp"

namespace qf2 {

/// Dense vector over GF(2), used for k + P(A) as a GF(2)-subspace of A.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t bits) : size_(bits), words_((bits + 63) / 64) {}
  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  void set(std::size_t i, bool v) {
    if (get(i) != v) flip(i);
  }
  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  /// Lowest set index, or size() if none.
  std::size_t lowest() const;
  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CosetClass {
  Vec representative;  // canonical element of r + k + P(A)
  bool trivial = false;
};

struct ArtinSchreierSolution {
  Vec s;   // P(s) + c = r
  Elem c;  // constant in k
};

/// A = k[T]/(f) for f(T) = a_0 + a_1 T + ... + a_n T^n with a_n != 0 and f
/// separable. Elements are coefficient vectors in the power basis
/// 1, t, ..., t^(n-1). Reduction uses the monic f / a_n; the d-basis uses the
/// a_i exactly as given.
class EtaleAlgebra {
 public:
  /// Throws "an_zero" if a_n = 0 and "not_separable" if f is not separable.
  EtaleAlgebra(Field F, Vec a);

  const Field& field() const { return field_; }
  std::size_t dim() const { return n_; }
  const Vec& a() const { return a_; }
  /// a_i, with a_i = 0 outside 0..n.
  Elem a_at(long i) const;
  const Polynomial& modulus() const { return monic_; }

  Vec zero() const { return Vec(n_); }
  Vec one() const;
  Vec t() const;
  Vec constant(Elem c) const;
  Vec from_poly(const Polynomial& p) const;
  Polynomial to_poly(const Vec& x) const;

  Vec add(const Vec& x, const Vec& y) const;
  Vec mul(const Vec& x, const Vec& y) const;
  Vec scale(Elem c, const Vec& x) const;
  Vec sqr(const Vec& x) const { return mul(x, x); }
  Vec inv(const Vec& x) const;
  /// Trace of multiplication by x.
  Elem trace(const Vec& x) const;
  /// Gram matrix Tr(t^i t^j) of the trace form.
  Matrix trace_gram() const;

  const std::vector<Vec>& d_basis() const { return d_; }
  /// sum s_i d_i.
  Vec from_d_coords(const Vec& s) const;
  /// c_j = Tr(x t^j / f'(t)); x = sum c_j d_j.
  Vec to_d_coords(const Vec& x) const;
  /// Tr(d_i t^j / f'(t)) = [i = j] for the supplied candidate basis.
  bool dual_basis_check(const std::vector<Vec>& d) const;
  bool dual_basis_check() const { return dual_basis_check(d_); }

  const std::vector<Factor>& factors() const { return factors_; }
  /// One idempotent per irreducible factor, in factor order.
  const std::vector<Vec>& idempotents() const { return idempotents_; }

  /// P(x) = x^2 + x.
  Vec artin_schreier(const Vec& x) const;
  CosetClass coset_reduce(const Vec& r) const;
  /// Some (s, c) with P(s) + c = r, or nullopt if r is not in k + P(A).
  std::optional<ArtinSchreierSolution> solve_artin_schreier(const Vec& r) const;
  /// GF(2)-dimension of k + P(A).
  std::size_t coset_space_dim() const { return pivots_.size(); }

  BitVec to_bits(const Vec& x) const;
  Vec from_bits(const BitVec& b) const;

 private:
  void check(const Vec& x) const;
  void build_coset_space();

  Field field_;
  std::size_t n_;
  Vec a_;
  Polynomial monic_;
  std::vector<Elem> basis_traces_;
  Vec fprime_inv_;
  std::vector<Vec> d_;
  std::vector<Factor> factors_;
  std::vector<Vec> idempotents_;
  // Echelon basis of k + P(A): row i has lowest set bit pivots_[i] and
  // combos_[i] records which generators produced it. Generators 0..kn-1 are
  // P(u^b t^i) (index i k + b); kn..kn+k-1 are the constants u^b.
  std::vector<BitVec> rows_;
  std::vector<BitVec> combos_;
  std::vector<std::size_t> pivots_;
};

/// d-coordinates of (sum s_j d_j)^2 by r_k = sum_j s_j^2 a_{2j+1-k}.
Vec square_in_d_basis(const Field& F, const Vec& a, const Vec& s);

}  // namespace qf2
