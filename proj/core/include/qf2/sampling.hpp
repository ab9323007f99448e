#pragma once

// Random samplers shared by the tests and the verification harness.

#include <random>

#include "qf2/error.hpp"
#include "qf2/pencil.hpp"
#include "qf2/poly.hpp"

namespace qf2::gen {

inline Elem random_elem(const Field& F, std::mt19937_64& rng) { return Elem{rng() & (F.size() - 1)}; }

inline Elem random_nonzero(const Field& F, std::mt19937_64& rng) {
  for (;;) {
    Elem e = random_elem(F, rng);
    if (!e.is_zero()) return e;
  }
}

inline Vec random_vec(const Field& F, std::size_t n, std::mt19937_64& rng) {
  Vec v(n);
  for (auto& e : v) e = random_elem(F, rng);
  return v;
}

inline QuadraticForm random_form(const Field& F, std::size_t n, std::mt19937_64& rng) {
  QuadraticForm q(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) q.set(i, j, random_elem(F, rng));
  return q;
}

inline Matrix random_invertible(const Field& F, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = random_elem(F, rng);
    if (!det(F, g).is_zero()) return g;
  }
}

inline Pencil random_pencil(const Field& F, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    try {
      return Pencil(F, random_form(F, n, rng), random_form(F, n, rng));
    } catch (const Error&) {
    }
  }
}

inline Pencil random_regular_pencil(const Field& F, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Pencil p = random_pencil(F, n, rng);
    if (is_regular(p)) return p;
  }
}

/// Coefficients a_0..a_deg of a separable polynomial with a_deg != 0.
inline Vec random_separable(const Field& F, std::size_t deg, std::mt19937_64& rng) {
  for (;;) {
    Vec a = random_vec(F, deg + 1, rng);
    a.back() = random_nonzero(F, rng);
    if (is_separable(Polynomial(F, a))) return a;
  }
}

}  // namespace qf2::gen
