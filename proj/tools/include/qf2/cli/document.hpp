#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qf2/pencil.hpp"

namespace qf2::cli {

/// Coefficient of x_i x_j, 1 <= i <= j <= n, as an element integer.
struct Triple {
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint64_t c = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// On-disk pencil. Triples are kept in document order; serialize(parse(s))
/// reproduces any document already in canonical layout.
struct PencilDocument {
  int degree = 1;
  std::uint64_t modulus = 3;
  std::size_t n = 0;
  std::vector<Triple> q0, q1;
  friend bool operator==(const PencilDocument&, const PencilDocument&) = default;
};

/// Throws malformed errors for bad JSON, missing keys, out-of-range indices,
/// repeated (i, j), elements outside the field or a modulus that does not
/// define GF(2^degree).
PencilDocument parse_document(const std::string& text);
std::string serialize(const PencilDocument& doc);

/// The Pencil constructor's own errors (even n, proportional pair) are
/// rethrown as malformed.
Pencil to_pencil(const PencilDocument& doc);
/// Nonzero coefficients in (i, j) order.
PencilDocument from_pencil(const Pencil& p);

}  // namespace qf2::cli
