#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qf2/error.hpp"

namespace qf2 {

/// Pfaffian of the alternating matrix restricted to the index set `mask`,
/// by expansion along the lowest index. In characteristic 2 the expansion
/// has no signs. `Ring` supplies zero(), one(), add(a,b), mul(a,b),
/// is_zero(a) and entry(i,j) for i < j.
template <class Ring>
class PfaffianExpander {
 public:
  using Value = typename Ring::Value;

  explicit PfaffianExpander(const Ring& ring) : ring_(ring) {}

  Value operator()(std::uint32_t mask) {
    const int size = std::popcount(mask);
    if (size % 2 != 0) fail_internal("pfaffian of an odd-size index set");
    if (mask == 0) return ring_.one();
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int i = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << i);
    Value acc = ring_.zero();
    for (std::uint32_t m = rest; m != 0; m &= m - 1) {
      const int j = std::countr_zero(m);
      Value e = ring_.entry(i, j);
      if (ring_.is_zero(e)) continue;
      Value sub = (*this)(rest & ~(std::uint32_t{1} << j));
      if (ring_.is_zero(sub)) continue;
      acc = ring_.add(acc, ring_.mul(e, sub));
    }
    memo_.emplace(mask, acc);
    return acc;
  }

 private:
  const Ring& ring_;
  std::unordered_map<std::uint32_t, Value> memo_;
};

/// Pfaffians of all principal minors obtained by deleting one index from an
/// odd-size alternating matrix of size n. Entry i is Pf with index i removed.
template <class Ring>
std::vector<typename Ring::Value> pfaffian_vector(const Ring& ring, int n) {
  if (n <= 0 || n % 2 == 0 || n > 31) fail("bad_dimension", "pfaffian vector needs odd 1 <= n <= 31");
  PfaffianExpander<Ring> pf(ring);
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  std::vector<typename Ring::Value> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(pf(all & ~(std::uint32_t{1} << i)));
  return out;
}

}  // namespace qf2
