#include "qf2/field.hpp"

#include <array>
#include <bit>
#include <sstream>

#include "qf2/error.hpp"

namespace qf2 {
namespace {

// Conway polynomials for GF(2^k), 1 <= k <= 16 (bit i = coefficient of x^i).
constexpr std::array<std::uint64_t, 17> kModulusTable = {
    0,        0x3,     0x7,     0xB,     0x13,    0x25,   0x5B,
    0x83,     0x11D,   0x211,   0x46F,   0x805,   0x10EB, 0x201B,
    0x40A9,   0x8035,  0x1002D,
};

constexpr int kMaxDegree = 32;
constexpr int kTableDegree = 16;

int bit_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint64_t gf2x_mod(std::uint64_t a, std::uint64_t mod) {
  const int dm = bit_degree(mod);
  for (int d = bit_degree(a); d >= dm; d = bit_degree(a)) a ^= mod << (d - dm);
  return a;
}

}  // namespace

std::uint64_t gf2x_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  // Operands are below 2^32, so the product fits in 64 bits.
  return gf2x_mod(clmul(a, b), mod);
}

bool gf2x_is_irreducible(std::uint64_t poly) {
  const int d = bit_degree(poly);
  if (d < 1) return false;
  for (std::uint64_t f = 2; bit_degree(f) <= d / 2; ++f) {
    if (gf2x_mod(poly, f) == 0) return false;
  }
  return true;
}

struct Field::Impl {
  int degree = 1;
  std::uint64_t modulus = 0x3;
  std::uint64_t order = 1;  // 2^k - 1
  // log/exp tables for k <= 16; empty otherwise.
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> exp;

  std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const {
    return gf2x_mulmod(a, b, modulus);
  }

  void build_tables() {
    if (degree > kTableDegree) return;
    const std::uint64_t n = order;
    for (std::uint64_t g = (degree == 1 ? 1 : 2); g <= n; ++g) {
      std::vector<std::uint32_t> e(2 * n + 1);
      std::vector<std::uint32_t> l(n + 1, 0);
      std::uint64_t x = 1;
      bool primitive = true;
      for (std::uint64_t i = 0; i < n; ++i) {
        if (i > 0 && x == 1) {
          primitive = false;
          break;
        }
        e[i] = static_cast<std::uint32_t>(x);
        l[x] = static_cast<std::uint32_t>(i);
        x = slow_mul(x, g);
      }
      if (!primitive || x != 1) continue;
      for (std::uint64_t i = n; i < 2 * n + 1; ++i) e[i] = e[i - n];
      exp = std::move(e);
      log = std::move(l);
      return;
    }
    fail_internal("no primitive element found");
  }
};

std::shared_ptr<const Field::Impl> Field::make_impl(std::uint64_t modulus) {
  auto impl = std::make_shared<Impl>();
  impl->degree = bit_degree(modulus);
  impl->modulus = modulus;
  impl->order = (std::uint64_t{1} << impl->degree) - 1;
  impl->build_tables();
  return impl;
}

Field::Field() : impl_(make_impl(0x3)) {}

Field Field::from_modulus(std::uint64_t modulus) {
  const int d = bit_degree(modulus);
  if (d < 1 || d > kMaxDegree)
    fail("unsupported_degree", "field degree must be between 1 and 32");
  if (!gf2x_is_irreducible(modulus))
    fail("reducible_modulus", "modulus " + std::to_string(modulus) + " is not irreducible over GF(2)");
  return Field(make_impl(modulus));
}

Field Field::with_degree(int k) {
  if (k < 1 || k > kMaxDegree)
    fail("unsupported_degree", "field degree must be between 1 and 32");
  if (k <= kTableDegree) return from_modulus(kModulusTable[k]);
  for (std::uint64_t tail = 1; tail < (std::uint64_t{1} << k); tail += 2) {
    const std::uint64_t cand = (std::uint64_t{1} << k) | tail;
    if (gf2x_is_irreducible(cand)) return Field(make_impl(cand));
  }
  fail_internal("no irreducible polynomial found");
}

int Field::degree() const { return impl_->degree; }
std::uint64_t Field::modulus() const { return impl_->modulus; }

Elem Field::generator() const { return Elem{gf2x_mod(2, impl_->modulus)}; }

void Field::check(Elem a) const {
  if (!contains(a))
    fail("foreign_element", "element " + std::to_string(a.bits) + " does not belong to " + describe());
}

Elem Field::element(std::uint64_t bits) const {
  check(Elem{bits});
  return Elem{bits};
}

Elem Field::mul(Elem a, Elem b) const {
  if (a.bits == 0 || b.bits == 0) return Elem{0};
  const Impl& f = *impl_;
  if (!f.log.empty()) return Elem{f.exp[f.log[a.bits] + f.log[b.bits]]};
  return Elem{f.slow_mul(a.bits, b.bits)};
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) fail("division_by_zero", "inverse of zero");
  const Impl& f = *impl_;
  if (!f.log.empty()) return Elem{f.exp[(f.order - f.log[a.bits]) % f.order]};
  return pow(a, f.order - 1);
}

Elem Field::div(Elem a, Elem b) const {
  if (b.is_zero()) fail("division_by_zero", "division by zero in " + describe());
  return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::sqrt(Elem a) const {
  for (int i = 1; i < degree(); ++i) a = mul(a, a);
  return a;
}

int Field::trace(Elem a) const {
  Elem acc = a;
  Elem x = a;
  for (int i = 1; i < degree(); ++i) {
    x = mul(x, x);
    acc = add(acc, x);
  }
  if (acc.bits > 1) fail_internal("trace left GF(2)");
  return static_cast<int>(acc.bits);
}

Elem Field::arith(Elem a, Elem b, ArithOp op) const {
  check(a);
  check(b);
  switch (op) {
    case ArithOp::add: return add(a, b);
    case ArithOp::mul: return mul(a, b);
    case ArithOp::div: return div(a, b);
  }
  fail_internal("unknown arithmetic operation");
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  for (std::uint64_t b = 0; b < size(); ++b) out.emplace_back(b);
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(2^" << degree() << ") mod " << modulus();
  return os.str();
}

Field extension(const Field& base, int j) {
  if (j < 1) fail("bad_extension", "extension degree must be positive");
  if (j == 1) return base;
  return Field::with_degree(base.degree() * j);
}

FieldEmbedding::FieldEmbedding(Field src, Field dst, Elem generator_image)
    : src_(std::move(src)), dst_(std::move(dst)) {
  dst_.check(generator_image);
  // The generator must be a root of src's modulus in dst.
  Elem acc = dst_.zero();
  Elem p = dst_.one();
  const std::uint64_t mod = src_.modulus();
  for (int i = 0; i <= src_.degree(); ++i) {
    if ((mod >> i) & 1) acc = dst_.add(acc, p);
    p = dst_.mul(p, generator_image);
  }
  if (!acc.is_zero())
    fail("no_embedding", "generator image is not a root of the source modulus");
  basis_images_.reserve(src_.degree());
  p = dst_.one();
  for (int i = 0; i < src_.degree(); ++i) {
    basis_images_.push_back(p);
    p = dst_.mul(p, generator_image);
  }
}

Elem FieldEmbedding::operator()(Elem a) const {
  src_.check(a);
  Elem r = dst_.zero();
  for (int i = 0; i < src_.degree(); ++i)
    if ((a.bits >> i) & 1) r = dst_.add(r, basis_images_[i]);
  return r;
}

std::vector<Elem> FieldEmbedding::operator()(const std::vector<Elem>& v) const {
  std::vector<Elem> out;
  out.reserve(v.size());
  for (Elem a : v) out.push_back((*this)(a));
  return out;
}

namespace {

bool is_root(const Field& dst, std::uint64_t mod, int deg, Elem x) {
  Elem acc = dst.zero();
  Elem p = dst.one();
  for (int i = 0; i <= deg; ++i) {
    if ((mod >> i) & 1) acc = dst.add(acc, p);
    p = dst.mul(p, x);
  }
  return acc.is_zero();
}

}  // namespace

FieldEmbedding embedding(const Field& src, const Field& dst) {
  if (dst.degree() % src.degree() != 0)
    fail("no_embedding", src.describe() + " does not embed in " + dst.describe());
  const std::uint64_t mod = src.modulus();
  if (src.degree() == 1) return FieldEmbedding(src, dst, dst.one());
  const std::uint64_t ratio = (dst.size() - 1) / (src.size() - 1);
  const Elem candidate = dst.pow(dst.generator(), ratio);
  if (is_root(dst, mod, src.degree(), candidate)) return FieldEmbedding(src, dst, candidate);
  for (std::uint64_t b = 2; b < dst.size(); ++b) {
    if (is_root(dst, mod, src.degree(), Elem{b})) return FieldEmbedding(src, dst, Elem{b});
  }
  fail_internal("irreducible modulus has no root in an extension of its degree");
}

FieldEmbedding compose(const FieldEmbedding& outer, const FieldEmbedding& inner) {
  if (!(inner.target() == outer.source()))
    fail("no_embedding", "embeddings do not compose");
  return FieldEmbedding(inner.source(), outer.target(), outer(inner.generator_image()));
}

}  // namespace qf2
