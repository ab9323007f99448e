#include "qf2/cli/document.hpp"

#include <set>

#include "json_format.hpp"
#include "qf2/error.hpp"

namespace qf2::cli {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail_malformed("missing_key", std::string("document has no \"") + key + "\"");
  return j.at(key);
}

std::uint64_t unsigned_of(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned()) fail_malformed("bad_value", what + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

std::vector<Triple> triples_of(const Json& j, std::size_t n, std::uint64_t size, const char* name) {
  if (!j.is_array()) fail_malformed("bad_value", std::string(name) + " must be an array of [i, j, c]");
  std::vector<Triple> out;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) fail_malformed("bad_value", std::string(name) + " entries must be [i, j, c]");
    Triple x{unsigned_of(t[0], "index"), unsigned_of(t[1], "index"), unsigned_of(t[2], "coefficient")};
    if (x.i < 1 || x.i > x.j || x.j > n) fail_malformed("bad_index", "indices must satisfy 1 <= i <= j <= n");
    if (x.c >= size) fail_malformed("foreign_element", "coefficient is not an element of the field");
    if (!seen.emplace(x.i, x.j).second) fail_malformed("duplicate_entry", "coefficient (i, j) given twice");
    out.push_back(x);
  }
  return out;
}

Json triples_json(const std::vector<Triple>& ts) {
  Json a = Json::array();
  for (const auto& t : ts) a.push_back({t.i, t.j, t.c});
  return a;
}

QuadraticForm form_of(const Field& F, std::size_t n, const std::vector<Triple>& ts) {
  QuadraticForm q(n);
  for (const auto& t : ts) q.set(t.i - 1, t.j - 1, F.element(t.c));
  return q;
}

std::vector<Triple> triples_of(const QuadraticForm& q) {
  std::vector<Triple> out;
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i; j < q.dim(); ++j)
      if (!q.coeff(i, j).is_zero()) out.push_back({i + 1, j + 1, q.coeff(i, j).bits});
  return out;
}

}  // namespace

PencilDocument parse_document(const std::string& text) {
  const Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail_malformed("bad_json", "input is not valid JSON");
  PencilDocument d;
  const Json& field = member(j, "field");
  const std::uint64_t degree = unsigned_of(member(field, "degree"), "field.degree");
  d.modulus = unsigned_of(member(field, "modulus"), "field.modulus");
  if (degree < 1 || degree > 32) fail_malformed("bad_field", "field degree must be in 1..32");
  d.degree = static_cast<int>(degree);
  if (d.modulus >> d.degree != 1) fail_malformed("bad_field", "modulus must have degree field.degree");
  if (!gf2x_is_irreducible(d.modulus)) fail_malformed("bad_field", "modulus is reducible");
  d.n = unsigned_of(member(j, "n"), "n");
  if (d.n < 3 || d.n % 2 == 0 || d.n > 63) fail_malformed("bad_dimension", "n must be odd, 3 <= n <= 63");
  d.q0 = triples_of(member(j, "q0"), d.n, std::uint64_t{1} << d.degree, "q0");
  d.q1 = triples_of(member(j, "q1"), d.n, std::uint64_t{1} << d.degree, "q1");
  return d;
}

std::string serialize(const PencilDocument& d) {
  Json j;
  j["field"] = {{"degree", d.degree}, {"modulus", d.modulus}};
  j["n"] = d.n;
  j["q0"] = triples_json(d.q0);
  j["q1"] = triples_json(d.q1);
  return format_json(j);
}

Pencil to_pencil(const PencilDocument& d) {
  const Field F = Field::from_modulus(d.modulus);
  try {
    return Pencil(F, form_of(F, d.n, d.q0), form_of(F, d.n, d.q1));
  } catch (const Error& e) {
    fail_malformed(e.code(), e.what());
  }
}

PencilDocument from_pencil(const Pencil& p) {
  PencilDocument d;
  d.degree = p.field().degree();
  d.modulus = p.field().modulus();
  d.n = p.n();
  d.q0 = triples_of(p.q0());
  d.q1 = triples_of(p.q1());
  return d;
}

}  // namespace qf2::cli
