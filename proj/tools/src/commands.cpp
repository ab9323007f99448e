#include "qf2/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json_format.hpp"
#include "qf2/autos.hpp"
#include "qf2/cli/document.hpp"
#include "qf2/error.hpp"
#include "qf2/geometry.hpp"
#include "qf2/invariants.hpp"
#include "qf2/lattice.hpp"
#include "qf2/normalform.hpp"
#include "qf2/verify.hpp"

namespace qf2::cli {

namespace {

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (Elem e : v) a.push_back(e.bits);
  return a;
}

Json vecs_json(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

Json matrix_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vec_json(m.row(r)));
  return a;
}

Json int_matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

Json field_json(const Field& F) { return {{"degree", F.degree()}, {"modulus", F.modulus()}}; }

Json extension_json(const Field& base, const Field& K) {
  Json j = field_json(K);
  j["relative_degree"] = K.degree() / base.degree();
  return j;
}

Json class_json(const CosetClass& c) { return {{"representative", vec_json(c.representative)}, {"trivial", c.trivial}}; }

Field extension_of(const Field& F, int j) { return j == 1 ? F : extension(F, j); }

// Least multiple of j whose P^1 has at least `points` points.
int with_points(const Field& F, int j, std::size_t points) {
  int jj = j;
  while (F.degree() * jj < 63 && (std::uint64_t{1} << (F.degree() * jj)) + 1 < points) jj += j;
  return jj;
}

int split_and_quasi_split(const Pencil& p) { return std::lcm(splitting_degree(p), quasi_split_degree(p)); }

struct Options {
  std::string in = "-";
  std::string out = "-";
  std::string with;
  int ext_degree = 0;  // 0: choose automatically
  std::string scale;
};

std::string slurp(std::istream& s) { return {std::istreambuf_iterator<char>(s), std::istreambuf_iterator<char>()}; }

std::string read_file(const std::string& path, std::istream& in) {
  if (path == "-") return slurp(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) fail_malformed("io_error", "cannot read " + path);
  return slurp(f);
}

using Handler = std::function<Json(const Options&, std::istream&)>;

Pencil input_pencil(const Options& o, std::istream& in) { return to_pencil(parse_document(read_file(o.in, in))); }

Field requested(const Pencil& p, const Options& o, int automatic) {
  if (o.ext_degree < 0) fail_malformed("bad_value", "--ext-degree must be positive");
  return extension_of(p.field(), o.ext_degree > 0 ? o.ext_degree : automatic);
}

Json cmd_halfdisc(const Options& o, std::istream& in) {
  const Pencil p = input_pencil(o, in);
  const RadicalMap omega = radical_map(p);
  const BinaryForm d = half_discriminant(p, omega);
  return {{"delta", vec_json(d.coeffs())}, {"omega", vecs_json(omega.w)}};
}

Json cmd_regular(const Options& o, std::istream& in) {
  const Pencil p = input_pencil(o, in);
  return {{"regular", is_regular(p)}, {"delta", vec_json(half_discriminant(p).coeffs())}};
}

Json cmd_normalform(const Options& o, std::istream& in) {
  const NormalForm nf = extract_normal_form(input_pencil(o, in));
  return {{"a", vec_json(nf.a)}, {"r", vec_json(nf.r)}, {"basis", matrix_json(nf.basis.matrix())}};
}

Json cmd_rinv(const Options& o, std::istream& in) {
  const Pencil p = input_pencil(o, in);
  const NormalForm nf = extract_normal_form(p);
  const RInvariant r = r_invariant(p.field(), nf);
  return {{"a", vec_json(nf.a)},
          {"r", vec_json(nf.r)},
          {"value", vec_json(r.value)},
          {"class", class_json(r.algebra.coset_reduce(r.value))},
          {"quasi_split", is_quasi_split(p)}};
}

Json cmd_isiso(const Options& o, std::istream& in) {
  if (o.with.empty()) fail_malformed("missing_argument", "isiso needs --with <document>");
  const Pencil p1 = input_pencil(o, in);
  const Pencil p2 = to_pencil(parse_document(read_file(o.with, in)));
  const IsoResult r = is_isomorphic(p1, p2);
  Json j = {{"isomorphic", r.isomorphic}};
  if (r.witness) j["witness"] = matrix_json(*r.witness);
  return j;
}

Json cmd_autos(const Options& o, std::istream& in) {
  const Pencil p = input_pencil(o, in);
  const Field K = requested(p, o, 1);
  const Pencil P = K == p.field() ? p : p.map(embedding(p.field(), K));
  const auto group = automorphism_group(P);
  Json elems = Json::array();
  for (const auto& g : group) {
    Json e;
    if (!g.s.empty()) e["s"] = vec_json(g.s);
    e["matrix"] = matrix_json(g.matrix);
    elems.push_back(e);
  }
  Json j;
  if (o.ext_degree > 0) j["extension"] = extension_json(p.field(), K);
  j["order"] = group.size();
  j["elements"] = elems;
  return j;
}

Json cmd_reflections(const Options& o, std::istream& in) {
  const Pencil p = input_pencil(o, in);
  const Field K = requested(p, o, with_points(p.field(), splitting_degree(p), p.n() + 2));
  Json list = Json::array();
  for (const auto& r : reflections(p, K))
    list.push_back({{"root", {r.root.first.bits, r.root.second.bits}}, {"z", vec_json(r.z)}, {"matrix", matrix_json(r.matrix)}});
  return {{"extension", extension_json(p.field(), K)}, {"reflections", list}};
}

Json cmd_generators(const Options& o, std::istream& in) {
  const Pencil p = input_pencil(o, in);
  const Field K = requested(p, o, split_and_quasi_split(p));
  const auto gens = enumerate_generators(p, K);
  Json list = Json::array();
  for (const auto& g : gens) list.push_back(vecs_json(g.basis));
  return {{"extension", extension_json(p.field(), K)}, {"count", gens.size()}, {"generators", list}};
}

Json cmd_canonical_plane(const Options& o, std::istream& in) {
  const Pencil p = input_pencil(o, in);
  const CanonicalPlane cp = canonical_plane(p);
  return {{"w", vecs_json(cp.w)}, {"l0", vec_json(cp.l0)}, {"l1", vec_json(cp.l1)}, {"points", vecs_json(cp.point_basis)}};
}

Json cmd_arf(const Options& o, std::istream& in) {
  const Pencil p = input_pencil(o, in);
  const NormalForm nf = extract_normal_form(p);
  const ArfData d = arf_invariant(p.field(), nf);
  return {{"a", vec_json(nf.a)},
          {"r", vec_json(nf.r)},
          {"arf", vec_json(d.arf)},
          {"class", class_json(d.arf_class)},
          {"matches_r", d.matches_r}};
}

Json cmd_lattice(const Options& o, std::istream& in) {
  const Pencil p = input_pencil(o, in);
  const int j = split_and_quasi_split(p);
  const Field K = requested(p, o, with_points(p.field(), j, p.n() + 2));
  const CycleLattice L = build_lattice(p, K);
  return {{"extension", extension_json(p.field(), K)},
          {"generators", L.generators.size()},
          {"reflected", L.reflected},
          {"gram", int_matrix_json(L.gram)},
          {"gram_det", L.gram_det},
          {"eta_pairing", L.eta_pairing},
          {"root_gram", int_matrix_json(L.root_gram)},
          {"root_gram_is_expected", L.root_gram == expected_root_gram(L.m)}};
}

Json cmd_verify(const Options& o, std::istream&) {
  const auto scale = o.scale.empty() ? std::optional(verify::Scale::small) : verify::parse_scale(o.scale);
  if (!scale) fail_malformed("bad_value", "--scale must be small or full");
  const verify::Report r = verify::run_suite(*scale);
  Json criteria = Json::array();
  for (std::size_t i = 0; i < r.criteria.size(); ++i) {
    const auto& c = r.criteria[i];
    criteria.push_back({{"id", i + 1}, {"name", c.name}, {"pass", c.pass}, {"checked", c.checked}, {"detail", c.detail}});
  }
  Json tags = Json::object();
  for (const auto& t : r.tags) tags[t.tag] = {{"pass", t.pass}, {"checked", t.checked}};
  return {{"scale", verify::to_string(r.scale)}, {"pass", r.pass}, {"tags", tags}, {"criteria", criteria}};
}

Json error_json(const Error& e) {
  const char* kind = e.kind() == ErrorKind::precondition ? "precondition"
                     : e.kind() == ErrorKind::malformed  ? "malformed"
                                                         : "internal";
  Json err = {{"code", e.code()}, {"kind", kind}, {"message", e.what()}};
  if (e.extension_degree() > 0) err["extension_degree"] = e.extension_degree();
  return {{"error", err}};
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::precondition:
      return kPrecondition;
    case ErrorKind::malformed:
      return kMalformed;
    case ErrorKind::internal:
      return kInternal;
  }
  return kInternal;
}

void emit(const Options& o, std::ostream& out, const Json& j) {
  const std::string text = format_json(j);
  if (o.out == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  f << text;
  if (!f) throw Error(ErrorKind::malformed, "io_error", "cannot write " + o.out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pencils of quadratic forms over GF(2^k)", "qf2"};
  app.require_subcommand(1);
  Options o;
  Handler handler;

  struct Command {
    const char* name;
    const char* help;
    Handler fn;
    bool ext = false;
  };
  const Command commands[] = {
      {"halfdisc", "half-discriminant and radical map", cmd_halfdisc},
      {"regular", "regularity test", cmd_regular},
      {"normalform", "normal form (a, r) and a realizing basis", cmd_normalform},
      {"rinv", "r-invariant and its class", cmd_rinv},
      {"isiso", "isomorphism test with witness", cmd_isiso},
      {"autos", "automorphism group of the pair", cmd_autos, true},
      {"reflections", "reflections over a splitting field", cmd_reflections, true},
      {"generators", "all generators over a splitting field", cmd_generators, true},
      {"canonical-plane", "the canonical (m-2)-plane", cmd_canonical_plane},
      {"arf", "Arf invariant of q_A", cmd_arf},
      {"lattice", "intersection lattice of generator classes", cmd_lattice, true},
      {"verify", "property and oracle checks", cmd_verify},
  };
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    if (std::string(s.name) != "verify") sub->add_option("--in", o.in, "input document, - for stdin");
    sub->add_option("--out", o.out, "output file, - for stdout");
    if (s.ext) sub->add_option("--ext-degree", o.ext_degree, "work over the degree-j extension");
    if (std::string(s.name) == "isiso") sub->add_option("--with", o.with, "second document")->required();
    if (std::string(s.name) == "verify") sub->add_option("--scale", o.scale, "small (default) or full");
    sub->callback([&handler, fn = s.fn] { handler = fn; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, err, err) == 0 ? kSuccess : kMalformed;
  }

  try {
    emit(o, out, handler(o, in));
    return kSuccess;
  } catch (const Error& e) {
    emit(Options{}, out, error_json(e));
    return exit_code(e);
  } catch (const std::exception& e) {
    emit(Options{}, out, error_json(Error(ErrorKind::internal, "internal_consistency", e.what())));
    return kInternal;
  }
}

}  // namespace qf2::cli
