#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include "qf2/cli/commands.hpp"
#include "qf2/cli/document.hpp"
#include "qf2/error.hpp"
#include "qf2/normalform.hpp"

using namespace qf2;
using namespace qf2::cli;
using nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(QF2_EXAMPLES_DIR) + "/" + name; }

std::string read(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

struct Result {
  int code;
  std::string out;
  json j() const { return json::parse(out); }
};

Result call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str()};
}

Vec E(std::initializer_list<std::uint64_t> c) {
  Vec v;
  for (auto x : c) v.emplace_back(x);
  return v;
}

TEST(Document, FixturesRoundTripByteForByte) {
  for (const char* name : {"m1_r00.json", "m1_r01.json", "proportional.json", "del_pezzo.json"}) {
    const std::string text = read(data(name));
    ASSERT_FALSE(text.empty()) << name;
    EXPECT_EQ(serialize(parse_document(text)), text) << name;
  }
}

TEST(Document, FixturesAreTheNormalForms) {
  Field F;
  EXPECT_EQ(from_pencil(realize(F, E({0, 1, 1, 1}), E({0, 0}))), parse_document(read(data("m1_r00.json"))));
  EXPECT_EQ(from_pencil(realize(F, E({0, 1, 1, 1}), E({0, 1}))), parse_document(read(data("m1_r01.json"))));
  EXPECT_EQ(from_pencil(realize(F, E({0, 1, 1, 1, 1, 1}), E({0, 0, 0, 0}))),
            parse_document(read(data("del_pezzo.json"))));
}

TEST(Document, PencilRoundTrip) {
  const Field F4 = Field::with_degree(2);
  const Pencil p = realize(F4, E({0, 1, 1, 1}), E({2, 3}));
  EXPECT_EQ(to_pencil(parse_document(serialize(from_pencil(p)))), p);
}

TEST(Document, MalformedInputs) {
  auto code = [](const std::string& text) {
    try {
      to_pencil(parse_document(text));
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::malformed) << text;
      return e.code();
    }
    return std::string("accepted");
  };
  const std::string head = R"({"field": {"degree": 1, "modulus": 3}, "n": 3, )";
  EXPECT_EQ(code("{"), "bad_json");
  EXPECT_EQ(code(R"({"n": 3})"), "missing_key");
  EXPECT_EQ(code(head + R"("q0": [[2, 1, 1]], "q1": [[1, 1, 1]]})"), "bad_index");
  EXPECT_EQ(code(head + R"("q0": [[1, 4, 1]], "q1": [[1, 1, 1]]})"), "bad_index");
  EXPECT_EQ(code(head + R"("q0": [[1, 1, 2]], "q1": [[1, 1, 1]]})"), "foreign_element");
  EXPECT_EQ(code(head + R"("q0": [[1, 1, 1], [1, 1, 1]], "q1": [[2, 2, 1]]})"), "duplicate_entry");
  EXPECT_EQ(code(head + R"("q0": [[1, 1, -1]], "q1": [[2, 2, 1]]})"), "bad_value");
  EXPECT_EQ(code(R"({"field": {"degree": 2, "modulus": 5}, "n": 3, "q0": [], "q1": []})"), "bad_field");
  EXPECT_EQ(code(R"({"field": {"degree": 1, "modulus": 3}, "n": 4, "q0": [], "q1": []})"), "bad_dimension");
  EXPECT_EQ(code(head + R"("q0": [[1, 1, 1]], "q1": []})"), "proportional_pair");
}

TEST(Cli, NormalFormOfExample) {
  const Result r = call({"normalform", "--in", data("m1_r00.json")});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.j()["a"], json::parse("[0, 1, 1, 1]"));
  EXPECT_EQ(r.j()["r"], json::parse("[0, 0]"));
  EXPECT_EQ(r.j()["basis"].size(), 3u);
}

TEST(Cli, ReadsStdin) {
  const Result r = call({"regular"}, read(data("m1_r01.json")));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.j()["regular"], true);
  EXPECT_EQ(r.j()["delta"], json::parse("[0, 1, 1, 1]"));
}

TEST(Cli, IsIso) {
  const Result no = call({"isiso", "--in", data("m1_r00.json"), "--with", data("m1_r01.json")});
  ASSERT_EQ(no.code, 0) << no.out;
  EXPECT_EQ(no.j()["isomorphic"], false);
  EXPECT_FALSE(no.j().contains("witness"));
  const Result yes = call({"isiso", "--in", data("m1_r01.json"), "--with", data("m1_r01.json")});
  EXPECT_EQ(yes.j()["isomorphic"], true);
  EXPECT_EQ(yes.j()["witness"].size(), 3u);
  EXPECT_EQ(call({"isiso", "--in", data("m1_r00.json")}).code, kMalformed);
}

TEST(Cli, ProportionalPairIsMalformed) {
  const Result r = call({"regular", "--in", data("proportional.json")});
  EXPECT_EQ(r.code, kMalformed);
  EXPECT_EQ(r.j()["error"]["code"], "proportional_pair");
  EXPECT_EQ(r.j()["error"]["kind"], "malformed");
}

TEST(Cli, PreconditionErrors) {
  const Result plane = call({"canonical-plane", "--in", data("m1_r00.json")});
  EXPECT_EQ(plane.code, kPrecondition);
  EXPECT_EQ(plane.j()["error"]["code"], "m_too_small");
  const Result gens = call({"generators", "--in", data("m1_r01.json"), "--ext-degree", "2"});
  EXPECT_EQ(gens.code, kPrecondition);
  EXPECT_EQ(gens.j()["error"]["code"], "not_quasi_split");
  // Degree 4 over GF(2), so 2 more over the requested GF(4).
  EXPECT_EQ(gens.j()["error"]["extension_degree"], 2);
  // Delta(1, T) = T^3 + T^2 + T has a_3 = 1; swapping q0 and q1 puts the root at infinity.
  std::string text = read(data("m1_r00.json"));
  auto d = parse_document(text);
  std::swap(d.q0, d.q1);
  const Result rinv = call({"rinv"}, serialize(d));
  EXPECT_EQ(rinv.code, kPrecondition);
  EXPECT_EQ(rinv.j()["error"]["code"], "an_zero");
}

TEST(Cli, InvariantsOfExamples) {
  const Result r = call({"rinv", "--in", data("m1_r01.json")});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.j()["value"], json::parse("[1, 1, 0]"));
  EXPECT_EQ(r.j()["class"]["trivial"], false);
  EXPECT_EQ(r.j()["quasi_split"], false);
  const Result a = call({"arf", "--in", data("m1_r01.json")});
  EXPECT_EQ(a.j()["arf"], json::parse("[1, 1, 0]"));
  EXPECT_EQ(a.j()["matches_r"], true);
  const Result h = call({"halfdisc", "--in", data("m1_r00.json")});
  EXPECT_EQ(h.j()["delta"], json::parse("[0, 1, 1, 1]"));
  EXPECT_EQ(h.j()["omega"].size(), 2u);
}

TEST(Cli, GroupsOverExtensions) {
  const Result base = call({"autos", "--in", data("m1_r00.json")});
  EXPECT_EQ(base.j()["order"], 2);
  EXPECT_FALSE(base.j().contains("extension"));
  const Result up = call({"autos", "--in", data("m1_r00.json"), "--ext-degree", "2"});
  EXPECT_EQ(up.j()["order"], 4);
  EXPECT_EQ(up.j()["extension"], json::parse(R"({"degree": 2, "modulus": 7, "relative_degree": 2})"));
  const Result refl = call({"reflections", "--in", data("m1_r00.json")});
  ASSERT_EQ(refl.code, 0) << refl.out;
  EXPECT_EQ(refl.j()["reflections"].size(), 3u);
  EXPECT_EQ(refl.j()["extension"]["relative_degree"], 2);
}

TEST(Cli, DelPezzo) {
  const Result g = call({"generators", "--in", data("del_pezzo.json")});
  ASSERT_EQ(g.code, 0) << g.out;
  EXPECT_EQ(g.j()["count"], 16);
  EXPECT_EQ(g.j()["extension"]["degree"], 4);
  const Result l = call({"lattice", "--in", data("del_pezzo.json")});
  ASSERT_EQ(l.code, 0) << l.out;
  EXPECT_EQ(l.j()["root_gram_is_expected"], true);
  EXPECT_EQ(l.j()["root_gram"][0][0], -2);
  const Result c = call({"canonical-plane", "--in", data("del_pezzo.json")});
  EXPECT_EQ(c.j()["points"], json::parse("[[0, 1, 1, 0, 0]]"));
}

TEST(Cli, DeterministicOutputAndOutFile) {
  const auto a = call({"generators", "--in", data("m1_r00.json")});
  const auto b = call({"generators", "--in", data("m1_r00.json")});
  EXPECT_EQ(a.out, b.out);
  const std::string path = testing::TempDir() + "qf2_cli_out.json";
  EXPECT_EQ(call({"generators", "--in", data("m1_r00.json"), "--out", path}).out, "");
  EXPECT_EQ(read(path), a.out);
  std::remove(path.c_str());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kMalformed);
  EXPECT_EQ(call({"frobnicate"}).code, kMalformed);
  EXPECT_EQ(call({"regular", "--in", data("missing.json")}).code, kMalformed);
  EXPECT_EQ(call({"verify", "--scale", "huge"}).code, kMalformed);
  EXPECT_EQ(call({"regular", "--help"}).code, kSuccess);
}

TEST(Cli, VerifySmall) {
  const Result r = call({"verify"});
  ASSERT_EQ(r.code, 0);
  const json j = r.j();
  EXPECT_EQ(j["scale"], "small");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["criteria"].size(), 12u);
  for (const char* tag : {"T1.1", "T1.5", "T5.3", "T5.4", "T5.6", "T6.1", "T7.1", "T7.3", "C7.4", "L8"})
    EXPECT_EQ(j["tags"][tag]["pass"], true) << tag;
  EXPECT_EQ(call({"verify", "--scale", ""}).j()["scale"], "small");
}

}  // namespace
