#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli/app.hpp"
#include "cli/properties.hpp"
#include "cli/session.hpp"
#include "transint/error.hpp"

namespace transint::cli {
namespace {

const std::string kData = TRANSINT_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "transint");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string session_file() { return kData + "/example.session"; }

TEST(Session, ParsesOneIdeal) {
  auto s = parse_session("ring Q[x1,x2,x3]; order grevlex; ideal I = <x1*x3 - x2^2>;");
  EXPECT_EQ(s.ring->size(), 3u);
  ASSERT_TRUE(s.has_ideal("I"));
  EXPECT_EQ(s.ideal("I").size(), 1u);
  EXPECT_THROW(s.ideal("J"), DomainError);
}

TEST(Session, UnknownVariableHasLocation) {
  try {
    parse_session("ring Q[x1,x2,x3];\nideal I = <x9>;");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 12u);
  }
}

TEST(Session, Errors) {
  EXPECT_THROW(parse_session("ring Q[x]; ideal I = <x>; ideal I = <x^2>;"), ParseError);
  EXPECT_THROW(parse_session("ring Q[x]; simplicial I = {{1}}; ideal I = <x>;"), ParseError);
  EXPECT_THROW(parse_session("ring Q[x]; ring Q[y];"), ParseError);
  EXPECT_THROW(parse_session("ideal I = <x>;"), ParseError);
  EXPECT_THROW(parse_session("ring Q[x]; order grevlex; order lex;"), ParseError);
  EXPECT_THROW(parse_session("ring Q[x,y]; order weights(1);"), ParseError);
  EXPECT_THROW(parse_session("ring Q[x,y]; order block(lex(x));"), ParseError);
  EXPECT_THROW(parse_session("ring Fp(6)[x];"), ParseError);
  EXPECT_THROW(parse_session("ring Q[_t];"), ParseError);
  EXPECT_THROW(parse_session("ring Q[x] ideal I = <x>;"), ParseError);
  EXPECT_THROW(parse_session(""), ParseError);
}

TEST(Session, OrdersAndFields) {
  auto s = parse_session(
      "ring Fp(101)[a,b,c,d,e];\n"
      "order block(grevlex(a,b), lex(c), weights(d,e; 2,1));\n"
      "ideal I = <a*b - 3/2*c, e^2>;\n"
      "simplicial D = {{1,2},{2,3},{4}};\n");
  EXPECT_EQ(s.ring->field(), Field::prime(101));
  EXPECT_EQ(s.order.kind(), MonomialOrder::Kind::Block);
  EXPECT_EQ(s.simplicial("D").facets().size(), 3u);
}

TEST(Session, PrettyPrintRoundTrips) {
  const char* texts[] = {
      "ring Q[x1,x2,x3]; order grevlex; ideal I = <x1*x3 - x2^2>;",
      "ring Fp(7)[x,y,z]; order weights(3,2,1); ideal A = <x^2 + 5*y, z>; ideal B = <>; simplicial D = {};",
      "ring Q[a,b,c,d,e]; order block(grevlex(a,b), lex(c), weights(d,e; 2,1));"
      " simplicial K = {{1,2},{3}}; ideal I = <3/4 a^2 b - e, (a+b)^2>;",
      "ring Q[u]; ideal I = <u>;",
  };
  for (const char* text : texts) {
    auto s = parse_session(text);
    auto printed = print_session(s);
    auto again = parse_session(printed);
    EXPECT_TRUE(same_session(s, again)) << printed;
    EXPECT_EQ(print_session(again), printed);
  }
}

TEST(Cli, CheckTransversalRefutes) {
  auto r = run({"-s", session_file(), "check-transversal", "--lhs", "X", "--rhs", "X"});
  EXPECT_EQ(r.code, kFalse);
  EXPECT_NE(r.out.find("intersection: <x1>"), std::string::npos);
  EXPECT_NE(r.out.find("product: <x1^2>"), std::string::npos);
}

TEST(Cli, ExitCodesIgnoreOutputFormat) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check-transversal", "--lhs", "X", "--rhs", "X"},
           {"check-transversal", "--lhs", "C", "--rhs", "J"},
           {"nzd", "--ideal", "C", "--poly", "x1 + x4"},
           {"acyclic", "M", "--against", "M"}}) {
    auto plain = args;
    plain.insert(plain.begin(), {"-s", session_file()});
    auto json = plain;
    json.push_back("--json");
    EXPECT_EQ(run(plain).code, run(json).code);
  }
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run({"groebner", "C"}).code, kUsage);  // no session
  EXPECT_EQ(run({"-s", kData + "/missing.session", "groebner", "C"}).code, kUsage);
  auto bad = run({"-s", kData + "/bad.session", "groebner", "I"});
  EXPECT_EQ(bad.code, kUsage);
  EXPECT_NE(bad.err.find("bad.session:2:12"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"-s", session_file(), "groebner", "Nope"}).code, kUsage);
  EXPECT_EQ(run({"-s", session_file(), "taylor", "C"}).code, kUsage);  // not monomial
  EXPECT_EQ(run({"-s", session_file(), "nzd", "--ideal", "C", "--poly", "x1 +"}).code, kUsage);
  EXPECT_EQ(run({"-s", session_file(), "--max-vars", "2", "groebner", "C"}).code, kUsage);
  EXPECT_EQ(run({"verify", "--case", "rnc", "--n", "99"}).code, kUsage);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, kTrue); }

TEST(Cli, PruneBetti) {
  auto t = run({"-s", session_file(), "taylor", "M"});
  EXPECT_EQ(t.code, kTrue);
  EXPECT_NE(t.out.find("ranks: 1 3 3 1"), std::string::npos);
  auto p = run({"-s", session_file(), "prune", "M"});
  EXPECT_EQ(p.code, kTrue);
  EXPECT_EQ(p.out.substr(0, p.out.find('\n')), "betti: 1 3 2");
}

TEST(Cli, VerifyRncSumJson) {
  auto r = run({"verify", "--case", "rnc-sum", "--n", "3", "--a", "1", "--b", "1", "--c", "1", "--json"});
  EXPECT_EQ(r.code, kTrue);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["case"], "rnc-sum");
  for (const auto& c : j["checks"]) EXPECT_NE(c["status"], "fail");
}

TEST(Cli, Selftest) {
  auto r = run({"selftest", "--seed", "5", "--count", "5"});
  EXPECT_EQ(r.code, kTrue) << r.out;
}

TEST(Properties, SuitesPassOnSeveralSeeds) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (const auto& r : {disjoint_equivalence_suite(seed, 20), taylor_suite(seed, 10), taylor_tensor_suite(seed, 10),
                          minimal_tensor_suite(seed, 10), join_suite(seed, 10), supported_suite(seed, 5),
                          dissup_suite(seed, 10)}) {
      EXPECT_TRUE(r.ok()) << r.name << ": " << r.first_failure;
    }
  }
}

// Golden outputs: one file per command under tests/data/golden. Wall times
// are masked. Set TRANSINT_UPDATE_GOLDEN=1 to rewrite them.
struct Golden {
  const char* file;
  std::vector<std::string> args;
  int code;
};

std::string mask(std::string s) { return std::regex_replace(s, std::regex("\"wall_time\": \"[0-9]+ ms\""), "\"wall_time\": \"<masked>\""); }

class GoldenTest : public ::testing::TestWithParam<Golden> {};

TEST_P(GoldenTest, MatchesFile) {
  const auto& g = GetParam();
  std::vector<std::string> args = g.args;
  if (std::string(g.file).rfind("verify", 0) != 0) args.insert(args.begin(), {"-s", session_file()});
  auto r = run(args);
  EXPECT_EQ(r.code, g.code) << r.err;
  auto path = kData + "/golden/" + g.file;
  auto actual = mask(r.out);
  if (std::getenv("TRANSINT_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  std::ifstream in(path, std::ios::binary);
  ASSERT_TRUE(in) << "missing golden file " << path;
  std::stringstream expected;
  expected << in.rdbuf();
  EXPECT_EQ(actual, expected.str());
}

INSTANTIATE_TEST_SUITE_P(
    Commands, GoldenTest,
    ::testing::Values(
        Golden{"check_transversal.json", {"check-transversal", "--lhs", "X", "--rhs", "X", "--json"}, kFalse},
        Golden{"check_transversal_rnc.json", {"check-transversal", "--lhs", "C", "--rhs", "J", "--json"}, kTrue},
        Golden{"check_transversal.txt", {"check-transversal", "--lhs", "C", "--rhs", "J"}, kTrue},
        Golden{"intersect.txt", {"intersect", "C", "J"}, kTrue},
        Golden{"product.json", {"product", "C", "J", "--json"}, kTrue},
        Golden{"groebner.json", {"groebner", "C", "--json"}, kTrue},
        Golden{"quotient.txt", {"quotient", "--ideal", "C", "--by", "x1"}, kTrue},
        Golden{"nzd.json", {"nzd", "--ideal", "C", "--poly", "x1 + x4", "--json"}, kTrue},
        Golden{"regseq.json", {"regseq", "--ideal", "C", "--seq", "x1 + x4, x3", "--json"}, kTrue},
        Golden{"regseq_fail.txt", {"regseq", "--ideal", "C", "--seq", "x1, x1"}, kFalse},
        Golden{"taylor.json", {"taylor", "M", "--json"}, kTrue},
        Golden{"tensor.json", {"tensor", "A", "B", "--json"}, kTrue},
        Golden{"prune.txt", {"prune", "M"}, kTrue},
        Golden{"acyclic_simplicial.json", {"acyclic", "P", "--against", "N", "--json"}, kTrue},
        Golden{"acyclic_broken.txt", {"acyclic", "G", "--against", "N"}, kFalse},
        Golden{"dimension.json", {"dimension", "S", "--json"}, kTrue},
        Golden{"session.txt", {"session"}, kTrue},
        Golden{"verify_rnc_sum.json", {"verify", "--case", "rnc-sum", "--n", "3", "--a", "1", "--b", "1", "--c", "1", "--json"}, kTrue},
        Golden{"verify_xy.txt", {"verify", "--case", "xy", "--n", "2"}, kTrue},
        Golden{"verify_power.json", {"verify", "--case", "power", "--n", "2", "--r", "2", "--json"}, kTrue}),
    [](const auto& info) {
      std::string name = info.param.file;
      for (auto& c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
      }
      return name;
    });

}  // namespace
}  // namespace transint::cli
