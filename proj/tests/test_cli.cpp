#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "diffrest/parse.hpp"
#include "diffrest/ratmap.hpp"

using namespace diffrest;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

const std::string kDiffInput = "map 2 -> 2 { 1/x1 ; x1^2/(1+x2) } | { x1, 1+x2 }";
const std::string kDiffShown = "map 4 -> 2 { -x1/x3^2 ; (2*x3*x1*(x4+1) - x3^2*x2)/(x4+1)^2 } | { x3, 1+x4 }";

}  // namespace

TEST_CASE("algebra commands print map literals") {
  const auto d = run({"diff", kDiffInput});
  REQUIRE(d.code == cli::kSuccess);
  CHECK(rat::equal(parse_map(first_line(d.out), CoeffRing::Integers), parse_map(kDiffShown, CoeffRing::Integers)));

  const auto c = run({"compose", "map 1 -> 2 { x1^2 ; x1^2 } | { }", "map 2 -> 1 { 1 } | { x1-1 }"});
  REQUIRE(c.code == cli::kSuccess);
  CHECK(rat::equal(parse_map(first_line(c.out), CoeffRing::Integers),
                   parse_map("map 1 -> 1 { 1 } | { x1+1, x1-1 }", CoeffRing::Integers)));

  const auto r = run({"restrict", kDiffInput});
  CHECK(rat::equal(parse_map(first_line(r.out), CoeffRing::Integers),
                   parse_map("map 2 -> 2 { x1 ; x2 } | { x1, 1+x2 }", CoeffRing::Integers)));
  CHECK(run({"pair", "map 1 -> 1 { x1 } | { }", "map 1 -> 1 { 2 } | { }"}).code == cli::kSuccess);
  CHECK(run({"add", "map 1 -> 1 { x1 } | { }", "map 1 -> 1 { 2 } | { }"}).code == cli::kSuccess);
}

TEST_CASE("predicates set the exit code") {
  CHECK(run({"eq", "map 1 -> 1 { 2*x1/2 } | { 2 }", "map 1 -> 1 { x1 } | { 2 }"}).code == cli::kSuccess);
  CHECK(run({"eq", "map 1 -> 1 { x1 } | { }", "map 1 -> 1 { x1 } | { x1 }"}).code == cli::kNegative);
  CHECK(run({"leq", "map 1 -> 1 { x1 } | { x1 }", "map 1 -> 1 { x1 } | { }"}).code == cli::kSuccess);
  CHECK(run({"compat", "map 2 -> 1 { 1 } | { x1-1 }", "map 2 -> 1 { 1 } | { x2-1 }"}).code == cli::kSuccess);
  CHECK(run({"--ring", "Q", "linear", "map 1 -> 1 { 2*x1 } | { x1-5 }"}).code == cli::kSuccess);
  const auto square = run({"linear", "map 1 -> 1 { x1^2 } | { }"});
  CHECK(square.code == cli::kNegative);
  CHECK(first_line(square.out) == "false");
  const auto additive = run({"additive", "map 1 -> 1 { 2*x1 } | { x1-5 }"});
  CHECK(additive.out == "additive: true\nstrongly additive: false\n");
}

TEST_CASE("evaluation and normalization") {
  CHECK(run({"eval", kDiffShown, "--at", "1,0,2,0"}).out == "(-1/4, 4)\n");
  CHECK(run({"eval", "map 1 -> 1 { 1/x1 } | { x1 }", "--at", "0"}).out == "undefined\n");
  CHECK(run({"normalize", "18/36"}).out == "(3, 6)\n");
  CHECK(run({"normalize", "12/8"}).out == "(3, 2)\n");
}

TEST_CASE("join candidate and complement report their failures") {
  const auto j = run({"join-candidate", "map 2 -> 1 { 1 } | { x1-1 }", "map 2 -> 1 { 1 } | { x2-1 }", "--probe",
                      "map 1 -> 2 { x1^2 ; x1^2 } | { }"});
  CHECK(j.code == cli::kNegative);
  CHECK(j.out.find("stable: false") != std::string::npos);
  const auto germ = run({"--ring", "Q", "complement", "map 1 -> 1 { 2*x1 } | { }", "map 1 -> 1 { 2*x1 } | { x1-5 }",
                         "--along", "map 1 -> 1 { x1 } | { x1-7 }"});
  CHECK(germ.out.find("verdict: unknown") != std::string::npos);
  CHECK(germ.code == cli::kNegative);
  const auto whole = run({"--ring", "Q", "complement", "map 1 -> 1 { 2*x1 } | { }", "map 1 -> 1 { 2*x1 } | { x1-5 }",
                         "--along", "map 1 -> 1 { x1 } | { }"});
  CHECK(whole.out.find("verdict: equal") != std::string::npos);
}

TEST_CASE("usage and parse errors exit with 2") {
  const std::string first = "map 2 -> 3 { 5*x1*x2/x1 ; x1*x2^2/(x1+x2) ; (x1+x2)^2/(3*x2) } | { x1, x1+x2, x2 }";
  CHECK(run({"--ring", "Q", "restrict", first}).code == cli::kSuccess);
  const auto z = run({"restrict", first});
  CHECK(z.code == cli::kUsage);
  CHECK(z.err.find("invalid restriction set") != std::string::npos);
  CHECK(z.err.find("3*x2") != std::string::npos);
  CHECK(run({"restrict", "map 1 -> 1 { x1 + * 2 } | { }"}).code == cli::kUsage);
  CHECK(run({"compose", "map 1 -> 1 { x1 } | { }", "map 2 -> 1 { x1 } | { }"}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"check", "--model", "rat", "--suite", "JOIN"}).code == cli::kUsage);
  CHECK(run({"check", "--model", "nope", "--suite", "R"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("bindings") {
  const auto r = run({"--bind", "f=map 1 -> 1 { x1^2 } | { }", "--bind", "g=map 1 -> 1 { x1+1 } | { }", "compose",
                      "f", "g"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(rat::equal(parse_map(first_line(r.out), CoeffRing::Integers),
                   parse_map("map 1 -> 1 { x1^2 + 1 } | { }", CoeffRing::Integers)));
  CHECK(run({"--bind", "f", "linear", "f"}).code == cli::kUsage);
  CHECK(run({"--bind", "f=map 1 -> 1 { x1 } | { }", "--bind", "f=map 1 -> 1 { 2 } | { }", "linear", "f"}).code ==
        cli::kUsage);
}

TEST_CASE("json output") {
  const auto eq = run({"--json", "eq", "map 1 -> 1 { x1 } | { }", "map 1 -> 1 { x1 } | { }"});
  const auto doc = nlohmann::json::parse(eq.out);
  CHECK(doc["command"] == "eq");
  CHECK(doc["result"] == true);
  const auto check = nlohmann::json::parse(run({"--json", "check", "--model", "finpar", "--suite", "R,CR", "--cases", "3",
                                                "--seed", "9"})
                                               .out);
  CHECK(check["passed"] == true);
  REQUIRE(check["reports"].size() == 2);
  CHECK(check["reports"][0]["suite"] == "R");
  CHECK(check["reports"][0]["seed"] == 9);
}

TEST_CASE("check runs suites reproducibly") {
  const auto a = run({"check", "--model", "rat", "--suite", "R", "--cases", "5", "--seed", "7"});
  CHECK(a.code == cli::kSuccess);
  CHECK(a.out.find("PASS") != std::string::npos);
  CHECK(run({"check", "--model", "finpar", "--suite", "R", "--exhaustive"}).code == cli::kSuccess);
  CHECK(run({"check", "--model", "frac", "--suite", "FRIG", "--cases", "20", "--rig", "Z"}).code == cli::kSuccess);
  CHECK(run({"check", "--model", "rat", "--suite", "R", "--exhaustive"}).code == cli::kUsage);
  CHECK(run({"check", "--model", "finpar", "--suite", "R", "--axiom", "R.4", "--cases", "4"}).code == cli::kSuccess);

  ::setenv("DIFFREST_SEED", "123", 1);
  const auto env = nlohmann::json::parse(run({"--json", "check", "--model", "finpar", "--suite", "R", "--cases", "2",
                                              "--seed", "9"})
                                             .out);
  CHECK(env["reports"][0]["seed"] == 123);
  ::setenv("DIFFREST_SEED", "abc", 1);
  CHECK(run({"check", "--model", "finpar", "--suite", "R", "--cases", "2"}).code == cli::kUsage);
  ::unsetenv("DIFFREST_SEED");
}
