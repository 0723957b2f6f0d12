#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "qalex/json_io.hpp"

using qalex::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = qalex::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliAlexander, HumanOutput) {
  EXPECT_EQ(run({"alexander", "--braid", "1 1 1"}).out, "t^-1 - 1 + t\n");
  EXPECT_EQ(run({"alexander", "--braid", "1"}).out, "1\n");
  EXPECT_EQ(run({"alexander", "--braid", "1 -2 1 -2"}).out, "-t^-1 + 3 - t\n");
  EXPECT_EQ(run({"alexander", "--braid", "1 2 1 2", "--reduced"}).out, "t^-1 - 1 + t\n");
}

TEST(CliAlexander, Json) {
  const Result r = run({"alexander", "--braid", "1 1 1", "--json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["alexander"], Json::parse(R"({"-1":"1","0":"-1","1":"1"})"));
  EXPECT_EQ(j["checks"]["at_one"], "1");
  EXPECT_EQ(j["checks"]["symmetry"], true);
}

TEST(CliAlexander, ExitCodes) {
  const Result link = run({"alexander", "--braid", "1 2", "--strands", "4"});
  EXPECT_EQ(link.code, 3);
  EXPECT_NE(link.err.find("2 components"), std::string::npos) << link.err;
  EXPECT_EQ(run({"alexander", "--braid", "1 x"}).code, 2);
  EXPECT_EQ(run({"alexander"}).code, 2);
  EXPECT_EQ(run({"alexander", "--braid", "3", "--strands", "2"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nosuch"}).code, 2);
}

TEST(CliInvariant, Coefficients) {
  const Result r = run({"invariant", "--braid", "1 1 1", "--order", "4", "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["coeffs"], Json::parse(R"(["1","0","-1","1","0"])"));
  const Json unknot = Json::parse(run({"invariant", "--braid", "1", "--order", "8", "--json"}).out);
  EXPECT_EQ(unknot["order"], 8);
  EXPECT_EQ(unknot["coeffs"], Json::parse(R"(["1","0","0","0","0","0","0","0","0"])"));
  EXPECT_EQ(run({"invariant", "--braid", "0"}).code, 2);
  EXPECT_EQ(run({"invariant", "--braid", "1 1"}).code, 3);
}

TEST(CliBurau, Json) {
  const Result r = run({"burau", "--braid", "1", "--reduced"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0][0], Json::parse(R"({"1":"-1"})"));
  EXPECT_EQ(run({"burau", "--braid", "1 2"}).code, 0);
}

TEST(CliCable, Output) {
  const Result r = run({"cable", "--braid", "1 1 1", "--n", "2", "--json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["strands"], 4);
  const Result check = run({"alexander", "--braid", j["braid"].get<std::string>(), "--strands", "4"});
  EXPECT_EQ(check.out, "t^-2 - 1 + t^2\n");
  EXPECT_EQ(run({"cable", "--braid", "1 1 1", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"cable", "--braid", "1 1", "--n", "2"}).code, 3);
}

TEST(CliVerify, SuitesPassAndExitZero) {
  EXPECT_EQ(run({"verify", "--suite", "lemma2", "--max-strands", "4", "--max-length", "10", "--seed", "42"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "hopf", "--degree", "6"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "thm2", "--samples", "20", "--seed", "3"}).code, 0);
}

TEST(CliVerify, UnknownSuite) {
  const Result r = run({"verify", "--suite", "nosuch"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("nosuch"), std::string::npos);
}

TEST(CliVerify, DeterministicJson) {
  const std::vector<std::string> args = {"verify", "--suite", "thm1", "--samples", "25", "--seed", "9", "--json"};
  const Result a = run(args);
  const Result b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_EQ(j["items"].size(), static_cast<std::size_t>(j["passed"].get<int>()));
  EXPECT_NE(run({"verify", "--suite", "thm1", "--samples", "25", "--seed", "10", "--json"}).out, a.out);
}
