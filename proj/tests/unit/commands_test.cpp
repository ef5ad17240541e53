#include "artin/algebra_file.hpp"
#include "artin/commands.hpp"
#include "artin/error.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

using namespace artin;
using json = nlohmann::json;

namespace {

const char *kExampleFile = "# unembeddable, dimension 12\n"
                           "vars: X Y\n"
                           "gens: X^3*Y; X^5\n"
                           "      X*Y^3 + 2*X^3   # continued\n"
                           "gens: 3*X^2*Y^2 + 5*Y^4\n";

json run(const std::string &cmd, const std::string &text, RunOptions opt = {}) {
  return json::parse(run_command(cmd, parse_algebra_file(text), opt).json);
}

ErrorCode parse_error(const std::string &text) {
  try {
    parse_algebra_file(text);
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

} // namespace

TEST(AlgebraFile, ParsesContinuationsAndComments) {
  auto f = parse_algebra_file(kExampleFile);
  EXPECT_EQ(f.vars, (VarList{"X", "Y"}));
  ASSERT_EQ(f.gens.size(), 4u);
  EXPECT_EQ(f.gens[2].to_string(), "X*Y^3 + 2*X^3");
}

TEST(AlgebraFile, Errors) {
  EXPECT_EQ(parse_error("gens: X\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("vars: X\nvars: Y\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("vars: X X\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("vars: 2X\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("vars: X\ngens: Y\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("hello\nvars: X\n"), ErrorCode::Parse);
  try {
    parse_algebra_file("vars: X\n\ngens: X^2; X^\n");
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(AlgebraFile, NoVariablesAndNoGenerators) {
  auto f = parse_algebra_file("vars:\n");
  EXPECT_TRUE(f.vars.empty());
  EXPECT_TRUE(f.gens.empty());
  auto doc = run("analyze", "vars:\n");
  EXPECT_EQ(doc["results"]["dim"], 1);
}

TEST(Commands, AnalyzeExample) {
  auto doc = run("analyze", kExampleFile);
  EXPECT_EQ(doc["status"], "ok");
  const auto &r = doc["results"];
  EXPECT_EQ(r["dim"], 12);
  EXPECT_EQ(r["basis"].size(), 12u);
  EXPECT_EQ(r["socle"]["dim"], 1);
  EXPECT_EQ(r["socle"]["elements"][0], "X^4");
  EXPECT_EQ(r["gorenstein"], true);
  EXPECT_EQ(r["principal"], false);
  EXPECT_EQ(r["embedding_obstruction"]["dim"], 1);
  EXPECT_EQ(r["unembeddable_certified"], true);
  EXPECT_EQ(r["grading"]["standard_graded"], false);
  EXPECT_EQ(doc["exit_code"], 0);
}

TEST(Commands, AnalyzeSmallCases) {
  auto x2 = run("analyze", "vars: X\ngens: X^2\n")["results"];
  EXPECT_EQ(x2["principal"], true);
  EXPECT_EQ(x2["embedding_obstruction"]["dim"], 0);
  auto m4 = run("analyze", "vars: X Y\ngens: X^4; X^3*Y; X^2*Y^2; X*Y^3; Y^4\n")["results"];
  EXPECT_EQ(m4["grading"]["standard_graded"], true);
  EXPECT_EQ(m4["grading"]["component_dims"], json::array({1, 2, 3, 4}));
  auto split = run("analyze", "vars: X\ngens: X^2 - X\n")["results"];
  EXPECT_EQ(split["local_over_Q"], false);
  EXPECT_TRUE(split["socle"].is_null());
}

TEST(Commands, InputErrorsBecomeReports) {
  auto doc = run("analyze", "vars: X Y\ngens: X*Y\n");
  EXPECT_EQ(doc["status"], "error");
  EXPECT_EQ(doc["error"]["code"], "NotZeroDimensional");
  EXPECT_EQ(doc["exit_code"], 2);
  EXPECT_EQ(run("homs", "vars: X\ngens: X^2 - X\n")["error"]["code"], "NotLocalOverQ");
  EXPECT_EQ(run("frobnicate", "vars: X\ngens: X^2\n")["error"]["code"], "InvalidArgument");
  EXPECT_EQ(run("socle-kill", "vars: X\ngens: X^3\n")["error"]["code"], "PrincipalAlgebra");
  EXPECT_EQ(run("critdeg", kExampleFile)["error"]["code"], "NotGraded");
}

TEST(Commands, HomsListsValuations) {
  RunOptions opt;
  opt.budget = 20;
  opt.nmax = 6;
  auto doc = run("homs", "vars: X Y\ngens: X^3; X^2*Y; Y^2\n", opt);
  const auto &r = doc["results"];
  EXPECT_EQ(r["residues"], json::array({"0", "0"}));
  EXPECT_EQ(r["count"], r["homs"].size());
  EXPECT_GT(r["count"].get<int>(), 0);
  EXPECT_TRUE(r["homs"][0].contains("valuations"));
}

TEST(Commands, UserImages) {
  RunOptions opt;
  opt.strategies = {SearchStrategy::User};
  opt.nmax = 5;
  opt.images = "t^2; t^3";
  auto doc = run("critdeg", "vars: X Y\ngens: X^3; X^2*Y; Y^2\n", opt);
  EXPECT_EQ(doc["results"]["critical_degree"]["lower_bound"], 2);
  opt.images = "t; t";
  EXPECT_EQ(run("homs", "vars: X Y\ngens: X^3; X^2*Y; Y^2\n", opt)["error"]["code"], "RelationViolated");
  opt.images = "t^2";
  EXPECT_EQ(run("homs", "vars: X Y\ngens: X^3; X^2*Y; Y^2\n", opt)["error"]["code"], "InvalidArgument");
  opt.images.reset();
  EXPECT_EQ(run("homs", "vars: X Y\ngens: X^3; X^2*Y; Y^2\n", opt)["error"]["code"], "InvalidArgument");
}

TEST(Commands, TauWithWitnessAndBudgetExit) {
  RunOptions opt;
  opt.budget = 40;
  opt.witness = "X^2*Y^2";
  auto doc = run("tau", kExampleFile, opt);
  EXPECT_EQ(doc["results"]["tau"]["all_killed"], true);
  EXPECT_EQ(doc["results"]["tau"]["witness_nonzero"], true);
  EXPECT_EQ(doc["exit_code"], 0);
  opt.budget = 0;
  auto empty = run("tau", kExampleFile, opt);
  EXPECT_EQ(empty["exit_code"], 4);
  EXPECT_EQ(empty["status"], "budget");
}

TEST(Commands, TauThroughSurjection) {
  RunOptions opt;
  opt.budget = 100;
  auto doc = run("tau", "vars: X Y\ngens: X^3; X^2*Y; Y^2\n", opt);
  const auto &r = doc["results"];
  EXPECT_EQ(r["surjection"]["r"], 2);
  EXPECT_EQ(r["surjection"]["iso_check"], true);
  EXPECT_EQ(r["tau"]["all_killed"], true);
  EXPECT_FALSE(r["tau"]["nonzero_certificates"].empty());
  opt.r = 5;
  EXPECT_EQ(run("tau", "vars: X Y\ngens: X^3; X^2*Y; Y^2\n", opt)["error"]["code"], "WitnessInsufficient");
}

TEST(Commands, ReportsAreByteIdentical) {
  RunOptions opt;
  opt.budget = 30;
  for (const char *cmd : {"analyze", "homs", "critdeg", "tau", "socle-kill"}) {
    auto f = parse_algebra_file("vars: X Y\ngens: X^3; Y^2\n");
    EXPECT_EQ(run_command(cmd, f, opt).json, run_command(cmd, f, opt).json) << cmd;
    EXPECT_EQ(run_command(cmd, f, opt).text, run_command(cmd, f, opt).text) << cmd;
  }
}
