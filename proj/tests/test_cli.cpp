#include <gtest/gtest.h>

#include <sstream>

#include "qsuper/cli.hpp"

using namespace qsuper;

namespace {
struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string line(const Result& r) {
  std::string s = r.out;
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}
}  // namespace

TEST(Cli, NormalForm) {
  EXPECT_EQ(line(run({"nf", "d*a", "--ring", "B"})), "a*d - (t^-1 - t)*b*c");
  EXPECT_EQ(line(run({"nf", "a*d + t*b*c"})), "s");
  EXPECT_EQ(line(run({"nf", "s^2"})), "1");
  EXPECT_EQ(line(run({"--ring", "Bsigma", "nf", "s*b"})), "-b*s");
}

TEST(Cli, HaarOfZeta) {
  // (1 - t^-2)/(1 - t^-4), printed in lowest terms
  Result r = run({"haar", "zeta"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(evaluate_scalar(parse(line(r))), evaluate_scalar(parse("(1 - t^-2)/(1 - t^-4)")));
  EXPECT_EQ(line(run({"haar", "zeta", "--numeric", "q=-2"})), "0.666666666667");
}

TEST(Cli, HopfCommands) {
  EXPECT_EQ(line(run({"eps", "a^2 + 3*c + 1/2"})), "3/2");
  EXPECT_EQ(line(run({"antipode", "a"})), "d*s");
  EXPECT_EQ(line(run({"star", "b"})), "t*c*s");
  EXPECT_EQ(line(run({"grade", "b*a"})), "parity: odd\nbigrade: (2, 0)");
  EXPECT_EQ(line(run({"delta", "s"})), "s (x) s");
}

TEST(Cli, PairingAndInnerProduct) {
  EXPECT_EQ(evaluate_scalar(parse(line(run({"pair", "e", "b"})))), evaluate_scalar(parse("1/(t + t^-1)")));
  EXPECT_EQ(line(run({"pair", "k", "a"})), "t");
  EXPECT_EQ(line(run({"inner", "1", "s"})), "1");
}

TEST(Cli, MatrixCoefficients) {
  EXPECT_EQ(line(run({"matcoef", "--l", "1/2", "--i", "-1/2", "--j", "-1/2"})), "a");
  EXPECT_EQ(line(run({"matcoef", "--l", "1", "--i", "0", "--j", "0", "--source", "closed"})),
            line(run({"matcoef", "--l", "1", "--i", "0", "--j", "0"})));
  EXPECT_EQ(run({"matcoef", "--l", "1", "--i", "1/2"}).code, cli::kUsage);
  EXPECT_EQ(run({"matcoef", "--l", "9"}).code, cli::kUsage);
}

TEST(Cli, Spheres) {
  Result c = run({"sphere", "--infinity", "--check", "characters"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("(0, 1, 0)"), std::string::npos);
  EXPECT_NE(c.out.find("(0, -1, 0)"), std::string::npos);
  Result r = run({"sphere", "--alpha", "1,0,1"});
  EXPECT_NE(r.out.find("lower: none exists"), std::string::npos);
  EXPECT_EQ(run({"sphere", "--infinity", "--reading", "printed"}).code, cli::kVerifyFailed);
  EXPECT_EQ(run({"sphere", "--alpha", "1,2"}).code, cli::kUsage);
  EXPECT_EQ(run({"sphere"}).code, cli::kUsage);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "--suite", "hopf", "--degree", "4"}).code, cli::kOk);
  EXPECT_EQ(run({"verify", "--suite", "nosuch"}).code, cli::kUsage);
}

TEST(Cli, UsageErrors) {
  Result r = run({"nf", "a*("});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("offset 3"), std::string::npos);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"nf", "a", "--bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"nf", "a", "--ring", "C"}).code, cli::kUsage);
  EXPECT_EQ(run({"nf", "a", "--numeric", "x=1"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, JsonOutput) {
  Result r = run({"--json", "eps", "a"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "eps");
  EXPECT_EQ(j["result"]["text"], "1");
  Result e = run({"--json", "nf", "a*("});
  auto je = nlohmann::json::parse(e.out);
  EXPECT_EQ(je["error"]["kind"], "parse");
  EXPECT_EQ(je["error"]["offset"], 3);
}

TEST(Cli, CacheLimitKeepsResults) {
  std::string plain = line(run({"nf", "(a + b + c + d)^4"}));
  EXPECT_EQ(line(run({"--cache-size", "4", "nf", "(a + b + c + d)^4"})), plain);
  Algebra::standard(Ring::Asigma).set_cache_limit(0);
}
