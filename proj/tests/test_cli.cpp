#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "wavesym/cli.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = wavesym::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expect_code = 0) {
  args.push_back("--json");
  Result r = run_cli(args);
  EXPECT_EQ(r.code, expect_code) << r.err;
  json j = json::parse(r.out, nullptr, false);
  EXPECT_FALSE(j.is_discarded()) << r.out;
  return j;
}

}  // namespace

TEST(Cli, CheckInvariancePass) {
  Result r = run_cli({"check-invariance", "--f", "u^(-4)", "--g", "0", "--field", "t=2*t, x=0, u=u"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos) << r.out;
}

TEST(Cli, CheckInvarianceFailIsExitOne) {
  Result r = run_cli({"check-invariance", "--f", "u^(-4)", "--g", "0", "--field", "u=u"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST(Cli, SolvePrintsFiveFields) {
  json j = run_json({"solve", "--f", "u^4", "--g", "0", "--degree", "2"});
  EXPECT_EQ(j["dim"], 5);
  EXPECT_EQ(j["fields"].size(), 5u);
  EXPECT_EQ(j["mode"], "exact");
  EXPECT_TRUE(j.contains("invariants"));
}

TEST(Cli, UsageAndParseErrorsAreExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"solve", "--f", "u^4"}).code, 2);
  EXPECT_EQ(run_cli({"solve", "--f", "u^4 +", "--g", "0"}).code, 2);
  EXPECT_EQ(run_cli({"solve", "--f", "u^4", "--g", "0", "--mode", "fast"}).code, 2);
  EXPECT_EQ(run_cli({"check-invariance", "--f", "1", "--g", "u", "--field", "t=1"}).code, 2);
  EXPECT_EQ(run_cli({"check-invariance", "--f", "1", "--g", "u^3", "--field", "t=1, t=2"}).code, 2);
}

TEST(Cli, JsonForEverySubcommand) {
  json p = run_json({"profile", "--f", "1", "--g", "exp(u)", "--degree", "2"});
  EXPECT_EQ(p["profile"], json::array({2, 4, 6}));
  json push = run_json({"pushforward", "--f", "x^2", "--g", "u^3", "--map", "t=2*t, x=x+1", "--inverse",
                        "t=t/2, x=x-1", "--field", "t=1"});
  EXPECT_TRUE(push.contains("image"));
  EXPECT_EQ(push["fields"].size(), 1u);
  json adm = run_json({"verify-admissible", "--f", "1", "--g", "u^3", "--map", "t=x, x=t"}, 1);
  EXPECT_TRUE(adm.contains("conditions"));
  json adm2 = run_json({"verify-admissible", "--f", "1", "--g", "u^3", "--map", "t=2*t, x=2*x, u=u/2",
                        "--inverse", "t=t/2, x=x/2, u=2*u"});
  EXPECT_TRUE(adm2.contains("conditions"));
  json comm = run_json({"commutators", "--field", "t=1", "--field", "t=t, x=x"});
  EXPECT_EQ(comm["commutators"].size(), 1u);
  json inv = run_json({"algebra-invariants", "--field", "t=1", "--field", "x=1", "--field", "t=x, x=t"});
  EXPECT_EQ(inv["dim"], 3);
  EXPECT_EQ(inv["closed"], true);
  Result exp = run_cli({"catalog", "export", "--format", "json"});
  EXPECT_EQ(exp.code, 0);
  json cat = json::parse(exp.out);
  EXPECT_EQ(cat["cases"].size(), 39u);
  EXPECT_EQ(cat["additional_equivalences"].size(), 27u);
  EXPECT_EQ(cat["families"].size(), 17u);
}

TEST(Cli, DeterministicUnderSeed) {
  std::vector<std::string> a{"solve", "--f", "exp(x)*u^2", "--g", "u^3", "--degree", "1", "--seed", "7", "--json"};
  EXPECT_EQ(run_cli(a).out, run_cli(a).out);
}

TEST(Cli, ChartOptions) {
  Result r = run_cli({"check-invariance", "--f", "abs(x)", "--g", "u^3", "--negative", "x", "--field", "x=1"});
  EXPECT_EQ(r.code, 1) << r.out << r.err;
  Result q = run_cli({"check-invariance", "--f", "1", "--g", "u^3", "--range", "x=1:2", "--range", "bogus",
                      "--field", "x=1"});
  EXPECT_EQ(q.code, 2);
}
