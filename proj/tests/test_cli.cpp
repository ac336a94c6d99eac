#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "stablab/cli/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  json doc;
  std::string raw;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "stablab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  const int code = stablab::cli::run(static_cast<int>(argv.size()), argv.data(), out);
  return {code, json::parse(out.str()), out.str()};
}

}  // namespace

TEST(Cli, GroupMultiplier) {
  const auto r = call({"group", "s3.grp", "--multiplier"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["invariant_factors"], json::array());
  EXPECT_EQ(r.doc["schema_version"], stablab::cli::kSchemaVersion);
  EXPECT_EQ(call({"group", "a4.grp", "--multiplier"}).doc["invariant_factors"], json({2}));
}

TEST(Cli, GroupOtherModes) {
  EXPECT_EQ(call({"group", "q8.grp", "--abelianization"}).doc["invariant_factors"], json({2, 2}));
  EXPECT_EQ(call({"group", "s3.grp", "--exterior-square"}).doc["extsq_order"], 3);
  EXPECT_EQ(call({"group", "c2.grp", "--cohomology", "2", "Z/2"}).doc["invariant_factors"], json({2}));
}

TEST(Cli, Extension) {
  const auto r = call({"extension", "z4_over_z2.ext", "--pushforward", "Z/4:2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.doc["pushforward"]["matches_quotient"].get<bool>());
  EXPECT_TRUE(call({"extension", "heis3.ext", "--five-term", "F_3"}).doc["five_term"]["exact"].get<bool>());
  EXPECT_EQ(call({"extension", "heis2.ext", "--transgression", "Z/2"}).code, 0);
}

TEST(Cli, Symspace) {
  const auto r = call({"symspace", "--entry", "SU3_SO3"});
  EXPECT_EQ(r.doc["poincare"], json({1, 0, 0, 0, 0, 1}));
  EXPECT_TRUE(r.doc["odd_rhs"].get<bool>());
  EXPECT_EQ(call({"symspace", "--verdict", "S3,S5"}).doc["verdict"], "not operator stable");
}

TEST(Cli, StabilityVoiculescu) {
  const auto r = call({"stability", "--voiculescu", "8", "--defect", "--norm", "operator"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NEAR(r.doc["max_defect"].get<double>(), 2 * std::sin(M_PI / 8), 1e-12);
  EXPECT_NEAR(call({"stability", "--alpha", "c3.grp"}).doc["alpha"].get<double>(), std::sqrt(3.0), 1e-8);
}

TEST(Cli, Errors) {
  const auto usage = call({"group", "s3.grp"});
  EXPECT_EQ(usage.code, 2);
  EXPECT_EQ(usage.doc["error"]["name"], "UsageError");
  EXPECT_TRUE(usage.doc.contains("usage"));
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(call({"stability", "--defect", "--norm", "bogus", "--voiculescu", "3"}).doc["error"]["name"],
            "InvalidArgument");
  const auto missing = call({"symspace", "--entry", "nowhere"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(missing.doc["error"]["name"], "UnknownEntry");
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"stability", "--solve", "--presentation", "s3.grp", "--n", "6", "--seed", "3"};
  EXPECT_EQ(call(args).raw, call(args).raw);
}

TEST(Cli, VerifySuiteSmall) {
  const auto r = call({"verify", "--suite", "miller", "--max-order", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.doc["passed"].get<bool>());
  const auto& cases = r.doc["cases"];
  for (std::size_t i = 1; i < cases.size(); ++i)
    EXPECT_LT(cases[i - 1]["case"].get<std::string>(), cases[i]["case"].get<std::string>());
}

TEST(Cli, BareCatalogNames) {
  EXPECT_EQ(call({"group", "d4", "--multiplier"}).doc["invariant_factors"], json({2}));
  EXPECT_EQ(call({"extension", "heis2", "--five-term", "F_2"}).code, 0);
  EXPECT_EQ(call({"group", "no_such_group", "--multiplier"}).doc["error"]["name"], "ParseError");
}

TEST(Cli, VoiculescuAloneMeansDefect) {
  const auto r = call({"stability", "--voiculescu", "6", "--norm", "operator"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(r.doc["max_defect"].get<double>(), 1.0, 1e-12);  // 2 sin(pi/6)
  EXPECT_EQ(call({"stability", "--norm", "operator"}).code, 2);
  EXPECT_EQ(call({"stability", "--voiculescu", "6", "--defect", "--solve"}).code, 2);
}
