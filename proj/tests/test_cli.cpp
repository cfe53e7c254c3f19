#include <gtest/gtest.h>

#include <sstream>

#include "cuttree/cli.hpp"
#include "json.hpp"
#include "support/helpers.hpp"

using namespace cuttree;
using testing_support::fixture_path;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, MaxflowPrintsValue) {
  const auto r = run({"maxflow", "-i", fixture_path("fig1.json"), "-s", "g", "-t", "w"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "7\n");
}

TEST(Cli, MincutSide) {
  const auto r = run({"mincut", "-i", fixture_path("path3.json"), "-s", "a", "-t", "c"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["capacity"], 1);
  EXPECT_TRUE(j["side"].is_array());
}

TEST(Cli, TreeJsonAndDot) {
  const auto j = run({"tree", "-i", fixture_path("k3.json")});
  ASSERT_EQ(j.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(j.out)["edges"].size(), 3u);
  const auto d = run({"--format", "dot", "tree", "-i", fixture_path("k3.json")});
  ASSERT_EQ(d.code, kOk);
  EXPECT_NE(d.out.find("graph"), std::string::npos);
}

TEST(Cli, VerifyPassesOnSmallFixtures) {
  for (const char* f : {"fig1.json", "path3.json", "k3.json", "c4.json", "c6.json"})
    EXPECT_EQ(run({"verify", "-i", fixture_path(f)}).code, kOk) << f;
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"maxflow", "-i", fixture_path("missing.json"), "-s", "a", "-t", "b"}).code,
            kInputError);
  EXPECT_EQ(run({"maxflow", "-i", fixture_path("path3.json"), "-s", "a", "-t", "zz"}).code,
            kInputError);
  EXPECT_EQ(run({"bogus"}).code, kInputError);
}

TEST(Cli, StripSeparation) {
  const auto r = run({"strip", "sep", "-i", fixture_path("ladder.json"), "-x", "end:left",
                      "-y", "end:right"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "2\n");
}
