#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "lambda_gs/cli.hpp"
#include "lambda_gs/configurations.hpp"

using namespace lambda_gs;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json cli_json(std::vector<std::string> args) {
  const auto r = cli(std::move(args));
  EXPECT_EQ(r.code, kExitSuccess) << r.err;
  return json::parse(r.out);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(ClassifyParams, StrictOrder) {
  const auto j = cli_json({"classify-params", "--a", "1", "--b", "2", "--c", "3"});
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["minimum"], "3/2");
  EXPECT_EQ(j["member_of"], json::array({"A1"}));
  ASSERT_EQ(j["energies"].size(), 10u);
  EXPECT_EQ(j["energies"][9]["energy"], "3");
}

TEST(ClassifyParams, Diagonal) {
  const auto j = cli_json({"classify-params", "--a", "2", "--b", "2", "--c", "2"});
  EXPECT_EQ(j["member_of"].size(), 10u);
  EXPECT_EQ(j["region"]["canonical"], "T={a,b,c}");
}

TEST(ClassifyParams, TieOnBAndC) {
  const auto j = cli_json({"classify-params", "--a", "3", "--b", "1", "--c", "1"});
  EXPECT_EQ(j["member_of"], json::array({"A2", "A3", "A7", "A9"}));
}

TEST(ClassifyParams, DecimalsAreExact) {
  const auto j = cli_json({"classify-params", "--a", "0.1", "--b", "0.2", "--c", "0.3"});
  EXPECT_EQ(j["params"]["a"], "1/10");
  EXPECT_EQ(j["minimum"], "3/20");
  const auto k = cli_json({"classify-params", "--a", "0.3", "--b", "0.1", "--c", "1e-1"});
  EXPECT_EQ(k["member_of"], json::array({"A2", "A3", "A7", "A9"}));
}

TEST(ClassifyParams, BadNumberIsUsageError) {
  EXPECT_EQ(cli({"classify-params", "--a", "x", "--b", "1", "--c", "1"}).code, kExitUsage);
  EXPECT_EQ(cli({"classify-params", "--a", "1", "--b", "1"}).code, kExitUsage);
}

TEST(AnalyzeSpec, Examples) {
  const auto wp = cli_json({"analyze-spec", "--spec", "wp:1122"});
  EXPECT_EQ(wp["kind"], "weakly-periodic-strict");
  EXPECT_EQ(wp["region"]["canonical"], "T={b,c}");
  std::vector<std::string> classes;
  for (const auto& c : wp["classes"]) {
    classes.push_back(c["class"]);
    EXPECT_TRUE(c["confirmed"].get<bool>());
  }
  EXPECT_EQ(classes, (std::vector<std::string>{"C3", "C7", "C9"}));

  const auto p = cli_json({"analyze-spec", "--spec", "p:13"});
  ASSERT_EQ(p["classes"].size(), 1u);
  EXPECT_EQ(p["classes"][0]["class"], "C5");
  EXPECT_EQ(p["region"]["canonical"], "T={a,c}");

  const auto ti = cli_json({"analyze-spec", "--spec", "wp:2222"});
  EXPECT_EQ(ti["kind"], "translation-invariant");
  EXPECT_EQ(ti["region"]["canonical"], "T={c}");
}

TEST(AnalyzeSpec, OtherSubgroupAndRootRule) {
  const auto j = cli_json({"analyze-spec", "--spec", "wp:1122", "--subgroup", "3",
                           "--root-rule", "h1"});
  EXPECT_EQ(j["region"]["canonical"], "T={b,c}");
}

TEST(AnalyzeSpec, UsageErrors) {
  EXPECT_EQ(cli({"analyze-spec", "--spec", "wp:1124"}).code, kExitUsage);
  EXPECT_EQ(cli({"analyze-spec", "--spec", "1122"}).code, kExitUsage);
  EXPECT_EQ(cli({"analyze-spec", "--spec", "wp:1122", "--subgroup", "4"}).code,
            kExitUsage);
  EXPECT_EQ(cli({"analyze-spec", "--spec", "wp:1122", "--root-rule", "h3"}).code,
            kExitUsage);
  EXPECT_EQ(cli({"analyze-spec", "--spec", "wp:1122", "--format", "xml"}).code,
            kExitUsage);
  EXPECT_EQ(cli({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(cli({}).code, kExitUsage);
}

TEST(Enumerate, EightyOneRows) {
  const auto j = cli_json({"enumerate"});
  ASSERT_EQ(j["records"].size(), 81u);
  EXPECT_EQ(j["findings"].size(), 20u);
  std::vector<std::string> bc;
  for (const auto& r : j["records"]) {
    if (r["region"]["canonical"] == "T={b,c}" && !r["listed_index"].is_null() &&
        r["listed_index"].get<int>() <= 14) {
      bc.push_back(r["spec"]);
    }
  }
  EXPECT_EQ(bc.size(), 14u);
  const auto csv = split_lines(cli({"enumerate", "--format", "csv"}).out);
  ASSERT_EQ(csv.size(), 82u);
  EXPECT_EQ(csv[0].rfind("section,spec,", 0), 0u);
}

TEST(Enumerate, SpecStringsRoundTrip) {
  const auto j = cli_json({"enumerate"});
  for (const auto& r : j["records"]) {
    const std::string label = r["spec"];
    const auto parsed = std::get<WeaklyPeriodicSpec>(parse_spec(label));
    EXPECT_EQ(to_string(parsed), label);
  }
  for (const auto& f : j["findings"]) {
    const std::string label = f["spec"];
    EXPECT_EQ(to_string(std::get<WeaklyPeriodicSpec>(parse_spec(label))), label);
  }
}

TEST(Verify, PeriodicAgrees) {
  const auto j = cli_json({"verify", "periodic"});
  const auto& s = j["sections"][0]["summary"];
  EXPECT_EQ(s["agreements"], 9);
  EXPECT_EQ(s["mismatches"], 0);
}

TEST(Verify, WeaklyPeriodicAgrees) {
  const auto j = cli_json({"verify", "weakly-periodic"});
  const auto& s = j["sections"][0]["summary"];
  EXPECT_EQ(s["records"], 20);
  EXPECT_EQ(s["agreements"], 20);
  EXPECT_EQ(s["findings"], 20);
  EXPECT_EQ(s["cross_checks"], 81 * 13 * 2);
  EXPECT_EQ(s["mismatches"], 0);
}

TEST(Verify, AllIsDeterministicAndConsistent) {
  const auto a = cli({"verify", "all", "--seed", "3"});
  const auto b = cli({"verify", "all", "--seed", "3"});
  ASSERT_EQ(a.code, kExitSuccess) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = json::parse(a.out);
  EXPECT_TRUE(j["internally_consistent"].get<bool>());
  EXPECT_FALSE(j["lemmas"].empty());
  for (const char* fmt : {"csv", "markdown"}) {
    EXPECT_EQ(cli({"verify", "periodic", "--format", fmt}).out,
              cli({"verify", "periodic", "--format", fmt}).out);
  }
}

TEST(Verify, DepthLimits) {
  EXPECT_EQ(cli({"verify", "periodic", "--depth", "3"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "periodic", "--depth", "40"}).code, kExitCapacity);
  ::setenv("LAMBDA_GS_MAX_DEPTH", "5", 1);
  EXPECT_EQ(cli({"verify", "periodic", "--depth", "6"}).code, kExitCapacity);
  EXPECT_EQ(cli({"verify", "periodic", "--depth", "5"}).code, kExitSuccess);
  ::unsetenv("LAMBDA_GS_MAX_DEPTH");
  EXPECT_EQ(cli({"verify", "bogus"}).code, kExitUsage);
}

TEST(Output, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "lambda_gs_cli_test.json";
  std::filesystem::remove(path);
  const auto r = cli({"analyze-spec", "--spec", "p:12", "--out", path.string()});
  ASSERT_EQ(r.code, kExitSuccess) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = json::parse(in);
  EXPECT_EQ(j["spec"], "p:12");
  std::filesystem::remove(path);
}

TEST(Help, ExitsCleanly) {
  const auto r = cli({"--help"});
  EXPECT_EQ(r.code, kExitSuccess);
  EXPECT_NE(r.out.find("classify-params"), std::string::npos);
}
