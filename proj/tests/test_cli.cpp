#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "knotord/alexander.hpp"
#include "knotord/cabling.hpp"
#include "knotord/cli.hpp"
#include "knotord/errors.hpp"
#include "knotord/render.hpp"
#include "knotord/table.hpp"

using namespace knotord;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("knotord_test_" + name);
  std::ofstream(path) << content;
  return path;
}

const std::string kTrefoilTable = "name,alexander,bridge,braid\n\"T(2,3)\",t - 1 + t^-1,2,2\n";

}  // namespace

TEST(Render, TrefoilCounts) {
  const auto svg = render_svg(curve_from_alexander(LaurentPoly::parse("t - 1 + t^-1")));
  EXPECT_EQ(count(svg, "class=\"crossing\""), 3u);
  EXPECT_EQ(count(svg, "class=\"arc right\""), 1u);
  EXPECT_EQ(count(svg, "class=\"arc left\""), 1u);
  EXPECT_EQ(count(svg, "class=\"mu\""), 1u);
  EXPECT_EQ(count(svg, "class=\"border\""), 2u);
  EXPECT_NE(svg.find("eta_1^{--} x1"), std::string::npos);
}

TEST(Render, UnknotIsOneStraightLine) {
  const auto svg = render_svg(PegCurve({0}));
  EXPECT_EQ(count(svg, "class=\"crossing\""), 1u);
  EXPECT_EQ(count(svg, "class=\"arc "), 0u);
  const std::regex straight("class=\"end\" stroke=\"black\" d=\"M -?\\d+ (\\d+) H \\d+\"");
  EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), straight), std::sregex_iterator()), 2);
}

TEST(Render, CableCrossingCountMatchesTermCount) {
  const auto k = parse_knot("C(2,5;T(2,3))");
  const auto svg = render_svg(geometric_curve(k));
  // t^4 - t^3 + 1 - t^-3 + t^-4
  EXPECT_EQ(alexander(k).size(), 5u);
  EXPECT_EQ(count(svg, "class=\"crossing\""), alexander(k).size());
}

TEST(Render, Deterministic) {
  const auto c = geometric_curve(parse_knot("C(3,7;T(2,3))"));
  EXPECT_EQ(render_svg(c), render_svg(c));
  EXPECT_EQ(render_svg(c), render_svg(curve_from_json(nlohmann::json::parse(to_json(c).dump()))));
}

TEST(Table, IngestFile) {
  const auto path = temp_file("ingest.csv", kTrefoilTable + "T34,t^3 - t^2 + 1 - t^-2 + t^-3,3,3\n");
  const auto rows = ingest_table(path);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].ord, 2);
  EXPECT_THROW(ingest_table("/nonexistent/table.csv"), DataError);
  EXPECT_TRUE(ingest_table(temp_file("empty.csv", "name,alexander,bridge,braid\n")).empty());
}

TEST(Cli, Alex) {
  auto r = call({"alex", "T(3,4)"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "t^3 - t^2 + 1 - t^-2 + t^-3\n");
  r = call({"alex", "T(2,4)"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("share factor 2"), std::string::npos);
  r = call({"alex", "C(2,3:T(2,3))"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("     ^"), std::string::npos);
  r = call({"alex", "C(2,3;T(2,3))", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out).at("profile").at("ord"), 2);
}

TEST(Cli, Ord) {
  auto r = call({"ord", "C(2,3;T(2,3))"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "2 [A=2 B=2 C=2]\n");
  r = call({"ord", "C(2,3;T(2,3))", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("ord"), 2);
  EXPECT_TRUE(j.at("engines_agree"));
}

TEST(Cli, Curve) {
  auto r = call({"curve", "T(2,3)"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, 11), "pegcurve 1\n");
  const auto svg_path = std::filesystem::temp_directory_path() / "knotord_test_curve.svg";
  r = call({"curve", "C(2,5;T(2,3))", "--svg", svg_path.string(), "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("crossings").size(), 5u);
  std::ifstream f(svg_path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), render_svg(geometric_curve(parse_knot("C(2,5;T(2,3))"))));
  r = call({"curve", "C(2,1;C(2,1;T(2,3)))"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(Cli, Cable) {
  auto r = call({"cable", "T(2,3)", "2", "5"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("ord_b"), 3);
  EXPECT_EQ(j.at("theorem_checks").at("thm_trefoil"), "pass");
  r = call({"cable", "T(2,3)", "2", "4"});
  EXPECT_EQ(r.code, kExitUsage);
  r = call({"cable", "T(2,3)", "2", "3", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(count(r.out, "\n"), 2u);
}

TEST(Cli, Verify) {
  auto r = call({"verify", "--theorem", "trefoil", "--p-max", "6", "--q-max", "30"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("0 failures, PASS"), std::string::npos);
  r = call({"verify", "--theorem", "mult", "--torus-max", "5", "--p-max", "3", "--q-max", "20"});
  EXPECT_EQ(r.code, kExitOk);
  r = call({"verify", "--theorem", "bounds", "--torus-max", "5", "--p-max", "3", "--q-max", "20"});
  EXPECT_EQ(r.code, kExitOk);
  r = call({"verify", "--theorem", "alex-bridge"});
  EXPECT_EQ(r.code, kExitUsage);
  r = call({"verify", "--theorem", "propagation", "--knot", "T(2,3)", "--witness", "2,3"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  r = call({"verify", "--theorem", "propagation", "--knot", "T(3,4)", "--witness", "2,7", "--target", "3,19"});
  EXPECT_EQ(r.code, kExitOk);
  r = call({"verify", "--theorem", "nonsense"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(Cli, VerifyAlexBridgeWithData) {
  const auto path = temp_file("braid.csv", kTrefoilTable + "\"T(3,4)\",t^3 - t^2 + 1 - t^-2 + t^-3,3,3\n");
  const auto r = call({"verify", "--theorem", "alex-bridge", "--data", path.string(), "--torus-max", "4", "--p-max",
                       "3", "--q-max", "20"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
}

TEST(Cli, Sweep) {
  const auto cfg = temp_file("sweep.json", R"j({"companions": ["T(2,3)"], "p": [2, 3], "q": [1, 10]})j");
  auto r = call({"sweep", "--config", cfg.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(count(r.out, "\n"), 12u);
  const auto prefix = (std::filesystem::temp_directory_path() / "knotord_test_sweep").string();
  r = call({"sweep", "--config", cfg.string(), "--out", prefix});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(std::filesystem::exists(prefix + ".jsonl"));
  EXPECT_TRUE(std::filesystem::exists(prefix + ".csv"));
  r = call({"sweep", "--config", "/nonexistent.json"});
  EXPECT_EQ(r.code, kExitDataError);
  const auto bad = temp_file("bad.json", "{\"p\": [2,3]");
  r = call({"sweep", "--config", bad.string()});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(Cli, Bounds) {
  const auto path = temp_file("bounds.csv", kTrefoilTable);
  auto r = call({"bounds", "C(2,3;T(2,3))", "--data", path.string(), "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("bridge_lower_bound"), 3);
  EXPECT_EQ(j.at("braid_index"), 4);
  EXPECT_TRUE(j.at("question_flag"));
}

TEST(Cli, Ingest) {
  auto r = call({"ingest", temp_file("ok.csv", kTrefoilTable).string()});
  EXPECT_EQ(r.code, kExitOk);
  r = call({"ingest", temp_file("bad.csv", "name,alexander,bridge,braid\nX, t^2 + t, , \n").string()});
  EXPECT_EQ(r.code, kExitDataError);
  EXPECT_NE(r.err.find("row 2"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"alex"}).code, kExitUsage);
  EXPECT_EQ(call({"alex", "T(2,3)", "--format", "svg"}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}
