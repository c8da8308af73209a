#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace dyckseq::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(DYCKSEQ_GOLDEN_DIR) + "/" + name, std::ios::binary);
  EXPECT_TRUE(f) << name;
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

TEST(Map, Basic) {
  EXPECT_EQ(run_cli({"map", "0,1,0,1,2,2,0,3"}).out, "UDUUUDUDUUDDUDDD\n");
  EXPECT_EQ(run_cli({"map", "0"}).out, "UD\n");
  EXPECT_EQ(run_cli({"map", "01012203", "--format", "paren"}).out, "()((()()(())()))\n");
  EXPECT_EQ(run_cli({"map", "-"}, "0,1,0\n").out, "UDUUDD\n");
  EXPECT_EQ(run_cli({"map", "[0,1,0]"}).out, "UDUUDD\n");
}

TEST(Map, Json) {
  auto r = run_cli({"map", "0,1,0", "--format", "json"});
  EXPECT_EQ(r.out, "{\"path\":\"UDUUDD\",\"sequence\":[0,1,0]}\n");
  auto t = run_cli({"map", "0,1,0", "--format", "json", "--trace"});
  const json j = json::parse(t.out);
  EXPECT_EQ(j["trace"].size(), 2u);
  EXPECT_EQ(j["trace"][1]["case"], 1);
}

TEST(Map, Errors) {
  auto r = run_cli({"map", "0,1,2,1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not 021-avoiding"), std::string::npos);
  EXPECT_NE(r.err.find("position 4"), std::string::npos);
  EXPECT_EQ(run_cli({"map", "0,2"}).code, 1);
  EXPECT_EQ(run_cli({"map", "0,a"}).code, 1);
  EXPECT_EQ(run_cli({"map", "[0,"}).code, 1);
  EXPECT_EQ(run_cli({"map"}).code, 1);
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"map", "0", "--format", "xml"}).code, 1);
}

TEST(Unmap, Basic) {
  EXPECT_EQ(run_cli({"unmap", "UDUUUDUDUUDDUDDD"}).out, "0,1,0,1,2,2,0,3\n");
  EXPECT_EQ(run_cli({"unmap", "UD"}).out, "0\n");
  EXPECT_EQ(run_cli({"unmap", "(())"}).out, "0,0\n");
  EXPECT_EQ(run_cli({"unmap", "UUDDDU"}).code, 1);
  auto j = json::parse(run_cli({"unmap", "UUDUDD", "--format", "json", "--trace"}).out);
  EXPECT_EQ(j["sequence"], json({0, 1, 1}));
  EXPECT_EQ(j["trace"][0]["entry"], "repeat_previous");
  auto t = run_cli({"unmap", "--trace", "UUDUDD"}).out;
  EXPECT_EQ(t.substr(t.rfind('\n', t.size() - 2) + 1), "0,1,1\n");
}

TEST(Cli, RoundTripAtBoundaryUpTo8) {
  for (std::size_t n = 1; n <= 8; ++n)
    for_each_021_avoiding(n, [](const AscentSequence& s) {
      const std::string text = format_sequence(s);
      auto path = run_cli({"map", text}).out;
      path.pop_back();
      ASSERT_EQ(run_cli({"unmap", path}).out, text + "\n");
    });
}

TEST(Enumerate, Sides) {
  auto pairs = run_cli({"enumerate", "3", "--side", "pairs"});
  EXPECT_EQ(pairs.code, 0);
  EXPECT_EQ(pairs.out,
            "0,0,0\tUUUDDD\n0,0,1\tUUDDUD\n0,1,0\tUDUUDD\n0,1,1\tUUDUDD\n0,1,2\tUDUDUD\n");
  auto paths = run_cli({"enumerate", "2", "--side", "path"});
  EXPECT_EQ(paths.out, "UUDD\nUDUD\n");
  auto stats = run_cli({"enumerate", "2", "--side", "pairs", "--stats"});
  EXPECT_EQ(stats.out, "0,0\tUUDD\t2\t1\t0\t0\t-\t2\t1\t0\t0\t-\n"
                       "0,1\tUDUD\t1\t0\t1\t0\t0\t1\t0\t1\t0\t0\n");
  auto js = run_cli({"enumerate", "1", "--format", "json"});
  EXPECT_EQ(js.out, "[0]\n");
  EXPECT_EQ(run_cli({"enumerate", "0"}).code, 1);
}

TEST(Stats, BothSides) {
  EXPECT_EQ(run_cli({"stats", "--seq", "0,1,0,1,2,2,0,3"}).out,
            "initial_zeros\t1\nterminal_zeros\t0\nascents\t4\ndescents\t2\n"
            "eq_run_before_last_nonzero\t0\n");
  EXPECT_EQ(run_cli({"stats", "--path", "UDUUUDUDUUDDUDDD"}).out,
            "first_descent\t1\nlast_ascent_minus_1\t0\nvalleys\t4\nduu\t2\n"
            "degree_of_elevation\t0\n");
  auto j = json::parse(run_cli({"stats", "--path", "UUUDDD", "--format", "json"}).out);
  EXPECT_TRUE(j["degree_of_elevation"].is_null());
  EXPECT_EQ(run_cli({"stats"}).code, 1);
  EXPECT_EQ(run_cli({"stats", "--seq", "0,1,2,1"}).code, 1);
  EXPECT_EQ(run_cli({"stats", "--seq", "0", "--path", "UD"}).code, 1);
}

TEST(Verify, SummaryAndExitCodes) {
  auto r = run_cli({"verify", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sequences=132 paths=132 failures=0"), std::string::npos);
  EXPECT_EQ(r.out.substr(r.out.size() - 5), "PASS\n");

  auto upto = run_cli({"verify", "4", "--upto", "--checks", "counts,roundtrip", "--jobs", "2"});
  EXPECT_EQ(upto.code, 0);
  EXPECT_NE(upto.out.find("n=1 "), std::string::npos);
  EXPECT_NE(upto.out.find("n=4 checks=counts,roundtrip sequences=14"), std::string::npos);

  auto js = json::parse(run_cli({"verify", "5", "--format", "json"}).out);
  EXPECT_TRUE(js["passed"].get<bool>());
  EXPECT_EQ(js["sequences_checked"], 42);

  EXPECT_EQ(run_cli({"verify", "13"}).code, 1);
  EXPECT_EQ(run_cli({"verify", "4", "--checks", "nonsense"}).code, 1);
  EXPECT_EQ(run_cli({"verify", "5", "--checks", "characterization"}).code, 0);
}

TEST(Golden, MapTrace) {
  EXPECT_EQ(run_cli({"map", "--trace", "0,1,0,1,2,2,0,3"}).out, golden("map_trace_01012203.txt"));
}

TEST(Golden, Render) {
  EXPECT_EQ(run_cli({"render", "UD"}).out, golden("render_UD.txt"));
  EXPECT_EQ(run_cli({"render", "UUDD"}).out, golden("render_UUDD.txt"));
  EXPECT_EQ(run_cli({"render", "UDUUDD"}).out, golden("render_UDUUDD.txt"));
  EXPECT_EQ(run_cli({"render", "-"}, "UDUUDD\n").out, golden("render_UDUUDD.txt"));
}

TEST(Golden, StatsAllZero) {
  EXPECT_EQ(run_cli({"stats", "--seq", "0,0,0,0"}).out, golden("stats_seq_0000.txt"));
}

}  // namespace
}  // namespace dyckseq::cli
