#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "extremal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = extremal::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + name; }

}  // namespace

TEST(Cli, GenWritesOneGraph6Line) {
  const auto r = run({"gen", "--family", "h", "--n", "11", "--d", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
  EXPECT_EQ(r.out[0], static_cast<char>(11 + 63));
}

TEST(Cli, GenJson) {
  const auto r = run({"gen", "--family", "gprime2", "--n", "9", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["name"], "G'(9,2)");
  EXPECT_EQ(j["d"], 2);
}

TEST(Cli, EvalFormulas) {
  EXPECT_EQ(run({"eval", "hk", "--n", "10", "--x", "2", "--k", "3"}).out, "58\n");
  EXPECT_EQ(run({"eval", "h", "--n", "11", "--d", "3"}).out, "37\n");
  EXPECT_EQ(run({"eval", "e", "--n", "11", "--d", "2"}).out, "40\n");
  EXPECT_EQ(run({"eval", "ek", "--n", "10", "--d", "2", "--k", "3"}).out, "58\n");
  EXPECT_EQ(run({"eval", "d0", "--n", "12"}).out, "3\n");
  EXPECT_EQ(run({"eval", "n0", "--d", "3", "--t", "5"}).out, "112\n");
  EXPECT_EQ(run({"eval", "ff", "--k", "5", "--t", "2"}).out, "20\n");
  EXPECT_EQ(run({"eval", "binom", "--a", "5/2", "--b", "2"}).out, "15/8\n");
  EXPECT_EQ(run({"eval", "star", "--degrees", "3,1,1,1", "--t", "3"}).out, "6\n");
  EXPECT_EQ(run({"eval", "star", "--degrees", "3,1,1,1", "--t", "3", "--unlabeled"}).out, "3\n");
}

TEST(Cli, PipelineGenIntoHam) {
  const auto g = run({"gen", "--family", "h", "--n", "9", "--d", "2"});
  EXPECT_EQ(run({"ham", "check"}, g.out + "Cr\n").out, "false\ntrue\n");
  EXPECT_EQ(run({"ham", "cycle"}, "Bw\n").out, "0 1 2\n");
  EXPECT_EQ(run({"ham", "path", "--from", "0", "--to", "2"}, "Bw\n").out, "0 1 2\n");
  EXPECT_EQ(run({"ham", "path", "--from", "1", "--to", "2"}, "Bo\n").out, "1 0 2\n");
  EXPECT_EQ(run({"ham", "path", "--from", "0", "--to", "1"}, "Bo\n").out, "none\n");
}

TEST(Cli, GraphCommands) {
  const auto h = run({"gen", "--family", "h", "--n", "9", "--d", "2"}).out;
  EXPECT_EQ(run({"saturate"}, h).out, h);
  EXPECT_EQ(run({"posa"}, h).out, "{\"r\":2,\"vertices\":[7,8]}\n");
  EXPECT_EQ(run({"cliques", "--k", "3"}, "Bw\nA?\n").out, "1\n0\n");
  EXPECT_EQ(run({"pathcover", "--t", "2"}, "A?\n").out, "[[1],[0]]\n");
  const auto c = run({"classify", "--d", "2"}, h);
  const auto j = nlohmann::json::parse(c.out);
  EXPECT_EQ(j["matches"][0]["family"], "h");
}

TEST(Cli, CountWithPatternFile) {
  const std::string pattern = temp_path("cli_pattern.g6");
  {
    std::ofstream f(pattern);
    f << "Bw\n";
  }
  const auto h = run({"gen", "--family", "h", "--n", "10", "--d", "2"}).out;
  EXPECT_EQ(run({"count", "--pattern", pattern}, h).out, "348\n");
  EXPECT_EQ(run({"count", "--pattern", pattern, "--unlabeled"}, h).out, "58\n");
  std::remove(pattern.c_str());
}

TEST(Cli, EnumAndGrow) {
  const auto four = run({"enum", "--n", "4"});
  EXPECT_EQ(std::count(four.out.begin(), four.out.end(), '\n'), 11);
  const auto five = run({"grow"}, four.out);
  EXPECT_EQ(std::count(five.out.begin(), five.out.end(), '\n'), 34);
  const auto filtered = run({"enum", "--n", "4", "--min-degree", "2"});
  EXPECT_EQ(std::count(filtered.out.begin(), filtered.out.end(), '\n'), 3);
}

TEST(Cli, VerifyWritesReport) {
  const std::string report = temp_path("cli_report.json");
  const auto r = run({"verify", "clique-bound", "--n", "7", "--d", "2", "--k", "3", "--workers", "2", "--report", report});
  EXPECT_EQ(r.code, 0);
  std::ifstream f(report);
  const auto j = nlohmann::json::parse(f);
  EXPECT_EQ(j["verdict"], "verified");
  EXPECT_EQ(j["theorem"], "clique-bound");
  EXPECT_EQ(j["params"]["k"], 3);
  std::remove(report.c_str());
}

TEST(Cli, VerifyReadsGraph6Files) {
  const std::string input = temp_path("cli_input.g6");
  {
    std::ofstream f(input);
    f << run({"gen", "--family", "h", "--n", "8", "--d", "1"}).out;
  }
  const auto r = run({"verify", "edge-bound", "--n", "8", "--d", "1", "--in", input, "--workers", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"graphs_checked\": \"1\""), std::string::npos);
  std::remove(input.c_str());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "h", "--n", "9", "--d", "2", "--bogus"}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "h", "--n", "9", "--d", "7"}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "nope", "--n", "9"}).code, 2);
  EXPECT_EQ(run({"ham", "check"}, "B\n").code, 2);
  EXPECT_EQ(run({"verify", "edge-bound", "--n", "9", "--d", "2"}).code, 2);  // no internal source at n = 9
  EXPECT_EQ(run({"verify", "edge-bound", "--n", "7", "--d", "2", "--workers", "0"}).code, 2);
  const auto help = run({"gen", "--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("--family"), std::string::npos);
}

TEST(Cli, ParseErrorsNameTheLine) {
  const auto r = run({"cliques", "--k", "2"}, "Bw\nA?\n???\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "3\n0\n");
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
}
