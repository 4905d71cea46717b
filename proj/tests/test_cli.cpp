#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cremona/cli.hpp"

using namespace cremona;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(CliConfig cfg) {
  std::ostringstream out, err;
  const int code = run_cli(cfg, out, err);
  return {code, out.str(), err.str()};
}

CliConfig eval_cfg(int n, int m, std::string deg, std::string expr) {
  CliConfig c;
  c.command = "eval";
  c.n = n;
  c.m = m;
  c.deg = std::move(deg);
  c.expr = std::move(expr);
  return c;
}

// Runs the installed binary; returns exit status and stdout.
std::pair<int, std::string> spawn(const std::string& args) {
  const std::string cmd = std::string(CREMONA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, p)) out.append(buf, k);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(RunCliTest, Eval) {
  const CliRun r = run(eval_cfg(9, 4, "d2", "(2H-E)^9"));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "512 - 2016*d2 + 672*u6 - 144*u7 + 18*u8 - u9\n");
  EXPECT_EQ(run(eval_cfg(4, 2, "5", "H^2 E^2")).out, "-5\n");
}

TEST(RunCliTest, EvalErrors) {
  const CliRun syntax = run(eval_cfg(9, 4, "d2", "(2H-E"));
  EXPECT_EQ(syntax.code, kExitUsage);
  EXPECT_NE(syntax.err.find("column 6"), std::string::npos);
  EXPECT_EQ(run(eval_cfg(9, 4, "x", "H^9")).code, kExitUsage);
  EXPECT_EQ(run(eval_cfg(9, 4, "0", "H^9")).code, kExitUsage);
  EXPECT_EQ(run(eval_cfg(9, 4, "d2", "H^8")).code, kExitNegative);
}

TEST(RunCliTest, DegreeParsing) {
  EXPECT_EQ(parse_degree("d1"), Poly::var("d1"));
  EXPECT_EQ(parse_degree("17"), Poly(17));
  EXPECT_THROW(parse_degree("-3"), UsageError);
  EXPECT_THROW(parse_degree(""), UsageError);
}

TEST(RunCliTest, Enumerate) {
  CliConfig c;
  c.command = "enumerate";
  c.n_max = 12;
  EXPECT_EQ(run(c).out, "(4,1,3,2,2,1)\n(9,1,3,2,6,4)\n");
  c.json = true;
  const auto j = nlohmann::json::parse(run(c).out);
  EXPECT_EQ(j["survivors"].size(), 2u);
  EXPECT_EQ(j["identity_failures"], 0);
}

TEST(RunCliTest, VerifyAndReportFile) {
  CliConfig c;
  c.command = "verify";
  c.n_max = 20;
  c.ineq_max = 200;
  c.json = true;
  const auto path = std::filesystem::temp_directory_path() / "cremona_test_report.json";
  c.report_path = path.string();
  const CliRun r = run(c);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "conclusion: quadro-cubic unique\n");
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  EXPECT_EQ(j["conclusion"], "quadro-cubic unique");
  std::filesystem::remove(path);

  c.report_path = "/nonexistent-dir/report.json";
  EXPECT_EQ(run(c).code, kExitUsage);
}

TEST(RunCliTest, ExcludeCaseTwo) {
  CliConfig c;
  c.command = "exclude-case2";
  const CliRun r = run(c);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("verdict: excluded (49 > 31)"), std::string::npos);
}

TEST(RunCliTest, UnknownCommand) {
  CliConfig c;
  c.command = "frobnicate";
  EXPECT_EQ(run(c).code, kExitUsage);
}

TEST(BinaryTest, ExitCodes) {
  auto [code, out] = spawn("eval --n 9 --m 4 --deg d2 '(2H-E)^9'");
  EXPECT_EQ(code, 0);
  EXPECT_EQ(out, "512 - 2016*d2 + 672*u6 - 144*u7 + 18*u8 - u9\n");
  EXPECT_EQ(spawn("eval --n 9 --m 4 --deg d2 '(2H-'").first, 2);
  EXPECT_EQ(spawn("eval --n 9 --m 4 --deg d2 'H^8'").first, 1);
  EXPECT_EQ(spawn("frobnicate").first, 2);
  EXPECT_EQ(spawn("enumerate --n-max 2").first, 2);
  EXPECT_EQ(spawn("enumerate --n-max 9").second, "(4,1,3,2,2,1)\n(9,1,3,2,6,4)\n");
}
