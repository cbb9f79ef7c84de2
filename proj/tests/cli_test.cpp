#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cebit/cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cebit");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cebit::cli_main(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path outdir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("cebit_cli_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST(Cli, TeleportWritesOutputs) {
  const auto dir = outdir("teleport");
  const CliRun r = cli({"teleport", "--grid", "128", "--outcome", "11", "--out", dir.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("XZ"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "teleport.csv"));
}

TEST(Cli, FlagsOverrideConfig) {
  const auto dir = outdir("override");
  const auto cfg = std::filesystem::temp_directory_path() / "cebit_cli_test.cfg";
  std::ofstream(cfg) << "grid.n = 128\noutcome = 01\n";
  const CliRun r = cli({"--config", cfg.string(), "teleport", "--outcome", "10", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("outcome 10"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"teleport", "--grid", "abc"}).code, 2);
  EXPECT_EQ(cli({"teleport", "--outcome", "7"}).code, 2);
  EXPECT_EQ(cli({"teleport", "--config", "/nonexistent/x.cfg"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, PreconditionViolationNamesTheKey) {
  const CliRun r = cli({"teleport", "--grid", "100"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("grid.n"), std::string::npos);
}

TEST(Cli, Fig2WritesNamedAngles) {
  const auto dir = outdir("fig2");
  const CliRun r = cli({"reproduce-fig2", "--noise", "0", "--grid", "256", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(dir / "fig2.csv");
  std::string line;
  std::vector<std::string> targets;
  std::getline(in, line);
  EXPECT_EQ(line, "theta_target,theta_mean,theta_std,ratio_target,ratio_retrieved,status");
  while (std::getline(in, line)) targets.push_back(line.substr(0, line.find(',')));
  EXPECT_EQ(targets, (std::vector<std::string>{"47", "55", "62", "76"}));
  EXPECT_TRUE(std::filesystem::exists(dir / "fig2_theta47.pgm"));
}

TEST(Cli, Outcome11SuiteUsesXZ) {
  const auto dir = outdir("suite11");
  const CliRun r = cli({"--outcome", "11", "random-suite", "--grid", "128", "--count", "10", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("correction XZ"), std::string::npos);
  std::ifstream in(dir / "random_suite_summary.txt");
  std::string line;
  double min_fid = 0;
  while (std::getline(in, line))
    if (line.rfind("min_fidelity_abstract=", 0) == 0) min_fid = std::stod(line.substr(line.find('=') + 1));
  EXPECT_GE(min_fid, 1 - 1e-12);
}

TEST(Cli, RuntimeErrorsExitThree) {
  const auto dir = outdir("runtime");
  const auto cfg = std::filesystem::temp_directory_path() / "cebit_cli_dark.cfg";
  std::ofstream(cfg) << "payload.t_beta = 0.5\n";
  // 64 samples leave no room for the hologram carriers.
  const CliRun r = cli({"--config", cfg.string(), "decompose", "--grid", "64", "--out", dir.string()});
  EXPECT_EQ(r.code, 3) << r.out;
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, RandomSuiteDeterministicAcrossThreads) {
  const auto a = outdir("suite_a"), b = outdir("suite_b");
  ASSERT_EQ(cli({"random-suite", "--grid", "128", "--count", "4", "--seed", "5", "--threads", "1", "--out",
                 a.string()}).code, 0);
  ASSERT_EQ(cli({"random-suite", "--grid", "128", "--count", "4", "--seed", "5", "--threads", "3", "--out",
                 b.string()}).code, 0);
  std::ifstream fa(a / "random_suite.csv"), fb(b / "random_suite.csv");
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_FALSE(sa.str().empty());
}
