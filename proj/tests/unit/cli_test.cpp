#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dqc/gf_complex.hpp"
#include "dqc/qstate.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dqc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Cli, VerifyOneQubit) {
  const Result r = run({"verify", "--p", "3", "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("unit_norm"), "24");
  EXPECT_EQ(j.at("irreducible"), "6");
  EXPECT_TRUE(j.at("verified").get<bool>());
}

TEST(Cli, VerifyTwoQubits) {
  const Result r = run({"verify", "--p", "3", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("unit_norm"), "2160");
  EXPECT_EQ(j.at("irreducible"), "540");
  EXPECT_EQ(j.at("unentangled_irreducible"), "36");
  EXPECT_EQ(j.at("maxent_irreducible"), "216");
}

TEST(Cli, VerifySeveralPairsGivesArray) {
  const Result r = run({"verify", "--p-list", "3,7", "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1].at("irreducible"), "42");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"verify", "--p", "5", "--n", "1"}).code, dqc::cli::kUsageError);
  EXPECT_NE(run({"verify", "--p", "5", "--n", "1"}).err.find("NotComplexifiable"), std::string::npos);
  EXPECT_EQ(run({"verify", "--p", "9", "--n", "1"}).code, dqc::cli::kUsageError);
  EXPECT_EQ(run({"verify", "--n", "1"}).code, dqc::cli::kUsageError);
  EXPECT_EQ(run({}).code, dqc::cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, dqc::cli::kUsageError);
  EXPECT_EQ(run({"enumerate", "--p", "3", "--n", "1", "--class", "half"}).code, dqc::cli::kUsageError);
  EXPECT_EQ(run({"verify", "--p", "3", "--n", "1", "--budget", "0"}).code, dqc::cli::kUsageError);
}

TEST(Cli, BudgetExceeded) {
  const Result r = run({"enumerate", "--p", "3", "--n", "4"});
  EXPECT_EQ(r.code, dqc::cli::kBudgetExceeded);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"classify", "--p", "7", "--n", "2", "--budget", "10"}).code, dqc::cli::kBudgetExceeded);
}

TEST(Cli, EnumerateIrreducibleRows) {
  const Result r = run({"enumerate", "--p", "3", "--n", "1", "--class", "irreducible"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], "p,n,norm_class,amplitudes");
  // Amplitudes parse back to unit-norm states.
  const dqc::ComplexField f(dqc::ComplexifiablePrime::validate(3));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const std::string amps = rows[i].substr(rows[i].rfind(',') + 1);
    const dqc::StateVector psi = dqc::parse_state(f, amps);
    EXPECT_EQ(dqc::vnorm(psi), dqc::Fp{1});
    EXPECT_EQ(dqc::format_amplitudes(psi.amps()), amps);
  }
}

TEST(Cli, EnumerateOutputIndependentOfThreads) {
  const Result one = run({"enumerate", "--p", "3", "--n", "2", "--threads", "1"});
  const Result four = run({"enumerate", "--p", "3", "--n", "2", "--threads", "4"});
  ASSERT_EQ(one.code, 0);
  ASSERT_EQ(four.code, 0);
  EXPECT_EQ(lines(one.out).size(), 2161u);
  EXPECT_EQ(one.out, four.out);
  const Result json = run({"enumerate", "--p", "3", "--n", "1", "--class", "zero", "--format", "json"});
  ASSERT_EQ(json.code, 0);
  EXPECT_EQ(nlohmann::json::parse(json.out).size(), 33u);
}

TEST(Cli, ClassifyHistogram) {
  const Result one = run({"classify", "--p", "3", "--n", "2", "--threads", "1"});
  const Result three = run({"classify", "--p", "3", "--n", "2", "--threads", "3"});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(one.out, three.out);
  const auto rows = lines(one.out);
  ASSERT_EQ(rows.size(), 541u);
  EXPECT_EQ(rows[0], "p,n,state,class,sum_sq,reduced_purity,separable_mask");
  std::map<std::string, int> hist;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<std::string> cols;
    std::stringstream ss(rows[i]);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    ASSERT_EQ(cols.size(), 7u);
    ++hist[cols[3]];
  }
  EXPECT_EQ(hist["Unentangled"], 36);
  EXPECT_EQ(hist["Partial"], 288);
  EXPECT_EQ(hist["Maximal"], 216);
}

TEST(Cli, BlochRows) {
  const Result r = run({"bloch", "--p", "7"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 43u);
  EXPECT_EQ(rows[0], "p,X,Y,Z,ex,ey,ez,degenerate_flag");
  EXPECT_EQ(lines(run({"bloch", "--p", "11"}).out).size(), 111u);
}

TEST(Cli, TablesDefaultGrid) {
  const Result r = run({"tables"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 1u + 6u * 4u);
  const Result j = run({"tables", "--p-list", "3", "--n-max", "2", "--format", "json"});
  const auto arr = nlohmann::json::parse(j.out);
  ASSERT_EQ(arr.size(), 2u);
  EXPECT_EQ(arr[1].at("irreducible"), "540");
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "dqc_cli_test_bloch.csv";
  const Result r = run({"bloch", "--p", "3", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(lines(buf.str()).size(), 7u);
  std::filesystem::remove(path);
}

}  // namespace
