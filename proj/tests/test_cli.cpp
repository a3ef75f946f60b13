#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/serialize.hpp"

using namespace lcmq;
using lcmq::cli::kExitOk;
using lcmq::cli::kExitUsage;
using lcmq::cli::kExitViolation;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep = ',') {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, sep);) cells.push_back(cell);
  if (!line.empty() && line.back() == sep) cells.emplace_back();
  return cells;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);) out.push_back(line);
  return out;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  ADD_FAILURE() << "missing column " << name;
  return 0;
}

}  // namespace

TEST(CliVerify, TripleWithRationalDivisor) {
  const Outcome r = run_cli({"verify", "--c", "1", "--m", "1", "--n", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["divisor"]["L"], 10);
  EXPECT_EQ(j["divisor"]["D"], "5/4");
  EXPECT_EQ(j["divisor"]["quotient"], 8);
  EXPECT_EQ(j["divisor"]["star_y"], -2);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_TRUE(j["violations"].empty());
}

TEST(CliVerify, TightDivisor) {
  const Outcome r = run_cli({"verify", "--c", "1", "--m", "2", "--n", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["divisor"]["quotient"], 1);
}

TEST(CliVerify, UsageErrors) {
  Outcome r = run_cli({"verify", "--c", "1", "--m", "3", "--n", "1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("usage"), std::string::npos);
  EXPECT_TRUE(r.out.empty());

  for (std::vector<std::string> bad : {std::vector<std::string>{"verify", "--c", "x", "--m", "1", "--n", "2"},
                                       {"verify", "--c", "0", "--m", "1", "--n", "2"},
                                       {"verify", "--m", "1", "--n", "2"},
                                       {"verify", "--c", "1", "--m", "1", "--n", "2", "--bogus"},
                                       {},
                                       {"frobnicate"}}) {
    r = run_cli(bad);
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(CliHelp, PrintsToStdout) {
  const Outcome r = run_cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("sweep"), std::string::npos);
}

TEST(CliSweep, RowCountAndContent) {
  const Outcome r = run_cli({"sweep", "--c-min", "1", "--c-max", "1", "--n-min", "1", "--n-max", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 7u);
  const auto header = split(ls[0]);
  EXPECT_EQ(header, cli::sweep_csv_header());
  bool found = false;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto cells = split(ls[i]);
    ASSERT_EQ(cells.size(), header.size());
    EXPECT_EQ(cells.back(), "ok");
    if (cells[0] == "1" && cells[1] == "1" && cells[2] == "3") {
      EXPECT_EQ(cells[column(header, "quotient")], "8");
      found = true;
    }
  }
  EXPECT_TRUE(found);
  // Canonical (c, n, m) order.
  EXPECT_EQ(split(ls[1])[2], "1");
  EXPECT_EQ(split(ls[2])[1] + split(ls[2])[2], "12");
  EXPECT_EQ(split(ls[3])[1] + split(ls[3])[2], "22");
}

TEST(CliSweep, Policies) {
  auto rows = [](std::vector<std::string> extra) {
    std::vector<std::string> args = {"sweep", "--c-max", "2", "--n-max", "10"};
    args.insert(args.end(), extra.begin(), extra.end());
    const Outcome r = run_cli(args);
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return lines(r.out).size() - 1;
  };
  EXPECT_EQ(rows({}), 2u * 55u);
  EXPECT_EQ(rows({"--m-policy", "half_ceil"}), 20u);
  EXPECT_EQ(rows({"--m-policy", "frontier"}), 20u);
  EXPECT_EQ(rows({"--m-policy", "fixed", "--m", "4"}), 2u * 7u);

  const Outcome frontier = run_cli({"sweep", "--n-min", "27", "--n-max", "27", "--m-policy", "frontier"});
  const auto cells = split(lines(frontier.out)[1]);
  EXPECT_EQ(cells[1], "23");  // 27 - ⌊9/2⌋
}

TEST(CliSweep, ConfigErrors) {
  EXPECT_EQ(run_cli({"sweep", "--c-min", "3", "--c-max", "2", "--n-max", "4"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sweep", "--n-min", "5", "--n-max", "4"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sweep", "--n-max", "4", "--m-policy", "fixed"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sweep", "--n-max", "4", "--m-policy", "sideways"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sweep", "--n-max", "4", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sweep", "--n-max", "4", "--parallelism", "0"}).code, kExitUsage);
}

TEST(CliSweep, JsonFormat) {
  const Outcome r = run_cli({"sweep", "--c-max", "2", "--n-max", "6", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["rows"].size(), 42u);
  EXPECT_EQ(j["config"]["m_policy"], "all");
}

TEST(CliSweep, ByteIdenticalAcrossParallelism) {
  std::string reference;
  for (const char* p : {"1", "4", "16"}) {
    const Outcome r = run_cli({"sweep", "--c-max", "3", "--n-max", "30", "--parallelism", p});
    ASSERT_EQ(r.code, kExitOk);
    if (reference.empty())
      reference = r.out;
    else
      EXPECT_EQ(r.out, reference) << "parallelism " << p;
  }
}

TEST(CliSweep, ViolationsAreFlagged) {
  const LogFactorials lf(5);
  std::vector<SweepRow> rows = sweep_column(1, 5, {1, 2, 3}, lf);
  EXPECT_EQ(cli::sweep_exit_code(rows), kExitOk);
  rows[1].violation = "bound t7 exceeds log L, injected";
  EXPECT_EQ(cli::sweep_exit_code(rows), kExitViolation);

  std::ostringstream csv;
  cli::write_sweep_csv(rows, csv);
  const auto ls = lines(csv.str());
  EXPECT_EQ(split(ls[1]).back(), "ok");
  EXPECT_EQ(ls[2].substr(ls[2].find("\"VIOLATION")), "\"VIOLATION: bound t7 exceeds log L, injected\"");

  std::ostringstream json;
  SweepConfig config;
  config.n_max = 5;
  cli::write_sweep_json(rows, config, json);
  const auto j = nlohmann::json::parse(json.str());
  EXPECT_FALSE(j["ok"].get<bool>());
  EXPECT_FALSE(j["rows"][1]["ok"].get<bool>());
}

TEST(CliBezout, Certificates) {
  Outcome r = run_cli({"bezout", "--c", "1", "--k", "1"});
  ASSERT_EQ(r.code, kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["d"], 5);
  EXPECT_EQ(j["r"], nlohmann::json::parse("[-4]"));
  EXPECT_EQ(j["s"], nlohmann::json::parse("[1,-2]"));

  r = run_cli({"bezout", "--c", "1", "--k", "0"});
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["d"], 1);
  EXPECT_EQ(j["r"], nlohmann::json::parse("[0]"));
  EXPECT_EQ(j["s"], nlohmann::json::parse("[-1]"));

  for (int k = 0; k <= 6; ++k) {
    r = run_cli({"bezout", "--c", "3", "--k", std::to_string(k)});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_LE(nlohmann::json::parse(r.out)["alpha"].size(), static_cast<std::size_t>(k + 1));
  }
  EXPECT_EQ(run_cli({"bezout", "--c", "1", "--k", "-1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"bezout", "--c", "0", "--k", "1"}).code, kExitUsage);
}

TEST(CliTable, RatiosAndGates) {
  const Outcome r = run_cli({"table", "--c", "2", "--n-max", "40"});
  ASSERT_EQ(r.code, kExitOk);
  const auto ls = lines(r.out);
  const auto header = split(ls[0]);
  EXPECT_EQ(header, cli::table_csv_header());
  const std::size_t oon = column(header, "oon_2n");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto cells = split(ls[i]);
    const long n = std::stol(cells[1]), m = std::stol(cells[2]);
    for (std::size_t k = 4; k < cells.size(); ++k) {
      if (cells[k] != "NA") {
        EXPECT_LE(std::stod(cells[k]), 1 + 1e-9) << ls[i];
      }
    }
    if (m == (n + 1) / 2) {
      EXPECT_NE(cells[oon], "NA");
    } else if (m > (n + 1) / 2) {
      EXPECT_EQ(cells[oon], "NA");
    }
  }
  EXPECT_EQ(ls.size(), 1u + 40u * 41u / 2u);
  EXPECT_EQ(run_cli({"table", "--c", "2"}).code, kExitUsage);
}

TEST(CliOut, WritesToFile) {
  const auto path = std::filesystem::temp_directory_path() / "lcmq_cli_out_test.json";
  const Outcome r = run_cli({"bezout", "--c", "2", "--k", "3", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["d"], 3672);
  std::filesystem::remove(path);

  EXPECT_EQ(run_cli({"bezout", "--c", "2", "--k", "3", "--out", "/nonexistent-dir/x.json"}).code, kExitUsage);
}
