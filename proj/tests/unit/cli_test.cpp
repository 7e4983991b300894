#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "record_writer.hpp"
#include "json.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "factlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = factlab::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

TEST(Cli, ErdosRangeCsv) {
  const CliRun r = run({"erdos", "--range", "7:100000", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows.front(), "p,card,p_minus_2,ok");
  EXPECT_EQ(rows.size(), 1u + 9589u);  // 9592 primes below 10^5, minus 2, 3, 5
  EXPECT_EQ(rows[1], "7,4,5,true");  // 0!..6! mod 7 hit {1, 2, 3, 6}
  for (std::size_t i = 1; i < rows.size(); ++i) ASSERT_TRUE(rows[i].ends_with(",true")) << rows[i];
}

TEST(Cli, ErdosBelowSevenIsUsage) {
  const CliRun r = run({"erdos", "--range", "3:100"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("A(5)"), std::string::npos);
}

TEST(Cli, LangWeilAllSatisfied) {
  const CliRun r = run({"langweil", "--p", "1009", "--j", "3,5,7", "--pairs", "all"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 1u + 6u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_TRUE(rows[i].ends_with(",true")) << rows[i];
}

// For even j the quotient curve splits off the line x + y + j + 1 = 0, so it
// carries about 2p points and the check fails as it should.
TEST(Cli, ReducibleCurveFailsCheck) {
  const CliRun r = run({"langweil", "--p", "101", "--j", "4", "--pairs", "equal"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(lines(r.out).at(1).ends_with(",false"));
}

TEST(Cli, CsvQuoting) {
  using factlab::cli::RecordWriter;
  EXPECT_EQ(RecordWriter::csv_cell("3;5"), "3;5");
  EXPECT_EQ(RecordWriter::csv_cell("a,b"), "\"a,b\"");
  EXPECT_EQ(RecordWriter::csv_cell("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(RecordWriter::csv_cell(nullptr), "");
  EXPECT_EQ(RecordWriter::csv_cell(true), "true");
}

TEST(Cli, RepresentTargetOutsideField) {
  EXPECT_EQ(run({"represent", "--p", "10007", "--a", "12345"}).code, 2);
  EXPECT_EQ(run({"represent", "--p", "10007", "--a", "0"}).code, 2);
}

TEST(Cli, RepresentCertificates) {
  const CliRun r = run({"represent", "--p", "1009", "--a", "2,3,500", "--format", "json",
                     "--no-wall-time"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto row = nlohmann::json::parse(rows[i]);
    EXPECT_TRUE(row["verified"].get<bool>());
    EXPECT_LE(row["max_factor"].get<std::uint64_t>(), row["B"].get<std::uint64_t>());
  }
}

TEST(Cli, UnknownFlagIsUsage) {
  EXPECT_EQ(run({"erdos", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nope"}).code, 2);
  EXPECT_EQ(run({"langweil", "--p", "1000"}).code, 2);
  EXPECT_EQ(run({"erdos", "--range", "9-20"}).code, 2);
}

TEST(Cli, BudgetExceeded) {
  const CliRun r = run({"product", "--p", "1009", "--budget", "100"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty() || lines(r.out).size() <= 1);
}

TEST(Cli, JsonMetaFirst) {
  const CliRun r = run({"census", "--range", "100:200", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_GE(rows.size(), 2u);
  const auto meta = nlohmann::json::parse(rows[0]).at("meta");
  EXPECT_EQ(meta["subcommand"], "census");
  EXPECT_EQ(meta["columns"].size(), 6u);
  EXPECT_TRUE(meta.contains("wall_time_s"));
  EXPECT_EQ(meta["rows"].get<std::size_t>(), rows.size() - 1);
  EXPECT_EQ(meta["config"]["range"], "100:200");
}

TEST(Cli, DeterministicWithoutWallTime) {
  const std::vector<std::string> args{"expsum", "--p", "101", "--j", "3,5", "--samples", "4",
                                      "--seed", "9", "--format", "json", "--no-wall-time"};
  const CliRun a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(lines(a.out)[0])["meta"].count("wall_time_s"), 0u);
}

TEST(Cli, ThreadsSortMatchesSerial) {
  const CliRun serial = run({"erdos", "--range", "7:20000"});
  const CliRun sorted = run({"erdos", "--range", "7:20000", "--threads", "4", "--sort"});
  const CliRun loose = run({"erdos", "--range", "7:20000", "--threads", "4"});
  ASSERT_EQ(serial.code, 0);
  EXPECT_EQ(serial.out, sorted.out);
  auto a = lines(serial.out), b = lines(loose.out);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST(Cli, ThreadedUnitsKeepOrder) {
  const CliRun serial = run({"langweil", "--range", "100:400", "--j", "3,5"});
  const CliRun threaded = run({"langweil", "--range", "100:400", "--j", "3,5", "--threads", "3"});
  ASSERT_EQ(serial.code, 0) << serial.err;
  EXPECT_EQ(serial.out, threaded.out);
}

TEST(Cli, BoundsTheoremTwoHasNullCells) {
  const CliRun r = run({"bounds", "--p", "1000000000000000003", "--theorem", "2", "--N",
                     "100000000000000000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "p,N,regime,K,Q,kappa,bound,error_term,R,M,thresholds_ordered");
}

TEST(Cli, CensusCheckpointResume) {
  const auto path = std::filesystem::temp_directory_path() / "factlab_cli_checkpoints.txt";
  std::filesystem::remove(path);
  const CliRun first = run({"census", "--p", "10007", "--checkpoint-file", path.string(),
                         "--checkpoint-every", "1000"});
  ASSERT_EQ(first.code, 0) << first.err;
  const CliRun resumed = run({"census", "--p", "10007", "--L", "5000", "--checkpoint-file",
                           path.string(), "--resume"});
  const CliRun fresh = run({"census", "--p", "10007", "--L", "5000"});
  ASSERT_EQ(resumed.code, 0) << resumed.err;
  EXPECT_EQ(resumed.out, fresh.out);
  std::filesystem::remove(path);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "factlab_cli_out.csv";
  const CliRun r = run({"embed", "--p", "1009", "--N", "100", "--M", "7", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "p,N,M,ok,checked");
  std::filesystem::remove(path);
}

}  // namespace
