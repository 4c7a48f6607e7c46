#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "cabling/serialization.hpp"

using cabling::Json;
using cabling::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(CliTest, InvariantsJson) {
  const Result r = call({"invariants", "C:(2,3)", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("command"), "invariants");
  EXPECT_EQ(j.at("tool").at("name"), "cabling-atlas");
  EXPECT_EQ(j.at("invariants").at("max_tb").at("value"), 1);
  EXPECT_EQ(j.at("invariants").at("euler_char").at("value"), -1);
  EXPECT_EQ(j.at("knot").at("Cprime").at("pairs"), Json::parse("[[2,3]]"));
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(call({"invariants", "C:(2,4)"}).code, 2);
  EXPECT_EQ(call({"classify", ""}).code, 2);
  EXPECT_EQ(call({"classify", "C:(2,3"}).code, 2);
  EXPECT_EQ(call({"range", "C:(2,3),(2,3)"}).code, 3);
  EXPECT_EQ(call({"tori", "C:(-2,3)"}).code, 3);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"invariants"}).code, 2);
  EXPECT_EQ(call({"range", "Cp:(2,3)", "--format", "pdf"}).code, 2);
  EXPECT_EQ(call({"invariants", "C:(2,3)", "--format", "svg"}).code, 2);
  EXPECT_EQ(call({"convert", "C:(2,3)", "--to", "X"}).code, 2);
}

TEST(CliTest, ParseErrorNamesColumn) {
  const Result r = call({"invariants", "C:(2,3),(2;3)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("column"), std::string::npos) << r.err;
}

TEST(CliTest, ClassifyTextShowsCandidateWitness) {
  const Result r = call({"classify", "C:(2,3),(2,3)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("CANDIDATE at level 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("2/3"), std::string::npos);
  EXPECT_NE(r.out.find("simple: unknown, utp: unknown"), std::string::npos) << r.out;
}

TEST(CliTest, RangeCableJson) {
  const Result r = call({"range", "Cp:(2,3)", "--cable=-13,2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("range").at("tb_max"), -2);
  EXPECT_EQ(j.at("range").at("n"), 6);
  EXPECT_EQ(j.at("range").at("s"), 1);
}

TEST(CliTest, RangeAsciiAndSvg) {
  const Result a = call({"range", "Cp:(2,3)", "--tb-floor", "-1", "--format", "ascii"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 3);
  EXPECT_NE(a.out.find('^'), std::string::npos);

  const Result s = call({"range", "Cp:(2,3)", "--cable=-25,4", "--format", "svg"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.out.rfind("<svg", 0), 0u);
  EXPECT_NE(s.out.find("class=\"valley\""), std::string::npos);
  EXPECT_NE(s.out.find("depth 3"), std::string::npos);
}

TEST(CliTest, ToriRespectsEnvironmentDefault) {
  ::setenv("CABLING_ATLAS_KMAX_DEFAULT", "3", 1);
  const Result r = call({"tori", "Cp:(2,3)", "--format", "json"});
  ::unsetenv("CABLING_ATLAS_KMAX_DEFAULT");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out).at("tori").size(), 4u);

  const Result flag = call({"tori", "Cp:(2,3)", "--k-max", "0", "--format", "json"});
  EXPECT_EQ(Json::parse(flag.out).at("tori").size(), 1u);
  EXPECT_EQ(Json::parse(call({"tori", "Cp:(2,3)", "--format", "json"}).out).at("tori").size(), 11u);
}

TEST(CliTest, ConvertRoundTrip) {
  const Result r = call({"convert", "C:(2,3),(15,2)", "--to", "Cp", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("converted").at("pairs"), Json::parse("[[2,3],[3,2]]"));
}

TEST(CliTest, BatchKeepsInputOrderAndReportsErrors) {
  std::string body = "# comment\n\n";
  for (int p = 2; p <= 40; ++p) body += "C:(" + std::to_string(p) + ",3)\n";
  const auto path = write_temp("cabling_batch_test.txt", body);
  const Result r = call({"invariants", "--batch", path.string()});
  EXPECT_EQ(r.code, 2);  // p divisible by 3 are not coprime
  std::istringstream lines(r.out);
  int p = 2;
  for (std::string line; std::getline(lines, line); ++p) {
    const Json j = Json::parse(line);
    EXPECT_EQ(j.at("input"), "C:(" + std::to_string(p) + ",3)");
    if (p % 3 == 0) {
      EXPECT_EQ(j.at("exit_code"), 2);
    } else {
      EXPECT_EQ(j.at("invariants").at("max_tb").at("value"), 3 * p - p - 3);
    }
  }
  EXPECT_EQ(p, 41);
  std::filesystem::remove(path);
}

TEST(CliTest, Version) {
  const Result v = call({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_FALSE(v.out.empty());
}
