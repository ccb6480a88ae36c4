#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "dea/dataset.hpp"
#include "dea/pipeline.hpp"
#include "json.hpp"
#include "report_io.hpp"

namespace dea::cli {
namespace {

const std::string kTable = std::string(DEA_DATA_DIR) + "/table1.csv";
const std::string kSingle = std::string(DEA_DATA_DIR) + "/single.csv";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> names_of(const nlohmann::json& arr) {
  return arr.get<std::vector<std::string>>();
}

TEST(Classify, NineDmuExample) {
  const auto r = invoke({"classify", kTable});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::vector<std::pair<std::string, std::string>> rows;
  std::string name, status;
  while (lines >> name >> status) rows.emplace_back(name, status);
  ASSERT_EQ(rows.size(), 9u);
  for (int j = 0; j < 4; ++j) EXPECT_EQ(rows[j].second, "extreme-efficient");
  EXPECT_EQ(rows[4], (std::pair<std::string, std::string>{"DMU5", "efficient"}));
  for (int j = 5; j < 9; ++j) EXPECT_EQ(rows[j].second, "inefficient");
  EXPECT_TRUE(r.err.empty());
}

TEST(Classify, MissingFileAndSingleRow) {
  const auto missing = invoke({"classify", "/nonexistent/missing.csv"});
  EXPECT_EQ(missing.code, kExitInputError);
  EXPECT_TRUE(missing.out.empty());
  EXPECT_FALSE(missing.err.empty());

  const auto single = invoke({"classify", kSingle});
  EXPECT_EQ(single.code, kExitOk);
  EXPECT_NE(single.out.find("extreme-efficient"), std::string::npos);
}

TEST(Analyze, Dmu8Json) {
  const auto r = invoke({"analyze", kTable, "--dmu", "DMU8", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["dmus"].size(), 1u);
  const auto& d = j["dmus"][0];
  EXPECT_EQ(d["name"], "DMU8");
  EXPECT_EQ(d["status"], "inefficient");
  const auto p = d["closest"]["point"].get<std::vector<double>>();
  ASSERT_EQ(p.size(), 3u);
  EXPECT_NEAR(p[0], 5, 1e-9);
  EXPECT_NEAR(p[1], 3, 1e-9);
  EXPECT_NEAR(p[2], 1.1, 1e-9);
  EXPECT_EQ(names_of(d["closest"]["mcrs"]), (std::vector<std::string>{"DMU3", "DMU4"}));
  EXPECT_GT(d["closest"]["eta"].get<double>(), 0.0);
  EXPECT_TRUE(d["closest"]["hyperplane"].contains("u"));
  EXPECT_TRUE(d["closest"]["hyperplane"].contains("v"));
  EXPECT_EQ(j["config"]["mode"], "both");
  EXPECT_EQ(j["config"]["candidates"], "support");
}

TEST(Analyze, FurthestDmu9) {
  const auto r = invoke({"analyze", kTable, "--mode", "furthest", "--dmu", "DMU9", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto d = nlohmann::json::parse(r.out)["dmus"][0];
  EXPECT_NEAR(d["furthest"]["objective"].get<double>(), 5.0, 1e-9);
  EXPECT_EQ(names_of(d["furthest"]["maximal_frs"]), (std::vector<std::string>{"DMU3"}));
  EXPECT_FALSE(d.contains("closest"));

  const auto table = invoke({"analyze", kTable, "--mode", "furthest", "--dmu", "DMU9"});
  ASSERT_EQ(table.code, kExitOk);
  EXPECT_NE(table.out.find("DMU9"), std::string::npos);
  EXPECT_EQ(table.out.find("DMU8"), std::string::npos);
}

TEST(Analyze, TinyBigMIsASolverError) {
  const auto r = invoke({"analyze", kTable, "--big-m", "1"});
  EXPECT_EQ(r.code, kExitSolverError);
  EXPECT_NE(r.err.find("big-M"), std::string::npos) << r.err;

  const auto j = invoke({"analyze", kTable, "--big-m", "1", "--format", "json"});
  EXPECT_EQ(j.code, kExitSolverError);
  const auto doc = nlohmann::json::parse(j.out);
  bool any = false;
  for (const auto& d : doc["dmus"]) any = any || d.contains("error");
  EXPECT_TRUE(any);
}

TEST(Analyze, FlagValidation) {
  EXPECT_EQ(invoke({"analyze", kTable, "--big-m", "zero"}).code, kExitInputError);
  EXPECT_EQ(invoke({"analyze", kTable, "--big-m", "-5"}).code, kExitInputError);
  EXPECT_EQ(invoke({"analyze", kTable, "--mode", "sideways"}).code, kExitInputError);
  EXPECT_EQ(invoke({"analyze", kTable, "--dmu", "DMU42"}).code, kExitInputError);
  EXPECT_EQ(invoke({"analyze", kTable, "--format", "xml"}).code, kExitInputError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(invoke({}).code, kExitInputError);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(invoke({"analyze", kTable, "--big-m", "auto", "--dmu", "DMU1"}).code, kExitOk);
}

TEST(Analyze, CandidatePolicyFlag) {
  const auto r = invoke(
      {"analyze", kTable, "--dmu", "DMU9", "--candidates", "all-efficient", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto d = nlohmann::json::parse(r.out)["dmus"][0];
  EXPECT_EQ(names_of(d["closest"]["mcrs"]), (std::vector<std::string>{"DMU4"}));
  EXPECT_EQ(d["closest"]["mu"].size(), 5u);
}

TEST(Analyze, CsvAndTableShapes) {
  const auto csv = invoke({"analyze", kTable, "--format", "csv"});
  ASSERT_EQ(csv.code, kExitOk);
  std::istringstream lines(csv.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header.rfind("dmu,status,furthest_objective,", 0), 0u) << header;
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 9);

  const auto table = invoke({"analyze", kTable});
  ASSERT_EQ(table.code, kExitOk);
  EXPECT_NE(table.out.find("DMU7 [1]"), std::string::npos) << table.out;
  EXPECT_NE(table.out.find("[1] DMU7: closest target (7, 4, 1.5)"), std::string::npos);
  EXPECT_NE(table.out.find("1.55556"), std::string::npos);
}

TEST(Analyze, JsonMatchesInMemoryReport) {
  const auto ds = load_dataset_file(kTable);
  const auto report = analyze_all(ds, AnalysisConfig{});
  const auto r = invoke({"analyze", kTable, "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto parsed = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(parsed, report_to_json(ds, report));
  EXPECT_EQ(parsed["dataset"]["digest"], report.dataset_digest);
  ASSERT_EQ(parsed["dmus"].size(), report.records.size());
  for (std::size_t k = 0; k < report.records.size(); ++k) {
    const auto& rec = report.records[k];
    const auto& d = parsed["dmus"][k];
    EXPECT_EQ(d["name"], ds.name(rec.dmu));
    const auto& p = rec.closest->projection;
    EXPECT_EQ(d["closest"]["objective"].get<double>(), p.objective);
    const auto pt = d["closest"]["point"].get<std::vector<double>>();
    EXPECT_EQ(pt[0], p.point.inputs[0]);
    EXPECT_EQ(pt[1], p.point.inputs[1]);
    EXPECT_EQ(pt[2], p.point.outputs[0]);
    std::vector<std::string> members;
    for (auto j : rec.closest->maximal_set.members) members.push_back(ds.name(j));
    EXPECT_EQ(names_of(d["closest"]["mcrs"]), members);
    EXPECT_EQ(d["furthest"]["objective"].get<double>(), rec.furthest->projection.objective);
  }
}

TEST(Analyze, ByteIdenticalRuns) {
  const auto a = invoke({"analyze", kTable, "--format", "json"});
  const auto b = invoke({"analyze", kTable, "--format", "json"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace dea::cli
