#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "dea/dataset.hpp"
#include "dea/error.hpp"
#include "dea/fixtures.hpp"
#include "support/instances.hpp"

namespace dea {
namespace {

constexpr const char* kNineDmuCsv =
    "dmu,in:x1,in:x2,out:y\n"
    "DMU1,1,7,1\nDMU2,2,5,1\nDMU3,4,3,1\nDMU4,6,2,1\nDMU5,3,4,1\n"
    "DMU6,3,8,1\nDMU7,7,4,1\nDMU8,5,3,1\nDMU9,9,3,1\n";

DMUDataset parse(const std::string& text) {
  std::istringstream in(text);
  return load_dataset(in);
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(LoadDataset, NineDmuBenchmark) {
  const auto ds = parse(kNineDmuCsv);
  EXPECT_EQ(ds.num_dmus(), 9u);
  EXPECT_EQ(ds.num_inputs(), 2u);
  EXPECT_EQ(ds.num_outputs(), 1u);
  EXPECT_EQ(ds.name(0), "DMU1");
  EXPECT_EQ(ds.name(8), "DMU9");
  EXPECT_EQ(ds.input_labels(), (std::vector<std::string>{"x1", "x2"}));
  EXPECT_EQ(ds.output_labels(), (std::vector<std::string>{"y"}));
  EXPECT_EQ(ds.column(8), fixtures::nine_dmu_example().column(8));
  EXPECT_TRUE(fixtures::is_nine_dmu_example(ds));
}

TEST(LoadDataset, SingleRow) {
  const auto ds = parse("dmu,in:x1,in:x2,out:y\nA,1,1,1\n");
  EXPECT_EQ(ds.num_dmus(), 1u);
  EXPECT_FALSE(fixtures::is_nine_dmu_example(ds));
}

TEST(LoadDataset, NegativeValueReportsRowAndColumn) {
  EXPECT_EQ(error_of("dmu,in:x1,in:x2,out:y\nB,-1,2,1\n"), "negative value at row 2, column in:x1");
}

TEST(LoadDataset, CommentsBlankLinesAndScientificNotation) {
  const auto ds = parse(
      "# leading comment\n"
      "\n"
      "dmu,in:a,out:b,in:c\r\n"
      "# between rows\n"
      "P,1e1,2.5E-1,+3\n"
      "\"Q, Inc\",0.5,1,0\n");
  ASSERT_EQ(ds.num_dmus(), 2u);
  EXPECT_EQ(ds.name(1), "Q, Inc");
  EXPECT_EQ(ds.input_labels(), (std::vector<std::string>{"a", "c"}));
  EXPECT_DOUBLE_EQ(ds.input(0, 0), 10.0);
  EXPECT_DOUBLE_EQ(ds.input(1, 0), 3.0);
  EXPECT_DOUBLE_EQ(ds.output(0, 0), 0.25);
  EXPECT_DOUBLE_EQ(ds.input(1, 1), 0.0);
}

TEST(LoadDataset, RejectsMalformedInput) {
  EXPECT_NE(error_of(""), "");
  EXPECT_NE(error_of("name,in:x,out:y\nA,1,1\n").find("'dmu'"), std::string::npos);
  EXPECT_NE(error_of("dmu,out:y\nA,1\n").find("missing 'in:'"), std::string::npos);
  EXPECT_NE(error_of("dmu,in:x\nA,1\n").find("missing 'out:'"), std::string::npos);
  EXPECT_NE(error_of("dmu,in:x,weight\nA,1,1\n").find("must start with"), std::string::npos);
  EXPECT_EQ(error_of("dmu,in:x,out:y\nA,1,1\nA,2,2\n"), "duplicate DMU name 'A' at row 3");
  EXPECT_EQ(error_of("dmu,in:x,out:y\nA,abc,1\n"), "non-numeric value 'abc' at row 2, column in:x");
  EXPECT_EQ(error_of("dmu,in:x,out:y\nA,1,\n"), "non-numeric value '' at row 2, column out:y");
  EXPECT_EQ(error_of("dmu,in:x,out:y\nA,1,1,1\n"),
            "malformed CSV at row 2: expected 3 fields, found 4");
  EXPECT_NE(error_of("dmu,in:x,out:y\n\"A,1,1\n").find("unterminated"), std::string::npos);
  EXPECT_NE(error_of("dmu,in:x,out:y\nA,0,1\n").find("all-zero inputs"), std::string::npos);
  EXPECT_NE(error_of("dmu,in:x,out:y\nA,1,0\n").find("all-zero outputs"), std::string::npos);
  EXPECT_NE(error_of("dmu,in:x,out:y\n").find("no DMUs"), std::string::npos);
}

TEST(LoadDataset, MissingFile) {
  EXPECT_THROW(load_dataset_file("/nonexistent/missing.csv"), InputError);
}

TEST(DmuColumn, LooksUpByName) {
  const auto ds = fixtures::nine_dmu_example();
  const auto dmu6 = dmu_column(ds, "DMU6");
  EXPECT_EQ(dmu6.inputs, (std::vector<double>{3, 8}));
  EXPECT_EQ(dmu6.outputs, (std::vector<double>{1}));
  const auto dmu4 = dmu_column(ds, "DMU4");
  EXPECT_EQ(dmu4.inputs, (std::vector<double>{6, 2}));
  EXPECT_EQ(dmu4.outputs, (std::vector<double>{1}));
  EXPECT_THROW(dmu_column(ds, "DMU99"), InputError);
}

TEST(DatasetProperties, WriteThenLoadIsIdentity) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> value(0.0, 1e3);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = dim(rng) + 2;
    const int m = dim(rng);
    const int s = dim(rng);
    std::vector<std::string> names;
    std::vector<std::string> in_labels;
    std::vector<std::string> out_labels;
    for (int j = 0; j < n; ++j) names.push_back(j % 3 == 0 ? "unit \"" + std::to_string(j) + "\", x" : "u" + std::to_string(j));
    for (int i = 0; i < m; ++i) in_labels.push_back("x" + std::to_string(i));
    for (int r = 0; r < s; ++r) out_labels.push_back("y" + std::to_string(r));
    std::vector<std::vector<double>> x(m, std::vector<double>(n));
    std::vector<std::vector<double>> y(s, std::vector<double>(n));
    for (auto& row : x)
      for (auto& v : row) v = value(rng) + 1e-3;
    for (auto& row : y)
      for (auto& v : row) v = value(rng) * 1e-7 + 1e-9;
    const DMUDataset ds(names, in_labels, out_labels, x, y);

    std::ostringstream out;
    write_dataset(out, ds);
    const auto back = parse(out.str());
    EXPECT_EQ(back, ds);
    EXPECT_EQ(back.names(), names);
  }
  for (const auto& ds : testing::random_datasets(5)) {
    std::ostringstream out;
    write_dataset(out, ds);
    EXPECT_EQ(parse(out.str()), ds);
  }
}

TEST(DatasetProperties, MaxAbsValue) {
  EXPECT_DOUBLE_EQ(fixtures::nine_dmu_example().max_abs_value(), 9.0);
}

}  // namespace
}  // namespace dea
