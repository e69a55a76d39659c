#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "catwords/counters.hpp"
#include "cli.hpp"
#include "json.hpp"

using namespace catwords;
using namespace catwords::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result count(const char* p, int n, std::optional<Method> m) {
  std::ostringstream out, err;
  const int code = cmd_count(p, n, m, out, err);
  return {code, out.str(), err.str()};
}

Result series(const char* p, int order) {
  std::ostringstream out, err;
  const int code = cmd_series(p, order, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

int shell(const std::string& args) {
  const int status = std::system((std::string(CATWORDS_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Count, Examples) {
  EXPECT_EQ(count("2-21", 10, Method::Recurrence).out, "4654\n");
  EXPECT_EQ(count("13-2", 10, Method::Closed).out, "16796\n");
  const auto bad = count("2-21", 10, Method::Closed);
  EXPECT_EQ(bad.code, kUnsupported);
  EXPECT_NE(bad.err.find("recurrence"), std::string::npos);
  EXPECT_NE(bad.err.find("genfun"), std::string::npos);
  EXPECT_EQ(count("21-3", 9, std::nullopt).out, "3603\n");
  EXPECT_EQ(count("11-1", 6, Method::Oracle).out, "66\n");
}

TEST(Count, EveryMethodAgrees) {
  for (const auto& name : table_patterns()) {
    const auto p = VincularPattern::parse(name);
    const BigInt want = compute(p, 9, Method::Oracle);
    for (Method m : applicable_methods(p)) EXPECT_EQ(compute(p, 9, m), want) << name;
  }
}

TEST(Series, Examples) {
  const auto r = series("21-1", 20);
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.ends_with(",81947397,237152119\n"));
  EXPECT_EQ(series("1-22", 10).out, "1,2,4,9,21,51,127,323,835,2188\n");
  EXPECT_EQ(series("1-12", 5).out, "1,2,4,8,16\n");
  EXPECT_EQ(series("11-1", 5).code, kUnsupported);
}

TEST(Verify, DefaultConfigReadsOrderFromEnvironment) {
  ::setenv("CATWORDS_ORDER", "30", 1);
  EXPECT_EQ(default_config().order, 30);
  ::unsetenv("CATWORDS_ORDER");
  const RunConfig c = default_config();
  EXPECT_EQ(c.order, 24);
  EXPECT_EQ(c.max_n, 12);
  EXPECT_EQ(c.methods.size(), 4u);
}

TEST(Verify, AllRowsAgreeAndAreSorted) {
  RunConfig c;
  c.max_n = 9;
  c.format = Format::Json;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(c, out, err), kOk);
  const auto doc = nlohmann::json::parse(out.str());
  ASSERT_TRUE(doc.is_array());
  std::set<std::string> patterns;
  std::pair<std::string, int> prev{"", 0};
  bool saw_31_2 = false;
  for (const auto& row : doc) {
    EXPECT_TRUE(row["agree"].get<bool>());
    const std::pair<std::string, int> key{row["pattern"], row["n"]};
    EXPECT_LT(prev, key);
    prev = key;
    patterns.insert(key.first);
    for (const auto& [k, v] : row["values"].items()) EXPECT_TRUE(v.is_string()) << k;
    if (key == std::pair<std::string, int>{"31-2", 10}) {
      saw_31_2 = true;
      EXPECT_EQ(row["values"]["table2"], "11291");
    }
    if (key == std::pair<std::string, int>{"3-21", 10}) EXPECT_EQ(row["values"]["table1"], "10162");
  }
  EXPECT_TRUE(saw_31_2);
  EXPECT_EQ(patterns.size(), 26u);
}

TEST(Verify, DetectsMismatch) {
  std::vector<ReportRow> rows{{"2-21", 3, {{"oracle", 5}, {"table1", 6}}, false}};
  std::ostringstream text, csv;
  write_report(rows, Format::Text, text);
  write_report(rows, Format::Csv, csv);
  EXPECT_NE(text.str().find("MISMATCH"), std::string::npos);
  EXPECT_EQ(csv.str(), "pattern,n,oracle,table1,agree\n2-21,3,5,6,false\n");
}

TEST(Bfile, WritesAndRoundTrips) {
  const auto path = temp_file("catwords_b_2-31.txt");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_bfile("2-31", 10, path.string(), out, err), kOk);
  const std::string text = slurp(path);
  EXPECT_TRUE(text.ends_with("10 6046\n"));
  std::istringstream in(text);
  int n;
  std::string value;
  int expected_n = 1;
  const auto seq = fastest_sequence(VincularPattern::parse("2-31"), 10);
  while (in >> n >> value) {
    EXPECT_EQ(n, expected_n);
    EXPECT_EQ(value, seq[n - 1].get_str());
    ++expected_n;
  }
  EXPECT_EQ(expected_n, 11);

  ASSERT_EQ(cmd_bfile("1-23", 3, path.string(), out, err), kOk);
  EXPECT_EQ(slurp(path), "1 1\n2 2\n3 4\n");
  ASSERT_EQ(cmd_bfile("21-2", 10, path.string(), out, err), kOk);
  EXPECT_TRUE(slurp(path).ends_with("10 6593\n"));
  std::filesystem::remove(path);
}

TEST(Bfile, ReportsIoErrors) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_bfile("2-31", 3, "/nonexistent-dir/x/b.txt", out, err), kIoError);
  EXPECT_FALSE(err.str().empty());
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(shell("count --pattern 2-21 --n 10 --method recurrence"), kOk);
  EXPECT_EQ(shell("count --pattern 2-21 --n 10 --method closed"), kUnsupported);
  EXPECT_EQ(shell("count --pattern 1-3 --n 4"), kUnsupported);
  EXPECT_EQ(shell("series --pattern 11-1 --order 4"), kUnsupported);
  EXPECT_EQ(shell("verify --max-n 7 --format csv"), kOk);
  EXPECT_NE(shell("frobnicate"), kOk);
}
