#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catwords/bigint.hpp"
#include "catwords/words.hpp"

namespace catwords::cli {

enum class Method { Oracle, Recurrence, Closed, Genfun };
enum class Format { Text, Json, Csv };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUnsupported = 2;
inline constexpr int kIoError = 3;

std::string_view method_name(Method m);
/// Throws std::invalid_argument on an unknown name.
Method parse_method(std::string_view name);
Format parse_format(std::string_view name);

struct RunConfig {
  int max_n = 12;
  int order = 24;
  std::vector<Method> methods{Method::Oracle, Method::Recurrence, Method::Closed,
                              Method::Genfun};
  Format format = Format::Text;
  int threads = 0;  // 0: hardware concurrency
};

/// Defaults, with `order` taken from CATWORDS_ORDER when set.
RunConfig default_config();

/// The patterns of both published tables, sorted.
const std::vector<std::string>& table_patterns();

/// Methods that can evaluate `pattern`, fastest first.
std::vector<Method> applicable_methods(const VincularPattern& pattern);

/// c_n(pattern) by `method`. Throws UnsupportedPattern if it does not apply.
BigInt compute(const VincularPattern& pattern, int n, Method method);

/// c_1..c_max_n by the fastest applicable method other than the oracle,
/// falling back to the oracle only when nothing else applies.
std::vector<BigInt> fastest_sequence(const VincularPattern& pattern, int max_n);

struct ReportRow {
  std::string pattern;
  int n = 0;
  std::map<std::string, BigInt> values;  // keyed by method name, plus "golden"
  bool agree = true;
};

/// Rows sorted by (pattern, n).
std::vector<ReportRow> verify_rows(const RunConfig& config);

void write_report(const std::vector<ReportRow>& rows, Format format, std::ostream& out);

int cmd_count(std::string_view pattern, int n, std::optional<Method> method, std::ostream& out,
              std::ostream& err);
int cmd_series(std::string_view pattern, int order, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bfile(std::string_view pattern, int max_n, const std::string& path, std::ostream& out,
              std::ostream& err);

/// Full command-line entry point.
int run(int argc, char** argv);

}  // namespace catwords::cli
