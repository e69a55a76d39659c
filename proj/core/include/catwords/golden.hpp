#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "catwords/bigint.hpp"

namespace catwords {

/// One reference sequence: `source` is table1, table2 or series.
struct GoldenRecord {
  std::string source;
  std::string pattern;
  std::vector<BigInt> values;  // c_1, c_2, ...
};

/// Parses "<source> <pattern> v1,v2,..." lines; '#' starts a comment.
/// Throws std::invalid_argument on a malformed line.
std::vector<GoldenRecord> parse_golden(std::string_view text);

/// The records compiled in from data/golden.txt.
const std::vector<GoldenRecord>& golden_records();

/// Records with the given source, in file order.
std::vector<GoldenRecord> golden_records(std::string_view source);

}  // namespace catwords
