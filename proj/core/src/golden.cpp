#include "catwords/golden.hpp"

#include <sstream>
#include <stdexcept>

#include "golden_data.inc"

namespace catwords {

std::vector<GoldenRecord> parse_golden(std::string_view text) {
  std::vector<GoldenRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    GoldenRecord rec;
    std::string values, extra;
    if (!(fields >> rec.source)) continue;
    if (!(fields >> rec.pattern >> values) || (fields >> extra)) {
      throw std::invalid_argument("golden data line " + std::to_string(line_no) +
                                  ": expected <source> <pattern> <values>");
    }
    std::istringstream items(values);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        rec.values.emplace_back(item, 10);
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("golden data line " + std::to_string(line_no) +
                                    ": bad value '" + item + "'");
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

const std::vector<GoldenRecord>& golden_records() {
  static const std::vector<GoldenRecord> kRecords = parse_golden(kGoldenText);
  return kRecords;
}

std::vector<GoldenRecord> golden_records(std::string_view source) {
  std::vector<GoldenRecord> out;
  for (const auto& r : golden_records()) {
    if (r.source == source) out.push_back(r);
  }
  return out;
}

}  // namespace catwords
