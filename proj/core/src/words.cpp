#include "catwords/words.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace catwords {

namespace {

int sign(int a, int b) { return (a > b) - (a < b); }

// Depth-first placement of pattern sections. `chosen` holds word positions
// for pattern letters 0..placed-1; each new letter is compared against all
// earlier ones so a partial placement is always order-isomorphic.
class Matcher {
 public:
  Matcher(std::span<const int> word, const VincularPattern& pattern)
      : word_(word), pattern_(pattern), flat_(pattern.flat()) {
    chosen_.resize(flat_.size());
    // suffix_[s] = number of letters in sections s.. (for pruning)
    const auto& secs = pattern_.sections();
    suffix_.assign(secs.size() + 1, 0);
    for (std::size_t s = secs.size(); s-- > 0;) {
      suffix_[s] = suffix_[s + 1] + secs[s].size();
    }
  }

  bool run() { return place_section(0, 0, 0); }

  Occurrence occurrence() const { return Occurrence{chosen_}; }

 private:
  bool consistent(std::size_t letter) const {
    const int w = word_[chosen_[letter]];
    for (std::size_t k = 0; k < letter; ++k) {
      if (sign(w, word_[chosen_[k]]) != sign(flat_[letter], flat_[k])) return false;
    }
    return true;
  }

  bool place_section(std::size_t section, std::size_t first_free, std::size_t letter) {
    const auto& secs = pattern_.sections();
    if (section == secs.size()) return true;
    const std::size_t len = secs[section].size();
    if (word_.size() < suffix_[section]) return false;
    const std::size_t last_start = word_.size() - suffix_[section];
    for (std::size_t start = first_free; start <= last_start; ++start) {
      std::size_t j = 0;
      for (; j < len; ++j) {
        chosen_[letter + j] = start + j;
        if (!consistent(letter + j)) break;
      }
      if (j == len && place_section(section + 1, start + len, letter + len)) return true;
    }
    return false;
  }

  std::span<const int> word_;
  const VincularPattern& pattern_;
  const Letters& flat_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> suffix_;
};

}  // namespace

bool validate_catalan(std::span<const int> letters) {
  if (letters.empty() || letters.front() != 1) return false;
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] < 1 || letters[i] > letters[i - 1] + 1) return false;
  }
  return true;
}

std::string format_letters(std::span<const int> letters) {
  const bool digits = std::all_of(letters.begin(), letters.end(),
                                  [](int x) { return x >= 0 && x <= 9; });
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (digits) {
      out.push_back(static_cast<char>('0' + letters[i]));
    } else {
      if (i > 0) out.push_back(',');
      out += std::to_string(letters[i]);
    }
  }
  return out;
}

Letters parse_letters(std::string_view text) {
  Letters out;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("invalid letter '" + std::string(1, c) + "'");
      }
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw std::invalid_argument("invalid letter list '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

CatalanWord::CatalanWord(Letters letters) : letters_(std::move(letters)) {
  if (!validate_catalan(letters_)) {
    throw std::invalid_argument("not a Catalan word: " + format_letters(letters_));
  }
}

CatalanWord CatalanWord::parse(std::string_view text) {
  return CatalanWord(parse_letters(text));
}

VincularPattern::VincularPattern(std::vector<Letters> sections)
    : sections_(std::move(sections)) {
  if (sections_.empty()) {
    throw PatternError(PatternError::Kind::Syntax, "pattern has no sections");
  }
  std::set<int> seen;
  for (const auto& section : sections_) {
    if (section.empty()) {
      throw PatternError(PatternError::Kind::Syntax, "empty pattern section");
    }
    for (int letter : section) {
      if (letter < 1 || letter > 9) {
        throw PatternError(PatternError::Kind::Syntax,
                           "pattern letters must lie in 1..9");
      }
      flat_.push_back(letter);
      seen.insert(letter);
    }
  }
  alphabet_size_ = *seen.rbegin();
  if (static_cast<int>(seen.size()) != alphabet_size_) {
    throw PatternError(PatternError::Kind::Alphabet,
                       "pattern letters must be exactly {1,...," +
                           std::to_string(alphabet_size_) + "}");
  }
}

VincularPattern VincularPattern::parse(std::string_view text) {
  std::vector<Letters> sections(1);
  for (char c : text) {
    if (c == '-') {
      if (sections.back().empty()) {
        throw PatternError(PatternError::Kind::Syntax,
                           "empty section in '" + std::string(text) + "'");
      }
      sections.emplace_back();
    } else if (c >= '1' && c <= '9') {
      sections.back().push_back(c - '0');
    } else {
      throw PatternError(PatternError::Kind::Syntax,
                         "unexpected character '" + std::string(1, c) + "' in pattern");
    }
  }
  if (sections.back().empty()) {
    throw PatternError(PatternError::Kind::Syntax,
                       "empty section in '" + std::string(text) + "'");
  }
  return VincularPattern(std::move(sections));
}

std::vector<int> VincularPattern::type() const {
  std::vector<int> out;
  for (const auto& s : sections_) out.push_back(static_cast<int>(s.size()));
  return out;
}

bool VincularPattern::is_classical() const noexcept {
  return std::all_of(sections_.begin(), sections_.end(),
                     [](const Letters& s) { return s.size() == 1; });
}

VincularPattern VincularPattern::classical() const {
  std::vector<Letters> singles;
  for (int letter : flat_) singles.push_back({letter});
  return VincularPattern(std::move(singles));
}

std::string VincularPattern::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sections_.size(); ++i) {
    if (i > 0) out.push_back('-');
    out += format_letters(sections_[i]);
  }
  return out;
}

std::optional<Occurrence> find_occurrence(std::span<const int> word,
                                          const VincularPattern& pattern) {
  if (word.size() < pattern.length()) return std::nullopt;
  Matcher matcher(word, pattern);
  if (!matcher.run()) return std::nullopt;
  return matcher.occurrence();
}

bool avoids(std::span<const int> word, const VincularPattern& pattern) {
  if (word.size() < pattern.length()) return true;
  Matcher matcher(word, pattern);
  return !matcher.run();
}

bool is_occurrence(std::span<const int> word, const VincularPattern& pattern,
                   const Occurrence& occurrence) {
  const auto& idx = occurrence.indices;
  const auto& flat = pattern.flat();
  if (idx.size() != flat.size()) return false;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= word.size()) return false;
    if (i > 0 && idx[i] <= idx[i - 1]) return false;
  }
  std::size_t p = 0;
  for (const auto& section : pattern.sections()) {
    for (std::size_t q = 0; q + 1 < section.size(); ++q) {
      if (idx[p + q + 1] != idx[p + q] + 1) return false;
    }
    p += section.size();
  }
  for (std::size_t j = 0; j < flat.size(); ++j) {
    for (std::size_t k = 0; k < flat.size(); ++k) {
      if (sign(word[idx[j]], word[idx[k]]) != sign(flat[j], flat[k])) return false;
    }
  }
  return true;
}

}  // namespace catwords
