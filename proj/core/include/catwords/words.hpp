#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace catwords {

/// A finite sequence of positive integer letters.
using Letters = std::vector<int>;

/// True iff `letters` is nonempty, starts with 1 and never climbs by more
/// than one between adjacent positions.
bool validate_catalan(std::span<const int> letters);

/// Serializes letters as a digit string when every letter is at most 9 and as
/// a comma-separated list otherwise.
std::string format_letters(std::span<const int> letters);

/// Inverse of format_letters. Throws std::invalid_argument on malformed text.
Letters parse_letters(std::string_view text);

/// A validated Catalan word: w_1 = 1 and w_{i+1} <= w_i + 1.
class CatalanWord {
 public:
  /// Throws std::invalid_argument if `letters` is not a Catalan word.
  explicit CatalanWord(Letters letters);

  static CatalanWord parse(std::string_view text);

  const Letters& letters() const noexcept { return letters_; }
  std::span<const int> view() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  std::string to_string() const { return format_letters(letters_); }

  friend auto operator<=>(const CatalanWord&, const CatalanWord&) = default;

 private:
  Letters letters_;
};

/// Raised by VincularPattern parsing and construction.
class PatternError : public std::invalid_argument {
 public:
  enum class Kind { Syntax, Alphabet };

  PatternError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A dashed pattern: letters inside one section must occupy adjacent
/// positions of the host word; sections themselves may be spread apart.
/// Letters are 1..9 and the letter set must be exactly {1, ..., l}.
class VincularPattern {
 public:
  explicit VincularPattern(std::vector<Letters> sections);

  /// Grammar: section ("-" section)*, where a section is one or more digits
  /// in 1..9. Throws PatternError.
  static VincularPattern parse(std::string_view text);

  const std::vector<Letters>& sections() const noexcept { return sections_; }
  const Letters& flat() const noexcept { return flat_; }
  std::size_t length() const noexcept { return flat_.size(); }
  int alphabet_size() const noexcept { return alphabet_size_; }

  /// Section lengths (a_1, ..., a_k).
  std::vector<int> type() const;

  bool is_classical() const noexcept;
  bool is_consecutive() const noexcept { return sections_.size() == 1; }

  /// Same letters with every adjacency requirement dropped.
  VincularPattern classical() const;

  std::string to_string() const;

  friend bool operator==(const VincularPattern& a, const VincularPattern& b) {
    return a.sections_ == b.sections_;
  }

 private:
  std::vector<Letters> sections_;
  Letters flat_;
  int alphabet_size_ = 0;
};

/// Zero-based word positions selected by an occurrence, one per pattern
/// letter, in increasing order.
struct Occurrence {
  std::vector<std::size_t> indices;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Leftmost-first exhaustive search for an occurrence of `pattern` in `word`.
/// `word` may be any positive-integer sequence.
std::optional<Occurrence> find_occurrence(std::span<const int> word,
                                          const VincularPattern& pattern);

inline std::optional<Occurrence> find_occurrence(const CatalanWord& word,
                                                 const VincularPattern& pattern) {
  return find_occurrence(word.view(), pattern);
}

bool avoids(std::span<const int> word, const VincularPattern& pattern);

inline bool avoids(const CatalanWord& word, const VincularPattern& pattern) {
  return avoids(word.view(), pattern);
}

/// Checks every Occurrence invariant: increasing indices, section adjacency
/// and order-isomorphism over all pairs.
bool is_occurrence(std::span<const int> word, const VincularPattern& pattern,
                   const Occurrence& occurrence);

}  // namespace catwords
