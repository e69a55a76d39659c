#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catwords/bigint.hpp"
#include "catwords/bijections.hpp"
#include "catwords/words.hpp"

namespace catwords {

/// Constraints on growth words w_{i+1} <= w_i + 1 over the alphabet [a].
struct FamilySpec {
  int alphabet_bound = 1;
  bool forbid_levels = false;
  std::optional<int> required_last;
  std::optional<int> required_first;
  std::optional<VincularPattern> avoid;
  bool allow_empty = false;

  /// Throws std::invalid_argument if the constraints contradict each other.
  void validate() const;
};

/// Restartable lexicographic stream over a word family.
///
///   WordStream s = gen_catalan(5);
///   while (s.next()) use(s.current());
class WordStream {
 public:
  WordStream(std::size_t n, FamilySpec spec);

  /// Advances to the next word; false once the family is exhausted.
  bool next();
  const Letters& current() const noexcept { return letters_; }
  void reset();

  std::size_t length() const noexcept { return n_; }
  const FamilySpec& spec() const noexcept { return spec_; }

 private:
  bool admissible(std::size_t i, int v) const;
  bool search(std::size_t i, int lower);

  std::size_t n_;
  FamilySpec spec_;
  Letters letters_;
  bool started_ = false;
  bool done_ = false;
};

/// All of C_n in lexicographic order. Throws std::invalid_argument for n < 1.
WordStream gen_catalan(std::size_t n);

/// Growth words of length n satisfying `spec`. n = 0 needs allow_empty.
WordStream gen_family(std::size_t n, const FamilySpec& spec);

/// Collects a stream into a vector.
std::vector<Letters> collect(WordStream stream);

/// Every weakly increasing Catalan word of length n with every admissible
/// run marking (first run marked, no two adjacent runs marked).
std::vector<MarkedWord> gen_marked_increasing(std::size_t n);

struct Statistics {
  int max_letter = 0;
  int last_letter = 0;
  int ones_count = 0;
  int one_runs = 0;
  bool has_level = false;
  std::optional<std::size_t> first_level_index;  // 1-based
  int descent_count = 0;
  std::optional<int> smallest_descent_bottom;
  std::vector<int> descent_tops;
};

Statistics stats(std::span<const int> letters);
inline Statistics stats(const CatalanWord& word) { return stats(word.view()); }

enum class StatKey {
  Max,
  Last,
  Ones,
  OneRuns,
  HasLevel,
  FirstLevelIndex,
  DescentCount,
  SmallestDescentBottom,
};

/// Names: max, last, ones, one_runs, has_level, first_level_index,
/// descent_count, smallest_descent_bottom. Throws std::invalid_argument.
StatKey parse_stat_key(std::string_view name);
std::string_view stat_key_name(StatKey key);

/// Value of one statistic as an integer; absent optionals and false map to 0.
int stat_value(const Statistics& s, StatKey key);

BigInt count_avoiders(std::size_t n, const VincularPattern& pattern);

/// Counts of words in a family, grouped by a tuple of statistics.
using RefinedCounts = std::map<std::vector<int>, BigInt>;

RefinedCounts refined_counts(std::size_t n, const VincularPattern& pattern,
                             const std::vector<StatKey>& keys);
RefinedCounts refined_counts(std::size_t n, const VincularPattern& pattern,
                             const std::vector<std::string>& key_names);

/// Number of words in gen_family(n, spec).
BigInt count_family(std::size_t n, const FamilySpec& spec);

}  // namespace catwords
