#include "catwords/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace catwords {

void FamilySpec::validate() const {
  if (alphabet_bound < 1) throw std::invalid_argument("alphabet bound must be at least 1");
  if (required_last && (*required_last < 1 || *required_last > alphabet_bound)) {
    throw std::invalid_argument("required last letter outside the alphabet");
  }
  if (required_first && (*required_first < 1 || *required_first > alphabet_bound)) {
    throw std::invalid_argument("required first letter outside the alphabet");
  }
}

WordStream::WordStream(std::size_t n, FamilySpec spec) : n_(n), spec_(std::move(spec)) {
  spec_.validate();
  if (n_ == 0 && !spec_.allow_empty) {
    throw std::invalid_argument("length 0 requested without allow_empty");
  }
  letters_.assign(n_, 0);
}

void WordStream::reset() {
  started_ = false;
  done_ = false;
  letters_.assign(n_, 0);
}

bool WordStream::admissible(std::size_t i, int v) const {
  if (v < 1 || v > spec_.alphabet_bound) return false;
  if (i == 0) {
    if (spec_.required_first && v != *spec_.required_first) return false;
  } else {
    const int prev = letters_[i - 1];
    if (v > prev + 1) return false;
    if (spec_.forbid_levels && v == prev) return false;
  }
  if (spec_.required_last) {
    // The last letter can climb at most one per remaining position.
    const int target = *spec_.required_last;
    const auto remaining = static_cast<long>(n_ - 1 - i);
    if (v + remaining < target) return false;
    if (remaining == 0 && v != target) return false;
  }
  return true;
}

// Iterative backtracking: finds the lexicographically next complete word
// whose prefix before position i is fixed, trying letters >= lower at i.
bool WordStream::search(std::size_t i, int lower) {
  while (true) {
    if (i == n_) return true;
    int v = lower;
    while (v <= spec_.alphabet_bound && !admissible(i, v)) ++v;
    if (v <= spec_.alphabet_bound) {
      letters_[i] = v;
      ++i;
      lower = 1;
    } else {
      if (i == 0) return false;
      --i;
      lower = letters_[i] + 1;
    }
  }
}

bool WordStream::next() {
  if (done_) return false;
  if (n_ == 0) {
    if (started_) {
      done_ = true;
      return false;
    }
    started_ = true;
    return true;
  }
  bool found = started_ ? search(n_ - 1, letters_[n_ - 1] + 1) : search(0, 1);
  started_ = true;
  while (found && spec_.avoid && !avoids(letters_, *spec_.avoid)) {
    found = search(n_ - 1, letters_[n_ - 1] + 1);
  }
  if (!found) done_ = true;
  return found;
}

WordStream gen_catalan(std::size_t n) {
  if (n < 1) throw std::invalid_argument("Catalan words need length at least 1");
  FamilySpec spec;
  spec.alphabet_bound = static_cast<int>(n);
  spec.required_first = 1;
  return WordStream(n, spec);
}

WordStream gen_family(std::size_t n, const FamilySpec& spec) { return WordStream(n, spec); }

std::vector<Letters> collect(WordStream stream) {
  std::vector<Letters> out;
  while (stream.next()) out.push_back(stream.current());
  return out;
}

namespace {

void marked_runs(std::size_t remaining, int value, Letters& letters, std::vector<bool>& marks,
                 std::vector<MarkedWord>& out) {
  for (std::size_t len = 1; len <= remaining; ++len) {
    letters.insert(letters.end(), len, value);
    for (bool mark : {false, true}) {
      if (marks.empty() && !mark) continue;
      if (!marks.empty() && mark && marks.back()) continue;
      marks.push_back(mark);
      if (len == remaining) {
        out.emplace_back(letters, marks);
      } else {
        marked_runs(remaining - len, value + 1, letters, marks, out);
      }
      marks.pop_back();
    }
    letters.resize(letters.size() - len);
  }
}

}  // namespace

std::vector<MarkedWord> gen_marked_increasing(std::size_t n) {
  if (n < 1) throw std::invalid_argument("marked words need length at least 1");
  std::vector<MarkedWord> out;
  Letters letters;
  std::vector<bool> marks;
  marked_runs(n, 1, letters, marks, out);
  return out;
}

Statistics stats(std::span<const int> letters) {
  Statistics s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const int x = letters[i];
    s.max_letter = std::max(s.max_letter, x);
    if (x == 1) {
      ++s.ones_count;
      if (i == 0 || letters[i - 1] != 1) ++s.one_runs;
    }
    if (i + 1 < letters.size()) {
      const int y = letters[i + 1];
      if (x == y && !s.has_level) {
        s.has_level = true;
        s.first_level_index = i + 1;
      }
      if (x > y) {
        ++s.descent_count;
        s.descent_tops.push_back(x);
        if (!s.smallest_descent_bottom || y < *s.smallest_descent_bottom) {
          s.smallest_descent_bottom = y;
        }
      }
    }
  }
  if (!letters.empty()) s.last_letter = letters.back();
  return s;
}

namespace {

struct KeyName {
  StatKey key;
  std::string_view name;
};

constexpr KeyName kKeyNames[] = {
    {StatKey::Max, "max"},
    {StatKey::Last, "last"},
    {StatKey::Ones, "ones"},
    {StatKey::OneRuns, "one_runs"},
    {StatKey::HasLevel, "has_level"},
    {StatKey::FirstLevelIndex, "first_level_index"},
    {StatKey::DescentCount, "descent_count"},
    {StatKey::SmallestDescentBottom, "smallest_descent_bottom"},
};

}  // namespace

StatKey parse_stat_key(std::string_view name) {
  for (const auto& k : kKeyNames) {
    if (k.name == name) return k.key;
  }
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

std::string_view stat_key_name(StatKey key) {
  for (const auto& k : kKeyNames) {
    if (k.key == key) return k.name;
  }
  return "?";
}

int stat_value(const Statistics& s, StatKey key) {
  switch (key) {
    case StatKey::Max: return s.max_letter;
    case StatKey::Last: return s.last_letter;
    case StatKey::Ones: return s.ones_count;
    case StatKey::OneRuns: return s.one_runs;
    case StatKey::HasLevel: return s.has_level ? 1 : 0;
    case StatKey::FirstLevelIndex:
      return s.first_level_index ? static_cast<int>(*s.first_level_index) : 0;
    case StatKey::DescentCount: return s.descent_count;
    case StatKey::SmallestDescentBottom: return s.smallest_descent_bottom.value_or(0);
  }
  return 0;
}

BigInt count_avoiders(std::size_t n, const VincularPattern& pattern) {
  auto stream = gen_catalan(n);
  unsigned long count = 0;
  while (stream.next()) {
    if (avoids(stream.current(), pattern)) ++count;
  }
  return BigInt(count);
}

RefinedCounts refined_counts(std::size_t n, const VincularPattern& pattern,
                             const std::vector<StatKey>& keys) {
  std::map<std::vector<int>, unsigned long> tally;
  auto stream = gen_catalan(n);
  std::vector<int> key(keys.size());
  while (stream.next()) {
    if (!avoids(stream.current(), pattern)) continue;
    const Statistics s = stats(stream.current());
    for (std::size_t i = 0; i < keys.size(); ++i) key[i] = stat_value(s, keys[i]);
    ++tally[key];
  }
  RefinedCounts out;
  for (const auto& [k, v] : tally) out.emplace(k, BigInt(v));
  return out;
}

RefinedCounts refined_counts(std::size_t n, const VincularPattern& pattern,
                             const std::vector<std::string>& key_names) {
  std::vector<StatKey> keys;
  for (const auto& name : key_names) keys.push_back(parse_stat_key(name));
  return refined_counts(n, pattern, keys);
}

BigInt count_family(std::size_t n, const FamilySpec& spec) {
  auto stream = gen_family(n, spec);
  unsigned long count = 0;
  while (stream.next()) ++count;
  return BigInt(count);
}

}  // namespace catwords
