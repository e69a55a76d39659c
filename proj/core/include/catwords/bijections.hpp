#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catwords/words.hpp"

namespace catwords {

enum class Step : char { Up = 'u', Down = 'd', Level = 'h' };

using Steps = std::vector<Step>;

/// Parses a plain u/d/h string. Throws std::invalid_argument on other chars.
Steps parse_steps(std::string_view text);
std::string format_steps(std::span<const Step> steps);

bool is_dyck(std::span<const Step> steps);
bool is_motzkin(std::span<const Step> steps);
/// Weakly-above-axis u/d/h path with an arbitrary endpoint.
bool is_motzkin_left_factor(std::span<const Step> steps);

/// True if the steps contain `factor` as a contiguous block.
bool contains_factor(std::span<const Step> steps, std::span<const Step> factor);

/// A u/d path from the origin back to the axis that never dips below it.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(Steps steps);
  static DyckPath parse(std::string_view text) { return DyckPath(parse_steps(text)); }

  const Steps& steps() const noexcept { return steps_; }
  std::size_t semilength() const noexcept { return steps_.size() / 2; }
  std::string to_string() const { return format_steps(steps_); }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  Steps steps_;
};

/// A u/d/h path from the origin back to the axis that never dips below it.
class MotzkinPath {
 public:
  MotzkinPath() = default;
  explicit MotzkinPath(Steps steps);
  static MotzkinPath parse(std::string_view text) { return MotzkinPath(parse_steps(text)); }

  const Steps& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  std::string to_string() const { return format_steps(steps_); }

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
  friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;

 private:
  Steps steps_;
};

/// One ground-level piece of a Dyck or Motzkin path: either a level step at
/// height zero, or a unit u(inner)d.
struct GroundFactor {
  bool level = false;
  Steps inner;
};

/// Splits a path that starts and ends on the axis into its ground factors.
std::vector<GroundFactor> ground_factors(std::span<const Step> steps);

/// Dyck path whose j-th up step ends at height w_j.
DyckPath word_to_dyck(const CatalanWord& word);
CatalanWord dyck_to_word(const DyckPath& path);

/// Bijection from Dyck paths of semilength n avoiding udu onto Motzkin paths
/// of length n - 1. Throws std::invalid_argument if the path contains udu.
MotzkinPath alpha(const DyckPath& path);
DyckPath alpha_inv(const MotzkinPath& path);

/// Dyck paths in which every udu has both up steps ending at height one.
bool in_dstar(const DyckPath& path);

/// Bijection from in_dstar paths of semilength n onto Motzkin paths of
/// length n. Throws std::invalid_argument outside the domain.
MotzkinPath beta(const DyckPath& path);
DyckPath beta_inv(const MotzkinPath& path);

/// Weakly increasing Catalan word whose runs carry a mark. The first run is
/// always marked and no two adjacent runs are both marked.
class MarkedWord {
 public:
  /// `marks` has one entry per run. Throws std::invalid_argument.
  MarkedWord(Letters letters, std::vector<bool> marks);

  /// Runs separated by spaces, marked runs suffixed by '*': "11* 2 3*".
  static MarkedWord parse(std::string_view text);

  const Letters& letters() const noexcept { return letters_; }
  const std::vector<bool>& marks() const noexcept { return marks_; }
  std::size_t run_count() const noexcept { return marks_.size(); }
  std::string to_string() const;

  friend bool operator==(const MarkedWord&, const MarkedWord&) = default;

 private:
  Letters letters_;
  std::vector<bool> marks_;
};

/// Shifts each marked section down so it starts at 1; the image avoids 1-32.
CatalanWord omega_to_avoider(const MarkedWord& word);

/// For each letter, moves the doubled copy in its last run to its first run.
/// Maps avoiders of 11-1 onto avoiders of 1-11 and keeps the largest and
/// last letters. Throws std::invalid_argument if the input contains 11-1.
CatalanWord transfer_runs(const CatalanWord& word);

/// Inverse of transfer_runs; requires an avoider of 1-11.
CatalanWord transfer_runs_inverse(const CatalanWord& word);

/// Adjacent letters differ by at most one.
bool is_smooth(std::span<const int> letters);
inline bool is_smooth(const CatalanWord& word) { return is_smooth(word.view()); }

}  // namespace catwords
