#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catwords/bigint.hpp"
#include "catwords/words.hpp"

namespace catwords {

/// Raised when a counting method has no formula for the requested pattern.
class UnsupportedPattern : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Base sequences. Each returns the exact value; negative n gives 0.
BigInt catalan(int n);
BigInt motzkin(int n);
/// Motzkin left factors with n - 1 steps (u/d/h paths weakly above the axis
/// ending at any height); L_1 = 1.
BigInt left_factor(int n);
BigInt fibonacci(int n);
BigInt pow2(int n);
BigInt pow3(int n);

/// Dispatch by name: catalan, motzkin, left_factor, fibonacci, pow2, pow3.
/// Throws std::invalid_argument on an unknown name.
BigInt base(std::string_view name, int n);

/// Binomial coefficient, zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Pascal triangle rows 0..n, for use inside table fills.
class BinomialTable {
 public:
  explicit BinomialTable(int n);
  const BigInt& operator()(long n, long k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_;
};

bool has_closed_form(const VincularPattern& pattern);
std::optional<BigInt> closed_form(const VincularPattern& pattern, int n);

bool has_recurrence(const VincularPattern& pattern);

/// Patterns handled by count_by_recurrence / refined_table.
const std::vector<std::string>& recurrence_patterns();
/// Patterns with a registered closed form.
const std::vector<std::string>& closed_form_patterns();

/// Dense nonnegative integer array with named dimensions. Lookups outside the
/// stored box return 0.
class TableLayer {
 public:
  TableLayer() = default;
  TableLayer(std::string name, std::vector<std::string> dims, std::vector<int> extents);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& dims() const noexcept { return dims_; }
  const std::vector<int>& extents() const noexcept { return extents_; }

  const BigInt& at(std::initializer_list<int> index) const;
  const BigInt& at(const std::vector<int>& index) const;
  BigInt& ref(std::initializer_list<int> index);

  /// Every stored nonzero entry, keyed by index tuple.
  std::map<std::vector<int>, BigInt> nonzero() const;

 private:
  std::optional<std::size_t> offset(const int* index, std::size_t count) const;

  std::string name_;
  std::vector<std::string> dims_;
  std::vector<int> extents_;
  std::vector<BigInt> data_;
  BigInt zero_;
};

/// Filled recurrence arrays for one pattern up to length N. Every table has a
/// layer "c" (dims n) holding c_n for 1 <= n <= N. The other layers:
///   2-21: u(n,m,a)    3-21: v(n,m,a)    21-2: u(n,a)    21-3: v(n,a)
///   31-2: w(n,a,b)    11-2: m(n,a), p_ab(n,a,b), p_a(n,a)
///   21-1: r_ma(n,m,a), r_m(n,m)    22-1: a(n)    32-1: b(n)
class RefinedTable {
 public:
  RefinedTable(std::string pattern, int max_n) : pattern_(std::move(pattern)), max_n_(max_n) {}

  const std::string& pattern() const noexcept { return pattern_; }
  int max_n() const noexcept { return max_n_; }

  TableLayer& add_layer(TableLayer layer);
  bool has_layer(std::string_view name) const;
  /// Throws std::out_of_range for an unknown layer.
  const TableLayer& layer(std::string_view name) const;
  std::vector<std::string> layer_names() const;

  BigInt count(int n) const { return layer("c").at({n}); }

 private:
  std::string pattern_;
  int max_n_;
  std::vector<TableLayer> layers_;
};

/// Throws UnsupportedPattern outside recurrence_patterns().
RefinedTable refined_table(const VincularPattern& pattern, int max_n);

BigInt count_by_recurrence(const VincularPattern& pattern, int n);

/// c_1..c_N from one table fill.
std::vector<BigInt> sequence_by_recurrence(const VincularPattern& pattern, int max_n);

}  // namespace catwords
