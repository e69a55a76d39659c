#include "catwords/counters.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace catwords {

BigInt catalan(int n) {
  if (n < 0) return 0;
  BigInt c = 1;
  for (int k = 0; k < n; ++k) c = c * (2 * (2 * k + 1)) / (k + 2);
  return c;
}

BigInt motzkin(int n) {
  if (n < 0) return 0;
  std::vector<BigInt> m(n + 1);
  m[0] = 1;
  for (int k = 1; k <= n; ++k) {
    m[k] = m[k - 1];
    for (int j = 0; j <= k - 2; ++j) m[k] += m[j] * m[k - 2 - j];
  }
  return m[n];
}

BigInt left_factor(int n) {
  if (n < 1) return 0;
  // dp[h] = paths of the current length ending at height h
  std::vector<BigInt> dp(1, 1);
  for (int step = 0; step < n - 1; ++step) {
    std::vector<BigInt> next(dp.size() + 1);
    for (std::size_t h = 0; h < dp.size(); ++h) {
      next[h] += dp[h];
      next[h + 1] += dp[h];
      if (h > 0) next[h - 1] += dp[h];
    }
    dp = std::move(next);
  }
  BigInt total = 0;
  for (const auto& x : dp) total += x;
  return total;
}

BigInt fibonacci(int n) {
  if (n < 0) return 0;
  BigInt a = 0, b = 1;
  for (int k = 0; k < n; ++k) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

BigInt pow2(int n) {
  if (n < 0) return 0;
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return out;
}

BigInt pow3(int n) {
  if (n < 0) return 0;
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, static_cast<unsigned long>(n));
  return out;
}

BigInt base(std::string_view name, int n) {
  static const std::unordered_map<std::string_view, BigInt (*)(int)> kTable = {
      {"catalan", catalan}, {"motzkin", motzkin}, {"left_factor", left_factor},
      {"fibonacci", fibonacci}, {"pow2", pow2},     {"pow3", pow3},
  };
  const auto it = kTable.find(name);
  if (it == kTable.end()) {
    throw std::invalid_argument("unknown base sequence '" + std::string(name) + "'");
  }
  return it->second(n);
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BinomialTable::BinomialTable(int n) {
  rows_.resize(std::max(n, 0) + 1);
  for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
    rows_[i].resize(i + 1);
    rows_[i][0] = rows_[i][i] = 1;
    for (int j = 1; j < i; ++j) rows_[i][j] = rows_[i - 1][j - 1] + rows_[i - 1][j];
  }
}

const BigInt& BinomialTable::operator()(long n, long k) const {
  if (n < 0 || k < 0 || k > n) return zero_;
  if (n >= static_cast<long>(rows_.size())) {
    throw std::out_of_range("binomial table too small for n = " + std::to_string(n));
  }
  return rows_[n][k];
}

namespace {

using ClosedFn = std::function<BigInt(int)>;

const std::map<std::string, ClosedFn>& closed_forms() {
  static const std::map<std::string, ClosedFn> kForms = [] {
    std::map<std::string, ClosedFn> m;
    const ClosedFn two = [](int n) { return pow2(n - 1); };
    const ClosedFn fib = [](int n) { return fibonacci(2 * n - 1); };
    const ClosedFn three = [](int n) { return BigInt((pow3(n - 1) + 1) / 2); };
    const ClosedFn left = [](int n) { return left_factor(n); };
    const ClosedFn cat = [](int n) { return catalan(n); };
    for (const char* p : {"1-12", "1-21", "1-23", "12-1", "12-3"}) m[p] = two;
    for (const char* p : {"2-12", "1-32", "23-1"}) m[p] = fib;
    for (const char* p : {"3-12", "32-1"}) m[p] = three;
    for (const char* p : {"2-31", "22-1"}) m[p] = left;
    for (const char* p : {"2-13", "13-2"}) m[p] = cat;
    m["1-22"] = [](int n) { return motzkin(n); };
    m["12-2"] = [](int n) { return BigInt(binomial(n, 2) + 1); };
    return m;
  }();
  return kForms;
}

}  // namespace

bool has_closed_form(const VincularPattern& pattern) {
  return closed_forms().count(pattern.to_string()) > 0;
}

std::optional<BigInt> closed_form(const VincularPattern& pattern, int n) {
  if (n < 1) throw std::invalid_argument("closed_form needs n >= 1");
  const auto it = closed_forms().find(pattern.to_string());
  if (it == closed_forms().end()) return std::nullopt;
  return it->second(n);
}

const std::vector<std::string>& closed_form_patterns() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : closed_forms()) out.push_back(name);
    return out;
  }();
  return kNames;
}

const std::vector<std::string>& recurrence_patterns() {
  static const std::vector<std::string> kNames = {"11-2", "2-21", "21-1", "21-2", "21-3",
                                                  "22-1", "3-21", "31-2", "32-1"};
  return kNames;
}

bool has_recurrence(const VincularPattern& pattern) {
  const auto& names = recurrence_patterns();
  return std::find(names.begin(), names.end(), pattern.to_string()) != names.end();
}

TableLayer::TableLayer(std::string name, std::vector<std::string> dims, std::vector<int> extents)
    : name_(std::move(name)), dims_(std::move(dims)), extents_(std::move(extents)) {
  if (dims_.size() != extents_.size()) throw std::invalid_argument("dims/extents mismatch");
  std::size_t size = 1;
  for (int e : extents_) size *= static_cast<std::size_t>(std::max(e, 0));
  data_.assign(size, BigInt(0));
}

std::optional<std::size_t> TableLayer::offset(const int* index, std::size_t count) const {
  if (count != extents_.size()) {
    throw std::invalid_argument("layer " + name_ + " expects " + std::to_string(extents_.size()) +
                                " indices");
  }
  std::size_t off = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (index[i] < 0 || index[i] >= extents_[i]) return std::nullopt;
    off = off * extents_[i] + index[i];
  }
  return off;
}

const BigInt& TableLayer::at(std::initializer_list<int> index) const {
  const auto off = offset(index.begin(), index.size());
  return off ? data_[*off] : zero_;
}

const BigInt& TableLayer::at(const std::vector<int>& index) const {
  const auto off = offset(index.data(), index.size());
  return off ? data_[*off] : zero_;
}

BigInt& TableLayer::ref(std::initializer_list<int> index) {
  const auto off = offset(index.begin(), index.size());
  if (!off) throw std::out_of_range("index outside layer " + name_);
  return data_[*off];
}

std::map<std::vector<int>, BigInt> TableLayer::nonzero() const {
  std::map<std::vector<int>, BigInt> out;
  std::vector<int> index(extents_.size(), 0);
  for (std::size_t off = 0; off < data_.size(); ++off) {
    std::size_t rest = off;
    for (std::size_t i = extents_.size(); i-- > 0;) {
      index[i] = static_cast<int>(rest % extents_[i]);
      rest /= extents_[i];
    }
    if (data_[off] != 0) out.emplace(index, data_[off]);
  }
  return out;
}

TableLayer& RefinedTable::add_layer(TableLayer layer) {
  layers_.push_back(std::move(layer));
  return layers_.back();
}

bool RefinedTable::has_layer(std::string_view name) const {
  return std::any_of(layers_.begin(), layers_.end(),
                     [&](const TableLayer& l) { return l.name() == name; });
}

const TableLayer& RefinedTable::layer(std::string_view name) const {
  for (const auto& l : layers_) {
    if (l.name() == name) return l;
  }
  throw std::out_of_range("table " + pattern_ + " has no layer '" + std::string(name) + "'");
}

std::vector<std::string> RefinedTable::layer_names() const {
  std::vector<std::string> out;
  for (const auto& l : layers_) out.push_back(l.name());
  return out;
}

BigInt count_by_recurrence(const VincularPattern& pattern, int n) {
  if (n < 1) throw std::invalid_argument("count_by_recurrence needs n >= 1");
  return refined_table(pattern, n).count(n);
}

std::vector<BigInt> sequence_by_recurrence(const VincularPattern& pattern, int max_n) {
  const RefinedTable table = refined_table(pattern, max_n);
  std::vector<BigInt> out;
  for (int n = 1; n <= max_n; ++n) out.push_back(table.count(n));
  return out;
}

}  // namespace catwords
