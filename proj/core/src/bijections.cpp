#include "catwords/bijections.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

namespace catwords {

namespace {

const Steps kUdu = {Step::Up, Step::Down, Step::Up};

void append(Steps& out, std::span<const Step> more) {
  out.insert(out.end(), more.begin(), more.end());
}

int delta(Step s) {
  switch (s) {
    case Step::Up: return 1;
    case Step::Down: return -1;
    case Step::Level: return 0;
  }
  return 0;
}

// Walks a path and reports whether it stays weakly above the axis and where
// it ends.
bool stays_above(std::span<const Step> steps, bool allow_level, int& end_height) {
  int h = 0;
  for (Step s : steps) {
    if (s == Step::Level && !allow_level) return false;
    h += delta(s);
    if (h < 0) return false;
  }
  end_height = h;
  return true;
}

struct Run {
  int value;
  int length;
};

std::vector<Run> runs_of(std::span<const int> letters) {
  std::vector<Run> runs;
  for (int x : letters) {
    if (!runs.empty() && runs.back().value == x) {
      ++runs.back().length;
    } else {
      runs.push_back({x, 1});
    }
  }
  return runs;
}

Letters flatten(const std::vector<Run>& runs) {
  Letters out;
  for (const auto& r : runs) out.insert(out.end(), r.length, r.value);
  return out;
}

Steps alpha_steps(std::span<const Step> path) {
  const auto factors = ground_factors(path);
  Steps out;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const auto& inner = factors[j].inner;
    if (j + 1 < factors.size()) {
      out.push_back(Step::Up);
      append(out, alpha_steps(inner));
      out.push_back(Step::Down);
    } else if (!inner.empty()) {
      out.push_back(Step::Level);
      append(out, alpha_steps(inner));
    }
  }
  return out;
}

Steps alpha_inv_steps(std::span<const Step> path) {
  const auto factors = ground_factors(path);
  Steps out;
  std::size_t j = 0;
  for (; j < factors.size() && !factors[j].level; ++j) {
    out.push_back(Step::Up);
    append(out, alpha_inv_steps(factors[j].inner));
    out.push_back(Step::Down);
  }
  if (j == factors.size()) {
    out.push_back(Step::Up);
    out.push_back(Step::Down);
    return out;
  }
  // Everything after the leftmost ground-level h forms the last unit.
  Steps rest;
  for (std::size_t k = j + 1; k < factors.size(); ++k) {
    if (factors[k].level) {
      rest.push_back(Step::Level);
    } else {
      rest.push_back(Step::Up);
      append(rest, factors[k].inner);
      rest.push_back(Step::Down);
    }
  }
  out.push_back(Step::Up);
  append(out, alpha_inv_steps(rest));
  out.push_back(Step::Down);
  return out;
}

}  // namespace

Steps parse_steps(std::string_view text) {
  Steps out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'u': out.push_back(Step::Up); break;
      case 'd': out.push_back(Step::Down); break;
      case 'h': out.push_back(Step::Level); break;
      default:
        throw std::invalid_argument("invalid step '" + std::string(1, c) + "'");
    }
  }
  return out;
}

std::string format_steps(std::span<const Step> steps) {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out.push_back(static_cast<char>(s));
  return out;
}

bool is_dyck(std::span<const Step> steps) {
  int end = 0;
  return stays_above(steps, false, end) && end == 0;
}

bool is_motzkin(std::span<const Step> steps) {
  int end = 0;
  return stays_above(steps, true, end) && end == 0;
}

bool is_motzkin_left_factor(std::span<const Step> steps) {
  int end = 0;
  return stays_above(steps, true, end);
}

bool contains_factor(std::span<const Step> steps, std::span<const Step> factor) {
  if (factor.size() > steps.size()) return false;
  for (std::size_t i = 0; i + factor.size() <= steps.size(); ++i) {
    if (std::equal(factor.begin(), factor.end(), steps.begin() + i)) return true;
  }
  return false;
}

DyckPath::DyckPath(Steps steps) : steps_(std::move(steps)) {
  if (!is_dyck(steps_)) {
    throw std::invalid_argument("not a Dyck path: " + format_steps(steps_));
  }
}

MotzkinPath::MotzkinPath(Steps steps) : steps_(std::move(steps)) {
  if (!is_motzkin(steps_)) {
    throw std::invalid_argument("not a Motzkin path: " + format_steps(steps_));
  }
}

std::vector<GroundFactor> ground_factors(std::span<const Step> steps) {
  std::vector<GroundFactor> out;
  int h = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (h == 0 && steps[i] == Step::Level) {
      out.push_back({true, {}});
      start = i + 1;
      continue;
    }
    h += delta(steps[i]);
    if (h < 0) throw std::invalid_argument("path dips below the axis");
    if (h == 0) {
      out.push_back({false, Steps(steps.begin() + start + 1, steps.begin() + i)});
      start = i + 1;
    }
  }
  if (h != 0) throw std::invalid_argument("path does not return to the axis");
  return out;
}

DyckPath word_to_dyck(const CatalanWord& word) {
  Steps out;
  int h = 0;
  for (int letter : word.letters()) {
    out.insert(out.end(), h - (letter - 1), Step::Down);
    out.push_back(Step::Up);
    h = letter;
  }
  out.insert(out.end(), h, Step::Down);
  return DyckPath(std::move(out));
}

CatalanWord dyck_to_word(const DyckPath& path) {
  Letters letters;
  int h = 0;
  for (Step s : path.steps()) {
    h += delta(s);
    if (s == Step::Up) letters.push_back(h);
  }
  return CatalanWord(std::move(letters));
}

MotzkinPath alpha(const DyckPath& path) {
  if (path.steps().empty() || contains_factor(path.steps(), kUdu)) {
    throw std::invalid_argument("alpha requires a nonempty Dyck path avoiding udu: " +
                                path.to_string());
  }
  return MotzkinPath(alpha_steps(path.steps()));
}

DyckPath alpha_inv(const MotzkinPath& path) {
  return DyckPath(alpha_inv_steps(path.steps()));
}

bool in_dstar(const DyckPath& path) {
  const auto& s = path.steps();
  int h = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    h += delta(s[i]);
    if (i + 2 < s.size() && s[i] == Step::Up && s[i + 1] == Step::Down &&
        s[i + 2] == Step::Up && h != 1) {
      return false;
    }
  }
  return true;
}

MotzkinPath beta(const DyckPath& path) {
  if (path.steps().empty() || !in_dstar(path)) {
    throw std::invalid_argument("beta requires a nonempty path whose udu factors sit on the axis: " +
                                path.to_string());
  }
  Steps out;
  for (const auto& f : ground_factors(path.steps())) {
    if (f.inner.empty()) {
      out.push_back(Step::Level);
    } else {
      out.push_back(Step::Up);
      append(out, alpha_steps(f.inner));
      out.push_back(Step::Down);
    }
  }
  return MotzkinPath(std::move(out));
}

DyckPath beta_inv(const MotzkinPath& path) {
  Steps out;
  for (const auto& f : ground_factors(path.steps())) {
    out.push_back(Step::Up);
    if (!f.level) append(out, alpha_inv_steps(f.inner));
    out.push_back(Step::Down);
  }
  return DyckPath(std::move(out));
}

MarkedWord::MarkedWord(Letters letters, std::vector<bool> marks)
    : letters_(std::move(letters)), marks_(std::move(marks)) {
  if (!validate_catalan(letters_)) {
    throw std::invalid_argument("marked word letters must form a Catalan word");
  }
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] < letters_[i - 1]) {
      throw std::invalid_argument("marked word letters must be weakly increasing");
    }
  }
  if (marks_.size() != runs_of(letters_).size()) {
    throw std::invalid_argument("one mark per run required");
  }
  if (!marks_.front()) throw std::invalid_argument("the first run must be marked");
  for (std::size_t i = 1; i < marks_.size(); ++i) {
    if (marks_[i] && marks_[i - 1]) {
      throw std::invalid_argument("adjacent runs may not both be marked");
    }
  }
}

MarkedWord MarkedWord::parse(std::string_view text) {
  Letters letters;
  std::vector<bool> marks;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const bool marked = token.back() == '*';
    if (marked) token.pop_back();
    const Letters run = parse_letters(token);
    if (run.empty()) throw std::invalid_argument("empty run in marked word");
    letters.insert(letters.end(), run.begin(), run.end());
    marks.push_back(marked);
  }
  return MarkedWord(std::move(letters), std::move(marks));
}

std::string MarkedWord::to_string() const {
  std::string out;
  const auto runs = runs_of(letters_);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += format_letters(Letters(runs[i].length, runs[i].value));
    if (marks_[i]) out.push_back('*');
  }
  return out;
}

CatalanWord omega_to_avoider(const MarkedWord& word) {
  auto runs = runs_of(word.letters());
  int shift = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (word.marks()[i]) shift = runs[i].value - 1;
    runs[i].value -= shift;
  }
  return CatalanWord(flatten(runs));
}

namespace {

// Moves the doubled letter of every value between its first and last runs.
CatalanWord move_doubles(const CatalanWord& word, bool last_to_first) {
  auto runs = runs_of(word.letters());
  std::map<int, std::vector<std::size_t>> where;
  for (std::size_t i = 0; i < runs.size(); ++i) where[runs[i].value].push_back(i);
  for (const auto& [value, idx] : where) {
    if (idx.size() < 2) continue;
    Run& from = runs[last_to_first ? idx.back() : idx.front()];
    Run& to = runs[last_to_first ? idx.front() : idx.back()];
    if (from.length == 2) {
      from.length = 1;
      to.length = 2;
    }
  }
  return CatalanWord(flatten(runs));
}

}  // namespace

CatalanWord transfer_runs(const CatalanWord& word) {
  static const VincularPattern kPattern = VincularPattern::parse("11-1");
  if (!avoids(word, kPattern)) {
    throw std::invalid_argument("transfer_runs requires an avoider of 11-1: " + word.to_string());
  }
  return move_doubles(word, true);
}

CatalanWord transfer_runs_inverse(const CatalanWord& word) {
  static const VincularPattern kPattern = VincularPattern::parse("1-11");
  if (!avoids(word, kPattern)) {
    throw std::invalid_argument("transfer_runs_inverse requires an avoider of 1-11: " +
                                word.to_string());
  }
  return move_doubles(word, false);
}

bool is_smooth(std::span<const int> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (std::abs(letters[i] - letters[i - 1]) > 1) return false;
  }
  return true;
}

}  // namespace catwords
