#include "catwords/series.hpp"

#include <algorithm>

namespace catwords {

Series::Series(int order) : order_(order) {
  if (order < 0) throw SeriesError("series order must be nonnegative");
  c_.assign(order + 1, Rational(0));
}

Series::Series(std::vector<Rational> coefficients, int order) : Series(order) {
  const std::size_t n = std::min(coefficients.size(), c_.size());
  for (std::size_t k = 0; k < n; ++k) c_[k] = std::move(coefficients[k]);
}

Series Series::constant(const Rational& c, int order) {
  Series s(order);
  s.c_[0] = c;
  return s;
}

Series Series::monomial(const Rational& c, int k, int order) {
  Series s(order);
  if (k < 0) throw SeriesError("negative exponent in monomial");
  if (k <= order) s.c_[k] = c;
  return s;
}

Series Series::polynomial(std::initializer_list<long> coefficients, int order) {
  Series s(order);
  int k = 0;
  for (long c : coefficients) {
    if (k > order) break;
    s.c_[k++] = c;
  }
  return s;
}

Rational Series::operator[](int k) const {
  if (k < 0 || k > order_) return 0;
  return c_[k];
}

void Series::set(int k, const Rational& value) {
  if (k < 0 || k > order_) throw SeriesError("coefficient index outside the series order");
  c_[k] = value;
}

std::optional<int> Series::valuation() const {
  for (int k = 0; k <= order_; ++k) {
    if (c_[k] != 0) return k;
  }
  return std::nullopt;
}

Series Series::truncated(int order) const {
  if (order > order_) throw SeriesError("cannot extend a series beyond its known order");
  return Series(std::vector<Rational>(c_.begin(), c_.begin() + order + 1), order);
}

Series Series::shifted(int k) const {
  if (k < 0) throw SeriesError("negative shift");
  Series s(order_);
  for (int i = 0; i + k <= order_; ++i) s.c_[i + k] = c_[i];
  return s;
}

Series Series::operator-() const {
  Series s(order_);
  for (int k = 0; k <= order_; ++k) s.c_[k] = -c_[k];
  return s;
}

Series& Series::operator+=(const Series& g) {
  order_ = std::min(order_, g.order_);
  c_.resize(order_ + 1);
  for (int k = 0; k <= order_; ++k) c_[k] += g.c_[k];
  return *this;
}

Series& Series::operator-=(const Series& g) {
  order_ = std::min(order_, g.order_);
  c_.resize(order_ + 1);
  for (int k = 0; k <= order_; ++k) c_[k] -= g.c_[k];
  return *this;
}

Series& Series::operator*=(const Series& g) {
  const int n = std::min(order_, g.order_);
  std::vector<Rational> out(n + 1, Rational(0));
  Rational term;
  for (int i = 0; i <= n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (g.c_[j] == 0) continue;
      mpq_mul(term.get_mpq_t(), c_[i].get_mpq_t(), g.c_[j].get_mpq_t());
      out[i + j] += term;
    }
  }
  c_ = std::move(out);
  order_ = n;
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

Series& Series::operator/=(const Series& g) {
  const auto k = g.valuation();
  if (!k) throw SeriesError("division by a series that is zero through its order");
  const auto vf = valuation();
  if (vf && *vf < *k) {
    throw SeriesError("division needs the numerator to vanish to order " + std::to_string(*k));
  }
  const int n = std::min(order_, g.order_) - *k;
  if (n < 0) throw SeriesError("division leaves no known coefficients");
  std::vector<Rational> out(n + 1, Rational(0));
  const Rational& g0 = g.c_[*k];
  Rational acc;
  for (int i = 0; i <= n; ++i) {
    acc = c_[i + *k];
    for (int j = 1; j <= i; ++j) {
      if (g.c_[j + *k] != 0) acc -= g.c_[j + *k] * out[i - j];
    }
    out[i] = acc / g0;
  }
  c_ = std::move(out);
  order_ = n;
  return *this;
}

Series operator+(Series f, const Rational& c) {
  f.c_[0] += c;
  return f;
}

bool operator==(const Series& f, const Series& g) {
  const int n = std::min(f.order_, g.order_);
  for (int k = 0; k <= n; ++k) {
    if (f.c_[k] != g.c_[k]) return false;
  }
  return true;
}

std::string Series::to_string() const {
  std::string out;
  for (int k = 0; k <= order_; ++k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  out += " + O(t^" + std::to_string(order_ + 1) + ")";
  return out;
}

std::vector<std::pair<std::string, std::string>> Series::coefficient_strings() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.emplace_back(c.get_num().get_str(), c.get_den().get_str());
  return out;
}

bool Series::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

std::vector<BigInt> Series::integer_coefficients() const {
  std::vector<BigInt> out;
  out.reserve(c_.size());
  for (int k = 0; k <= order_; ++k) {
    if (c_[k].get_den() != 1) {
      throw SeriesError("non-integer coefficient " + c_[k].get_str() + " at t^" +
                        std::to_string(k));
    }
    out.push_back(c_[k].get_num());
  }
  return out;
}

Series inverse(const Series& f) {
  if (f[0] == 0) throw SeriesError("reciprocal needs a nonzero constant term");
  return Series::constant(1, f.order()) / f;
}

Series sqrt(const Series& f) {
  if (f[0] != 1) throw SeriesError("square root needs constant term 1");
  const int n = f.order();
  std::vector<Rational> g(n + 1, Rational(0));
  g[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = f[k];
    for (int j = 1; j < k; ++j) acc -= g[j] * g[k - j];
    g[k] = acc / 2;
  }
  return Series(std::move(g), n);
}

Series compose(const Series& f, const Series& g) {
  if (g[0] != 0) throw SeriesError("composition needs an inner series with zero constant term");
  const int n = std::min(f.order(), g.order());
  Series out = Series::constant(f[n], n);
  for (int k = n - 1; k >= 0; --k) {
    out *= g;
    out = out + f[k];
  }
  return out;
}

Series pow(const Series& f, int k) {
  if (k < 0) throw SeriesError("negative power; use inverse");
  Series out = Series::constant(1, f.order());
  Series base = f;
  while (k > 0) {
    if (k & 1) out *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return out;
}

ChebStream::ChebStream(Kind kind, int order) : kind_(kind), order_(order) {}

const Series& ChebStream::v(int n) {
  if (kind_ != Kind::V) throw std::logic_error("V values requested from an AB stream");
  if (n < 0) throw std::invalid_argument("negative Chebyshev index");
  if (v_.empty()) {
    v_.push_back(Series::constant(1, order_));
    v_.push_back(Series::constant(1, order_));
  }
  const Series c = Series::t(order_) / Series::polynomial({1, 1}, order_);
  while (static_cast<int>(v_.size()) <= n) {
    const std::size_t m = v_.size();
    v_.push_back(v_[m - 1] - c * v_[m - 2]);
  }
  return v_[n];
}

const std::pair<Series, Series>& ChebStream::ab(int n) {
  if (kind_ != Kind::AB) throw std::logic_error("AB values requested from a V stream");
  if (n < 0) throw std::invalid_argument("negative Chebyshev index");
  if (ab_.empty()) {
    ab_.emplace_back(Series::constant(1, order_), Series::constant(1, order_));
    ab_.emplace_back(Series::constant(1, order_), Series::polynomial({1, -1}, order_));
  }
  const Series p = Series::polynomial({1, -1}, order_);
  const Series q = Series::polynomial({0, 0, 1}, order_);
  while (static_cast<int>(ab_.size()) <= n) {
    const std::size_t m = ab_.size();
    const auto& x1 = ab_[m - 1];
    const auto& x0 = ab_[m - 2];
    ab_.emplace_back(p * x1.first - q * x0.first, p * x1.second - q * x0.second);
  }
  return ab_[n];
}

Series cheb_v(int n, int order) {
  ChebStream s(ChebStream::Kind::V, order);
  return s.v(n);
}

std::pair<Series, Series> cheb_ab(int n, int order) {
  ChebStream s(ChebStream::Kind::AB, order);
  return s.ab(n);
}

}  // namespace catwords
