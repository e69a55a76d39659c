#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catwords/bigint.hpp"

namespace catwords {

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Power series in t with exact rational coefficients, known through t^order.
/// Binary operations produce the smaller of the two operand orders.
class Series {
 public:
  /// The zero series known through t^order.
  explicit Series(int order = 0);
  /// Coefficients beyond `order` are dropped; missing ones are zero.
  Series(std::vector<Rational> coefficients, int order);

  static Series constant(const Rational& c, int order);
  /// c * t^k.
  static Series monomial(const Rational& c, int k, int order);
  /// The variable t.
  static Series t(int order) { return monomial(1, 1, order); }
  /// Polynomial with integer coefficients listed from t^0 upward.
  static Series polynomial(std::initializer_list<long> coefficients, int order);

  int order() const noexcept { return order_; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  /// Zero beyond order.
  Rational operator[](int k) const;
  void set(int k, const Rational& value);

  /// Index of the first nonzero coefficient, or nullopt if all are zero.
  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  Series truncated(int order) const;
  /// Multiplies by t^k (k >= 0), keeping the order.
  Series shifted(int k) const;

  Series operator-() const;
  Series& operator+=(const Series& g);
  Series& operator-=(const Series& g);
  Series& operator*=(const Series& g);
  Series& operator/=(const Series& g);
  Series& operator*=(const Rational& c);

  friend Series operator+(Series f, const Series& g) { return f += g; }
  friend Series operator-(Series f, const Series& g) { return f -= g; }
  friend Series operator*(Series f, const Series& g) { return f *= g; }
  /// Cancels a common power of t first: if g = t^k g' with g'(0) != 0 then
  /// f must be divisible by t^k and the quotient is known through order - k.
  /// Throws SeriesError otherwise.
  friend Series operator/(Series f, const Series& g) { return f /= g; }
  friend Series operator*(Series f, const Rational& c) { return f *= c; }
  friend Series operator*(const Rational& c, Series f) { return f *= c; }
  friend Series operator+(Series f, const Rational& c);
  friend Series operator+(const Rational& c, Series f) { return std::move(f) + c; }
  friend Series operator-(Series f, const Rational& c) { return std::move(f) + Rational(-c); }
  friend Series operator-(const Rational& c, const Series& f) { return -f + c; }

  /// Coefficient-wise equality through the shared order.
  friend bool operator==(const Series& f, const Series& g);

  /// "1 + 2*t - 1/3*t^2 + O(t^5)".
  std::string to_string() const;
  /// (numerator, denominator) strings per coefficient.
  std::vector<std::pair<std::string, std::string>> coefficient_strings() const;

  bool is_integral() const;
  /// Throws SeriesError if any coefficient is not an integer.
  std::vector<BigInt> integer_coefficients() const;

 private:
  std::vector<Rational> c_;
  int order_;
};

/// Reciprocal; needs a nonzero constant term.
Series inverse(const Series& f);
/// The square root with constant term 1; f must have constant term 1.
Series sqrt(const Series& f);
/// f(g(t)); g must have zero constant term.
Series compose(const Series& f, const Series& g);
/// f^k for k >= 0.
Series pow(const Series& f, int k);

/// Normalized Chebyshev sequences without half-integer powers of t.
///   V:  V_0 = V_1 = 1, V_n = V_{n-1} - (t/(1+t)) V_{n-2}
///   AB: alpha_0 = alpha_1 = 1, beta_0 = 1, beta_1 = 1 - t, both satisfying
///       x_{n+2} = (1 - t) x_{n+1} - t^2 x_n
/// Values are memoized; an instance must not be shared between threads.
class ChebStream {
 public:
  enum class Kind { V, AB };

  ChebStream(Kind kind, int order);

  Kind kind() const noexcept { return kind_; }
  int order() const noexcept { return order_; }

  /// V_n. Throws std::logic_error on an AB stream.
  const Series& v(int n);
  /// (alpha_n, beta_n). Throws std::logic_error on a V stream.
  const std::pair<Series, Series>& ab(int n);

 private:
  Kind kind_;
  int order_;
  std::vector<Series> v_;
  std::vector<std::pair<Series, Series>> ab_;
};

Series cheb_v(int n, int order);
std::pair<Series, Series> cheb_ab(int n, int order);

}  // namespace catwords
