#include <gtest/gtest.h>

#include <random>

#include "catwords/series.hpp"

using namespace catwords;

namespace {

Series poly(std::initializer_list<long> c, int order = 10) { return Series::polynomial(c, order); }

Series random_series(std::mt19937& rng, int order, bool unit) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  Series s(order);
  for (int k = 0; k <= order; ++k) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    s.set(k, q);
  }
  if (unit) s.set(0, 1);
  return s;
}

}  // namespace

TEST(Arith, Basics) {
  EXPECT_EQ(poly({1, 1}) * poly({1, -1}), poly({1, 0, -1}));
  EXPECT_EQ(poly({3, 2}) + Series(10), poly({3, 2}));
  const Series t2 = Series::t(10) * Series::t(10);
  EXPECT_EQ(t2, Series::monomial(1, 2, 10));
  EXPECT_EQ(t2.order(), 10);
  EXPECT_EQ((poly({1}, 4) + poly({1}, 7)).order(), 4);
}

TEST(Arith, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Series a = random_series(rng, 16, false), b = random_series(rng, 16, false),
                 c = random_series(rng, 16, false);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Series(16));
  }
}

TEST(Div, Examples) {
  const Series geo = Series::constant(1, 8) / poly({1, -1}, 8);
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(geo[k], 1);
  EXPECT_EQ(poly({1, 0, -1}) / poly({1, 1}), poly({1, -1}));
  const Series m = (poly({1, -1}, 12) - sqrt(poly({1, -2, -3}, 12))) / poly({0, 0, 2}, 12);
  EXPECT_EQ(m.order(), 10);
  const long motz[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(m[k], motz[k]);
}

TEST(Div, Errors) {
  EXPECT_THROW(poly({1}) / Series(10), SeriesError);
  EXPECT_THROW(poly({1, 1}) / poly({0, 1}), SeriesError);
  EXPECT_THROW(inverse(poly({0, 1})), SeriesError);
}

TEST(Div, RoundTrips) {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Series f = random_series(rng, 32, false);
    const Series g = random_series(rng, 32, true);
    EXPECT_EQ((f / g) * g, f);
    const Series q = f.shifted(3) / g.shifted(3);
    EXPECT_EQ(q.order(), 29);
    EXPECT_EQ(q, f.truncated(29) / g.truncated(29));
  }
}

TEST(Sqrt, Examples) {
  EXPECT_EQ(sqrt(poly({1})), poly({1}));
  EXPECT_EQ(sqrt(poly({1, 2, 1})), poly({1, 1}));
  const Series f = poly({1, -2, -3}, 64);
  const Series r = sqrt(f);
  EXPECT_EQ(r * r, f);
  EXPECT_THROW(sqrt(poly({4, 1})), SeriesError);
}

TEST(Sqrt, RandomSquares) {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Series f = random_series(rng, 32, true);
    const Series r = sqrt(f);
    EXPECT_EQ(r[0], 1);
    EXPECT_EQ(r * r, f);
  }
}

TEST(Compose, Examples) {
  const Series geo = Series::constant(1, 10) / poly({1, -1});
  const Series inner = Series::t(10) / poly({1, -1});
  EXPECT_EQ(compose(geo, inner), poly({1, -1}) / poly({1, -2}));
  EXPECT_EQ(compose(poly({5, 3, 2}), Series(10)), poly({5}));
  EXPECT_EQ(compose(Series::t(10), inner), inner);
  EXPECT_THROW(compose(geo, poly({1, 1})), SeriesError);
}

TEST(Pow, SmallPowers) {
  EXPECT_EQ(pow(poly({1, 1}), 3), poly({1, 3, 3, 1}));
  EXPECT_EQ(pow(poly({1, 1}), 0), poly({1}));
  EXPECT_THROW(pow(poly({1, 1}), -1), SeriesError);
}

TEST(Format, Text) {
  Series s(4);
  s.set(0, 1);
  s.set(1, 2);
  s.set(2, Rational(-1, 3));
  EXPECT_EQ(s.to_string(), "1 + 2*t - 1/3*t^2 + O(t^5)");
  EXPECT_EQ(Series(2).to_string(), "0 + O(t^3)");
  EXPECT_FALSE(s.is_integral());
  EXPECT_THROW(s.integer_coefficients(), SeriesError);
  EXPECT_EQ(s.coefficient_strings()[2], (std::pair<std::string, std::string>{"-1", "3"}));
  EXPECT_EQ(s.valuation(), 0);
  EXPECT_EQ(Series::t(4).shifted(2).valuation(), 3);
}

TEST(Cheb, Values) {
  EXPECT_EQ(cheb_v(2, 10), Series::constant(1, 10) / poly({1, 1}));
  const auto [a2, b2] = cheb_ab(2, 10);
  EXPECT_EQ(a2, poly({1, -1, -1}));
  EXPECT_EQ(b2, poly({1, -2}));
  EXPECT_EQ(cheb_ab(1, 10).second, poly({1, -1}));
  ChebStream v(ChebStream::Kind::V, 10);
  EXPECT_THROW(v.ab(1), std::logic_error);
  EXPECT_THROW(v.v(-1), std::invalid_argument);
}

TEST(Cheb, AbSideIdentities) {
  ChebStream s(ChebStream::Kind::AB, 30);
  const Series t = Series::t(30);
  for (int j = 0; j <= 20; ++j) {
    EXPECT_EQ(s.ab(j + 1).second, s.ab(j).second - t * s.ab(j).first);
    EXPECT_EQ(s.ab(j + 2).second, Series::polynomial({1, -1, -1}, 30) * s.ab(j).second -
                                      t * Series::polynomial({1, -1}, 30) * s.ab(j).first);
  }
}

TEST(Cheb, HRecurrence) {
  const int N = 24;
  ChebStream v(ChebStream::Kind::V, N + 2);
  const Series t = Series::t(N + 2);
  const Series c = t / Series::polynomial({1, 1}, N + 2);
  Series prev(N + 2);  // H_0
  for (int m = 1; m <= 12; ++m) {
    const Series h = c * v.v(m - 1) / v.v(m + 1);
    const Series rec = t * (prev + Rational(1)) / (Series::constant(1, N + 2) - t * prev);
    EXPECT_EQ(h.truncated(N), rec.truncated(N)) << m;
    if (m == 1) EXPECT_EQ(h.truncated(N), Series::t(N));
    prev = h;
  }
}
