// Bottom-up fills of the refined recurrence arrays, one per supported pattern.
#include <algorithm>

#include "catwords/counters.hpp"

namespace catwords {

namespace {

TableLayer make_layer(const std::string& name, std::vector<std::string> dims, int max_n) {
  std::vector<int> extents(dims.size(), max_n + 1);
  return TableLayer(name, std::move(dims), std::move(extents));
}

void add_counts(RefinedTable& table, const std::vector<BigInt>& c) {
  TableLayer layer = make_layer("c", {"n"}, table.max_n());
  for (int n = 1; n <= table.max_n(); ++n) layer.ref({n}) = c[n];
  table.add_layer(std::move(layer));
}

// Shared by 2-21 and 3-21; the two recurrences differ only in the third term of
// the a < m case.
RefinedTable fill_max_last(const std::string& pattern, const std::string& name, int N,
                           bool three) {
  RefinedTable table(pattern, N);
  TableLayer u = make_layer(name, {"n", "m", "a"}, N);
  std::vector<BigInt> c(N + 1);
  for (int n = 1; n <= N; ++n) {
    u.ref({n, 1, 1}) = 1;
    if (n == 2) {
      u.ref({2, 2, 2}) = 1;
    } else if (n >= 3) {
      for (int m = 2; m <= n; ++m) {
        for (int a = 1; a <= m - 1; ++a) {
          const BigInt& extra = three ? u.at({n - 1, m, m}) : u.at({n - 2, m - 1, m - 1});
          u.ref({n, m, a}) = u.at({n - 1, m, a - 1}) + u.at({n - 1, m, a}) + extra;
        }
        u.ref({n, m, m}) = u.at({n - 1, m - 1, m - 1}) + u.at({n - 1, m, m - 1}) +
                           u.at({n - 1, m, m});
      }
    }
    for (int m = 1; m <= n; ++m) {
      for (int a = 1; a <= m; ++a) c[n] += u.at({n, m, a});
    }
  }
  table.add_layer(std::move(u));
  add_counts(table, c);
  return table;
}

// 21-2 and 21-3: arrays by last letter with a binomial subtraction.
RefinedTable fill_last(const std::string& pattern, const std::string& name, int N, bool three) {
  RefinedTable table(pattern, N);
  TableLayer u = make_layer(name, {"n", "a"}, N);
  const BinomialTable binom(N);
  std::vector<BigInt> c(N + 1);
  u.ref({1, 1}) = 1;
  for (int n = 2; n <= N; ++n) {
    for (int j = 1; j <= n - 1; ++j) u.ref({n, 1}) += u.at({n - 1, j});
    for (int a = 2; a <= n; ++a) {
      BigInt value = 0;
      for (int j = a - 1; j <= n - 1; ++j) value += u.at({n - 1, j});
      if (!three) {
        for (int j = 1; j <= a - 1; ++j) {
          for (int m = j + 1; m <= n - a; ++m) value -= binom(m - 2, j - 1) * u.at({n - m, a});
        }
      } else {
        for (int j = 2; j <= a - 1; ++j) {
          for (int m = j + 1; m <= n - a + 1; ++m) {
            value -= binom(m - 2, j - 1) * u.at({n - m, a - 1});
          }
        }
      }
      u.ref({n, a}) = value;
    }
  }
  for (int n = 1; n <= N; ++n) {
    for (int a = 1; a <= n; ++a) c[n] += u.at({n, a});
  }
  table.add_layer(std::move(u));
  add_counts(table, c);
  return table;
}

RefinedTable fill_31_2(int N) {
  RefinedTable table("31-2", N);
  TableLayer w = make_layer("w", {"n", "a", "b"}, N);
  const BinomialTable binom(N);
  std::vector<BigInt> c(N + 1);
  if (N >= 2) w.ref({2, 1, 1}) = 1;
  for (int n = 3; n <= N; ++n) {
    for (int a = 1; a <= n - 1; ++a) {
      for (int b = 1; b <= a; ++b) {
        const BigInt& lead = binom(a - 1, b - 1);
        if (lead == 0) continue;
        BigInt inner = binom(n - a, b - 1);
        for (int cc = 1; cc <= n - a - 1; ++cc) {
          for (int d = 1; d <= cc; ++d) inner += w.at({n - a, cc, d}) * binom(cc - d + 1, b - 1);
        }
        w.ref({n, a, b}) = lead * inner;
      }
    }
  }
  for (int n = 1; n <= N; ++n) {
    c[n] = 1;
    for (int a = 1; a <= n - 1; ++a) {
      for (int b = 1; b <= a; ++b) c[n] += w.at({n, a, b});
    }
  }
  table.add_layer(std::move(w));
  add_counts(table, c);
  return table;
}

RefinedTable fill_11_2(int N) {
  RefinedTable table("11-2", N);
  TableLayer m = make_layer("m", {"n", "a"}, N);
  TableLayer pab = make_layer("p_ab", {"n", "a", "b"}, N);
  TableLayer pa = make_layer("p_a", {"n", "a"}, N);
  std::vector<BigInt> c(N + 1);

  for (int n = 1; n <= N; ++n) {
    m.ref({n, n}) = 1;
    for (int a = 1; a <= n - 1; ++a) {
      BigInt value = m.at({n - 1, a - 1});
      for (int i = a + 1; i <= n - 1; ++i) value += m.at({n - 1, i});
      m.ref({n, a}) = value;
    }
  }

  for (int a = 1; a <= N; ++a) pa.ref({0, a}) = 1;
  for (int n = 1; n <= N; ++n) {
    for (int a = 1; a <= N; ++a) {
      pab.ref({n, a, a}) = pa.at({n - 1, a});
      for (int b = 1; b <= a - 1; ++b) {
        if (n == 1) {
          pab.ref({1, a, b}) = 1;
          continue;
        }
        BigInt value = pab.at({n - 1, a, b + 1}) + pa.at({n - 2, b});
        for (int i = 1; i <= b - 1; ++i) value += pab.at({n - 1, a, i});
        pab.ref({n, a, b}) = value;
      }
      BigInt total = 0;
      for (int b = 1; b <= a; ++b) total += pab.at({n, a, b});
      pa.ref({n, a}) = total;
    }
  }

  for (int n = 1; n <= N; ++n) {
    BigInt value = motzkin(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = 1; j <= i; ++j) value += m.at({i, j}) * pa.at({n - i - 1, j});
    }
    c[n] = value;
  }
  table.add_layer(std::move(m));
  table.add_layer(std::move(pab));
  table.add_layer(std::move(pa));
  add_counts(table, c);
  return table;
}

RefinedTable fill_21_1(int N) {
  RefinedTable table("21-1", N);
  TableLayer r2 = make_layer("r_ma", {"n", "m", "a"}, N);
  TableLayer r = make_layer("r_m", {"n", "m"}, N);
  const BinomialTable binom(N);
  std::vector<BigInt> c(N + 1);

  for (int n = 1; n <= N; ++n) {
    if (n == 3) r2.ref({3, 2, 1}) = 1;
    if (n >= 4) {
      for (int m = 3; m <= n - 1; ++m) {
        for (int a = 2; a <= m - 1; ++a) {
          BigInt value = 0;
          for (int i = 1; i <= n - m; ++i) value += r2.at({n - i, m - 1, a - 1});
          r2.ref({n, m, a}) = value;
        }
      }
      for (int m = 2; m <= n - 1; ++m) {
        BigInt value = r2.at({n - 1, m, 1}) + r.at({n - 2, m - 1});
        for (int i = 1; i <= m - 2; ++i) {
          for (int j = i; j <= n - m - 1; ++j) {
            value += binom(j - 1, i - 1) * r.at({n - j - 2, m - 1});
          }
        }
        for (int i = 1; i <= m - 1; ++i) {
          for (int j = m - 1; j <= n - i - 2; ++j) {
            value += binom(j - 1, m - 2) * r.at({n - j - 2, i});
          }
        }
        for (int i = 2; i <= m - 2; ++i) {
          for (int j = m; j <= n - 3; ++j) {
            const int ell = std::min(i - 1, n - j - 2);
            for (int k = 1; k <= ell; ++k) value += r2.at({j, m - 1, i}) * r.at({n - j - 2, k});
          }
        }
        r2.ref({n, m, 1}) = value;
      }
    }
    for (int m = 1; m <= n - 1; ++m) {
      BigInt value = binom(n - 1, m - 1);
      for (int a = 1; a <= m - 1; ++a) value += r2.at({n, m, a});
      r.ref({n, m}) = value;
    }
    r.ref({n, n}) = 1;
    for (int m = 1; m <= n; ++m) c[n] += r.at({n, m});
  }
  table.add_layer(std::move(r2));
  table.add_layer(std::move(r));
  add_counts(table, c);
  return table;
}

RefinedTable fill_22_1(int N) {
  RefinedTable table("22-1", N);
  TableLayer a = make_layer("a", {"n"}, N);
  std::vector<BigInt> motz(N + 1);
  for (int k = 0; k <= N; ++k) motz[k] = motzkin(k);
  std::vector<BigInt> c(N + 1);
  for (int n = 1; n <= N; ++n) {
    BigInt value = motz[n - 1];
    for (int i = 1; i <= n - 1; ++i) value += motz[i - 1] * a.at({n - i});
    a.ref({n}) = value;
    c[n] = value;
  }
  table.add_layer(std::move(a));
  add_counts(table, c);
  return table;
}

RefinedTable fill_32_1(int N) {
  RefinedTable table("32-1", N);
  TableLayer b = make_layer("b", {"n"}, N);
  std::vector<BigInt> c(N + 1);
  for (int n = 1; n <= N; ++n) {
    BigInt value = n == 1 ? BigInt(1) : BigInt(2 * b.at({n - 1}));
    for (int m = 2; m <= n - 1; ++m) value += pow2(m - 2) * b.at({n - m});
    b.ref({n}) = value;
    c[n] = value;
  }
  table.add_layer(std::move(b));
  add_counts(table, c);
  return table;
}

}  // namespace

RefinedTable refined_table(const VincularPattern& pattern, int max_n) {
  if (max_n < 1) throw std::invalid_argument("refined_table needs n >= 1");
  const std::string p = pattern.to_string();
  if (p == "2-21") return fill_max_last(p, "u", max_n, false);
  if (p == "3-21") return fill_max_last(p, "v", max_n, true);
  if (p == "21-2") return fill_last(p, "u", max_n, false);
  if (p == "21-3") return fill_last(p, "v", max_n, true);
  if (p == "31-2") return fill_31_2(max_n);
  if (p == "11-2") return fill_11_2(max_n);
  if (p == "21-1") return fill_21_1(max_n);
  if (p == "22-1") return fill_22_1(max_n);
  if (p == "32-1") return fill_32_1(max_n);
  throw UnsupportedPattern("no recurrence registered for " + p +
                           "; use closed, genfun or oracle");
}

}  // namespace catwords
