#include "catwords/genfun.hpp"

#include <algorithm>
#include <map>

#include "catwords/counters.hpp"

namespace catwords {

namespace {

// Small helpers over a fixed working order W.
struct Ring {
  int W;

  Series one() const { return Series::constant(1, W); }
  Series t() const { return Series::t(W); }
  Series tpow(int k) const { return Series::monomial(1, k, W); }
  Series poly(std::initializer_list<long> c) const { return Series::polynomial(c, W); }
  // f^e for any integer e.
  Series power(const Series& f, int e) const { return e >= 0 ? pow(f, e) : inverse(pow(f, -e)); }
  // sqrt(1 - 2t - 3t^2)
  Series motzkin_root() const { return sqrt(poly({1, -2, -3})); }
};

long choose2(long n) { return n * (n - 1) / 2; }

// Lowest index with nonzero coefficient, treating an all-zero series as
// vanishing beyond its order.
int low_valuation(const Series& f) { return f.valuation().value_or(f.order() + 1); }

Series gf_2_21(int W) {
  const Ring R{W};
  const Series one_m_t = R.poly({1, -1});
  const Series one_m_2t = R.poly({1, -2});
  Series total = R.t() / one_m_2t;
  Series prod = R.one();
  Series inner(W);
  for (int i = 1; i * (i + 5) / 2 <= W; ++i) {
    const Series d = one_m_2t * pow(one_m_t, i) - pow(one_m_t, 2) * R.tpow(i);
    prod *= d;
    inner += pow(one_m_t, i) / d;
    Series term = R.tpow(i * (i + 5) / 2) * one_m_2t * inner / prod;
    if (i % 2 == 0) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

Series gf_3_21(int W) {
  const Ring R{W};
  const Series one_m_t = R.poly({1, -1});
  const Series one_m_2t = R.poly({1, -2});
  const Series q = R.poly({1, -3, 1});
  Series total = R.t() / one_m_2t;
  Series prod = R.one();
  Series inner(W);
  for (int i = 1; 2 * i + 1 <= W; ++i) {
    const Series e = q * pow(one_m_t, i - 1) - one_m_2t * R.tpow(i);
    prod *= e;
    inner += R.tpow(i) / e;
    Series term = R.tpow(2 * i) * pow(one_m_t, static_cast<int>(choose2(i))) * one_m_2t * inner / prod;
    if (i % 2 == 0) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

Series gf_1_11(int W) {
  const Ring R{W};
  ChebStream v(ChebStream::Kind::V, W);
  Series total(W);
  for (int m = 1; m <= W; ++m) total += R.tpow(m) / (v.v(m) * v.v(m + 1));
  return total;
}

Series gf_2_11(int W) {
  const Ring R{W};
  ChebStream v(ChebStream::Kind::V, W);
  const Series one_p_t = R.poly({1, 1});
  Series total(W);
  for (int m = 1; m <= W; ++m) {
    total += R.tpow(m) / (pow(one_p_t, m + 1) * v.v(m) * v.v(m + 1) * v.v(m + 2));
  }
  return total;
}

Series gf_21_2(int W) {
  const Ring R{W};
  const Series one_m_t = R.poly({1, -1});
  const Series one_m_2t = R.poly({1, -2});
  Series num = R.t();
  Series den = one_m_2t;
  Series ratio = R.one();  // prod A_i / prod B_i
  for (int j = 1; 2 * j + 1 <= W; ++j) {
    const Series a = one_m_2t * pow(one_m_t, j) - one_m_t * R.tpow(j);
    const Series b = one_m_2t * pow(one_m_t, 2 * j) - R.tpow(j) * pow(one_m_t, j + 1) +
                     R.tpow(2 * j + 1);
    ratio = ratio * a / b;
    const Series lead = R.tpow(2 * j + 1);
    num += lead * R.power(one_m_t, static_cast<int>(choose2(j - 1)) - 1) * ratio;
    den -= lead * one_m_2t * R.power(one_m_t, static_cast<int>(choose2(j)) - 1) * ratio /
           (one_m_2t * pow(one_m_t, j - 1) - R.tpow(j));
  }
  return num / den;
}

Series root_21_3(int W) {
  const Ring R{W};
  const Series disc = sqrt(Series::polynomial({1, -10, 37, -62, 46, -12, 1}, W));
  return (R.poly({1, -3, 2, -1}) - disc) / (R.poly({0, 2}) * R.poly({1, -3, 1}));
}

Series kernel_21_3(const Series& x) {
  const Ring R{x.order()};
  const Series one_m_t = R.poly({1, -1});
  const Series one_m_2t = R.poly({1, -2});
  return R.one() + x * x * R.t() / (R.one() - x) + x * R.tpow(3) / (one_m_t * one_m_2t);
}

Series gf_21_3(int W) {
  const Series x0 = root_21_3(W);
  const Ring R{x0.order()};
  const Series one_m_t = R.poly({1, -1});
  const Series one_m_2t = R.poly({1, -2});
  const Series step = R.t() / one_m_t;
  Series sum_a(R.W), sum_b(R.W);
  Series kprod = R.one();
  Series xi = x0;
  for (int j = 1; choose2(j) + 3 * j <= R.W; ++j) {
    xi *= step;
    kprod *= kernel_21_3(xi);
    const Series common = R.tpow(static_cast<int>(choose2(j)) + 3 * j) * pow(x0, j) /
                          (pow(one_m_2t, j) * kprod);
    sum_a += common / pow(one_m_t, static_cast<int>(choose2(j + 1)));
    sum_b += common / (pow(one_m_t, static_cast<int>(choose2(j))) *
                       (pow(one_m_t, j) - x0 * R.tpow(j)));
  }
  const Series num = (x0 - Rational(1)) * (R.one() + sum_a);
  const Series den = R.one() + (R.one() - x0) * sum_b;
  return num / den;
}

Series gf_31_2(int W) {
  const Ring R{W};
  ChebStream ab(ChebStream::Kind::AB, W);
  Series total = R.t() / R.poly({1, -1});
  Series ratio = R.one() / ab.ab(1).second;  // prod alpha_j / prod beta_j
  for (int i = 1; i + 1 <= W; ++i) {
    ratio = ratio * ab.ab(i).first / ab.ab(i + 1).second;
    total += R.tpow(i + 1) * ratio;
  }
  return total;
}

struct Motzkin11 {
  Series T;
  Series first;  // (1+t)(1-t-sqrt)/(2t)
};

Motzkin11 motzkin_parts(int W) {
  const Ring R{W};
  const Series root = R.motzkin_root();
  Motzkin11 out{(R.poly({1, 1}) - root) / R.poly({0, 2}),
                R.poly({1, 1}) * (R.poly({1, -1}) - root) / R.poly({0, 2})};
  return out;
}

Series a_11_2(const Series& v, const Series& T) {
  const Ring R{std::min(v.order(), T.order())};
  const Series one_p_t = R.poly({1, 1});
  return (R.t() - v) * R.tpow(3) * pow(T, 8) /
         (pow(one_p_t, 3) * (one_p_t - v * T * T));
}

Series b_11_2(const Series& v, const Series& T) {
  const Ring R{std::min(v.order(), T.order())};
  const Series one_p_t = R.poly({1, 1});
  return R.t() * pow(T, 3) * (Rational(2) - T) /
         ((R.one() - v) * (R.one() + v - v * T) * (one_p_t - v * T * T));
}

// P(t; v, 1) = sum_j b(v_j) prod_{i<j} a(v_i), v_{j+1} = v_j t T^2 / (1+t).
Series p_iteration(const Series& v, const Series& T, int W) {
  const Ring R{W};
  const Series step = R.t() * T * T / R.poly({1, 1});
  Series total(W), prod = R.one(), x = v;
  while (true) {
    total += b_11_2(x, T) * prod;
    prod *= a_11_2(x, T);
    if (low_valuation(prod) + 1 > total.order()) break;
    const Series next = x * step;
    if (low_valuation(next) <= low_valuation(x)) {
      throw SeriesError("11-2 iteration does not raise the valuation of its argument");
    }
    x = next;
  }
  return total;
}

Series gf_11_2(int W) {
  const auto parts = motzkin_parts(W);
  const Ring R{parts.T.order()};
  const Series one_p_t = R.poly({1, 1});
  const Series& T = parts.T;
  Series sum(R.W), prod = R.one();
  Series v = R.t() * T / one_p_t;  // v_1
  const Series step = R.t() * T * T / one_p_t;
  while (true) {
    sum += b_11_2(v, T) * prod;
    prod *= a_11_2(v, T);
    if (low_valuation(prod) + 3 > sum.order()) break;
    v *= step;
  }
  return parts.first + R.tpow(2) * T / one_p_t * sum;
}

// Alternate 11-2 route: iterate P(v) = a(v) P(v t T^2/(1+t)) + b(v) from the
// generic iteration at v = tT/(1+t).
Series alt_11_2(int W) {
  const auto parts = motzkin_parts(W);
  const Ring R{parts.T.order()};
  const Series one_p_t = R.poly({1, 1});
  const Series p = p_iteration(R.t() * parts.T / one_p_t, parts.T, R.W);
  return parts.first + R.tpow(2) * parts.T / one_p_t * p;
}

Series gf_21_1(int W) {
  const Ring R{W};
  const Series one_m_t = R.poly({1, -1});
  const Series one_m_2t = R.poly({1, -2});
  const int depth = W + 1;
  // v_d = t^d / (1-t)^d
  std::vector<Series> v;
  v.push_back(R.one());
  for (int d = 1; d <= depth; ++d) v.push_back(v.back() * R.t() / one_m_t);
  Series inner(W);  // R(t; v_{d+1}), zero below the truncation depth
  for (int d = depth; d >= 0; --d) {
    const Series& vd = v[d];
    const Series lower = one_m_t * one_m_2t - vd * R.tpow(3) * inner;
    const Series upper =
        one_m_t * one_m_t * (vd * R.tpow(2) - (R.one() - vd) * one_m_2t);
    inner = R.t() / (vd * one_m_2t - upper / lower);
  }
  return inner;
}

// H_0..H_n, J_0..J_n from the rational recurrences.
void fill_hj(int W, int n, std::vector<Series>& H, std::vector<Series>& J) {
  const Ring R{W};
  const Series c = R.t() / R.poly({1, 1});
  H.assign(1, Series(W));
  J.assign(1, R.one());
  for (int m = 1; m <= n; ++m) {
    H.push_back(R.t() * (R.one() + H[m - 1]) / (R.one() - R.t() * H[m - 1]));
    J.push_back(J[m - 1] / (R.one() - c * (R.one() + H[m - 1])));
  }
}

Series alt_1_11(int W) {
  const Ring R{W};
  std::vector<Series> H, J;
  fill_hj(W, W, H, J);
  const Series one_p_t = R.poly({1, 1});
  Series total = R.t() * one_p_t;  // Q_1 (1+t)
  Series G = R.one();              // G_1
  for (int m = 2; m <= W; ++m) {
    G = R.t() * G / (R.one() - R.t() * H[m - 2]);
    const Series Q = R.t() * G * J[m - 1] / (R.one() - R.t() * H[m - 1]);
    total += Q * pow(one_p_t, m);
  }
  return total;
}

Series alt_2_11(int W) {
  const Ring R{W};
  std::vector<Series> H, J;
  fill_hj(W, W, H, J);
  const Series one_m_t = R.poly({1, -1});
  Series total(W);
  Series K = R.one();  // K_1
  for (int m = 1; m <= W; ++m) {
    if (m >= 2) K = R.t() * K / (one_m_t - R.t() * H[m - 2]);
    total += R.t() * K * J[m - 1] / (one_m_t - R.t() * H[m - 1]);
  }
  return total;
}

Series alt_31_2(int W) {
  const Ring R{W};
  const Series one_m_t = R.poly({1, -1});
  std::vector<Series> x{R.one()};
  for (int i = 0; i <= W + 1; ++i) x.push_back(R.one() + R.t() / (R.one() - R.t() * x[i]));
  Series w(W);
  Series num = R.one();  // prod_{j=1}^{i+1} x_j
  Series den = R.one();  // prod_{j=0}^{i-1} (1 - t x_j)
  for (int i = 0; i + 2 <= W; ++i) {
    num *= x[i + 1];
    if (i >= 1) den *= R.one() - R.t() * x[i - 1];
    const Series k = R.poly({1, -1, -1}) - R.t() * one_m_t * x[i];
    w += R.tpow(i + 2) * num / (k * den);
  }
  return R.t() / one_m_t + w;
}

Series alt_kernel(const VincularPattern& pattern, int W) {
  return iterate_kernel(kernel_recipe(pattern, W));
}

using Evaluator = Series (*)(int);

struct Entry {
  GfStrategy strategy;
  Evaluator primary;
  Evaluator alternate;
};

Series alt_21_2(int W) { return alt_kernel(VincularPattern::parse("21-2"), W); }
Series alt_21_3(int W) { return alt_kernel(VincularPattern::parse("21-3"), W); }

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> kEntries = {
      {"2-21", {GfStrategy::ExplicitSum, gf_2_21, nullptr}},
      {"3-21", {GfStrategy::ExplicitSum, gf_3_21, nullptr}},
      {"1-11", {GfStrategy::ExplicitSum, gf_1_11, alt_1_11}},
      {"2-11", {GfStrategy::ExplicitSum, gf_2_11, alt_2_11}},
      {"21-2", {GfStrategy::ExplicitSum, gf_21_2, alt_21_2}},
      {"21-3", {GfStrategy::ExplicitSum, gf_21_3, alt_21_3}},
      {"31-2", {GfStrategy::ExplicitSum, gf_31_2, alt_31_2}},
      {"11-2", {GfStrategy::IteratedFunctional, gf_11_2, alt_11_2}},
      {"21-1", {GfStrategy::FixedPointRecursion, gf_21_1, nullptr}},
  };
  return kEntries;
}

const Entry& entry_for(const VincularPattern& pattern) {
  const auto it = registry().find(pattern.to_string());
  if (it == registry().end()) {
    throw UnsupportedPattern("no generating function registered for " + pattern.to_string());
  }
  return it->second;
}

// Runs an evaluator at increasing working orders until the result is known
// through `order`, then truncates and checks integrality.
Series evaluate(Evaluator fn, int order) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  for (int extra = 4; extra <= 64; extra += 4) {
    Series s = fn(order + extra);
    if (s.order() < order) continue;
    s = s.truncated(order);
    s.integer_coefficients();
    return s;
  }
  throw SeriesError("working order could not reach the requested order");
}

}  // namespace

std::string_view strategy_name(GfStrategy s) {
  switch (s) {
    case GfStrategy::ExplicitSum: return "explicit-sum";
    case GfStrategy::IteratedFunctional: return "iterated-functional";
    case GfStrategy::FixedPointRecursion: return "fixed-point-recursion";
  }
  return "?";
}

const std::vector<std::string>& genfun_patterns() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> out;
    for (const auto& [name, e] : registry()) out.push_back(name);
    return out;
  }();
  return kNames;
}

bool has_genfun(const VincularPattern& pattern) {
  return registry().count(pattern.to_string()) > 0;
}

GfRecipe recipe_for(const VincularPattern& pattern, int order) {
  const Entry& e = entry_for(pattern);
  GfRecipe r{pattern.to_string(), e.strategy, order, 0};
  const std::string& p = r.pattern;
  int bound = 0;
  if (p == "2-21") {
    while ((bound + 1) * (bound + 6) / 2 <= order) ++bound;
  } else if (p == "3-21" || p == "21-2") {
    bound = (order - 1) / 2;
  } else if (p == "21-3") {
    while (choose2(bound + 1) + 3 * (bound + 1) <= order) ++bound;
  } else if (p == "1-11" || p == "2-11") {
    bound = order;
  } else if (p == "31-2") {
    bound = order - 1;
  } else if (p == "11-2") {
    // each a(v) factor carries valuation at least 3
    bound = order / 3 + 1;
  } else if (p == "21-1") {
    bound = order + 1;
  }
  r.bound = bound;
  return r;
}

Series series_for(const VincularPattern& pattern, int order) {
  return evaluate(entry_for(pattern).primary, order);
}

std::vector<BigInt> genfun_counts(const VincularPattern& pattern, int order) {
  const auto coeffs = series_for(pattern, order).integer_coefficients();
  return std::vector<BigInt>(coeffs.begin() + 1, coeffs.end());
}

bool has_alternate(const VincularPattern& pattern) {
  const auto it = registry().find(pattern.to_string());
  return it != registry().end() && it->second.alternate != nullptr;
}

Series alternate_series_for(const VincularPattern& pattern, int order) {
  const Entry& e = entry_for(pattern);
  if (!e.alternate) {
    throw UnsupportedPattern("no alternate generating function route for " +
                             pattern.to_string());
  }
  return evaluate(e.alternate, order);
}

Series iterate_kernel(const KernelRecipe& recipe) {
  const int W = recipe.order;
  const Ring R{W};
  const Series& x0 = recipe.root;
  Series s0(W), s1(W), prod = R.one();
  Series x = recipe.substitution(x0);
  while (true) {
    const Series k = recipe.kernel(x);
    s0 += prod * R.t() / k;
    s1 += prod * R.t() / ((R.one() - x) * k);
    prod = prod * recipe.coefficient(x) / k;
    if (low_valuation(prod) + 1 > std::min(s0.order(), s1.order())) break;
    const Series next = recipe.substitution(x);
    if (low_valuation(next) <= low_valuation(x)) {
      throw SeriesError("kernel substitution does not raise the valuation of its argument");
    }
    x = next;
  }
  const Series b0 = recipe.coefficient(x0);
  return -(R.t() + b0 * s0) / (R.t() / (R.one() - x0) + b0 * s1);
}

KernelRecipe kernel_recipe(const VincularPattern& pattern, int order) {
  const std::string p = pattern.to_string();
  KernelRecipe r;
  if (p == "21-2") {
    const Ring R{order};
    r.root = R.poly({1, -1}) / R.poly({1, -2});
    r.kernel = [](const Series& x) {
      const Ring S{x.order()};
      return S.one() + x * x * S.t() / (S.one() - x) + S.tpow(2) / S.poly({1, -2});
    };
    r.coefficient = [](const Series& x) {
      const Ring S{x.order()};
      return S.tpow(2) / S.poly({1, -2});
    };
  } else if (p == "21-3") {
    r.root = root_21_3(order);
    r.kernel = kernel_21_3;
    r.coefficient = [](const Series& x) {
      const Ring S{x.order()};
      return x * S.tpow(3) / (S.poly({1, -1}) * S.poly({1, -2}));
    };
  } else {
    throw UnsupportedPattern("no kernel recipe for " + p);
  }
  r.order = r.root.order();
  r.substitution = [](const Series& x) {
    const Ring S{x.order()};
    return x * S.t() / S.poly({1, -1});
  };
  return r;
}

Series kernel_residual(const VincularPattern& pattern, int order) {
  for (int extra = 4; extra <= 64; extra += 4) {
    const KernelRecipe r = kernel_recipe(pattern, order + extra);
    const Series k = r.kernel(r.root);
    if (k.order() >= order) return k.truncated(order);
  }
  throw SeriesError("working order could not reach the requested order");
}

Series iterate_kernel(const GfRecipe& recipe) {
  const VincularPattern pattern = VincularPattern::parse(recipe.pattern);
  if (recipe.pattern == "21-2") return evaluate(alt_21_2, recipe.order);
  if (recipe.pattern == "21-3") return evaluate(alt_21_3, recipe.order);
  if (recipe.pattern == "11-2") return evaluate(alt_11_2, recipe.order);
  if (recipe.pattern == "21-1") return evaluate(gf_21_1, recipe.order);
  throw UnsupportedPattern("no iterated route for " + pattern.to_string());
}

Series aux_series(std::string_view name, int index, int order) {
  const int W = order + 4;
  const Ring R{W};
  const Series c = R.t() / R.poly({1, 1});
  auto need = [&](int lo) {
    if (index < lo) {
      throw std::invalid_argument("index " + std::to_string(index) + " too small for " +
                                  std::string(name));
    }
  };
  ChebStream v(ChebStream::Kind::V, W);
  auto H = [&](int m) { return m == 0 ? Series(W) : c * v.v(m - 1) / v.v(m + 1); };
  Series out(W);
  if (name == "H") {
    need(0);
    out = H(index);
  } else if (name == "J") {
    need(0);
    out = R.one() / v.v(index + 1);
  } else if (name == "G") {
    need(1);
    out = pow(c, index - 1) / v.v(index);
  } else if (name == "Q") {
    need(1);
    out = pow(c, index) / (v.v(index) * v.v(index + 1));
  } else if (name == "K") {
    need(1);
    Series den = R.one();
    for (int i = 0; i <= index - 2; ++i) den *= R.poly({1, -1}) - R.t() * H(i);
    out = R.tpow(index - 1) / den;
  } else if (name == "P2_11") {
    need(1);
    out = R.tpow(index) /
          (pow(R.poly({1, 1}), index + 1) * v.v(index) * v.v(index + 1) * v.v(index + 2));
  } else if (name == "T") {
    out = motzkin_parts(W).T;
  } else if (name == "MotzkinGF") {
    out = (R.poly({1, -1}) - R.motzkin_root()) / R.poly({0, 0, 2});
  } else {
    throw std::invalid_argument("unknown auxiliary series '" + std::string(name) + "'");
  }
  return out.truncated(order);
}

Series aux_mv(const Rational& v, int order) {
  if (v == 1) throw std::invalid_argument("M(t; v) is evaluated at v != 1");
  const int W = order + 4;
  const Ring R{W};
  const Series num = R.one() + (1 - 2 * v) * R.t() - R.motzkin_root();
  const Series den = 2 * (R.one() * Rational(1 - v) + Rational((1 - v) + v * v) * R.t());
  return (num / den).truncated(order);
}

Series aux_pv(const Series& v, int order) {
  if (low_valuation(v) < 1) throw std::invalid_argument("P(t; v, 1) needs v with positive valuation");
  for (int extra = 4; extra <= 64; extra += 4) {
    const int W = std::min(order + extra, v.order());
    const auto parts = motzkin_parts(W);
    const Series s = p_iteration(v.truncated(std::min(W, parts.T.order())), parts.T,
                                 parts.T.order());
    if (s.order() >= order) return s.truncated(order);
    if (W == v.order()) break;
  }
  throw SeriesError("argument order too small for P(t; v, 1)");
}

}  // namespace catwords
