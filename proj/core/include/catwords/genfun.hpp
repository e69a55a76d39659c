#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "catwords/bigint.hpp"
#include "catwords/series.hpp"
#include "catwords/words.hpp"

namespace catwords {

enum class GfStrategy { ExplicitSum, IteratedFunctional, FixedPointRecursion };

std::string_view strategy_name(GfStrategy s);

/// How series_for evaluates one pattern. `bound` is the largest summation or
/// recursion index used; every dropped term has valuation above `order`.
struct GfRecipe {
  std::string pattern;
  GfStrategy strategy = GfStrategy::ExplicitSum;
  int order = 0;
  int bound = 0;
};

/// Patterns with a generating-function evaluator.
const std::vector<std::string>& genfun_patterns();
bool has_genfun(const VincularPattern& pattern);

/// Throws UnsupportedPattern for patterns outside genfun_patterns().
GfRecipe recipe_for(const VincularPattern& pattern, int order);

/// Sum of c_n t^n through t^order (constant term 0). Coefficients are checked
/// to be integers; a fractional coefficient throws SeriesError.
Series series_for(const VincularPattern& pattern, int order);

/// c_1..c_order read off series_for.
std::vector<BigInt> genfun_counts(const VincularPattern& pattern, int order);

/// Patterns with a second, independently derived evaluation route:
/// 1-11 and 2-11 (recurrences for H, J, G, K), 21-2 and 21-3 (kernel
/// iteration), 31-2 (pair recursion), 11-2 (functional iteration for P).
bool has_alternate(const VincularPattern& pattern);
Series alternate_series_for(const VincularPattern& pattern, int order);

/// A linear functional equation k(x) U(x) = t + t/(1-x) U(1) + b(x) U(sigma(x))
/// solved for U(1) by substituting the kernel root x0 and iterating sigma.
struct KernelRecipe {
  std::function<Series(const Series&)> kernel;
  std::function<Series(const Series&)> coefficient;  // b(x)
  std::function<Series(const Series&)> substitution;  // sigma(x)
  Series root;                                         // x0
  int order = 0;
};

/// Throws SeriesError if sigma fails to raise the valuation of its argument.
Series iterate_kernel(const KernelRecipe& recipe);

/// Evaluates the iterated route of a recipe (21-2, 21-3, 11-2, 21-1).
Series iterate_kernel(const GfRecipe& recipe);

/// The kernel recipe for 21-2 or 21-3 at working order `order`.
KernelRecipe kernel_recipe(const VincularPattern& pattern, int order);

/// k(t; x(t)) for 21-2 or 21-3; identically zero through its order.
Series kernel_residual(const VincularPattern& pattern, int order);

/// Named auxiliary series. `index` is m for H, J, G, Q, K, P2_11 and ignored
/// for T and MotzkinGF. Throws std::invalid_argument on a bad name or index.
///   H(m): no-level m-ary growth words ending in m (H_0 = 0)
///   J(m): no-level m-ary growth words, empty word included (J_0 = 1)
///   G(m): no-level Catalan words with largest letter m - 1 ending in m - 1
///   Q(m): no-level Catalan words with largest letter m
///   K(m): 2-11 avoiders whose largest and last letter is m - 1 (K_1 = 1)
///   P2_11(m): 2-11 avoiders with largest letter m
///   T: (1 + t - sqrt(1 - 2t - 3t^2)) / (2t)
///   MotzkinGF: sum of M_n t^n
Series aux_series(std::string_view name, int index, int order);

/// M(t; v) at a rational point v != 1: sum of m_n(a) v^(a-1) t^n.
Series aux_mv(const Rational& v, int order);

/// P(t; v, 1) for a series-valued v of positive valuation.
Series aux_pv(const Series& v, int order);

}  // namespace catwords
