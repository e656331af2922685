#pragma once

#include <vector>

#include "zjet/form.hpp"

namespace zjet {

/// Weight-graded cohomology ranks of the coordinate differential complex.
/// The weight of a term is its word length plus the total exponent of the
/// coefficient monomial; the derivative preserves it, so the complex splits
/// into finite-dimensional weight slices computable by exact linear algebra.
struct DeRhamRanks {
  int k_max = 0;
  int w_max = 0;
  /// complex_dim[k][w] = dimension of the (k, w) slice, k <= k_max + 1.
  std::vector<std::vector<int>> complex_dim;
  /// rank_d[k][w] = rank of d on the (k, w) slice, k <= k_max.
  std::vector<std::vector<int>> rank_d;
  /// h_dim[k][w] = dimension of the degree-k weight-w cohomology.
  std::vector<std::vector<int>> h_dim;
  /// h_total[k] = sum of h_dim[k][w] over w <= w_max.
  std::vector<int> h_total;
};

/// Computes the table above for 0 <= k <= k_max, 0 <= w <= w_max. The
/// truncated model carries the full weight-w slice only when w <= cap, so
/// the jet cap must be at least w_max (CapError otherwise).
DeRhamRanks derham_ranks(const AlgebraPtr& alg, int k_max, int w_max);

/// Solves d eta = w for a closed form w of positive weight. Throws
/// ValueError when w is not closed or carries a nonzero constant term, and
/// CapError when the potential would need coefficients beyond the jet cap
/// (one order of headroom above the highest coefficient degree of w).
Form find_potential(const Form& w);

}  // namespace zjet
