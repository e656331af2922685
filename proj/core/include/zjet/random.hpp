#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zjet/form.hpp"
#include "zjet/gmatrix.hpp"
#include "zjet/morphism.hpp"

namespace zjet {

/// Deterministic generator of random kernel objects. Every draw depends
/// only on the seed and the call sequence, so property checks and the CLI
/// self-check reproduce exactly.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

  std::mt19937_64& engine() { return eng_; }

  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  /// Rational with numerator in [-bound, bound] and denominator in [1, 3].
  Rat rational(int bound = 5);
  Rat nonzero_rational(int bound = 5);

  /// Random series built from up to max_terms monomials of total exponent
  /// <= max_total (invalid draws collapse under the quotient rules).
  Series series(const AlgebraPtr& alg, int max_terms, int max_total);

  /// Random homogeneous series of the given degree with monomial totals in
  /// [min_total, max_total]. zero_epsilon suppresses the constant term.
  Series homogeneous_series(const AlgebraPtr& alg, const Degree& d,
                            bool zero_epsilon, int min_total, int max_total);

  /// Random morphism: one admissible pullback image per target coordinate.
  Morphism morphism(const AlgebraPtr& source, const AlgebraPtr& target,
                    int max_total);

  /// Random endomorphism whose degreewise linear blocks are invertible.
  Morphism automorphism(const AlgebraPtr& alg);

  /// Random endomorphism with a singular linear block in the first degree
  /// class that has coordinates.
  Morphism singular_endomorphism(const AlgebraPtr& alg);

  /// Random rational matrix with entries bounded as in rational().
  QMatrix qmatrix(int rows, int cols, int bound = 5);
  /// Random invertible rational matrix (falls back to the identity).
  QMatrix invertible_qmatrix(int n, int bound = 3);

  /// Random degree-0 graded matrix: entry (i, j) homogeneous of degree
  /// row_i + col_j, with free constant terms on the degree-0 entries.
  GradedMatrix degree0_matrix(const AlgebraPtr& alg,
                              const std::vector<Degree>& rows,
                              const std::vector<Degree>& cols, int max_total);

  /// Random form with up to max_terms wedge words of length <= form_cap.
  Form form(const AlgebraPtr& alg, int form_cap, int max_terms,
            int max_coeff_total);
  /// Same with every word of length exactly k.
  Form homogeneous_form(const AlgebraPtr& alg, int k, int form_cap,
                        int max_terms, int max_coeff_total);

  VectorField field(const AlgebraPtr& alg, int max_total);
  VectorField homogeneous_field(const AlgebraPtr& alg, const Degree& d,
                                int max_total);

 private:
  std::mt19937_64 eng_;
};

}  // namespace zjet
