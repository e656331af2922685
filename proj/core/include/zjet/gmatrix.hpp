#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zjet/qmatrix.hpp"
#include "zjet/series.hpp"

namespace zjet {

/// Blockwise rank data: r for the zero degree, s[i] for the i-th nonzero
/// degree in standard order.
struct RankProfile {
  int r = 0;
  std::vector<int> s;

  std::string str() const;  // "1|1,0,0"
  int total() const;
  friend bool operator==(const RankProfile& a, const RankProfile& b) {
    return a.r == b.r && a.s == b.s;
  }
  friend bool operator!=(const RankProfile& a, const RankProfile& b) { return !(a == b); }
};

/// Matrix over a JetAlgebra with degree-labelled rows and columns. The
/// degree-0 convention is used throughout: entry (i,j) is homogeneous of
/// degree row_degree(i) + col_degree(j), so products need no extra signs.
/// Row and column degrees must appear grouped following standard order.
class GradedMatrix {
 public:
  GradedMatrix(AlgebraPtr alg, std::vector<Degree> row_degrees, std::vector<Degree> col_degrees);
  static GradedMatrix identity(AlgebraPtr alg, const std::vector<Degree>& degrees);

  const AlgebraPtr& algebra() const { return alg_; }
  int rows() const { return static_cast<int>(row_degs_.size()); }
  int cols() const { return static_cast<int>(col_degs_.size()); }
  const std::vector<Degree>& row_degrees() const { return row_degs_; }
  const std::vector<Degree>& col_degrees() const { return col_degs_; }

  Series& at(int i, int j);
  const Series& at(int i, int j) const;

  /// True when every entry is homogeneous of degree row+col (zero passes).
  bool is_degree0() const;
  void require_degree0(const char* op) const;

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b);
  friend bool operator!=(const GradedMatrix& a, const GradedMatrix& b) { return !(a == b); }

 private:
  AlgebraPtr alg_;
  std::vector<Degree> row_degs_, col_degs_;
  std::vector<Series> a_;
};

GradedMatrix matmul(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix matadd(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix matneg(const GradedMatrix& a);

/// Constant terms, entrywise.
QMatrix epsilon_matrix(const GradedMatrix& m);

/// The 2^n diagonal blocks of the constant-term reduction, in standard
/// order of degrees. Blocks of absent degrees are empty.
std::vector<QMatrix> epsilon_blocks(const GradedMatrix& m);

/// Invertibility test for square degree-0 matrices: every diagonal block of
/// the constant-term reduction must be invertible.
bool is_invertible_deg0(const GradedMatrix& m);

/// Exact two-sided inverse of an invertible degree-0 matrix, via the finite
/// Neumann series of the augmentation-trivial part.
GradedMatrix neumann_inverse(const GradedMatrix& m);

/// Graded transpose: (A^gt)_{ij} = (-1)^{<c_i + r_j, c_i>} A_{ji}, with the
/// degree lists swapped. Reduces to the classical super transpose for n=1
/// and matches the Jacobian convention of morphisms.
GradedMatrix graded_transpose(const GradedMatrix& m);

/// Blockwise classical ranks of per-degree scalar blocks (standard order,
/// zero-degree block first). Empty blocks have rank 0.
RankProfile scalar_rank(const std::vector<QMatrix>& blocks);

struct ConstantRankDecomposition {
  RankProfile profile;
  GradedMatrix g1, g2;        // invertible; g1 * m * g2 = canonical
  GradedMatrix canonical;     // blockwise [[I,0],[0,0]]
  std::vector<std::pair<int, int>> pivots;  // (row, col), discovery order
  /// Pivot rows / cols in ascending index order (selection certificate).
  std::vector<int> pivot_rows, pivot_cols;
};

/// Unit-pivot two-sided elimination over the series ring. Succeeds with an
/// exact certificate when the matrix has constant rank over the jet ring;
/// returns nullopt when a nonzero non-unit residual remains.
std::optional<ConstantRankDecomposition> constant_rank_decompose(const GradedMatrix& m);

}  // namespace zjet
