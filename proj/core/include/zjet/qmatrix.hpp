#pragma once

#include <vector>

#include "zjet/error.hpp"
#include "zjet/rational.hpp"

namespace zjet {

/// Dense exact rational matrix. All eliminations scan rows/columns in
/// ascending index order, so every result is deterministic.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols);
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& at(int i, int j);
  const Rat& at(int i, int j) const;

  QMatrix transposed() const;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b);
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  /// Rank by Gaussian elimination; 0 for empty shapes.
  int rank() const;
  /// Determinant of a square matrix (1 for the empty 0x0 matrix).
  Rat det() const;
  /// Exact inverse; throws SingularError when rank < n.
  QMatrix inversed() const;

  /// Any exact solution of A x = rhs with free variables set to zero;
  /// false when the system is inconsistent.
  bool solve(const std::vector<Rat>& rhs, std::vector<Rat>& out) const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/// First (leftmost-greedy) maximal linearly independent column set.
std::vector<int> independent_columns(const QMatrix& m);
/// First (topmost-greedy) maximal linearly independent row set.
std::vector<int> independent_rows(const QMatrix& m);

}  // namespace zjet
