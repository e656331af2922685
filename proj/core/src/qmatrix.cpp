#include "zjet/qmatrix.hpp"

namespace zjet {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ValueError("matrix: negative dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, Rat(0));
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Rat& QMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw ValueError("matrix: index out of range");
  return a_[static_cast<std::size_t>(i) * cols_ + j];
}

const Rat& QMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw ValueError("matrix: index out of range");
  return a_[static_cast<std::size_t>(i) * cols_ + j];
}

QMatrix QMatrix::transposed() const {
  QMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix: product shape mismatch");
  QMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

int QMatrix::rank() const {
  QMatrix m = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    const Rat p = m.at(rank, col);
    for (int r = rank + 1; r < rows_; ++r) {
      if (m.at(r, col) == 0) continue;
      const Rat f = m.at(r, col) / p;
      for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

Rat QMatrix::det() const {
  if (rows_ != cols_) throw DimensionError("matrix: determinant of non-square matrix");
  QMatrix m = *this;
  Rat d(1);
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int r = col; r < rows_; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = -d;
    }
    const Rat p = m.at(col, col);
    d *= p;
    for (int r = col + 1; r < rows_; ++r) {
      if (m.at(r, col) == 0) continue;
      const Rat f = m.at(r, col) / p;
      for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return d;
}

QMatrix QMatrix::inversed() const {
  if (rows_ != cols_) throw DimensionError("matrix: inverse of non-square matrix");
  QMatrix m = *this;
  QMatrix inv = QMatrix::identity(rows_);
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int r = col; r < rows_; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularError("matrix: singular, no inverse");
    if (pivot != col)
      for (int j = 0; j < cols_; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    const Rat p = m.at(col, col);
    for (int j = 0; j < cols_; ++j) {
      m.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 0; r < rows_; ++r) {
      if (r == col || m.at(r, col) == 0) continue;
      const Rat f = m.at(r, col);
      for (int j = 0; j < cols_; ++j) {
        m.at(r, j) -= f * m.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool QMatrix::solve(const std::vector<Rat>& rhs, std::vector<Rat>& out) const {
  if (static_cast<int>(rhs.size()) != rows_) throw DimensionError("matrix: rhs length mismatch");
  QMatrix m(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    m.at(i, cols_) = rhs[i];
  }
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j <= cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    const Rat p = m.at(rank, col);
    for (int j = 0; j <= cols_; ++j) m.at(rank, j) /= p;
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      const Rat f = m.at(r, col);
      for (int j = 0; j <= cols_; ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int r = rank; r < rows_; ++r)
    if (m.at(r, cols_) != 0) return false;
  out.assign(cols_, Rat(0));
  for (int k = 0; k < rank; ++k) out[pivot_col[k]] = m.at(k, cols_);
  return true;
}

std::vector<int> independent_columns(const QMatrix& m) {
  std::vector<int> picked;
  QMatrix work(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) work.at(i, j) = m.at(i, j);
  // Incremental elimination: a column is kept when it still has a nonzero
  // entry below the current pivot rows after reducing by them.
  int rank = 0;
  for (int col = 0; col < m.cols(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(work.at(pivot, j), work.at(rank, j));
    const Rat p = work.at(rank, col);
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (work.at(r, col) == 0) continue;
      const Rat f = work.at(r, col) / p;
      for (int j = col; j < m.cols(); ++j) work.at(r, j) -= f * work.at(rank, j);
    }
    picked.push_back(col);
    ++rank;
  }
  return picked;
}

std::vector<int> independent_rows(const QMatrix& m) { return independent_columns(m.transposed()); }

}  // namespace zjet
