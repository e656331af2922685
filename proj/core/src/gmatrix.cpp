#include "zjet/gmatrix.hpp"

#include <sstream>

namespace zjet {

std::string RankProfile::str() const {
  std::ostringstream os;
  os << r << '|';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  return os.str();
}

int RankProfile::total() const {
  int t = r;
  for (int si : s) t += si;
  return t;
}

static void check_grouped(const std::vector<Degree>& degs, int n, const char* what) {
  int last = 0;
  for (const auto& d : degs) {
    if (d.n() != n) throw ValueError(std::string("graded matrix: ") + what + " degree has wrong n");
    int pos = standard_order_index(d);
    if (pos < last)
      throw ValueError(std::string("graded matrix: ") + what +
                       " degrees must be grouped in standard order");
    last = pos;
  }
}

GradedMatrix::GradedMatrix(AlgebraPtr alg, std::vector<Degree> row_degrees,
                           std::vector<Degree> col_degrees)
    : alg_(std::move(alg)), row_degs_(std::move(row_degrees)), col_degs_(std::move(col_degrees)) {
  if (!alg_) throw ValueError("graded matrix: null algebra");
  check_grouped(row_degs_, alg_->n(), "row");
  check_grouped(col_degs_, alg_->n(), "column");
  a_.assign(row_degs_.size() * col_degs_.size(), Series::zero(alg_));
}

GradedMatrix GradedMatrix::identity(AlgebraPtr alg, const std::vector<Degree>& degrees) {
  GradedMatrix m(alg, degrees, degrees);
  for (int i = 0; i < m.rows(); ++i) m.at(i, i) = Series::constant(alg, Rat(1));
  return m;
}

Series& GradedMatrix::at(int i, int j) {
  if (i < 0 || i >= rows() || j < 0 || j >= cols())
    throw ValueError("graded matrix: index out of range");
  return a_[static_cast<std::size_t>(i) * cols() + j];
}

const Series& GradedMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows() || j < 0 || j >= cols())
    throw ValueError("graded matrix: index out of range");
  return a_[static_cast<std::size_t>(i) * cols() + j];
}

bool GradedMatrix::is_degree0() const {
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j)
      if (!at(i, j).is_homogeneous(degree_add(row_degs_[i], col_degs_[j]))) return false;
  return true;
}

void GradedMatrix::require_degree0(const char* op) const {
  if (!is_degree0())
    throw DegreeError(std::string(op) + ": matrix is not of degree 0 (entry degrees must be row+col)");
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  if (!(*a.alg_ == *b.alg_)) return false;
  if (a.row_degs_.size() != b.row_degs_.size() || a.col_degs_.size() != b.col_degs_.size())
    return false;
  for (std::size_t i = 0; i < a.row_degs_.size(); ++i)
    if (a.row_degs_[i] != b.row_degs_[i]) return false;
  for (std::size_t j = 0; j < a.col_degs_.size(); ++j)
    if (a.col_degs_[j] != b.col_degs_[j]) return false;
  return a.a_ == b.a_;
}

static void check_same_alg(const GradedMatrix& a, const GradedMatrix& b) {
  if (!(*a.algebra() == *b.algebra()))
    throw RingMismatchError("graded matrix: operands belong to different algebras");
}

GradedMatrix matmul(const GradedMatrix& a, const GradedMatrix& b) {
  check_same_alg(a, b);
  if (a.cols() != b.rows())
    throw DimensionError("graded matrix: product shape mismatch");
  for (int k = 0; k < a.cols(); ++k)
    if (a.col_degrees()[k] != b.row_degrees()[k])
      throw DegreeError("graded matrix: product degree lists mismatch");
  GradedMatrix m(a.algebra(), a.row_degrees(), b.col_degrees());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Series acc = Series::zero(a.algebra());
      for (int k = 0; k < a.cols(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
      m.at(i, j) = acc;
    }
  return m;
}

GradedMatrix matadd(const GradedMatrix& a, const GradedMatrix& b) {
  check_same_alg(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("graded matrix: sum shape mismatch");
  GradedMatrix m(a.algebra(), a.row_degrees(), a.col_degrees());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) + b.at(i, j);
  return m;
}

GradedMatrix matneg(const GradedMatrix& a) {
  GradedMatrix m(a.algebra(), a.row_degrees(), a.col_degrees());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = -a.at(i, j);
  return m;
}

QMatrix epsilon_matrix(const GradedMatrix& m) {
  QMatrix e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e.at(i, j) = m.at(i, j).epsilon();
  return e;
}

std::vector<QMatrix> epsilon_blocks(const GradedMatrix& m) {
  m.require_degree0("epsilon_blocks");
  const auto& order = standard_order(m.algebra()->n());
  std::vector<QMatrix> blocks;
  for (const auto& d : order) {
    std::vector<int> ri, ci;
    for (int i = 0; i < m.rows(); ++i)
      if (m.row_degrees()[i] == d) ri.push_back(i);
    for (int j = 0; j < m.cols(); ++j)
      if (m.col_degrees()[j] == d) ci.push_back(j);
    QMatrix b(static_cast<int>(ri.size()), static_cast<int>(ci.size()));
    for (std::size_t a = 0; a < ri.size(); ++a)
      for (std::size_t b2 = 0; b2 < ci.size(); ++b2)
        b.at(static_cast<int>(a), static_cast<int>(b2)) = m.at(ri[a], ci[b2]).epsilon();
    blocks.push_back(std::move(b));
  }
  return blocks;
}

static void require_square_by_degree(const GradedMatrix& m, const char* op) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(op) + ": matrix is not square");
  for (int i = 0; i < m.rows(); ++i)
    if (m.row_degrees()[i] != m.col_degrees()[i])
      throw DegreeError(std::string(op) + ": row and column degree lists differ");
}

bool is_invertible_deg0(const GradedMatrix& m) {
  m.require_degree0("is_invertible_deg0");
  require_square_by_degree(m, "is_invertible_deg0");
  for (const auto& b : epsilon_blocks(m)) {
    if (b.rows() != b.cols()) return false;  // unreachable for square-by-degree input
    if (b.rank() != b.rows()) return false;
  }
  return true;
}

GradedMatrix neumann_inverse(const GradedMatrix& m) {
  m.require_degree0("neumann_inverse");
  require_square_by_degree(m, "neumann_inverse");
  const AlgebraPtr& alg = m.algebra();
  QMatrix e = epsilon_matrix(m);
  QMatrix k = e.inversed();  // SingularError when a diagonal block is singular
  GradedMatrix dinv(alg, m.col_degrees(), m.row_degrees());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      dinv.at(i, j) = Series::constant(alg, k.at(i, j));
  // m = D (I + Z) with Z augmentation-trivial, hence nilpotent under the cap.
  GradedMatrix z = matadd(matmul(dinv, m), matneg(GradedMatrix::identity(alg, m.col_degrees())));
  GradedMatrix acc = GradedMatrix::identity(alg, m.col_degrees());
  GradedMatrix series_sum = acc;
  for (int t = 1; t <= alg->cap(); ++t) {
    acc = matneg(matmul(acc, z));
    bool zero = true;
    for (int i = 0; i < acc.rows() && zero; ++i)
      for (int j = 0; j < acc.cols() && zero; ++j)
        if (!acc.at(i, j).is_zero()) zero = false;
    if (zero) break;
    series_sum = matadd(series_sum, acc);
  }
  return matmul(series_sum, dinv);
}

GradedMatrix graded_transpose(const GradedMatrix& m) {
  GradedMatrix t(m.algebra(), m.col_degrees(), m.row_degrees());
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.cols(); ++j) {
      const Degree& ci = m.col_degrees()[i];
      const Degree& rj = m.row_degrees()[j];
      int sign_exp = degree_dot(degree_add(ci, rj), ci);
      t.at(i, j) = sign_exp ? -m.at(j, i) : m.at(j, i);
    }
  return t;
}

RankProfile scalar_rank(const std::vector<QMatrix>& blocks) {
  if (blocks.empty()) throw DimensionError("scalar_rank: no blocks");
  RankProfile p;
  p.r = blocks[0].rank();
  for (std::size_t i = 1; i < blocks.size(); ++i) p.s.push_back(blocks[i].rank());
  return p;
}

std::optional<ConstantRankDecomposition> constant_rank_decompose(const GradedMatrix& m) {
  m.require_degree0("constant_rank_decompose");
  const AlgebraPtr& alg = m.algebra();
  GradedMatrix z = m;
  GradedMatrix g1 = GradedMatrix::identity(alg, m.row_degrees());
  GradedMatrix g2 = GradedMatrix::identity(alg, m.col_degrees());
  std::vector<bool> row_done(m.rows(), false), col_done(m.cols(), false);
  std::vector<std::pair<int, int>> pivots;

  // Unit pivots live where row and column degrees agree; scan row-major.
  for (;;) {
    int pi = -1, pj = -1;
    for (int i = 0; i < z.rows() && pi < 0; ++i) {
      if (row_done[i]) continue;
      for (int j = 0; j < z.cols(); ++j) {
        if (col_done[j]) continue;
        if (!(m.row_degrees()[i] == m.col_degrees()[j])) continue;
        if (z.at(i, j).epsilon() != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) break;
    pivots.emplace_back(pi, pj);
    row_done[pi] = true;
    col_done[pj] = true;
    Series pinv = z.at(pi, pj).inverted();
    for (int j = 0; j < z.cols(); ++j) {
      z.at(pi, j) = pinv * z.at(pi, j);
    }
    for (int j = 0; j < g1.cols(); ++j) g1.at(pi, j) = pinv * g1.at(pi, j);
    for (int r = 0; r < z.rows(); ++r) {
      if (r == pi || z.at(r, pj).is_zero()) continue;
      Series f = -z.at(r, pj);
      for (int j = 0; j < z.cols(); ++j) z.at(r, j) = z.at(r, j) + f * z.at(pi, j);
      for (int j = 0; j < g1.cols(); ++j) g1.at(r, j) = g1.at(r, j) + f * g1.at(pi, j);
    }
    for (int c = 0; c < z.cols(); ++c) {
      if (c == pj || z.at(pi, c).is_zero()) continue;
      Series g = -z.at(pi, c);
      for (int r = 0; r < z.rows(); ++r) z.at(r, c) = z.at(r, c) + z.at(r, pj) * g;
      for (int r = 0; r < g2.rows(); ++r) g2.at(r, c) = g2.at(r, c) + g2.at(r, pj) * g;
    }
  }

  for (int i = 0; i < z.rows(); ++i)
    for (int j = 0; j < z.cols(); ++j)
      if (!row_done[i] && !col_done[j] && !z.at(i, j).is_zero()) return std::nullopt;

  // Permute pivots to the leading position of each degree group. Columns
  // follow their partner rows so the leading block is the identity.
  const auto& order = standard_order(alg->n());
  std::vector<int> partner_col(m.rows(), -1);
  for (const auto& [i, j] : pivots) partner_col[i] = j;
  std::vector<int> rperm, cperm;
  for (const auto& d : order) {
    for (int i = 0; i < z.rows(); ++i)
      if (m.row_degrees()[i] == d && row_done[i]) {
        rperm.push_back(i);
        cperm.push_back(partner_col[i]);
      }
    for (int i = 0; i < z.rows(); ++i)
      if (m.row_degrees()[i] == d && !row_done[i]) rperm.push_back(i);
    for (int j = 0; j < z.cols(); ++j)
      if (m.col_degrees()[j] == d && !col_done[j]) cperm.push_back(j);
  }

  GradedMatrix p(alg, m.row_degrees(), m.row_degrees());
  for (int i = 0; i < m.rows(); ++i)
    p.at(i, rperm[i]) = Series::constant(alg, Rat(1));
  GradedMatrix q(alg, m.col_degrees(), m.col_degrees());
  for (int j = 0; j < m.cols(); ++j)
    q.at(cperm[j], j) = Series::constant(alg, Rat(1));

  ConstantRankDecomposition out{
      RankProfile{}, matmul(p, g1), matmul(g2, q), GradedMatrix(alg, m.row_degrees(), m.col_degrees()),
      std::move(pivots), {}, {}};

  out.profile.s.assign(order.size() - 1, 0);
  for (const auto& [i, j] : out.pivots) {
    int pos = standard_order_index(m.row_degrees()[i]);
    if (pos == 0)
      ++out.profile.r;
    else
      ++out.profile.s[pos - 1];
  }
  for (int i = 0; i < m.rows(); ++i)
    if (row_done[i]) out.pivot_rows.push_back(i);
  for (int j = 0; j < m.cols(); ++j)
    if (col_done[j]) out.pivot_cols.push_back(j);

  out.canonical = matmul(matmul(out.g1, m), out.g2);
  // Certificate sanity: blockwise [[I,0],[0,0]] with the profile's sizes.
  for (const auto& d : order) {
    std::vector<int> ri, ci;
    for (int i = 0; i < m.rows(); ++i)
      if (m.row_degrees()[i] == d) ri.push_back(i);
    for (int j = 0; j < m.cols(); ++j)
      if (m.col_degrees()[j] == d) ci.push_back(j);
    int pos = standard_order_index(d);
    int rk = pos == 0 ? out.profile.r : out.profile.s[pos - 1];
    for (std::size_t a = 0; a < ri.size(); ++a)
      for (std::size_t b = 0; b < ci.size(); ++b) {
        const Series& entry = out.canonical.at(ri[a], ci[b]);
        bool want_one = a == b && static_cast<int>(a) < rk;
        const Series expect = want_one ? Series::constant(alg, Rat(1)) : Series::zero(alg);
        if (!(entry == expect))
          throw Error("constant_rank_decompose: internal certificate failure");
      }
  }
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!(m.row_degrees()[i] == m.col_degrees()[j]) && !out.canonical.at(i, j).is_zero())
        throw Error("constant_rank_decompose: internal certificate failure");
  return out;
}

}  // namespace zjet
