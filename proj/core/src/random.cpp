#include "zjet/random.hpp"

#include <algorithm>
#include <functional>

#include "zjet/error.hpp"

namespace zjet {

namespace {

// All admissible monomials of the given degree with totals in
// [min_total, max_total], in generation (grlex) order.
void collect_monomials(const AlgebraPtr& alg, const Degree& d, int min_total,
                       int max_total, int coord, Series::Exponents& cur,
                       int total, std::vector<Series::Exponents>& out) {
  const CoordinateSystem& cs = alg->coords();
  if (coord == cs.size()) {
    if (total < min_total) return;
    Series probe = Series::monomial(alg, cur, Rat(1));
    if (probe.is_zero()) return;  // over cap
    if (probe.monomial_degree(cur) == d) out.push_back(cur);
    return;
  }
  const bool nilpotent = cs.degree(coord).parity() == 1;
  const int top = nilpotent ? 1 : max_total - total;
  for (int e = 0; e <= std::min(top, max_total - total); ++e) {
    cur[coord] = static_cast<std::uint8_t>(e);
    collect_monomials(alg, d, min_total, max_total, coord + 1, cur, total + e,
                      out);
  }
  cur[coord] = 0;
}

}  // namespace

int RandomSource::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(eng_);
}

Rat RandomSource::rational(int bound) {
  return rat(uniform_int(-bound, bound), uniform_int(1, 3));
}

Rat RandomSource::nonzero_rational(int bound) {
  Rat v = rational(bound);
  while (v == 0) v = rational(bound);
  return v;
}

Series RandomSource::series(const AlgebraPtr& alg, int max_terms,
                            int max_total) {
  Series out = Series::zero(alg);
  const int nc = alg->coords().size();
  const int terms = uniform_int(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Series::Exponents e(nc, 0);
    const int total = uniform_int(0, std::min(max_total, alg->cap()));
    bool ok = nc > 0 || total == 0;
    for (int f = 0; f < total && ok; ++f) ++e[uniform_int(0, nc - 1)];
    if (!ok) continue;
    out = out + Series::monomial(alg, e, rational());
  }
  return out;
}

Series RandomSource::homogeneous_series(const AlgebraPtr& alg, const Degree& d,
                                        bool zero_epsilon, int min_total,
                                        int max_total) {
  std::vector<Series::Exponents> monos;
  Series::Exponents cur(alg->coords().size(), 0);
  collect_monomials(alg, d, min_total, std::min(max_total, alg->cap()), 0, cur,
                    0, monos);
  Series out = Series::zero(alg);
  for (const auto& m : monos) {
    if (zero_epsilon && total_exponent(m) == 0) continue;
    if (uniform_int(0, 2) == 0) continue;  // keep the draws sparse
    out = out + Series::monomial(alg, m, rational());
  }
  return out;
}

Morphism RandomSource::morphism(const AlgebraPtr& source,
                                const AlgebraPtr& target, int max_total) {
  const CoordinateSystem& tc = target->coords();
  std::vector<Series> pulls;
  pulls.reserve(tc.size());
  for (int i = 0; i < tc.size(); ++i)
    pulls.push_back(
        homogeneous_series(source, tc.degree(i), true, 1, max_total));
  return Morphism(source, target, std::move(pulls));
}

QMatrix RandomSource::qmatrix(int rows, int cols, int bound) {
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rational(bound);
  return m;
}

QMatrix RandomSource::invertible_qmatrix(int n, int bound) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    QMatrix m = qmatrix(n, n, bound);
    if (m.det() != 0) return m;
  }
  return QMatrix::identity(n);
}

namespace {

// Endomorphism pullbacks with prescribed linear blocks plus random
// higher-order homogeneous tails.
std::vector<Series> blockwise_pulls(
    RandomSource& rng, const AlgebraPtr& alg,
    const std::function<QMatrix(int size, int block)>& make_block) {
  const CoordinateSystem& cs = alg->coords();
  std::vector<Series> pulls(cs.size(), Series::zero(alg));
  const auto& order = standard_order(cs.n());
  for (std::size_t b = 0; b < order.size(); ++b) {
    const std::vector<int> idx = cs.indices_of_degree(order[b]);
    if (idx.empty()) continue;
    const int k = static_cast<int>(idx.size());
    const QMatrix blk = make_block(k, static_cast<int>(b));
    for (int i = 0; i < k; ++i) {
      Series p = Series::zero(alg);
      for (int j = 0; j < k; ++j) {
        if (blk.at(i, j) == 0) continue;
        p = p + Series::coordinate(alg, idx[j]).scaled(blk.at(i, j));
      }
      p = p + rng.homogeneous_series(alg, order[b], true, 2, alg->cap());
      pulls[idx[i]] = std::move(p);
    }
  }
  return pulls;
}

}  // namespace

Morphism RandomSource::automorphism(const AlgebraPtr& alg) {
  auto pulls = blockwise_pulls(
      *this, alg, [&](int size, int) { return invertible_qmatrix(size); });
  return Morphism(alg, alg, std::move(pulls));
}

Morphism RandomSource::singular_endomorphism(const AlgebraPtr& alg) {
  const CoordinateSystem& cs = alg->coords();
  int first = -1;
  const auto& order = standard_order(cs.n());
  for (std::size_t b = 0; b < order.size(); ++b)
    if (!cs.indices_of_degree(order[b]).empty()) {
      first = static_cast<int>(b);
      break;
    }
  if (first < 0)
    throw ValueError("random: cannot degenerate a coordinate-free domain");
  auto pulls = blockwise_pulls(*this, alg, [&](int size, int block) {
    QMatrix m = qmatrix(size, size, 3);
    if (block == first)
      for (int j = 0; j < size; ++j) m.at(0, j) = 0;  // dead first row
    return m;
  });
  return Morphism(alg, alg, std::move(pulls));
}

GradedMatrix RandomSource::degree0_matrix(const AlgebraPtr& alg,
                                          const std::vector<Degree>& rows,
                                          const std::vector<Degree>& cols,
                                          int max_total) {
  GradedMatrix m(alg, rows, cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = homogeneous_series(
          alg, degree_add(rows[i], cols[j]), false, 0, max_total);
  return m;
}

Form RandomSource::form(const AlgebraPtr& alg, int form_cap, int max_terms,
                        int max_coeff_total) {
  Form out = Form::zero(alg, form_cap);
  const int nc = alg->coords().size();
  const int terms = uniform_int(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    const int len = uniform_int(0, form_cap);
    if (len > 0 && nc == 0) continue;
    Form::Word w(nc, 0);
    for (int f = 0; f < len; ++f) ++w[uniform_int(0, nc - 1)];
    out = out + [&] {
      Form one(alg, form_cap);
      one.add_term(w, series(alg, 2, max_coeff_total));
      return one;
    }();
  }
  return out;
}

Form RandomSource::homogeneous_form(const AlgebraPtr& alg, int k, int form_cap,
                                    int max_terms, int max_coeff_total) {
  if (k > form_cap) throw CapError("random: word length above the form cap");
  Form out = Form::zero(alg, form_cap);
  const int nc = alg->coords().size();
  if (k > 0 && nc == 0) return out;
  const int terms = uniform_int(1, std::max(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    Form::Word w(nc, 0);
    for (int f = 0; f < k; ++f) ++w[uniform_int(0, nc - 1)];
    Form one(alg, form_cap);
    one.add_term(w, series(alg, 2, max_coeff_total));
    out = out + one;
  }
  return out;
}

VectorField RandomSource::field(const AlgebraPtr& alg, int max_total) {
  VectorField x{alg, {}};
  for (int b = 0; b < alg->coords().size(); ++b)
    x.coef.push_back(series(alg, 2, max_total));
  return x;
}

VectorField RandomSource::homogeneous_field(const AlgebraPtr& alg,
                                            const Degree& d, int max_total) {
  VectorField x{alg, {}};
  const CoordinateSystem& cs = alg->coords();
  for (int b = 0; b < cs.size(); ++b)
    x.coef.push_back(homogeneous_series(alg, degree_add(d, cs.degree(b)),
                                        false, 0, max_total));
  return x;
}

}  // namespace zjet
