#include "zjet/localforms.hpp"

#include <algorithm>

namespace zjet {

Series embed_series(const Series& s, const AlgebraPtr& into, const std::vector<int>& index_map) {
  const int src_dim = s.algebra()->dim();
  if (static_cast<int>(index_map.size()) != src_dim)
    throw DimensionError("embed: index map length mismatch");
  for (int i = 1; i < src_dim; ++i)
    if (index_map[i] <= index_map[i - 1])
      throw ValueError("embed: index map must be strictly increasing");
  Series out = Series::zero(into);
  for (const auto& [e, c] : s.terms()) {
    Series::Exponents e2(into->dim(), 0);
    for (int i = 0; i < src_dim; ++i) e2[index_map[i]] = e[i];
    out = out + Series::monomial(into, e2, c);
  }
  return out;
}

/// Linear coefficient matrix of the pullback tuple: L[i][j] is the
/// coefficient of the bare coordinate u_j in pull_i.
static QMatrix linear_part(const Morphism& m) {
  const int rows = m.target()->dim();
  const int cols = m.source()->dim();
  QMatrix l(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (const auto& [e, c] : m.pullbacks()[i].terms()) {
      if (total_exponent(e) != 1) continue;
      for (int j = 0; j < cols; ++j)
        if (e[j] == 1) l.at(i, j) = c;
    }
  }
  return l;
}

Morphism invert_morphism(const Morphism& m) {
  const AlgebraPtr& u = m.source();
  const AlgebraPtr& v = m.target();
  {
    DegreeSignature su = u->coords().signature(), sv = v->coords().signature();
    if (su.p != sv.p || su.q != sv.q)
      throw NotLocallyInvertibleError("invert: source and target dimensions differ");
  }
  for (const auto& b : tangent_map(m).blocks)
    if (b.rows() != b.cols() || b.rank() != b.rows())
      throw NotLocallyInvertibleError("invert: a tangent block is singular at the basepoint");

  QMatrix l = linear_part(m);
  QMatrix k = l.inversed();  // block-diagonal since the tuple is homogeneous

  // Higher-order parts R_i = pull_i - linear part.
  std::vector<Series> higher;
  for (int i = 0; i < v->dim(); ++i) {
    Series lin = Series::zero(u);
    for (int j = 0; j < u->dim(); ++j)
      if (l.at(i, j) != 0) lin = lin + Series::coordinate(u, j).scaled(l.at(i, j));
    higher.push_back(m.pullbacks()[i] - lin);
  }

  // Fixed point Q = K (id - R(Q)), gaining one total order per sweep.
  std::vector<Series> q(u->dim(), Series::zero(v));
  auto sweep = [&](const std::vector<Series>& cur) {
    std::vector<Series> rhs;
    for (int i = 0; i < v->dim(); ++i)
      rhs.push_back(Series::coordinate(v, i) - higher[i].substituted_into(cur, v));
    std::vector<Series> next;
    for (int j = 0; j < u->dim(); ++j) {
      Series acc = Series::zero(v);
      for (int i = 0; i < v->dim(); ++i)
        if (k.at(j, i) != 0) acc = acc + rhs[i].scaled(k.at(j, i));
      next.push_back(acc);
    }
    return next;
  };
  for (int j = 0; j < u->dim(); ++j) {
    Series acc = Series::zero(v);
    for (int i = 0; i < v->dim(); ++i)
      if (k.at(j, i) != 0) acc = acc + Series::coordinate(v, i).scaled(k.at(j, i));
    q[j] = acc;
  }
  for (int t = 0; t < u->cap(); ++t) {
    std::vector<Series> next = sweep(q);
    if (next == q) break;
    q = std::move(next);
  }

  Morphism inv(v, u, std::move(q));
  if (!(compose(inv, m) == identity_morphism(v)) || !(compose(m, inv) == identity_morphism(u)))
    throw Error("invert: internal verification of the inverse failed");
  return inv;
}

/// Per-degree greedy selections for completing a morphism to a coordinate
/// change: column selections for submersions, row selections for immersions.
static std::vector<std::vector<int>> select_minors(const TangentMap& t, bool columns,
                                                   const char* op) {
  std::vector<std::vector<int>> sel;
  for (const auto& b : t.blocks) {
    std::vector<int> s = columns ? independent_columns(b) : independent_rows(b);
    const int need = columns ? b.rows() : b.cols();
    if (static_cast<int>(s.size()) != need)
      throw ValueError(std::string(op) + ": tangent block is not of full rank");
    sel.push_back(std::move(s));
  }
  return sel;
}

/// Global coordinate indices of the block-local selection, and its complement.
static void globalize(const CoordinateSystem& coords, const std::vector<std::vector<int>>& sel,
                      std::vector<int>& picked, std::vector<int>& complement) {
  const auto& order = standard_order(coords.n());
  std::vector<bool> in_sel(coords.size(), false);
  for (std::size_t d = 0; d < order.size(); ++d) {
    std::vector<int> group;
    for (int i = 0; i < coords.size(); ++i)
      if (coords.degree(i) == order[d]) group.push_back(i);
    for (int local : sel[d]) in_sel[group.at(local)] = true;
  }
  for (int i = 0; i < coords.size(); ++i) (in_sel[i] ? picked : complement).push_back(i);
}

static AlgebraPtr subset_algebra(const AlgebraPtr& alg, const std::vector<int>& indices) {
  std::vector<std::string> names;
  std::vector<Degree> degrees;
  for (int i : indices) {
    names.push_back(alg->coords().name(i));
    degrees.push_back(alg->coords().degree(i));
  }
  return make_algebra(CoordinateSystem(alg->n(), std::move(names), std::move(degrees)),
                      alg->cap());
}

NormalForm submersion_normal_form(const Morphism& phi) {
  const AlgebraPtr& u = phi.source();
  const AlgebraPtr& v = phi.target();
  auto sel = select_minors(tangent_map(phi), /*columns=*/true, "submersion_normal_form");
  std::vector<int> picked, complement;
  globalize(u->coords(), sel, picked, complement);

  AlgebraPtr c = subset_algebra(u, complement);
  ProductDomain prod = product_domain(v, c);

  std::vector<Series> pulls(prod.domain->dim(), Series::zero(u));
  for (int i = 0; i < v->dim(); ++i) pulls[prod.from_first[i]] = phi.pullbacks()[i];
  for (std::size_t j = 0; j < complement.size(); ++j)
    pulls[prod.from_second[j]] = Series::coordinate(u, complement[j]);
  Morphism tau(u, prod.domain, std::move(pulls));
  Morphism tau_inv = invert_morphism(tau);

  Morphism composed = compose(tau_inv, phi);
  const Morphism& standard = prod.proj1;
  if (!(composed == standard))
    throw Error("submersion_normal_form: internal certificate failure");
  return NormalForm{CoordinateChange{std::move(tau), std::move(tau_inv)}, prod.domain,
                    standard, std::move(composed), std::move(sel)};
}

NormalForm immersion_normal_form(const Morphism& phi) {
  const AlgebraPtr& u = phi.source();
  const AlgebraPtr& v = phi.target();
  auto sel = select_minors(tangent_map(phi), /*columns=*/false, "immersion_normal_form");
  std::vector<int> picked, complement;
  globalize(v->coords(), sel, picked, complement);

  AlgebraPtr c = subset_algebra(v, complement);
  ProductDomain prod = product_domain(u, c);

  // Complete phi to a diffeomorphism candidate U x C -> V by feeding the
  // complementary target coordinates linearly.
  std::vector<Series> pulls;
  std::vector<int> pos_in_complement(v->dim(), -1);
  for (std::size_t j = 0; j < complement.size(); ++j) pos_in_complement[complement[j]] = static_cast<int>(j);
  for (int i = 0; i < v->dim(); ++i) {
    Series s = embed_series(phi.pullbacks()[i], prod.domain, prod.from_first);
    if (pos_in_complement[i] >= 0)
      s = s + Series::coordinate(prod.domain, prod.from_second[pos_in_complement[i]]);
    pulls.push_back(std::move(s));
  }
  Morphism completed(prod.domain, v, std::move(pulls));
  Morphism sigma = invert_morphism(completed);

  Morphism composed = compose(phi, sigma);
  std::vector<Series> incl(prod.domain->dim(), Series::zero(u));
  for (int i = 0; i < u->dim(); ++i) incl[prod.from_first[i]] = Series::coordinate(u, i);
  Morphism standard(u, prod.domain, std::move(incl));
  if (!(composed == standard))
    throw Error("immersion_normal_form: internal certificate failure");
  return NormalForm{CoordinateChange{std::move(sigma), std::move(completed)}, prod.domain,
                    std::move(standard), std::move(composed), std::move(sel)};
}

std::optional<ConstantRankFactorization> constant_rank_factor(const Morphism& phi) {
  const AlgebraPtr& u = phi.source();
  const AlgebraPtr& v = phi.target();
  auto dec = constant_rank_decompose(graded_jacobian(phi));
  if (!dec) return std::nullopt;

  DegreeSignature mid_sig;
  mid_sig.n = u->n();
  mid_sig.p = dec->profile.r;
  mid_sig.q = dec->profile.s;
  AlgebraPtr w = make_algebra(canonical_coordinates(mid_sig), u->cap());

  // phi1: the pivot-row components of phi, a submersion onto W.
  std::vector<Series> p1;
  for (int row : dec->pivot_rows) p1.push_back(phi.pullbacks()[row]);
  Morphism phi1(u, w, std::move(p1));

  NormalForm nf = submersion_normal_form(phi1);
  // Section of phi1: zero-section of the product followed by tau^{-1}.
  // W-positions inside the extended domain are read off the standard form,
  // whose pullbacks are bare product coordinates.
  std::vector<Series> zsec(nf.extended->dim(), Series::zero(w));
  for (int i = 0; i < w->dim(); ++i) {
    const Series& coord = nf.standard_form.pullbacks()[i];
    int idx = -1;
    for (const auto& [e, cc] : coord.terms())
      for (int j = 0; j < nf.extended->dim(); ++j)
        if (e[j] == 1) idx = j;
    zsec[idx] = Series::coordinate(w, i);
  }
  Morphism zero_section(w, nf.extended, std::move(zsec));
  Morphism section = compose(zero_section, nf.change.inverse);
  if (!(compose(section, phi1) == identity_morphism(w)))
    throw Error("constant_rank_factor: internal section verification failed");

  Morphism phi2 = compose(section, phi);
  if (!(compose(phi1, phi2) == phi))
    throw Error("constant_rank_factor: internal certificate failure");

  Classification c1 = classify_point(phi1);
  Classification c2 = classify_point(phi2);
  if (c1.kind != MapKind::Submersion && c1.kind != MapKind::DiffeoCandidate)
    throw Error("constant_rank_factor: first factor is not a submersion");
  if (c2.kind != MapKind::Immersion && c2.kind != MapKind::DiffeoCandidate)
    throw Error("constant_rank_factor: second factor is not an immersion");

  return ConstantRankFactorization{dec->profile, w, std::move(phi1), std::move(phi2),
                                   std::move(*dec)};
}

}  // namespace zjet
