#include "zjet/morphism.hpp"

#include <algorithm>

namespace zjet {

Morphism::Morphism(AlgebraPtr source, AlgebraPtr target, std::vector<Series> pullbacks)
    : source_(std::move(source)), target_(std::move(target)), pulls_(std::move(pullbacks)) {
  if (!source_ || !target_) throw ValueError("morphism: null domain");
  if (source_->n() != target_->n())
    throw RingMismatchError("morphism: source and target have different n");
  if (static_cast<int>(pulls_.size()) != target_->dim())
    throw DimensionError("morphism: expected " + std::to_string(target_->dim()) +
                         " pullbacks, got " + std::to_string(pulls_.size()));
  for (int i = 0; i < target_->dim(); ++i) {
    const Series& s = pulls_[i];
    if (!(*s.algebra() == *source_))
      throw RingMismatchError("morphism: pullback of '" + target_->coords().name(i) +
                              "' lives in the wrong algebra");
    const Degree d = target_->coords().degree(i);
    if (!s.is_homogeneous(d))
      throw DegreeError("morphism: pullback of '" + target_->coords().name(i) +
                        "' is not homogeneous of degree " + d.str());
    if (d.is_zero() && s.epsilon() != 0)
      throw BasepointError("morphism: pullback of zero-degree coordinate '" +
                           target_->coords().name(i) + "' has nonzero constant term");
  }
}

Series Morphism::pullback(const Series& f) const {
  if (!(*f.algebra() == *target_))
    throw RingMismatchError("morphism: pullback argument lives on the wrong domain");
  return f.substituted_into(pulls_, source_);
}

bool operator==(const Morphism& a, const Morphism& b) {
  return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.pulls_ == b.pulls_;
}

Morphism identity_morphism(AlgebraPtr alg) {
  std::vector<Series> pulls;
  for (int i = 0; i < alg->dim(); ++i) pulls.push_back(Series::coordinate(alg, i));
  return Morphism(alg, alg, std::move(pulls));
}

Morphism compose(const Morphism& first, const Morphism& then_m) {
  if (!(*first.target() == *then_m.source()))
    throw RingMismatchError("compose: middle domains do not match");
  std::vector<Series> pulls;
  pulls.reserve(then_m.pullbacks().size());
  for (const Series& s : then_m.pullbacks())
    pulls.push_back(s.substituted_into(first.pullbacks(), first.source()));
  return Morphism(first.source(), then_m.target(), std::move(pulls));
}

ProductDomain product_domain(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->n() != b->n()) throw RingMismatchError("product: factors have different n");
  if (a->cap() != b->cap()) throw ValueError("product: factors have different caps");
  const auto& order = standard_order(a->n());

  std::vector<std::string> names;
  std::vector<Degree> degrees;
  std::vector<int> from_first(a->dim(), -1), from_second(b->dim(), -1);
  auto fresh_name = [&names](std::string base) {
    auto used = [&names](const std::string& s) {
      return std::find(names.begin(), names.end(), s) != names.end();
    };
    if (!used(base)) return base;
    for (int k = 2;; ++k) {
      std::string cand = base + "_" + std::to_string(k);
      if (!used(cand)) return cand;
    }
  };
  for (const auto& d : order) {
    for (int i = 0; i < a->dim(); ++i)
      if (a->coords().degree(i) == d) {
        from_first[i] = static_cast<int>(names.size());
        names.push_back(fresh_name(a->coords().name(i)));
        degrees.push_back(d);
      }
    for (int j = 0; j < b->dim(); ++j)
      if (b->coords().degree(j) == d) {
        from_second[j] = static_cast<int>(names.size());
        names.push_back(fresh_name(b->coords().name(j)));
        degrees.push_back(d);
      }
  }
  AlgebraPtr prod = make_algebra(CoordinateSystem(a->n(), std::move(names), std::move(degrees)),
                                 a->cap());
  std::vector<Series> p1, p2;
  for (int i = 0; i < a->dim(); ++i) p1.push_back(Series::coordinate(prod, from_first[i]));
  for (int j = 0; j < b->dim(); ++j) p2.push_back(Series::coordinate(prod, from_second[j]));
  return ProductDomain{prod, std::move(from_first), std::move(from_second),
                       Morphism(prod, a, std::move(p1)), Morphism(prod, b, std::move(p2))};
}

Morphism pair_morphism(const Morphism& f, const Morphism& g, const ProductDomain& prod) {
  if (!(*f.source() == *g.source()))
    throw RingMismatchError("pair: factors have different sources");
  if (!(*f.target() == *prod.proj1.target()) || !(*g.target() == *prod.proj2.target()))
    throw RingMismatchError("pair: factor targets do not match the product");
  std::vector<Series> pulls(prod.domain->dim(), Series::zero(f.source()));
  for (std::size_t i = 0; i < prod.from_first.size(); ++i)
    pulls[prod.from_first[i]] = f.pullbacks()[i];
  for (std::size_t j = 0; j < prod.from_second.size(); ++j)
    pulls[prod.from_second[j]] = g.pullbacks()[j];
  return Morphism(f.source(), prod.domain, std::move(pulls));
}

GradedMatrix graded_jacobian(const Morphism& m) {
  const auto& src = m.source()->coords();
  const auto& tgt = m.target()->coords();
  GradedMatrix jac(m.source(), tgt.degrees(), src.degrees());
  for (int i = 0; i < tgt.size(); ++i)
    for (int j = 0; j < src.size(); ++j) {
      Series d = m.pullbacks()[i].partial(j);
      int sign_exp = degree_dot(degree_add(tgt.degree(i), src.degree(j)), tgt.degree(i));
      jac.at(i, j) = sign_exp ? -d : d;
    }
  return jac;
}

TangentMap tangent_map(const Morphism& m) {
  return TangentMap{epsilon_blocks(graded_jacobian(m))};
}

Series chain_rule_residual(const Morphism& psi, const Series& f, int source_index) {
  if (!(*f.algebra() == *psi.target()))
    throw RingMismatchError("chain rule: function lives on the wrong domain");
  const int cap = psi.source()->cap();
  Series lhs = psi.pullback(f).partial(source_index);
  Series rhs = Series::zero(psi.source());
  for (int b = 0; b < psi.target()->dim(); ++b)
    rhs = rhs + psi.pullbacks()[b].partial(source_index) * psi.pullback(f.partial(b));
  return (lhs - rhs).truncated(cap - 1);
}

JacobianCheck jacobian_multiplicativity_check(const Morphism& first, const Morphism& then_m) {
  const int cap = first.source()->cap();
  GradedMatrix lhs = graded_jacobian(compose(first, then_m));
  GradedMatrix jac_outer = graded_jacobian(then_m);
  GradedMatrix transported(first.source(), jac_outer.row_degrees(), jac_outer.col_degrees());
  for (int i = 0; i < jac_outer.rows(); ++i)
    for (int j = 0; j < jac_outer.cols(); ++j)
      transported.at(i, j) = first.pullback(jac_outer.at(i, j));
  GradedMatrix rhs = matmul(transported, graded_jacobian(first));
  GradedMatrix res(first.source(), lhs.row_degrees(), lhs.col_degrees());
  bool ok = true;
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j) {
      res.at(i, j) = (lhs.at(i, j) - rhs.at(i, j)).truncated(cap - 1);
      if (!res.at(i, j).is_zero()) ok = false;
    }
  return JacobianCheck{std::move(res), ok};
}

std::string kind_str(MapKind k) {
  switch (k) {
    case MapKind::Immersion: return "immersion";
    case MapKind::Submersion: return "submersion";
    case MapKind::DiffeoCandidate: return "diffeo-candidate";
    default: return "none";
  }
}

Classification classify_point(const Morphism& m) {
  TangentMap t = tangent_map(m);
  bool col_full = true, row_full = true;
  for (const auto& b : t.blocks) {
    int rk = b.rank();
    if (rk != b.cols()) col_full = false;
    if (rk != b.rows()) row_full = false;
  }
  MapKind kind = MapKind::None;
  if (col_full && row_full)
    kind = MapKind::DiffeoCandidate;
  else if (col_full)
    kind = MapKind::Immersion;
  else if (row_full)
    kind = MapKind::Submersion;
  return Classification{kind, scalar_rank(t.blocks)};
}

}  // namespace zjet
