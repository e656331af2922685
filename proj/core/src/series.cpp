#include "zjet/series.hpp"

#include <algorithm>

#include "zjet/error.hpp"

namespace zjet {

JetAlgebra::JetAlgebra(CoordinateSystem coords, int cap)
    : coords_(std::move(coords)), cap_(cap) {
  if (cap_ < 0) throw ValueError("algebra: cap must be nonnegative");
}

AlgebraPtr make_algebra(CoordinateSystem coords, int cap) {
  return std::make_shared<const JetAlgebra>(std::move(coords), cap);
}

int total_exponent(const Series::Exponents& e) {
  int t = 0;
  for (auto x : e) t += x;
  return t;
}

bool GrlexLess::operator()(const std::vector<std::uint8_t>& a,
                           const std::vector<std::uint8_t>& b) const {
  int ta = 0, tb = 0;
  for (auto x : a) ta += x;
  for (auto x : b) tb += x;
  if (ta != tb) return ta < tb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Series::Series(AlgebraPtr alg) : alg_(std::move(alg)) {
  if (!alg_) throw ValueError("series: null algebra");
}

Series Series::constant(AlgebraPtr alg, const Rat& c) {
  Series s(std::move(alg));
  if (c != 0) s.terms_.emplace(Exponents(s.alg_->dim(), 0), c);
  return s;
}

Series Series::coordinate(AlgebraPtr alg, int index) {
  Series s(std::move(alg));
  if (index < 0 || index >= s.alg_->dim())
    throw ValueError("series: coordinate index out of range");
  if (s.alg_->cap() < 1)
    throw CapError("series: cap too small to represent a coordinate");
  Exponents e(s.alg_->dim(), 0);
  e[index] = 1;
  s.terms_.emplace(std::move(e), Rat(1));
  return s;
}

Series Series::coordinate(AlgebraPtr alg, const std::string& name) {
  int idx = alg->coords().index_of(name);
  if (idx < 0) throw ValueError("series: unknown coordinate '" + name + "'");
  return coordinate(std::move(alg), idx);
}

Series Series::monomial(AlgebraPtr alg, const Exponents& exps, const Rat& c) {
  Series s(std::move(alg));
  if (static_cast<int>(exps.size()) != s.alg_->dim())
    throw DimensionError("series: exponent vector has wrong length");
  if (c == 0) return s;
  // Quotient semantics: odd squares vanish, monomials beyond cap vanish.
  for (int i = 0; i < s.alg_->dim(); ++i)
    if (exps[i] >= 2 && s.alg_->coords().degree(i).parity() == 1) return s;
  if (total_exponent(exps) > s.alg_->cap()) return s;
  s.terms_.emplace(exps, c);
  return s;
}

Rat Series::epsilon() const {
  auto it = terms_.find(Exponents(alg_->dim(), 0));
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<int> Series::j_order() const {
  if (terms_.empty()) return std::nullopt;
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int jo = 0;
    for (int i = 0; i < alg_->dim(); ++i)
      if (!alg_->coords().degree(i).is_zero()) jo += e[i];
    if (best < 0 || jo < best) best = jo;
  }
  return best;
}

Degree Series::monomial_degree(const Exponents& e) const {
  Degree d = Degree::zero(alg_->n());
  for (int i = 0; i < alg_->dim(); ++i)
    if (e[i] & 1) d = degree_add(d, alg_->coords().degree(i));
  return d;
}

bool Series::is_homogeneous(const Degree& d) const {
  for (const auto& [e, c] : terms_)
    if (!(monomial_degree(e) == d)) return false;
  return true;
}

std::optional<Degree> Series::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  Degree d = monomial_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (!(monomial_degree(e) == d)) return std::nullopt;
  return d;
}

Series Series::homogeneous_part(const Degree& d) const {
  Series out(alg_);
  for (const auto& [e, c] : terms_)
    if (monomial_degree(e) == d) out.terms_.emplace(e, c);
  return out;
}

Series Series::truncated(int k) const {
  Series out(alg_);
  for (const auto& [e, c] : terms_)
    if (total_exponent(e) <= k) out.terms_.emplace(e, c);
  return out;
}

void Series::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Series Series::operator-() const {
  Series out(alg_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Series operator+(const Series& a, const Series& b) {
  require_same_algebra(a, b);
  Series out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Series operator-(const Series& a, const Series& b) {
  require_same_algebra(a, b);
  Series out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

Series operator*(const Series& a, const Series& b) {
  require_same_algebra(a, b);
  const auto& coords = a.alg_->coords();
  const int dim = a.alg_->dim();
  const int cap = a.alg_->cap();
  Series out(a.alg_);
  for (const auto& [e1, c1] : a.terms_) {
    // Suffix parity-degrees of e1 drive the reordering sign: a factor u^c of
    // the right monomial crosses exactly the left factors of higher index.
    for (const auto& [e2, c2] : b.terms_) {
      bool dead = false;
      int tot = 0;
      for (int i = 0; i < dim && !dead; ++i) {
        int s = e1[i] + e2[i];
        tot += s;
        if (s >= 2 && coords.degree(i).parity() == 1) dead = true;
      }
      if (dead || tot > cap) continue;
      int sign_exp = 0;
      Degree suffix = Degree::zero(a.alg_->n());
      for (int i = dim - 1; i >= 0; --i) {
        if (e2[i] & 1) sign_exp ^= degree_dot(coords.degree(i), suffix);
        if (e1[i] & 1) suffix = degree_add(suffix, coords.degree(i));
      }
      Series::Exponents e(dim);
      for (int i = 0; i < dim; ++i) e[i] = static_cast<std::uint8_t>(e1[i] + e2[i]);
      Rat c = c1 * c2;
      if (sign_exp) c = -c;
      out.add_term(e, c);
    }
  }
  return out;
}

bool operator==(const Series& a, const Series& b) {
  return *a.alg_ == *b.alg_ && a.terms_ == b.terms_;
}

Series Series::scaled(const Rat& c) const {
  Series out(alg_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, c * k);
  return out;
}

Series Series::pow(int k) const {
  if (k < 0) throw ValueError("series: negative power");
  Series out = Series::constant(alg_, Rat(1));
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

Series Series::partial(int index) const {
  if (index < 0 || index >= alg_->dim())
    throw ValueError("series: coordinate index out of range");
  const auto& coords = alg_->coords();
  const Degree dc = coords.degree(index);
  Series out(alg_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Degree prefix = Degree::zero(alg_->n());
    for (int i = 0; i < index; ++i)
      if (e[i] & 1) prefix = degree_add(prefix, coords.degree(i));
    Rat k = c * e[index];
    if (degree_dot(dc, prefix)) k = -k;
    Exponents e2 = e;
    e2[index] -= 1;
    out.add_term(e2, k);
  }
  return out;
}

Series Series::partial(const std::string& name) const {
  int idx = alg_->coords().index_of(name);
  if (idx < 0) throw ValueError("series: unknown coordinate '" + name + "'");
  return partial(idx);
}

Series Series::inverted() const {
  auto deg = homogeneous_degree();
  if (!deg || !deg->is_zero())
    throw DegreeError("invert: series must be homogeneous of degree zero");
  Rat c = epsilon();
  if (c == 0) throw NonUnitError("invert: constant term is zero");
  Series h = scaled(Rat(1) / c) - Series::constant(alg_, Rat(1));
  // (1+h)^{-1} = sum (-h)^k; h has positive total order, so the sum is finite.
  Series acc = Series::constant(alg_, Rat(1));
  Series result = acc;
  for (int k = 1; k <= alg_->cap() && !acc.is_zero(); ++k) {
    acc = acc * (-h);
    result = result + acc;
  }
  return result.scaled(Rat(1) / c);
}

Series Series::substituted(const std::vector<Series>& images) const {
  if (images.empty())
    throw DimensionError("substitute: no images given; use the overload with a target algebra");
  return substituted_into(images, images.front().algebra());
}

Series Series::substituted_into(const std::vector<Series>& images, AlgebraPtr target) const {
  if (static_cast<int>(images.size()) != alg_->dim())
    throw DimensionError("substitute: expected " + std::to_string(alg_->dim()) +
                         " images, got " + std::to_string(images.size()));
  if (!target) throw ValueError("substitute: null target algebra");
  if (target->n() != alg_->n())
    throw RingMismatchError("substitute: target algebra has different n");
  for (const auto& img : images) {
    if (!(*img.algebra() == *target))
      throw RingMismatchError("substitute: images live in different algebras");
  }
  for (int i = 0; i < alg_->dim(); ++i) {
    const Degree d = alg_->coords().degree(i);
    if (!images[i].is_homogeneous(d))
      throw DegreeError("substitute: image of '" + alg_->coords().name(i) +
                        "' is not homogeneous of degree " + d.str());
    if (d.is_zero() && images[i].epsilon() != 0)
      throw BasepointError("substitute: image of zero-degree coordinate '" +
                           alg_->coords().name(i) + "' has nonzero constant term");
  }
  // Power cache: pows[i][k] = images[i]^k.
  std::vector<std::vector<Series>> pows(images.size());
  auto power = [&](int i, int k) -> const Series& {
    auto& p = pows[i];
    if (p.empty()) p.push_back(Series::constant(target, Rat(1)));
    while (static_cast<int>(p.size()) <= k) p.push_back(p.back() * images[i]);
    return p[k];
  };
  Series out(target);
  for (const auto& [e, c] : terms_) {
    Series term = Series::constant(target, c);
    for (int i = 0; i < alg_->dim() && !term.is_zero(); ++i)
      if (e[i]) term = term * power(i, e[i]);
    out = out + term;
  }
  return out;
}

int Series::max_total_exponent() const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, total_exponent(e));
  return m;
}

void require_same_algebra(const Series& a, const Series& b) {
  if (!(*a.algebra() == *b.algebra()))
    throw RingMismatchError("series: operands belong to different algebras");
}

}  // namespace zjet
