#include "zjet/form.hpp"

#include <algorithm>

#include "zjet/error.hpp"

namespace zjet {

namespace {

// Crossing sign exponent for merging sorted words w1 ^ w2: every generator
// of w2 passes every generator of w1 with a strictly larger coordinate
// index, each crossing costing <deg c2, deg c1> + 1.
int merge_sign_exp(const CoordinateSystem& cs, const Form::Word& w1,
                   const Form::Word& w2) {
  int exp = 0;
  for (std::size_t c2 = 0; c2 < w2.size(); ++c2) {
    if (w2[c2] == 0) continue;
    for (std::size_t c1 = c2 + 1; c1 < w1.size(); ++c1) {
      if (w1[c1] == 0) continue;
      const int per = degree_dot(cs.degree(static_cast<int>(c2)),
                                 cs.degree(static_cast<int>(c1))) ^ 1;
      exp += w2[c2] * w1[c1] * per;
    }
  }
  return exp & 1;
}

}  // namespace

Form::Form(AlgebraPtr alg, int form_cap)
    : alg_(std::move(alg)), form_cap_(form_cap) {
  if (!alg_) throw ValueError("form: null algebra");
  if (form_cap_ < 0) throw ValueError("form: negative form cap");
}

Form Form::zero(AlgebraPtr alg, int form_cap) {
  return Form(std::move(alg), form_cap);
}

Form Form::from_series(const Series& s, int form_cap) {
  Form out(s.algebra(), form_cap);
  out.add_term(Word(s.algebra()->coords().size(), 0), s);
  return out;
}

Form Form::generator(AlgebraPtr alg, int index, int form_cap) {
  if (!alg) throw ValueError("form: null algebra");
  if (index < 0 || index >= alg->coords().size())
    throw ValueError("form: generator index out of range");
  Form out(alg, form_cap);
  Word w(alg->coords().size(), 0);
  w[index] = 1;
  out.add_term(w, Series::constant(alg, 1));
  return out;
}

Degree Form::word_degree(const Word& w) const {
  const CoordinateSystem& cs = alg_->coords();
  Degree d = Degree::zero(cs.n());
  for (std::size_t c = 0; c < w.size(); ++c)
    if (w[c] & 1) d = degree_add(d, cs.degree(static_cast<int>(c)));
  return d;
}

void Form::add_term(const Word& w, const Series& coeff) {
  if (!(*coeff.algebra() == *alg_))
    throw RingMismatchError("form: coefficient from a different algebra");
  if (static_cast<int>(w.size()) != alg_->coords().size())
    throw DimensionError("form: word length does not match coordinate count");
  if (coeff.is_zero()) return;
  const CoordinateSystem& cs = alg_->coords();
  for (std::size_t c = 0; c < w.size(); ++c)
    if (w[c] >= 2 && cs.degree(static_cast<int>(c)).parity() == 0)
      return;  // repeated antisymmetric generator
  if (total_exponent(w) > form_cap_)
    throw CapError("form: term exceeds the form cap");
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> Form::n_degree() const {
  std::optional<int> deg;
  for (const auto& [w, f] : terms_) {
    const int t = total_exponent(w);
    if (!deg)
      deg = t;
    else if (*deg != t)
      return std::nullopt;
  }
  return deg;
}

int Form::max_word_length() const {
  int m = 0;
  for (const auto& [w, f] : terms_) m = std::max(m, total_exponent(w));
  return m;
}

Form Form::operator-() const { return scaled(Rat(-1)); }

Form operator+(const Form& a, const Form& b) {
  if (!(*a.alg_ == *b.alg_))
    throw RingMismatchError("form: addition across different algebras");
  if (a.form_cap_ != b.form_cap_)
    throw ValueError("form: addition across different form caps");
  Form out = a;
  for (const auto& [w, f] : b.terms_) out.add_term(w, f);
  return out;
}

Form operator-(const Form& a, const Form& b) { return a + (-b); }

bool operator==(const Form& a, const Form& b) {
  if (!(*a.alg_ == *b.alg_)) return false;
  return a.terms_ == b.terms_;
}

Form Form::scaled(const Rat& c) const {
  Form out(alg_, form_cap_);
  if (c == 0) return out;
  for (const auto& [w, f] : terms_) out.terms_.emplace(w, f.scaled(c));
  return out;
}

Form Form::coefficients_truncated(int k) const {
  Form out(alg_, form_cap_);
  for (const auto& [w, f] : terms_) {
    Series g = f.truncated(k);
    if (!g.is_zero()) out.terms_.emplace(w, g);
  }
  return out;
}

Form Form::with_form_cap(int form_cap) const {
  Form out(alg_, form_cap);
  for (const auto& [w, f] : terms_) out.add_term(w, f);
  return out;
}

Form wedge(const Form& a, const Form& b) {
  if (!(*a.algebra() == *b.algebra()))
    throw RingMismatchError("form: wedge across different algebras");
  if (a.form_cap() != b.form_cap())
    throw ValueError("form: wedge across different form caps");
  const AlgebraPtr& alg = a.algebra();
  const CoordinateSystem& cs = alg->coords();
  const std::size_t nc = static_cast<std::size_t>(cs.size());

  // Accumulate raw products first so that cancelling over-cap terms do not
  // spuriously trip the cap check.
  Form::TermMap raw;
  for (const auto& [w1, f1] : a.terms()) {
    for (const auto& [w2, f2] : b.terms()) {
      // Repeated antisymmetric generator across the factors kills the term.
      bool dead = false;
      for (std::size_t c = 0; c < nc; ++c) {
        if (w1[c] + w2[c] >= 2 && cs.degree(static_cast<int>(c)).parity() == 0) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      const int cross = merge_sign_exp(cs, w1, w2);
      const Degree zdeg2 = b.word_degree(w2);
      // The coefficient of the left factor commutes past the generators of
      // the right word; split it by degree for the Koszul sign.
      std::map<std::uint32_t, Series> comps;
      for (const auto& [mono, c] : f1.terms()) {
        const Degree d = f1.monomial_degree(mono);
        auto [it, fresh] = comps.try_emplace(d.bits(), Series::zero(alg));
        it->second = it->second + Series::monomial(alg, mono, c);
      }
      Form::Word w(nc, 0);
      for (std::size_t c = 0; c < nc; ++c)
        w[c] = static_cast<std::uint8_t>(w1[c] + w2[c]);
      for (const auto& [bits, part] : comps) {
        const int s = cross ^ degree_dot(Degree(cs.n(), bits), zdeg2);
        Series contrib = (part * f2).scaled(Rat(parity_sign(s)));
        if (contrib.is_zero()) continue;
        auto it = raw.find(w);
        if (it == raw.end()) {
          raw.emplace(w, std::move(contrib));
        } else {
          it->second = it->second + contrib;
          if (it->second.is_zero()) raw.erase(it);
        }
      }
    }
  }
  Form out(alg, a.form_cap());
  for (const auto& [w, f] : raw) out.add_term(w, f);
  return out;
}

Form differential(const Series& f, int form_cap) {
  const AlgebraPtr& alg = f.algebra();
  Form out(alg, form_cap);
  const int nc = alg->coords().size();
  for (int c = 0; c < nc; ++c) {
    Series g = f.partial(c);
    if (g.is_zero()) continue;
    Form::Word w(nc, 0);
    w[c] = 1;
    out.add_term(w, g);
  }
  return out;
}

Form exterior_derivative(const Form& w) {
  const AlgebraPtr& alg = w.algebra();
  const CoordinateSystem& cs = alg->coords();
  const std::size_t nc = static_cast<std::size_t>(cs.size());
  Form out(alg, w.form_cap());
  for (const auto& [word, f] : w.terms()) {
    const int base = total_exponent(word) & 1;
    for (std::size_t c = 0; c < nc; ++c) {
      Series g = f.partial(static_cast<int>(c));
      if (g.is_zero()) continue;
      if (word[c] >= 1 && cs.degree(static_cast<int>(c)).parity() == 0)
        continue;  // du^c would repeat an antisymmetric generator
      // The new generator starts at the right end of the word and moves
      // left past every generator with a larger coordinate index.
      int move = 0;
      for (std::size_t c2 = c + 1; c2 < nc; ++c2) {
        if (word[c2] == 0) continue;
        move += word[c2] * (degree_dot(cs.degree(static_cast<int>(c)),
                                       cs.degree(static_cast<int>(c2))) ^ 1);
      }
      Form::Word nw = word;
      ++nw[c];
      out.add_term(nw, g.scaled(Rat(parity_sign(base + move))));
    }
  }
  return out;
}

Form form_pullback(const Morphism& m, const Form& w) {
  if (!(*w.algebra() == *m.target()))
    throw RingMismatchError("form: pullback expects a form on the target");
  const int fc = w.form_cap();
  const AlgebraPtr& src = m.source();
  const std::size_t nc = static_cast<std::size_t>(w.algebra()->coords().size());
  // Differentials of the pulled-back coordinates, computed on demand.
  std::vector<std::optional<Form>> dpull(nc);
  auto pulled_generator = [&](std::size_t c) -> const Form& {
    if (!dpull[c]) dpull[c] = differential(m.pullbacks()[c], fc);
    return *dpull[c];
  };
  Form out(src, fc);
  for (const auto& [word, f] : w.terms()) {
    Form acc = Form::from_series(Series::constant(src, 1), fc);
    for (std::size_t c = 0; c < nc; ++c)
      for (int k = 0; k < word[c]; ++k) acc = wedge(acc, pulled_generator(c));
    acc = wedge(acc, Form::from_series(m.pullback(f), fc));
    out = out + acc;
  }
  return out;
}

Series apply_field(const VectorField& x, const Series& f) {
  if (!x.alg) throw ValueError("vector field: null algebra");
  if (!(*x.alg == *f.algebra()))
    throw RingMismatchError("vector field: argument from a different algebra");
  if (static_cast<int>(x.coef.size()) != x.alg->coords().size())
    throw DimensionError("vector field: wrong coefficient count");
  Series out = Series::zero(x.alg);
  for (std::size_t b = 0; b < x.coef.size(); ++b) {
    if (!(*x.coef[b].algebra() == *x.alg))
      throw RingMismatchError("vector field: coefficient algebra mismatch");
    if (x.coef[b].is_zero()) continue;
    out = out + x.coef[b] * f.partial(static_cast<int>(b));
  }
  return out;
}

std::optional<Degree> field_degree(const VectorField& x) {
  if (!x.alg) throw ValueError("vector field: null algebra");
  if (static_cast<int>(x.coef.size()) != x.alg->coords().size())
    throw DimensionError("vector field: wrong coefficient count");
  const CoordinateSystem& cs = x.alg->coords();
  std::optional<Degree> deg;
  for (std::size_t b = 0; b < x.coef.size(); ++b) {
    if (x.coef[b].is_zero()) continue;
    auto h = x.coef[b].homogeneous_degree();
    if (!h) return std::nullopt;
    // d/du^b lowers degree by deg u_b, so the field degree is
    // deg coef + deg u_b.
    const Degree cand = degree_add(*h, cs.degree(static_cast<int>(b)));
    if (!deg)
      deg = cand;
    else if (deg->bits() != cand.bits())
      return std::nullopt;
  }
  return deg;
}

Series pair_field_form(const VectorField& x, const Form& w) {
  if (!x.alg) throw ValueError("vector field: null algebra");
  if (!(*x.alg == *w.algebra()))
    throw RingMismatchError("pairing: field and form on different algebras");
  if (static_cast<int>(x.coef.size()) != x.alg->coords().size())
    throw DimensionError("vector field: wrong coefficient count");
  auto nd = w.n_degree();
  if (!w.is_zero() && (!nd || *nd != 1))
    throw ValueError("pairing: expected a 1-form");
  Series out = Series::zero(x.alg);
  for (const auto& [word, g] : w.terms()) {
    std::size_t b = 0;
    while (b < word.size() && word[b] == 0) ++b;
    out = out + x.coef[b] * g;
  }
  return out;
}

VectorField bracket(const VectorField& x, const VectorField& y) {
  if (!x.alg || !y.alg) throw ValueError("vector field: null algebra");
  if (!(*x.alg == *y.alg))
    throw RingMismatchError("bracket: fields on different algebras");
  VectorField out{x.alg,
                  std::vector<Series>(x.coef.size(), Series::zero(x.alg))};
  const bool xz = std::all_of(x.coef.begin(), x.coef.end(),
                              [](const Series& s) { return s.is_zero(); });
  const bool yz = std::all_of(y.coef.begin(), y.coef.end(),
                              [](const Series& s) { return s.is_zero(); });
  if (xz || yz) return out;
  auto dx = field_degree(x);
  auto dy = field_degree(y);
  if (!dx || !dy)
    throw ValueError("bracket: fields must be degree-homogeneous");
  const Rat sgn(scalar_sign(*dx, *dy));
  for (std::size_t b = 0; b < out.coef.size(); ++b)
    out.coef[b] =
        apply_field(x, y.coef[b]) - apply_field(y, x.coef[b]).scaled(sgn);
  return out;
}

Form homotopy_K(const Form& w, int eta_index) {
  const AlgebraPtr& alg = w.algebra();
  const CoordinateSystem& cs = alg->coords();
  if (eta_index < 0 || eta_index >= cs.size())
    throw ValueError("homotopy: coordinate index out of range");
  const Degree deta = cs.degree(eta_index);
  if (deta.parity() != 0 || deta.is_zero())
    throw ValueError(
        "homotopy: coordinate must be even-parity of nonzero degree");
  const std::size_t eta = static_cast<std::size_t>(eta_index);
  Form out(alg, w.form_cap());
  for (const auto& [word, f] : w.terms()) {
    if (word[eta] == 0) continue;
    // Move the exponent-1 d eta generator to the right end of the word,
    // crossing every generator with a larger coordinate index.
    int move = 0;
    for (std::size_t c = eta + 1; c < word.size(); ++c) {
      if (word[c] == 0) continue;
      move += word[c] *
              (degree_dot(deta, cs.degree(static_cast<int>(c))) ^ 1);
    }
    // Antiderivative in eta. Raising the eta exponent commutes one eta
    // factor past the odd factors below it, and needs one order of cap
    // headroom to stay faithful.
    Series anti = Series::zero(alg);
    for (const auto& [mono, c] : f.terms()) {
      Degree prefix = Degree::zero(cs.n());
      for (std::size_t j = 0; j < eta; ++j)
        if (mono[j] & 1) prefix = degree_add(prefix, cs.degree(static_cast<int>(j)));
      Series::Exponents nm = mono;
      ++nm[eta];
      if (total_exponent(nm) > alg->cap())
        throw CapError("homotopy: antiderivative exceeds the jet cap");
      Rat v = c * Rat(scalar_sign(deta, prefix));
      v /= mono[eta] + 1;
      anti = anti + Series::monomial(alg, nm, v);
    }
    Form::Word nw = word;
    --nw[eta];
    out.add_term(nw, anti.scaled(Rat(parity_sign(move))));
  }
  return out;
}

Form restrict_zero_pullback(const Form& w, int eta_index) {
  const AlgebraPtr& alg = w.algebra();
  if (eta_index < 0 || eta_index >= alg->coords().size())
    throw ValueError("restriction: coordinate index out of range");
  const std::size_t eta = static_cast<std::size_t>(eta_index);
  Form out(alg, w.form_cap());
  for (const auto& [word, f] : w.terms()) {
    if (word[eta] > 0) continue;
    Series g = Series::zero(alg);
    for (const auto& [mono, c] : f.terms())
      if (mono[eta] == 0) g = g + Series::monomial(alg, mono, c);
    out.add_term(word, g);
  }
  return out;
}

}  // namespace zjet
