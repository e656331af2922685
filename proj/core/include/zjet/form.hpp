#pragma once

#include <map>
#include <optional>
#include <vector>

#include "zjet/morphism.hpp"
#include "zjet/series.hpp"

namespace zjet {

/// Differential form over a JetAlgebra. A term is a wedge word of
/// coordinate differentials (exponents per coordinate, factors implicitly
/// in coordinate order) with its series coefficient stored to the RIGHT of
/// the word. du of an even-parity coordinate is an antisymmetric generator
/// (exponent <= 1); du of an odd-parity coordinate is symmetric, so words
/// are unbounded in it up to the form cap on total word length.
class Form {
 public:
  using Word = Series::Exponents;
  using TermMap = std::map<Word, Series, GrlexLess>;

  Form(AlgebraPtr alg, int form_cap);

  static Form zero(AlgebraPtr alg, int form_cap);
  static Form from_series(const Series& s, int form_cap);
  /// du^index as a 1-form with coefficient 1.
  static Form generator(AlgebraPtr alg, int index, int form_cap);

  const AlgebraPtr& algebra() const { return alg_; }
  int form_cap() const { return form_cap_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Common word length when the form is homogeneous in it; nullopt for
  /// zero or mixed forms.
  std::optional<int> n_degree() const;
  int max_word_length() const;

  /// Z_2^n-degree of a wedge word (parity-weighted sum of generator degrees).
  Degree word_degree(const Word& w) const;

  /// Accumulates sign * word * coefficient, enforcing the generator rules.
  void add_term(const Word& w, const Series& coeff);

  Form operator-() const;
  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  friend bool operator==(const Form& a, const Form& b);
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  Form scaled(const Rat& c) const;
  /// Truncates every coefficient to total degree <= k (jet comparisons).
  Form coefficients_truncated(int k) const;
  /// Same terms under a different form cap (validated).
  Form with_form_cap(int form_cap) const;

 private:
  AlgebraPtr alg_;
  int form_cap_;
  TermMap terms_;
};

/// Deligne-rule wedge product. Hom-degree bookkeeping: swapping homogeneous
/// factors costs (-1)^{<deg a, deg b> + |a||b|}. Throws CapError when a
/// surviving term exceeds the form cap.
Form wedge(const Form& a, const Form& b);

/// df = sum du^i * d_i f.
Form differential(const Series& f, int form_cap);

/// d(word * f) = (-1)^{|word|} word ^ df, normalized. Exact on the stored
/// polynomial coefficients; d o d = 0 identically.
Form exterior_derivative(const Form& w);

/// Pullback along a morphism: generators map to differentials of the
/// pulled-back coordinates, coefficients are substituted.
Form form_pullback(const Morphism& m, const Form& w);

/// Vector field sum coef[b] * d/du^b with coefficients on the left.
struct VectorField {
  AlgebraPtr alg;
  std::vector<Series> coef;
};

/// X(f) = sum coef[b] * d_b f.
Series apply_field(const VectorField& x, const Series& f);

/// Degree of a homogeneous field (coef[b] of degree deg X + deg u_b);
/// nullopt for zero or inhomogeneous fields.
std::optional<Degree> field_degree(const VectorField& x);

/// Evaluation pairing of a field with a 1-form. With field coefficients on
/// the left and form coefficients on the right the Koszul signs of the two
/// necessary commutations cancel, leaving sum_b coef[b] * g_b.
Series pair_field_form(const VectorField& x, const Form& w);

/// Graded commutator [X,Y] = X o Y - (-1)^{<deg X, deg Y>} Y o X, returned
/// through its coefficient tuple. Requires homogeneous fields.
VectorField bracket(const VectorField& x, const VectorField& y);

/// Homotopy (integration) operator with respect to an even-parity
/// nonzero-degree coordinate eta: terms without d eta map to zero; terms
/// with it lose the generator and gain the eta-antiderivative of their
/// coefficient. Needs one order of cap headroom.
Form homotopy_K(const Form& w, int eta_index);

/// Pullback of the restriction eta -> 0: drops d eta terms and all
/// eta-dependent coefficient monomials.
Form restrict_zero_pullback(const Form& w, int eta_index);

}  // namespace zjet
