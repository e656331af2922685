#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "zjet/degree.hpp"
#include "zjet/rational.hpp"

namespace zjet {

/// Polynomial model of the graded formal series ring: exact rational
/// coefficients, monomials truncated beyond total exponent `cap`. Products
/// falling outside the cap are discarded silently, which realizes the
/// quotient by the (cap+1)-st power of the augmentation filtration.
class JetAlgebra {
 public:
  JetAlgebra(CoordinateSystem coords, int cap);

  const CoordinateSystem& coords() const { return coords_; }
  int cap() const { return cap_; }
  int n() const { return coords_.n(); }
  int dim() const { return coords_.size(); }

  friend bool operator==(const JetAlgebra& a, const JetAlgebra& b) {
    return a.cap_ == b.cap_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const JetAlgebra& a, const JetAlgebra& b) { return !(a == b); }

 private:
  CoordinateSystem coords_;
  int cap_;
};

using AlgebraPtr = std::shared_ptr<const JetAlgebra>;

AlgebraPtr make_algebra(CoordinateSystem coords, int cap);

/// Exponent vectors ordered by total exponent, then lexicographically.
/// This is the canonical term order used by storage and serialization.
struct GrlexLess {
  bool operator()(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) const;
};

/// Element of a JetAlgebra. Term map keys are exponent vectors over the
/// coordinate list; factors of a monomial are implicitly ordered by
/// coordinate index, which fixes every Koszul sign below.
class Series {
 public:
  using Exponents = std::vector<std::uint8_t>;
  using TermMap = std::map<Exponents, Rat, GrlexLess>;

  explicit Series(AlgebraPtr alg);

  static Series zero(AlgebraPtr alg) { return Series(std::move(alg)); }
  static Series constant(AlgebraPtr alg, const Rat& c);
  static Series coordinate(AlgebraPtr alg, int index);
  static Series coordinate(AlgebraPtr alg, const std::string& name);
  /// Single term c * u^exps (validated against cap and odd-coordinate rules).
  static Series monomial(AlgebraPtr alg, const Exponents& exps, const Rat& c);

  const AlgebraPtr& algebra() const { return alg_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Constant term; the augmentation, a ring morphism onto Q.
  Rat epsilon() const;

  /// Minimal number of nonzero-degree variable factors over all monomials;
  /// nullopt (= infinity) for the zero series.
  std::optional<int> j_order() const;

  /// Z_2^n-degree of a monomial: parity-weighted sum of factor degrees.
  Degree monomial_degree(const Exponents& e) const;

  bool is_homogeneous(const Degree& d) const;
  /// Degree when all monomials agree; nullopt for zero or mixed input.
  std::optional<Degree> homogeneous_degree() const;
  Series homogeneous_part(const Degree& d) const;

  /// Drops monomials of total exponent > k. Used for jet-accuracy comparisons.
  Series truncated(int k) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  Series scaled(const Rat& c) const;
  Series pow(int k) const;

  /// Left coordinate derivation with respect to coordinate `index`.
  /// On a monomial it differentiates each occurrence of the coordinate,
  /// crossing the factors to its left with the Koszul sign; exact on the
  /// stored polynomial, jet accuracy cap-1.
  Series partial(int index) const;
  Series partial(const std::string& name) const;

  /// Reciprocal of a homogeneous degree-0 series with epsilon != 0,
  /// by the finite geometric series of the augmentation-trivial part.
  Series inverted() const;

  /// Substitution u^i -> images[i]; images must be homogeneous of the
  /// matching degrees (zero passes) with epsilon 0 on degree-0 slots.
  /// Exact on the quotient; the unique ring morphism with these values.
  Series substituted(const std::vector<Series>& images) const;
  /// Same, with the target algebra given explicitly (mandatory when the
  /// source has no coordinates).
  Series substituted_into(const std::vector<Series>& images, AlgebraPtr target) const;

  int max_total_exponent() const;

 private:
  void add_term(const Exponents& e, const Rat& c);

  AlgebraPtr alg_;
  TermMap terms_;
};

/// Throws RingMismatchError unless both series live in structurally equal
/// algebras.
void require_same_algebra(const Series& a, const Series& b);

int total_exponent(const Series::Exponents& e);

}  // namespace zjet
