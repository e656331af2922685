#pragma once

#include <string>
#include <vector>

#include "zjet/gmatrix.hpp"
#include "zjet/series.hpp"

namespace zjet {

/// Morphism between formal graded domains over the same (Z_2)^n, stored as
/// its pullback tuple: one series over the source per target coordinate,
/// homogeneous of the coordinate's degree, basepoint-preserving (constant
/// term 0 on zero-degree pullbacks).
class Morphism {
 public:
  Morphism(AlgebraPtr source, AlgebraPtr target, std::vector<Series> pullbacks);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const std::vector<Series>& pullbacks() const { return pulls_; }

  /// Pullback of an arbitrary function on the target.
  Series pullback(const Series& f) const;

  friend bool operator==(const Morphism& a, const Morphism& b);
  friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }

 private:
  AlgebraPtr source_, target_;
  std::vector<Series> pulls_;
};

Morphism identity_morphism(AlgebraPtr alg);

/// Composition then_m o first (first: M->N, then_m: N->S). Exact.
Morphism compose(const Morphism& first, const Morphism& then_m);

/// Binary product of domains: coordinates concatenated, then regrouped into
/// the canonical layout (zero-degree first, degree groups in standard
/// order; first factor before second within each group). Second-factor
/// names clashing with first-factor ones get a numeric suffix.
struct ProductDomain {
  AlgebraPtr domain;
  std::vector<int> from_first;   // product index of each first-factor coordinate
  std::vector<int> from_second;  // product index of each second-factor coordinate
  Morphism proj1, proj2;
};

ProductDomain product_domain(const AlgebraPtr& a, const AlgebraPtr& b);

/// Universal pair morphism N -> A x B with proj1 o pair = f, proj2 o pair = g.
Morphism pair_morphism(const Morphism& f, const Morphism& g, const ProductDomain& prod);

/// Graded Jacobian: rows indexed by target coordinates, columns by source
/// coordinates, entry (i,j) = (-1)^{<v_i+u_j, v_i>} d_{u_j} pull_i.
/// A degree-0 graded matrix; multiplicative under composition after
/// transporting the outer factor through the inner pullback.
GradedMatrix graded_jacobian(const Morphism& m);

/// Constant-term reduction of the Jacobian: one scalar block per degree in
/// standard order (zero degree first).
struct TangentMap {
  std::vector<QMatrix> blocks;
};

TangentMap tangent_map(const Morphism& m);

/// d_{u_a}(psi* f) - sum_b d_{u_a}(psi* v_b) psi*(d_{v_b} f), truncated to
/// total degree cap-1 (the jet accuracy of one derivative). Zero when the
/// chain rule holds.
Series chain_rule_residual(const Morphism& psi, const Series& f, int source_index);

/// Jac(then o first) - first*(Jac then) * Jac first, truncated entrywise to
/// cap-1. The flag is true when every entry vanishes.
struct JacobianCheck {
  GradedMatrix residual;
  bool multiplicative;
};

JacobianCheck jacobian_multiplicativity_check(const Morphism& first, const Morphism& then_m);

enum class MapKind { None, Immersion, Submersion, DiffeoCandidate };

std::string kind_str(MapKind k);

struct Classification {
  MapKind kind;
  RankProfile profile;
};

/// Blockwise rank test of the tangent map: immersion = all blocks of full
/// column rank, submersion = full row rank, diffeo candidate = both.
Classification classify_point(const Morphism& m);

}  // namespace zjet
