#pragma once

#include <optional>
#include <vector>

#include "zjet/morphism.hpp"

namespace zjet {

/// Invertible morphism packaged with its exact two-sided inverse.
struct CoordinateChange {
  Morphism forward;
  Morphism inverse;
};

/// Exact inverse of a morphism whose tangent blocks are all invertible:
/// reduce by the inverse of the linear part, then solve order by order with
/// the fixed-point update until the cap is reached. Both composites are
/// verified to be identity tuples. Throws NotLocallyInvertibleError when a
/// tangent block is non-square or singular.
Morphism invert_morphism(const Morphism& m);

/// Output of a normal-form computation. `change` straightens the morphism,
/// `standard_form` is the model tuple (projection or inclusion), and
/// `composed` is the verified product that must equal it exactly.
/// `selected` records, per degree in standard order, the coordinate indices
/// whose minor was used to complete the morphism.
struct NormalForm {
  CoordinateChange change;
  AlgebraPtr extended;  // product domain the change maps into
  Morphism standard_form;
  Morphism composed;
  std::vector<std::vector<int>> selected;
};

/// Source-side straightening of a submersion: a coordinate change tau on
/// the source with phi o tau^{-1} equal to the standard projection.
NormalForm submersion_normal_form(const Morphism& phi);

/// Target-side straightening of an immersion: a coordinate change sigma on
/// the target with sigma o phi equal to the standard inclusion.
NormalForm immersion_normal_form(const Morphism& phi);

/// Factorization phi = phi2 o phi1 through the middle domain of the rank
/// profile, produced when the graded Jacobian admits a unit-pivot
/// constant-rank decomposition; nullopt otherwise.
struct ConstantRankFactorization {
  RankProfile profile;
  AlgebraPtr middle;
  Morphism phi1;  // submersion onto the middle domain
  Morphism phi2;  // immersion into the target
  ConstantRankDecomposition decomposition;
};

std::optional<ConstantRankFactorization> constant_rank_factor(const Morphism& phi);

/// Index remap of a series into a larger algebra; the map must be strictly
/// increasing so the canonical factor order (and every sign) is preserved.
Series embed_series(const Series& s, const AlgebraPtr& into, const std::vector<int>& index_map);

}  // namespace zjet
