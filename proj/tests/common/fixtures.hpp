#pragma once

// Shared test domains. Degree tuples are chosen so that every sign regime
// shows up: classical coordinates, odd (nilpotent) ones, and even
// nonzero-degree ones that anticommute without being nilpotent.

#include <string>
#include <vector>

#include "zjet/series.hpp"

namespace zjtest {

using zjet::AlgebraPtr;
using zjet::CoordinateSystem;
using zjet::Degree;
using zjet::Rat;
using zjet::Series;

inline Degree deg(const std::vector<int>& comps) {
  return Degree::from_components(comps);
}

/// n=1, one classical coordinate x.
inline AlgebraPtr alg_line(int cap) {
  return zjet::make_algebra(
      CoordinateSystem(1, {"x"}, {deg({0})}), cap);
}

/// n=1, classical x plus two odd coordinates t1, t2.
inline AlgebraPtr alg_super(int cap) {
  return zjet::make_algebra(
      CoordinateSystem(1, {"x", "t1", "t2"}, {deg({0}), deg({1}), deg({1})}),
      cap);
}

/// n=2, one coordinate per degree class: x (0,0), z (1,1), a (0,1), b (1,0).
/// z is even but nonzero-degree: not nilpotent, anticommutes with a and b.
inline AlgebraPtr alg_mixed(int cap) {
  return zjet::make_algebra(
      CoordinateSystem(2, {"x", "z", "a", "b"},
                       {deg({0, 0}), deg({1, 1}), deg({0, 1}), deg({1, 0})}),
      cap);
}

/// n=3, the three even nonzero degree classes: pairwise anticommuting,
/// none nilpotent (quaternion-like commutation pattern).
inline AlgebraPtr alg_quat(int cap) {
  return zjet::make_algebra(
      CoordinateSystem(3, {"qi", "qj", "qk"},
                       {deg({0, 1, 1}), deg({1, 0, 1}), deg({1, 1, 0})}),
      cap);
}

inline Series cv(const AlgebraPtr& a, const std::string& name) {
  return Series::coordinate(a, name);
}

inline Series cons(const AlgebraPtr& a, long num, long den = 1) {
  return Series::constant(a, Rat(num, den));
}

inline Series mono(const AlgebraPtr& a, const std::vector<int>& exps,
                   const Rat& c) {
  Series::Exponents e(exps.begin(), exps.end());
  return Series::monomial(a, e, c);
}

inline Series::Exponents expv(const std::vector<int>& exps) {
  return Series::Exponents(exps.begin(), exps.end());
}

}  // namespace zjtest
