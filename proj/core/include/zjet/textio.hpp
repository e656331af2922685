#pragma once

#include <string>

#include "zjet/form.hpp"
#include "zjet/gmatrix.hpp"
#include "zjet/morphism.hpp"

namespace zjet {

/// Canonical text renderings. Terms follow storage order (total exponent,
/// then lexicographic), so equal objects always print identically.

/// "0", "2/3", "1 - 1 * z + 1 * z^2", "1 * t1 * t2".
std::string series_str(const Series& s);

/// "[[1, 0], [2/3, 1]]" row-major; "[]" when empty.
std::string qmatrix_str(const QMatrix& m);

/// One bracketed row of entry renderings per line, prefixed by the row and
/// column degree lists.
std::string gmatrix_str(const GradedMatrix& m);

/// "d(x) * d(t)^2 * (1 + 1 * z)" terms joined with " + "; "0" when zero.
std::string form_str(const Form& w);

/// "x -> 1 * y + ..." lines, one per target coordinate, in target order.
std::string morphism_str(const Morphism& m);

}  // namespace zjet
