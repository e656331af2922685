#pragma once

#include <gmpxx.h>

#include <string>

namespace zjet {

/// Exact rational scalar. GMP keeps results canonical under arithmetic as
/// long as the operands are canonical, so construction goes through rat().
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical "num/den" (den omitted when 1). Used by every serializer.
inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace zjet
