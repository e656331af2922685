#include "zjet/textio.hpp"

#include <sstream>

namespace zjet {

namespace {

void append_monomial_factors(std::ostream& os, const CoordinateSystem& cs,
                             const Series::Exponents& e) {
  for (std::size_t c = 0; c < e.size(); ++c) {
    if (e[c] == 0) continue;
    os << " * " << cs.name(static_cast<int>(c));
    if (e[c] > 1) os << "^" << static_cast<int>(e[c]);
  }
}

}  // namespace

std::string series_str(const Series& s) {
  if (s.is_zero()) return "0";
  const CoordinateSystem& cs = s.algebra()->coords();
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    Rat mag = c;
    if (first) {
      if (c < 0) {
        os << "-";
        mag = -c;
      }
      first = false;
    } else if (c < 0) {
      os << " - ";
      mag = -c;
    } else {
      os << " + ";
    }
    os << to_string(mag);
    append_monomial_factors(os, cs, e);
  }
  return os.str();
}

std::string qmatrix_str(const QMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << to_string(m.at(i, j));
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string gmatrix_str(const GradedMatrix& m) {
  std::ostringstream os;
  os << "rows:";
  for (const Degree& d : m.row_degrees()) os << " " << d.str();
  os << "\ncols:";
  for (const Degree& d : m.col_degrees()) os << " " << d.str();
  for (int i = 0; i < m.rows(); ++i) {
    os << "\n[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << series_str(m.at(i, j));
    }
    os << "]";
  }
  return os.str();
}

std::string form_str(const Form& w) {
  if (w.is_zero()) return "0";
  const CoordinateSystem& cs = w.algebra()->coords();
  std::ostringstream os;
  bool first = true;
  for (const auto& [word, f] : w.terms()) {
    if (!first) os << " + ";
    first = false;
    for (std::size_t c = 0; c < word.size(); ++c) {
      if (word[c] == 0) continue;
      os << "d(" << cs.name(static_cast<int>(c)) << ")";
      if (word[c] > 1) os << "^" << static_cast<int>(word[c]);
      os << " * ";
    }
    os << "(" << series_str(f) << ")";
  }
  return os.str();
}

std::string morphism_str(const Morphism& m) {
  const CoordinateSystem& tc = m.target()->coords();
  std::ostringstream os;
  for (int i = 0; i < tc.size(); ++i) {
    if (i) os << "\n";
    os << tc.name(i) << " -> " << series_str(m.pullbacks()[i]);
  }
  return os.str();
}

}  // namespace zjet
