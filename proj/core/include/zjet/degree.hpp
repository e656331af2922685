#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zjet/error.hpp"

namespace zjet {

/// Element of (Z_2)^n, n in [1, 16]. Component i lives in bit i.
class Degree {
 public:
  Degree() : n_(1), bits_(0) {}
  Degree(int n, std::uint32_t bits);
  static Degree from_components(const std::vector<int>& comps);
  static Degree zero(int n) { return Degree(n, 0); }

  int n() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  int component(int i) const;
  bool is_zero() const { return bits_ == 0; }

  /// Underlying Z_2 parity: sum of components mod 2. 0 = even, 1 = odd.
  int parity() const;

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Degree& a, const Degree& b) { return !(a == b); }

  std::string str() const;  // "(0,1,1)"

 private:
  std::uint8_t n_;
  std::uint32_t bits_;
};

/// Componentwise sum in (Z_2)^n.
Degree degree_add(const Degree& a, const Degree& b);

/// Standard scalar product <a,b> = sum a_i b_i mod 2.
int degree_dot(const Degree& a, const Degree& b);

/// Koszul sign (-1)^{<a,b>} as +1 / -1.
int scalar_sign(const Degree& a, const Degree& b);

/// (-1)^exp as +1 / -1, for accumulated sign exponents.
int parity_sign(int exp);

/// Lexicographic order on component tuples (component 0 first).
bool degree_lex_less(const Degree& a, const Degree& b);

/// All 2^n degrees: even-parity ones in lexicographic order, then odd-parity
/// ones in lexicographic order. The zero degree always comes first.
/// Computed once per n and cached.
const std::vector<Degree>& standard_order(int n);

/// Position of d inside standard_order(d.n()).
int standard_order_index(const Degree& d);

/// Dimension data of a domain: p zero-degree coordinates and q_i coordinates
/// of the i-th nonzero degree in standard order (N = 2^n - 1 entries).
struct DegreeSignature {
  int n = 1;
  int p = 0;
  std::vector<int> q;  // size 2^n - 1

  int total() const;
  std::string dim_str() const;        // "1|(1,1,1)"
  std::string signature_str() const;  // "n=2 q=(1,1,1)"
};

/// Checks n in [1,16], p >= 0, q of size 2^n - 1 with nonnegative entries.
void validate_signature(const DegreeSignature& sig);

/// Ordered, named coordinates of a domain. Layout invariant: zero-degree
/// coordinates first, then groups of equal degree following standard order.
class CoordinateSystem {
 public:
  CoordinateSystem(int n, std::vector<std::string> names, std::vector<Degree> degrees);

  int n() const { return n_; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Degree>& degrees() const { return degrees_; }
  const std::string& name(int i) const { return names_.at(i); }
  const Degree& degree(int i) const { return degrees_.at(i); }

  /// -1 when absent.
  int index_of(const std::string& name) const;

  DegreeSignature signature() const;

  /// Indices of the coordinates of the given degree (a contiguous range).
  std::vector<int> indices_of_degree(const Degree& d) const;

  friend bool operator==(const CoordinateSystem& a, const CoordinateSystem& b) {
    return a.n_ == b.n_ && a.names_ == b.names_ && a.degrees_bits_equal(b);
  }
  friend bool operator!=(const CoordinateSystem& a, const CoordinateSystem& b) {
    return !(a == b);
  }

 private:
  bool degrees_bits_equal(const CoordinateSystem& b) const;

  int n_;
  std::vector<std::string> names_;
  std::vector<Degree> degrees_;
};

/// Canonical layout for a signature with generated names: x1..xp for degree
/// zero, then s<i>_<k> for the k-th coordinate of the i-th nonzero degree.
CoordinateSystem canonical_coordinates(const DegreeSignature& sig);

/// True for names the DSL can re-parse: [A-Za-z_][A-Za-z0-9_]*, not "d".
bool valid_coordinate_name(const std::string& name);

}  // namespace zjet
