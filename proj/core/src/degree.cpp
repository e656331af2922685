#include "zjet/degree.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>

namespace zjet {

Degree::Degree(int n, std::uint32_t bits) {
  if (n < 1 || n > 16) throw ValueError("degree: n must be in [1,16], got " + std::to_string(n));
  if (bits >> n) throw ValueError("degree: bits out of range for n=" + std::to_string(n));
  n_ = static_cast<std::uint8_t>(n);
  bits_ = bits;
}

Degree Degree::from_components(const std::vector<int>& comps) {
  if (comps.empty() || comps.size() > 16)
    throw ValueError("degree: component count must be in [1,16]");
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i] != 0 && comps[i] != 1)
      throw ValueError("degree: components must be 0 or 1");
    if (comps[i]) bits |= (1u << i);
  }
  return Degree(static_cast<int>(comps.size()), bits);
}

int Degree::component(int i) const {
  if (i < 0 || i >= n_) throw ValueError("degree: component index out of range");
  return (bits_ >> i) & 1u;
}

int Degree::parity() const { return std::popcount(bits_) & 1; }

std::string Degree::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < n_; ++i) {
    if (i) os << ',';
    os << ((bits_ >> i) & 1u);
  }
  os << ')';
  return os.str();
}

static void check_same_n(const Degree& a, const Degree& b) {
  if (a.n() != b.n())
    throw ValueError("degree: mixing degrees of different n (" + std::to_string(a.n()) +
                     " vs " + std::to_string(b.n()) + ")");
}

Degree degree_add(const Degree& a, const Degree& b) {
  check_same_n(a, b);
  return Degree(a.n(), a.bits() ^ b.bits());
}

int degree_dot(const Degree& a, const Degree& b) {
  check_same_n(a, b);
  return std::popcount(a.bits() & b.bits()) & 1;
}

int scalar_sign(const Degree& a, const Degree& b) { return degree_dot(a, b) ? -1 : 1; }

int parity_sign(int exp) { return (exp & 1) ? -1 : 1; }

bool degree_lex_less(const Degree& a, const Degree& b) {
  check_same_n(a, b);
  for (int i = 0; i < a.n(); ++i) {
    int ai = (a.bits() >> i) & 1u, bi = (b.bits() >> i) & 1u;
    if (ai != bi) return ai < bi;
  }
  return false;
}

const std::vector<Degree>& standard_order(int n) {
  if (n < 1 || n > 16) throw ValueError("standard_order: n must be in [1,16]");
  static std::map<int, std::vector<Degree>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Degree> even, odd;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    Degree d(n, bits);
    (d.parity() == 0 ? even : odd).push_back(d);
  }
  std::sort(even.begin(), even.end(), degree_lex_less);
  std::sort(odd.begin(), odd.end(), degree_lex_less);
  even.insert(even.end(), odd.begin(), odd.end());
  return cache.emplace(n, std::move(even)).first->second;
}

int standard_order_index(const Degree& d) {
  const auto& order = standard_order(d.n());
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == d) return static_cast<int>(i);
  throw ValueError("standard_order_index: degree not found");  // unreachable
}

int DegreeSignature::total() const {
  int t = p;
  for (int qi : q) t += qi;
  return t;
}

std::string DegreeSignature::dim_str() const {
  std::ostringstream os;
  os << p << "|(";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) os << ',';
    os << q[i];
  }
  os << ')';
  return os.str();
}

std::string DegreeSignature::signature_str() const {
  std::ostringstream os;
  os << "n=" << n << " q=(";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) os << ',';
    os << q[i];
  }
  os << ')';
  return os.str();
}

void validate_signature(const DegreeSignature& sig) {
  if (sig.n < 1 || sig.n > 16) throw ValueError("signature: n must be in [1,16]");
  if (sig.p < 0) throw ValueError("signature: p must be nonnegative");
  const std::size_t want = (std::size_t{1} << sig.n) - 1;
  if (sig.q.size() != want)
    throw ValueError("signature: q must have 2^n-1 = " + std::to_string(want) +
                     " entries, got " + std::to_string(sig.q.size()));
  for (int qi : sig.q)
    if (qi < 0) throw ValueError("signature: q entries must be nonnegative");
}

CoordinateSystem::CoordinateSystem(int n, std::vector<std::string> names,
                                   std::vector<Degree> degrees)
    : n_(n), names_(std::move(names)), degrees_(std::move(degrees)) {
  if (n_ < 1 || n_ > 16) throw ValueError("coordinates: n must be in [1,16]");
  if (names_.size() != degrees_.size())
    throw DimensionError("coordinates: names and degrees differ in length");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_coordinate_name(names_[i]))
      throw ValueError("coordinates: invalid name '" + names_[i] + "'");
    if (degrees_[i].n() != n_)
      throw ValueError("coordinates: degree of '" + names_[i] + "' has wrong n");
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw ValueError("coordinates: duplicate name '" + names_[i] + "'");
  }
  // Layout: zero-degree first, then grouped by degree following standard order.
  std::size_t i = 0;
  while (i < degrees_.size() && degrees_[i].is_zero()) ++i;
  int last_pos = 0;
  for (; i < degrees_.size(); ++i) {
    if (degrees_[i].is_zero())
      throw ValueError("coordinates: zero-degree coordinate '" + names_[i] +
                       "' must come before nonzero-degree ones");
    int pos = standard_order_index(degrees_[i]);
    if (pos < last_pos)
      throw ValueError("coordinates: '" + names_[i] +
                       "' breaks the standard-order grouping of degrees");
    last_pos = pos;
  }
}

int CoordinateSystem::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

DegreeSignature CoordinateSystem::signature() const {
  DegreeSignature sig;
  sig.n = n_;
  sig.p = 0;
  sig.q.assign((std::size_t{1} << n_) - 1, 0);
  for (const auto& d : degrees_) {
    if (d.is_zero()) {
      ++sig.p;
    } else {
      ++sig.q[standard_order_index(d) - 1];
    }
  }
  return sig;
}

std::vector<int> CoordinateSystem::indices_of_degree(const Degree& d) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (degrees_[i] == d) out.push_back(i);
  return out;
}

bool CoordinateSystem::degrees_bits_equal(const CoordinateSystem& b) const {
  if (degrees_.size() != b.degrees_.size()) return false;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] != b.degrees_[i]) return false;
  return true;
}

CoordinateSystem canonical_coordinates(const DegreeSignature& sig) {
  validate_signature(sig);
  const auto& order = standard_order(sig.n);
  std::vector<std::string> names;
  std::vector<Degree> degrees;
  for (int k = 1; k <= sig.p; ++k) {
    names.push_back("x" + std::to_string(k));
    degrees.push_back(Degree::zero(sig.n));
  }
  for (std::size_t i = 0; i < sig.q.size(); ++i) {
    for (int k = 1; k <= sig.q[i]; ++k) {
      names.push_back("s" + std::to_string(i + 1) + "_" + std::to_string(k));
      degrees.push_back(order[i + 1]);
    }
  }
  return CoordinateSystem(sig.n, std::move(names), std::move(degrees));
}

bool valid_coordinate_name(const std::string& name) {
  if (name.empty() || name == "d") return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
  if (!alpha(name[0])) return false;
  for (char c : name)
    if (!alnum(c)) return false;
  return true;
}

}  // namespace zjet
