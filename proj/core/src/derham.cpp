#include "zjet/derham.hpp"

#include <map>
#include <utility>

#include "zjet/error.hpp"
#include "zjet/qmatrix.hpp"

namespace zjet {

namespace {

using Word = Form::Word;
using Mono = Series::Exponents;

// Exponent vectors of the given total with a per-coordinate bound rule.
// Generated with the first coordinate outermost and ascending, which is
// exactly grlex order at fixed total.
void enumerate_rec(const CoordinateSystem& cs, bool bounded_when_odd_parity,
                   int coord, int remaining, Mono& cur,
                   std::vector<Mono>& out) {
  if (coord == cs.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const bool bounded =
      (cs.degree(coord).parity() == 1) == bounded_when_odd_parity;
  const int top = bounded ? std::min(1, remaining) : remaining;
  for (int e = 0; e <= top; ++e) {
    cur[coord] = static_cast<std::uint8_t>(e);
    enumerate_rec(cs, bounded_when_odd_parity, coord + 1, remaining - e, cur,
                  out);
  }
  cur[coord] = 0;
}

// Coefficient monomials of total t: odd-parity coordinates are nilpotent.
std::vector<Mono> monomials_of_total(const CoordinateSystem& cs, int t) {
  std::vector<Mono> out;
  if (t < 0) return out;
  Mono cur(cs.size(), 0);
  enumerate_rec(cs, /*bounded_when_odd_parity=*/true, 0, t, cur, out);
  return out;
}

// Wedge words of length k: differentials of even-parity coordinates are
// antisymmetric, those of odd-parity coordinates are symmetric.
std::vector<Word> words_of_length(const CoordinateSystem& cs, int k) {
  std::vector<Word> out;
  if (k < 0) return out;
  Word cur(cs.size(), 0);
  enumerate_rec(cs, /*bounded_when_odd_parity=*/false, 0, k, cur, out);
  return out;
}

// Ordered basis of the (k, w) slice: pairs (word, monomial), word-major.
struct SliceBasis {
  std::vector<std::pair<Word, Mono>> elems;
  std::map<std::pair<Word, Mono>, int> index;
};

SliceBasis slice_basis(const CoordinateSystem& cs, int k, int w) {
  SliceBasis b;
  for (const Word& wd : words_of_length(cs, k)) {
    for (const Mono& m : monomials_of_total(cs, w - k)) {
      b.index.emplace(std::make_pair(wd, m),
                      static_cast<int>(b.elems.size()));
      b.elems.emplace_back(wd, m);
    }
  }
  return b;
}

// Matrix of d from the (k, w) slice to the (k+1, w) slice.
QMatrix slice_derivative(const AlgebraPtr& alg, const SliceBasis& from,
                         const SliceBasis& to, int k) {
  QMatrix d(static_cast<int>(to.elems.size()),
            static_cast<int>(from.elems.size()));
  for (std::size_t j = 0; j < from.elems.size(); ++j) {
    const auto& [wd, m] = from.elems[j];
    Form e(alg, k + 1);
    e.add_term(wd, Series::monomial(alg, m, Rat(1)));
    Form de = exterior_derivative(e);
    for (const auto& [wd2, f] : de.terms()) {
      for (const auto& [m2, c] : f.terms()) {
        auto it = to.index.find(std::make_pair(wd2, m2));
        if (it == to.index.end())
          throw Error("derivative left the weight slice");
        d.at(it->second, static_cast<int>(j)) = c;
      }
    }
  }
  return d;
}

}  // namespace

DeRhamRanks derham_ranks(const AlgebraPtr& alg, int k_max, int w_max) {
  if (!alg) throw ValueError("derham: null algebra");
  if (k_max < 0 || w_max < 0)
    throw ValueError("derham: negative range bound");
  if (alg->cap() < w_max)
    throw CapError("derham: jet cap below the requested weight range");
  const CoordinateSystem& cs = alg->coords();

  DeRhamRanks out;
  out.k_max = k_max;
  out.w_max = w_max;
  out.complex_dim.assign(k_max + 2, std::vector<int>(w_max + 1, 0));
  out.rank_d.assign(k_max + 1, std::vector<int>(w_max + 1, 0));
  out.h_dim.assign(k_max + 1, std::vector<int>(w_max + 1, 0));
  out.h_total.assign(k_max + 1, 0);

  for (int w = 0; w <= w_max; ++w) {
    SliceBasis below;  // (k-1, w)
    SliceBasis cur = slice_basis(cs, 0, w);
    int rank_below = 0;  // rank of d into the current slice
    for (int k = 0; k <= k_max + 1; ++k) {
      out.complex_dim[k][w] = static_cast<int>(cur.elems.size());
      if (k > k_max) break;
      SliceBasis next = slice_basis(cs, k + 1, w);
      const QMatrix d = slice_derivative(alg, cur, next, k);
      out.rank_d[k][w] = d.rank();
      out.h_dim[k][w] =
          static_cast<int>(cur.elems.size()) - out.rank_d[k][w] - rank_below;
      if (out.h_dim[k][w] < 0) throw Error("negative cohomology dimension");
      out.h_total[k] += out.h_dim[k][w];
      rank_below = out.rank_d[k][w];
      below = std::move(cur);
      cur = std::move(next);
    }
    out.complex_dim[k_max + 1][w] = static_cast<int>(cur.elems.size());
  }
  return out;
}

Form find_potential(const Form& w) {
  const AlgebraPtr& alg = w.algebra();
  const CoordinateSystem& cs = alg->coords();
  Form eta(alg, w.form_cap());
  if (w.is_zero()) return eta;

  // Closedness is decided on the raw data; bump the word budget so the
  // derivative itself cannot overflow.
  if (!exterior_derivative(w.with_form_cap(w.max_word_length() + 1)).is_zero())
    throw ValueError("potential: the form is not closed");

  // Split into (word length, weight) components.
  std::map<std::pair<int, int>, Form> comps;
  for (const auto& [wd, f] : w.terms()) {
    const int k = total_exponent(wd);
    for (const auto& [m, c] : f.terms()) {
      const int weight = k + total_exponent(m);
      auto [it, fresh] = comps.try_emplace(
          std::make_pair(k, weight), Form::zero(alg, w.form_cap()));
      it->second.add_term(wd, Series::monomial(alg, m, c));
    }
  }

  for (const auto& [kw, comp] : comps) {
    const auto [k, weight] = kw;
    if (k == 0) {
      // A closed 0-form is a constant in every coordinate direction, so
      // only the weight-0 part can survive, and it obstructs the potential.
      throw ValueError("potential: nonzero constant component");
    }
    if (weight - (k - 1) > alg->cap())
      throw CapError("potential: coefficients would exceed the jet cap");
    SliceBasis from = slice_basis(cs, k - 1, weight);
    SliceBasis to = slice_basis(cs, k, weight);
    const QMatrix d = slice_derivative(alg, from, to, k - 1);
    std::vector<Rat> rhs(to.elems.size(), Rat(0));
    for (const auto& [wd, f] : comp.terms())
      for (const auto& [m, c] : f.terms())
        rhs[to.index.at(std::make_pair(wd, m))] = c;
    std::vector<Rat> x;
    if (!d.solve(rhs, x))
      throw ValueError("potential: component is not exact");
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] == 0) continue;
      const auto& [wd, m] = from.elems[j];
      eta.add_term(wd, Series::monomial(alg, m, x[j]));
    }
  }
  return eta;
}

}  // namespace zjet
