#include <doctest.h>

#include <optional>
#include <vector>

#include "common/fixtures.hpp"
#include "zjet/series.hpp"
#include "zjet/textio.hpp"

using namespace zjet;
using zjtest::alg_line;
using zjtest::alg_mixed;
using zjtest::alg_quat;
using zjtest::alg_super;
using zjtest::cons;
using zjtest::cv;
using zjtest::deg;
using zjtest::expv;
using zjtest::mono;

TEST_SUITE_BEGIN("series");

TEST_CASE("constructors and the quotient rules of single terms") {
  AlgebraPtr a = alg_super(3);
  CHECK(Series::zero(a).is_zero());
  CHECK(cons(a, 2, 3).epsilon() == Rat(2, 3));
  CHECK(cv(a, "x") == Series::coordinate(a, 0));
  CHECK_THROWS_AS(Series::coordinate(a, "nope"), ValueError);
  CHECK_THROWS_AS(Series::monomial(a, expv({1, 0}), Rat(1)), DimensionError);

  // Quotient semantics: odd squares and over-cap monomials are silently zero.
  CHECK(mono(a, {0, 2, 0}, Rat(1)).is_zero());
  CHECK(mono(a, {4, 0, 0}, Rat(1)).is_zero());
  CHECK_FALSE(mono(a, {1, 1, 1}, Rat(1)).is_zero());
}

TEST_CASE("odd coordinates are nilpotent and anticommute") {
  AlgebraPtr a = alg_super(3);
  Series t1 = cv(a, "t1"), t2 = cv(a, "t2"), x = cv(a, "x");
  CHECK((t1 * t1).is_zero());
  CHECK(t1 * t2 == -(t2 * t1));
  CHECK_FALSE((t1 * t2).is_zero());
  CHECK(x * t1 == t1 * x);
  CHECK(t1 * t2 == mono(a, {0, 1, 1}, Rat(1)));
  CHECK(t2 * t1 == mono(a, {0, 1, 1}, Rat(-1)));
}

TEST_CASE("even nonzero degrees anticommute without being nilpotent") {
  AlgebraPtr q = alg_quat(4);
  Series qi = cv(q, "qi"), qj = cv(q, "qj"), qk = cv(q, "qk");
  CHECK(qi * qj == -(qj * qi));
  CHECK(qi * qk == -(qk * qi));
  CHECK(qj * qk == -(qk * qj));
  CHECK_FALSE((qi * qi).is_zero());
  CHECK(qi * qi == mono(q, {2, 0, 0}, Rat(1)));
  CHECK(qi.pow(4) == mono(q, {4, 0, 0}, Rat(1)));
  CHECK((qi * qj) * qk == qi * (qj * qk));
  // Squares are central: qi^2 commutes with everything.
  Series sq = qi * qi;
  CHECK(sq * qj == qj * sq);
}

TEST_CASE("mixed-degree commutation matches the degree pairing") {
  AlgebraPtr m = alg_mixed(3);
  Series z = cv(m, "z"), aa = cv(m, "a"), bb = cv(m, "b");
  // <(1,1),(0,1)> = 1 and <(1,1),(1,0)> = 1: z anticommutes with both.
  CHECK(z * aa == -(aa * z));
  CHECK(z * bb == -(bb * z));
  // <(0,1),(1,0)> = 0: the two odd coordinates commute here even though
  // both are individually nilpotent.
  CHECK(aa * bb == bb * aa);
  CHECK((aa * aa).is_zero());
  CHECK_FALSE((z * z).is_zero());
}

TEST_CASE("cap truncation is the ideal-power quotient") {
  AlgebraPtr a = alg_line(3);
  Series x = cv(a, "x");
  CHECK(x.pow(3) == mono(a, {3}, Rat(1)));
  CHECK(x.pow(4).is_zero());
  Series f = x + x * x;
  CHECK(f * f == mono(a, {2}, Rat(1)) + mono(a, {3}, Rat(2)));
  CHECK(f.truncated(1) == x);
  CHECK(f.max_total_exponent() == 2);
}

TEST_CASE("term storage follows graded-lexicographic order") {
  AlgebraPtr m = alg_mixed(3);
  Series f = cv(m, "x") + cv(m, "z") + cons(m, 5);
  auto it = f.terms().begin();
  CHECK(it->first == expv({0, 0, 0, 0}));
  ++it;  // same total: plain lexicographic comparison of exponent vectors
  CHECK(it->first == expv({0, 1, 0, 0}));
  ++it;
  CHECK(it->first == expv({1, 0, 0, 0}));
  CHECK(series_str(f) == "5 + 1 * z + 1 * x");
}

TEST_CASE("augmentation, j-adic order, homogeneous parts") {
  AlgebraPtr m = alg_mixed(3);
  Series f = cons(m, 7) + cv(m, "x") * cv(m, "x") + cv(m, "z") * cv(m, "a");
  CHECK(f.epsilon() == Rat(7));
  CHECK(f.j_order() == 0);
  CHECK(cv(m, "x").j_order() == 0);  // zero-degree factors do not count
  CHECK((cv(m, "z") * cv(m, "x")).j_order() == 1);
  CHECK((cv(m, "z") * cv(m, "a")).j_order() == 2);
  CHECK_FALSE(Series::zero(m).j_order().has_value());

  CHECK(f.monomial_degree(expv({0, 1, 1, 0})) == deg({1, 0}));
  CHECK_FALSE(f.is_homogeneous(Degree::zero(2)));  // the z*a term has degree (1,0)
  CHECK((cons(m, 7) + cv(m, "x") * cv(m, "x")).is_homogeneous(Degree::zero(2)));
  Series g = cv(m, "z") + cv(m, "a");
  CHECK_FALSE(g.homogeneous_degree().has_value());
  CHECK(g.homogeneous_part(deg({1, 1})) == cv(m, "z"));
  CHECK(g.homogeneous_part(deg({0, 1})) == cv(m, "a"));
  CHECK((cv(m, "z") * cv(m, "a")).homogeneous_degree() == deg({1, 0}));
}

TEST_CASE("left partial derivatives carry the crossing sign") {
  AlgebraPtr a = alg_super(3);
  Series t1 = cv(a, "t1"), t2 = cv(a, "t2"), x = cv(a, "x");
  Series f = t1 * t2;
  CHECK(f.partial("t1") == t2);
  CHECK(f.partial("t2") == -t1);  // crosses t1: <1,1> = 1
  CHECK((x * x).partial("x") == x.scaled(2));
  CHECK((x * t1 * t2).partial("t2") == -(x * t1));
  CHECK(cons(a, 3).partial("x").is_zero());

  // Graded Leibniz on a fixed pair: d(fg) = df g + (-1)^{<d,f>} f dg.
  // f = t1 t2 is even (degree 1+1 = 0), so the crossing sign is +1.
  Series g = x * t1;
  Series lhs = (f * g).partial("t1");
  Series rhs = f.partial("t1") * g + f * g.partial("t1");
  CHECK(lhs == rhs);
}

TEST_CASE("geometric series inversion") {
  AlgebraPtr m = alg_mixed(3);
  Series x = cv(m, "x");
  Series inv = (cons(m, 1) + x).inverted();
  CHECK(inv == cons(m, 1) - x + x * x - x * x * x);
  CHECK(((cons(m, 1) + x) * inv) == cons(m, 1));

  CHECK(cons(m, 2).inverted() == cons(m, 1, 2));
  CHECK_THROWS_AS(x.inverted(), NonUnitError);           // degree 0 but eps = 0
  CHECK_THROWS_AS(cv(m, "z").inverted(), DegreeError);   // nonzero degree
  CHECK_THROWS_AS((cons(m, 1) + cv(m, "a")).inverted(), DegreeError);
}

TEST_CASE("substitution is the ring morphism fixed by the images") {
  AlgebraPtr src = zjet::make_algebra(
      CoordinateSystem(2, {"y"}, {Degree::zero(2)}), 4);
  AlgebraPtr dst = alg_mixed(4);
  Series y = cv(src, "y");
  Series img = cv(dst, "x") + cv(dst, "z") * cv(dst, "z");
  Series out = (y * y).substituted_into({img}, dst);
  Series x = cv(dst, "x"), z = cv(dst, "z");
  CHECK(out == x * x + (x * z * z).scaled(2) + z.pow(4));

  // Multiplicativity on a fixed pair.
  Series f = y + y * y, g = cons(src, 1) + y;
  CHECK((f * g).substituted_into({img}, dst) ==
        f.substituted_into({img}, dst) * g.substituted_into({img}, dst));

  // Validation: wrong arity, inhomogeneous image, basepoint violation.
  CHECK_THROWS_AS(y.substituted_into({img, img}, dst), DimensionError);
  AlgebraPtr m3 = alg_mixed(4);
  CHECK_THROWS_AS(
      cv(m3, "z").substituted_into(
          {cv(dst, "x"), cv(dst, "z") + cv(dst, "a"), cv(dst, "a"), cv(dst, "b")},
          dst),
      DegreeError);
  CHECK_THROWS_AS(
      cv(m3, "x").substituted_into(
          {cv(dst, "x") + cons(dst, 1), cv(dst, "z"), cv(dst, "a"), cv(dst, "b")},
          dst),
      BasepointError);
}

TEST_CASE("substitution respects the sign rule") {
  // Swap two coordinates of the same odd degree: their images multiply in
  // the opposite order, so the reassembled product picks up the Koszul sign.
  AlgebraPtr m = zjet::make_algebra(
      CoordinateSystem(2, {"z", "a1", "a2"},
                       {deg({1, 1}), deg({0, 1}), deg({0, 1})}),
      4);
  Series z = cv(m, "z"), a1 = cv(m, "a1"), a2 = cv(m, "a2");
  std::vector<Series> swap_images = {z, a2, a1};
  CHECK((a1 * a2).substituted_into(swap_images, m) == -(a1 * a2));
  CHECK((z * a1).substituted_into(swap_images, m) == z * a2);
  // Applying the swap twice undoes the sign.
  Series f = a1 * a2;
  CHECK(f.substituted_into(swap_images, m).substituted_into(swap_images, m) == f);
}

TEST_CASE("algebra mismatch is rejected") {
  AlgebraPtr a1 = alg_line(3), a2 = alg_line(4);
  CHECK_THROWS_AS(require_same_algebra(cv(a1, "x"), cv(a2, "x")),
                  RingMismatchError);
  CHECK_THROWS_AS(cv(a1, "x") + cv(a2, "x"), RingMismatchError);
  AlgebraPtr a3 = alg_line(3);
  CHECK(cv(a1, "x") + cv(a3, "x") == mono(a1, {1}, Rat(2)));  // structural equality
}

TEST_SUITE_END();
