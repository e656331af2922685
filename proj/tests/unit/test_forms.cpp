#include <doctest.h>

#include <optional>
#include <vector>

#include "common/fixtures.hpp"
#include "zjet/form.hpp"

using namespace zjet;
using zjtest::alg_line;
using zjtest::alg_mixed;
using zjtest::alg_quat;
using zjtest::alg_super;
using zjtest::cons;
using zjtest::cv;
using zjtest::deg;
using zjtest::expv;

namespace {

Form term(const AlgebraPtr& a, int form_cap, const std::vector<int>& word,
          const Series& coeff) {
  Form f(a, form_cap);
  f.add_term(expv(word), coeff);
  return f;
}

Form gen(const AlgebraPtr& a, const std::string& name, int form_cap) {
  return Form::generator(a, a->coords().index_of(name), form_cap);
}

}  // namespace

TEST_SUITE_BEGIN("forms");

TEST_CASE("term storage rules") {
  AlgebraPtr a = alg_super(3);
  Form w = term(a, 2, {1, 0, 0}, cv(a, "t1"));
  CHECK(w.n_degree() == 1);
  CHECK(w.max_word_length() == 1);
  CHECK(w.word_degree(expv({1, 1, 0})) == deg({1}));
  CHECK(w.word_degree(expv({0, 2, 0})) == deg({0}));

  // A repeated generator of an even-parity coordinate is zero, silently.
  Form dead = term(a, 2, {2, 0, 0}, cons(a, 1));
  CHECK(dead.is_zero());
  // A repeated generator of an odd coordinate is honest content.
  CHECK_FALSE(term(a, 2, {0, 2, 0}, cons(a, 1)).is_zero());

  // Surviving words beyond the form cap are an error, not a truncation.
  Form f(a, 1);
  CHECK_THROWS_AS(f.add_term(expv({0, 2, 0}), cons(a, 1)), CapError);
  CHECK_THROWS_AS(term(a, 3, {0, 2, 0}, cons(a, 1)).with_form_cap(1), CapError);

  // Adding cancels exactly.
  Form g = term(a, 2, {1, 0, 0}, cv(a, "x")) - term(a, 2, {1, 0, 0}, cv(a, "x"));
  CHECK(g.is_zero());
  CHECK((term(a, 2, {1, 0, 0}, cv(a, "x")) +
         term(a, 2, {1, 0, 0}, -cv(a, "x")))
            .is_zero());

  Form mixed_terms = term(a, 2, {1, 0, 0}, cons(a, 1)) + Form::from_series(cv(a, "x"), 2);
  CHECK_FALSE(mixed_terms.n_degree().has_value());
}

TEST_CASE("generator commutation matches the two gradings") {
  AlgebraPtr m = alg_mixed(3);
  const int fc = 3;
  Form dx = gen(m, "x", fc), dz = gen(m, "z", fc), da = gen(m, "a", fc),
       db = gen(m, "b", fc);

  // Even-parity generators square to zero...
  CHECK(wedge(dx, dx).is_zero());
  CHECK(wedge(dz, dz).is_zero());
  // ...odd ones do not.
  CHECK_FALSE(wedge(da, da).is_zero());
  CHECK(wedge(da, da) == term(m, fc, {0, 0, 2, 0}, cons(m, 1)));

  // Swap signs: (-1)^{<deg,deg> + 1} for single generators.
  CHECK(wedge(dx, da) == -wedge(da, dx));
  CHECK(wedge(da, db) == -wedge(db, da));
  CHECK(wedge(dz, da) == wedge(da, dz));  // <(1,1),(0,1)> = 1 cancels the swap
  CHECK(wedge(dz, db) == wedge(db, dz));
  CHECK_FALSE(wedge(dz, da).is_zero());
}

TEST_CASE("coefficients cross words with the degree pairing sign") {
  AlgebraPtr a = alg_super(3);
  const int fc = 3;
  Series t1 = cv(a, "t1"), t2 = cv(a, "t2");

  // Storage has coefficients on the right: dt1 * t2 needs no sign, while
  // t2 * dt1 commutes the 0-form past the generator.
  CHECK(wedge(gen(a, "t1", fc), Form::from_series(t2, fc)) ==
        term(a, fc, {0, 1, 0}, t2));
  CHECK(wedge(Form::from_series(t2, fc), gen(a, "t1", fc)) ==
        term(a, fc, {0, 1, 0}, -t2));

  // (dx t1) ^ dt1 = -dx dt1 t1: the odd coefficient hops over dt1.
  Form left = term(a, fc, {1, 0, 0}, t1);
  CHECK(wedge(left, gen(a, "t1", fc)) == term(a, fc, {1, 1, 0}, -t1));
  // The reverse order agrees, as the commutation rule predicts.
  CHECK(wedge(gen(a, "t1", fc), left) == term(a, fc, {1, 1, 0}, -t1));
}

TEST_CASE("commutation rule on homogeneous forms") {
  AlgebraPtr m = alg_mixed(4);
  const int fc = 4;
  Series z = cv(m, "z"), aa = cv(m, "a");
  std::vector<Form> homog = {
      gen(m, "x", fc),                                    // Z-deg (0,0), N-deg 1
      term(m, fc, {0, 1, 0, 0}, cv(m, "x")),              // Z-deg (1,1), N-deg 1
      term(m, fc, {1, 1, 0, 0}, cons(m, 1)),              // Z-deg (1,1), N-deg 2
      term(m, fc, {0, 0, 1, 0}, z),                       // Z-deg (1,0), N-deg 1
      Form::from_series(aa, fc),                          // Z-deg (0,1), N-deg 0
  };
  std::vector<Degree> zdeg = {deg({0, 0}), deg({1, 1}), deg({1, 1}),
                              deg({1, 0}), deg({0, 1})};
  std::vector<int> ndeg = {1, 1, 2, 1, 0};
  for (std::size_t i = 0; i < homog.size(); ++i)
    for (std::size_t j = 0; j < homog.size(); ++j) {
      int s = degree_dot(zdeg[i], zdeg[j]) + ndeg[i] * ndeg[j];
      Form rhs = wedge(homog[j], homog[i]).scaled(Rat(parity_sign(s)));
      CHECK(wedge(homog[i], homog[j]) == rhs);
    }
}

TEST_CASE("wedge accumulates raw products before the cap check") {
  AlgebraPtr a = alg_super(3);
  // dx ^ (dx x): the only product term dies by antisymmetry, so a form cap
  // of 1 must pass without error.
  Form res = wedge(gen(a, "x", 1), term(a, 1, {1, 0, 0}, cv(a, "x")));
  CHECK(res.is_zero());
  // An honestly surviving length-2 word trips the cap.
  CHECK_THROWS_AS(wedge(gen(a, "t1", 1), gen(a, "t1", 1)), CapError);
  CHECK_THROWS_AS(wedge(gen(a, "t1", 1), gen(a, "x", 2)), ValueError);
}

TEST_CASE("differential of functions") {
  AlgebraPtr a = alg_super(3);
  Series x = cv(a, "x"), t1 = cv(a, "t1"), t2 = cv(a, "t2");
  CHECK(differential(x * x, 3) == term(a, 3, {1, 0, 0}, x.scaled(2)));
  // d(t1 t2) = dt1 t2 - dt2 t1: the second partial crosses t1.
  CHECK(differential(t1 * t2, 3) ==
        term(a, 3, {0, 1, 0}, t2) + term(a, 3, {0, 0, 1}, -t1));
  CHECK(differential(cons(a, 7), 3).is_zero());
}

TEST_CASE("exterior derivative squares to zero on stored data") {
  AlgebraPtr m = alg_mixed(4);
  const int fc = 4;
  Series x = cv(m, "x"), z = cv(m, "z"), aa = cv(m, "a"), bb = cv(m, "b");

  // d(dt t) picks up the word-length sign.
  AlgebraPtr s = alg_super(3);
  Form w1 = term(s, 3, {0, 1, 0}, cv(s, "t1"));
  CHECK(exterior_derivative(w1) == term(s, 3, {0, 2, 0}, -cons(s, 1)));

  std::vector<Form> samples = {
      term(m, fc, {1, 0, 0, 0}, x * x + z * aa),
      term(m, fc, {0, 1, 0, 0}, z * bb) + term(m, fc, {0, 0, 1, 0}, x * aa),
      term(m, fc, {1, 1, 1, 0}, x + z * z),
      Form::from_series(x * z * aa, fc),
  };
  for (const Form& w : samples) {
    Form dw = exterior_derivative(w);
    CHECK(exterior_derivative(dw).is_zero());
  }
}

TEST_CASE("derivation rule of the exterior derivative") {
  AlgebraPtr m = alg_mixed(4);
  const int fc = 4;
  const int cap = m->cap();
  Series x = cv(m, "x"), z = cv(m, "z"), aa = cv(m, "a");
  struct Pair {
    Form a;
    int n;  // N-degree of a
    Form b;
  };
  std::vector<Pair> pairs = {
      {term(m, fc, {1, 0, 0, 0}, z), 1, term(m, fc, {0, 1, 0, 0}, x)},
      {term(m, fc, {0, 1, 0, 0}, aa), 1, Form::from_series(x * z, fc)},
      {term(m, fc, {1, 1, 0, 0}, cons(m, 1) + x), 2,
       term(m, fc, {0, 0, 1, 0}, z)},
  };
  for (const auto& p : pairs) {
    Form lhs = exterior_derivative(wedge(p.a, p.b));
    Form rhs = wedge(exterior_derivative(p.a), p.b) +
               wedge(p.a, exterior_derivative(p.b)).scaled(Rat(parity_sign(p.n)));
    CHECK(lhs.coefficients_truncated(cap - 1) ==
          rhs.coefficients_truncated(cap - 1));
  }
}

TEST_CASE("pullback of forms along a morphism") {
  AlgebraPtr a = alg_super(3);
  Series x = cv(a, "x"), t1 = cv(a, "t1");
  Morphism phi(a, a, {x, x * t1, cv(a, "t2")});

  // Generators map to differentials of the pulled-back coordinates.
  CHECK(form_pullback(phi, gen(a, "t1", 3)) ==
        term(a, 3, {1, 0, 0}, t1) + term(a, 3, {0, 1, 0}, x));
  CHECK(form_pullback(phi, gen(a, "x", 3)) == gen(a, "x", 3));

  // Multiplicativity is exact on the quotient.
  Form w1 = term(a, 3, {1, 0, 0}, t1);
  Form w2 = term(a, 3, {0, 1, 0}, x + x * x);
  CHECK(form_pullback(phi, wedge(w1, w2)) ==
        wedge(form_pullback(phi, w1), form_pullback(phi, w2)));

  // Naturality d(phi^* w) = phi^*(d w) at one derivative of jet accuracy.
  Form w3 = term(a, 3, {0, 1, 0}, x * x + t1 * cv(a, "t2"));
  Form lhs = exterior_derivative(form_pullback(phi, w3));
  Form rhs = form_pullback(phi, exterior_derivative(w3));
  CHECK(lhs.coefficients_truncated(2) == rhs.coefficients_truncated(2));
}

TEST_CASE("fields act as graded derivations") {
  AlgebraPtr a = alg_super(3);
  Series x = cv(a, "x"), t1 = cv(a, "t1"), t2 = cv(a, "t2");
  VectorField xdx{a, {x, Series::zero(a), Series::zero(a)}};
  CHECK(apply_field(xdx, x * x) == (x * x).scaled(2));
  CHECK(field_degree(xdx) == Degree::zero(1));

  VectorField dt1{a, {Series::zero(a), cons(a, 1), Series::zero(a)}};
  CHECK(field_degree(dt1) == deg({1}));
  CHECK(apply_field(dt1, t1 * t2) == t2);

  // Graded Leibniz: X(fg) = X(f) g + (-1)^{<X,f>} f X(g), odd X, odd f.
  Series f = t1, g = x * t2;
  CHECK(apply_field(dt1, f * g) ==
        apply_field(dt1, f) * g - f * apply_field(dt1, g));

  VectorField bad{a, {x, cons(a, 1), Series::zero(a)}};
  CHECK_FALSE(field_degree(bad).has_value());
}

TEST_CASE("field-form pairing is sign-free in this storage") {
  AlgebraPtr m = alg_mixed(3);
  Series z = cv(m, "z"), aa = cv(m, "a");
  VectorField x_field{m, {z, Series::zero(m), Series::zero(m), Series::zero(m)}};
  Form w = term(m, 3, {1, 0, 0, 0}, aa);
  CHECK(pair_field_form(x_field, w) == z * aa);

  // Pairing against an exact differential recovers the field action.
  Series f = cv(m, "x") * cv(m, "x") + z * aa;
  VectorField y{m, {cv(m, "x"), z, aa, Series::zero(m)}};
  CHECK(pair_field_form(y, differential(f, 3)) == apply_field(y, f));
}

TEST_CASE("graded commutator of fields") {
  AlgebraPtr a = alg_super(3);
  Series x = cv(a, "x"), t1 = cv(a, "t1");
  Series z0 = Series::zero(a);
  VectorField xdx{a, {x, z0, z0}};
  VectorField ddx{a, {cons(a, 1), z0, z0}};
  VectorField c = bracket(xdx, ddx);
  CHECK(c.coef[0] == -cons(a, 1));
  CHECK(c.coef[1].is_zero());

  // A square-root-of-translation pair: Q = t1 d/dx + x d/dt1.
  VectorField q{a, {t1, x, z0}};
  VectorField qq = bracket(q, q);
  CHECK(qq.coef[0] == x.scaled(2));
  CHECK(qq.coef[1] == t1.scaled(2));
  CHECK(qq.coef[2].is_zero());

  // Graded antisymmetry on both parities.
  VectorField dt1{a, {z0, cons(a, 1), z0}};
  VectorField lhs = bracket(q, dt1);
  VectorField rhs = bracket(dt1, q);
  for (int b = 0; b < 3; ++b) CHECK(lhs.coef[b] == rhs.coef[b]);  // odd-odd: +
  VectorField l2 = bracket(xdx, dt1);
  VectorField r2 = bracket(dt1, xdx);
  for (int b = 0; b < 3; ++b) CHECK(l2.coef[b] == -r2.coef[b]);  // even-odd: -
}

TEST_CASE("homotopy operator along an even nonzero-degree coordinate") {
  AlgebraPtr m = alg_mixed(4);
  const int eta = 1;  // z
  Series z = cv(m, "z"), aa = cv(m, "a");

  CHECK(homotopy_K(term(m, 4, {0, 1, 0, 0}, z), eta) ==
        Form::from_series((z * z).scaled(Rat(1, 2)), 4));
  // Terms without dz die.
  CHECK(homotopy_K(term(m, 4, {1, 0, 0, 0}, z), eta).is_zero());
  // Removing dz from dz da needs no move; the coefficient gains a z.
  CHECK(homotopy_K(term(m, 4, {0, 1, 1, 0}, cons(m, 1)), eta) ==
        term(m, 4, {0, 0, 1, 0}, z));
}

TEST_CASE("homotopy antiderivative crosses earlier factors with a sign") {
  AlgebraPtr q = alg_quat(4);
  const int eta = 2;  // qk, degree (1,1,0)
  Series qi = cv(q, "qi"), qk = cv(q, "qk");
  // K(dqk qi) = -qi qk: inserting qk behind qi costs <(1,1,0),(0,1,1)> = 1.
  CHECK(homotopy_K(term(q, 4, {0, 0, 1}, qi), eta) ==
        Form::from_series(-(qi * qk), 4));
}

TEST_CASE("homotopy identity holds exactly on fixed forms") {
  AlgebraPtr m = alg_mixed(4);
  const int eta = 1;
  Series x = cv(m, "x"), z = cv(m, "z"), aa = cv(m, "a");

  auto check_identity = [&](const Form& w, int k) {
    Form lhs = exterior_derivative(homotopy_K(w, eta)) -
               homotopy_K(exterior_derivative(w), eta);
    Form rhs = (w - restrict_zero_pullback(w, eta)).scaled(
        Rat(parity_sign(k - 1)));
    CHECK(lhs == rhs);
  };
  check_identity(term(m, 4, {0, 1, 0, 0}, x + z * aa) +
                     term(m, 4, {1, 0, 0, 0}, z * z),
                 1);
  check_identity(term(m, 4, {0, 1, 1, 0}, x * z) +
                     term(m, 4, {1, 1, 0, 0}, cons(m, 1) + z),
                 2);
}

TEST_CASE("homotopy needs one order of cap headroom") {
  AlgebraPtr m = alg_mixed(2);
  CHECK_THROWS_AS(
      homotopy_K(term(m, 2, {0, 1, 0, 0}, cv(m, "z") * cv(m, "z")), 1),
      CapError);
}

TEST_CASE("restriction to the zero locus of one coordinate") {
  AlgebraPtr m = alg_mixed(3);
  Series z = cv(m, "z"), aa = cv(m, "a");
  Form w = term(m, 3, {0, 1, 0, 0}, z) + term(m, 3, {1, 0, 0, 0}, cons(m, 1) + z) +
           term(m, 3, {0, 0, 1, 0}, aa);
  Form r = restrict_zero_pullback(w, 1);
  CHECK(r == term(m, 3, {1, 0, 0, 0}, cons(m, 1)) +
                 term(m, 3, {0, 0, 1, 0}, aa));
}

TEST_SUITE_END();
