#include <doctest.h>

#include <vector>

#include "common/fixtures.hpp"
#include "zjet/degree.hpp"

using namespace zjet;
using zjtest::deg;

TEST_SUITE_BEGIN("grading");

TEST_CASE("degree components, parity, addition, pairing") {
  Degree d = deg({0, 1, 1});
  CHECK(d.n() == 3);
  CHECK(d.component(0) == 0);
  CHECK(d.component(1) == 1);
  CHECK(d.component(2) == 1);
  CHECK(d.parity() == 0);
  CHECK(deg({1, 1, 1}).parity() == 1);
  CHECK(Degree::zero(3).is_zero());

  // Addition is componentwise mod 2; every degree is its own inverse.
  CHECK(degree_add(deg({0, 1, 1}), deg({1, 0, 1})) == deg({1, 1, 0}));
  CHECK(degree_add(d, d) == Degree::zero(3));

  CHECK(degree_dot(deg({0, 1, 1}), deg({1, 0, 1})) == 1);
  CHECK(degree_dot(deg({0, 1, 1}), deg({0, 1, 1})) == 0);
  CHECK(scalar_sign(deg({0, 1}), deg({1, 1})) == -1);
  CHECK(scalar_sign(deg({0, 1}), deg({1, 0})) == 1);
  CHECK(parity_sign(0) == 1);
  CHECK(parity_sign(3) == -1);
  CHECK(parity_sign(4) == 1);
}

TEST_CASE("degree validation") {
  CHECK_THROWS_AS(Degree(0, 0), ValueError);
  CHECK_THROWS_AS(Degree(17, 0), ValueError);
  CHECK_THROWS_AS(Degree(2, 1u << 2), ValueError);
  CHECK_THROWS_AS(Degree::from_components({}), ValueError);
  CHECK_THROWS_AS(Degree::from_components({0, 2}), ValueError);
  CHECK_THROWS_AS(degree_add(deg({0, 1}), deg({0, 1, 1})), ValueError);
  CHECK(deg({1, 0, 1}).str() == "(1,0,1)");
}

TEST_CASE("standard order: evens lexicographic, then odds, zero first") {
  const std::vector<Degree>& o1 = standard_order(1);
  REQUIRE(o1.size() == 2);
  CHECK(o1[0] == deg({0}));
  CHECK(o1[1] == deg({1}));

  const std::vector<Degree>& o2 = standard_order(2);
  REQUIRE(o2.size() == 4);
  CHECK(o2[0] == deg({0, 0}));
  CHECK(o2[1] == deg({1, 1}));
  CHECK(o2[2] == deg({0, 1}));
  CHECK(o2[3] == deg({1, 0}));

  const std::vector<Degree>& o3 = standard_order(3);
  REQUIRE(o3.size() == 8);
  CHECK(o3[0] == deg({0, 0, 0}));
  CHECK(o3[1] == deg({0, 1, 1}));
  CHECK(o3[2] == deg({1, 0, 1}));
  CHECK(o3[3] == deg({1, 1, 0}));
  CHECK(o3[4] == deg({0, 0, 1}));
  CHECK(o3[5] == deg({0, 1, 0}));
  CHECK(o3[6] == deg({1, 0, 0}));
  CHECK(o3[7] == deg({1, 1, 1}));

  for (int i = 0; i < 8; ++i) CHECK(standard_order_index(o3[i]) == i);
}

TEST_CASE("quaternion-like degrees: pairwise anticommuting, commuting squares") {
  // The three even nonzero degrees for n=3 pair to 1 with each other and to
  // 0 with themselves, exactly the sign pattern of i, j, k.
  std::vector<Degree> q = {deg({0, 1, 1}), deg({1, 0, 1}), deg({1, 1, 0})};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      int brute = 0;
      for (int i = 0; i < 3; ++i)
        brute += q[a].component(i) * q[b].component(i);
      CHECK(scalar_sign(q[a], q[b]) == ((brute % 2) ? -1 : 1));
      CHECK(scalar_sign(q[a], q[b]) == (a == b ? 1 : -1));
      CHECK(q[a].parity() == 0);
    }
}

TEST_CASE("signatures") {
  DegreeSignature sig{2, 1, {1, 1, 1}};
  CHECK(sig.total() == 4);
  CHECK(sig.dim_str() == "1|(1,1,1)");
  CHECK(sig.signature_str() == "n=2 q=(1,1,1)");
  validate_signature(sig);

  CHECK_THROWS_AS(validate_signature(DegreeSignature{2, 1, {1, 1}}), ValueError);
  CHECK_THROWS_AS(validate_signature(DegreeSignature{2, -1, {0, 0, 0}}), ValueError);
  CHECK_THROWS_AS(validate_signature(DegreeSignature{0, 1, {}}), ValueError);
  CHECK_THROWS_AS(validate_signature(DegreeSignature{2, 0, {0, -1, 0}}), ValueError);
}

TEST_CASE("coordinate systems enforce layout and naming") {
  AlgebraPtr mixed = zjtest::alg_mixed(3);
  const CoordinateSystem& cs = mixed->coords();
  CHECK(cs.size() == 4);
  CHECK(cs.index_of("a") == 2);
  CHECK(cs.index_of("nope") == -1);
  CHECK(cs.degree(1) == deg({1, 1}));
  CHECK(cs.indices_of_degree(deg({0, 1})) == std::vector<int>{2});
  CHECK(cs.signature().dim_str() == "1|(1,1,1)");

  // Degree groups must follow the standard order.
  CHECK_THROWS_AS(CoordinateSystem(2, {"a", "z"}, {deg({0, 1}), deg({1, 1})}),
                  ValueError);
  // Zero-degree coordinates must come first.
  CHECK_THROWS_AS(CoordinateSystem(2, {"z", "x"}, {deg({1, 1}), deg({0, 0})}),
                  ValueError);
  CHECK_THROWS_AS(CoordinateSystem(1, {"x", "x"}, {deg({0}), deg({0})}),
                  ValueError);
  CHECK_THROWS_AS(CoordinateSystem(1, {"d"}, {deg({0})}), ValueError);
  CHECK_THROWS_AS(CoordinateSystem(1, {"2x"}, {deg({0})}), ValueError);
  CHECK_THROWS_AS(CoordinateSystem(2, {"x"}, {deg({0})}), ValueError);
}

TEST_CASE("canonical coordinate generation") {
  CoordinateSystem cs = canonical_coordinates(DegreeSignature{2, 2, {1, 0, 2}});
  REQUIRE(cs.size() == 5);
  CHECK(cs.names() == std::vector<std::string>{"x1", "x2", "s1_1", "s3_1", "s3_2"});
  CHECK(cs.degree(0) == deg({0, 0}));
  CHECK(cs.degree(2) == deg({1, 1}));
  CHECK(cs.degree(3) == deg({1, 0}));
  CHECK(cs.degree(4) == deg({1, 0}));
}

TEST_CASE("coordinate names the command language can re-parse") {
  CHECK(valid_coordinate_name("x"));
  CHECK(valid_coordinate_name("_a1"));
  CHECK(valid_coordinate_name("d2"));
  CHECK_FALSE(valid_coordinate_name("d"));
  CHECK_FALSE(valid_coordinate_name(""));
  CHECK_FALSE(valid_coordinate_name("2x"));
  CHECK_FALSE(valid_coordinate_name("a-b"));
}

TEST_SUITE_END();
