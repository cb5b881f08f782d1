#include <catch2/catch_amalgamated.hpp>

#include "tiered/weight.hpp"

using namespace tiered;

TEST_CASE("weight of small tiered trees") {
  // maxmin on 4 vertices, maxima {3,4}: 1 was joined to 4 although 3 was free
  TieredTree heavier{4, {1, 1, 2, 2}, {{1, 4}, {2, 3}, {2, 4}}};
  CHECK(tree_weight(heavier) == 1);

  // same shape but 1 joined to the smallest available maximum
  TieredTree lighter{4, {1, 1, 2, 2}, {{1, 3}, {2, 3}, {2, 4}}};
  CHECK(tree_weight(lighter) == 0);

  // fully tiered on 3 vertices: 1 could have been joined to 2 instead of 3
  TieredTree full{3, {1, 2, 3}, {{1, 3}, {2, 3}}};
  CHECK(tree_weight(full) == 1);

  TieredTree single{1, {1}, {}};
  CHECK(tree_weight(single) == 0);

  TieredTree invalid{2, {2, 1}, {{1, 2}}};
  CHECK_THROWS_AS(tree_weight(invalid), std::domain_error);
}

TEST_CASE("external activity in the complete tiered graph") {
  TieredTree heavier{4, {1, 1, 2, 2}, {{1, 4}, {2, 3}, {2, 4}}};
  ActivityReport r = external_activity(heavier);
  CHECK(r.external == 1);
  // the single non-tree edge (1,3) is the least edge of its cycle
  for (const auto& w : r.witnesses)
    if (!w.in_tree) {
      CHECK(w.edge == Edge{1, 3});
      CHECK(w.active);
    }

  TieredTree lighter{4, {1, 1, 2, 2}, {{1, 3}, {2, 3}, {2, 4}}};
  CHECK(external_activity(lighter).external == 0);

  // a tree-shaped complete tiered graph has no non-tree edges at all
  TieredTree star{3, {1, 1, 2}, {{1, 3}, {2, 3}}};
  ActivityReport s = external_activity(star);
  CHECK(s.external == 0);
  CHECK(s.witnesses.size() == star.edges.size());
}

TEST_CASE("Tutte polynomial by both routes") {
  Graph edge{2, {{1, 2}}};
  BivarPoly x = BivarPoly::monomial(1, 1, 0);
  CHECK(tutte_polynomial(edge, TutteMethod::activities) == x);
  CHECK(tutte_polynomial(edge, TutteMethod::deletion_contraction) == x);

  Graph triangle{3, {{1, 2}, {1, 3}, {2, 3}}};
  BivarPoly triangle_expected;  // x^2 + x + y
  triangle_expected.add_term(2, 0, 1);
  triangle_expected.add_term(1, 0, 1);
  triangle_expected.add_term(0, 1, 1);
  CHECK(tutte_polynomial(triangle, TutteMethod::deletion_contraction) == triangle_expected);
  CHECK(tutte_polynomial(triangle, TutteMethod::activities) == triangle_expected);

  Graph c4{4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}};
  BivarPoly c4_expected;  // x^3 + x^2 + x + y
  c4_expected.add_term(3, 0, 1);
  c4_expected.add_term(2, 0, 1);
  c4_expected.add_term(1, 0, 1);
  c4_expected.add_term(0, 1, 1);
  CHECK(tutte_polynomial(c4, TutteMethod::activities) == c4_expected);
  CHECK(tutte_polynomial(c4, TutteMethod::deletion_contraction) == c4_expected);

  Graph k4{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
  BivarPoly by_activities = tutte_polynomial(k4, TutteMethod::activities);
  CHECK(by_activities == tutte_polynomial(k4, TutteMethod::deletion_contraction));
  CHECK(by_activities.evaluate(1, 1) == 16);  // 4^2 spanning trees

  Graph disconnected{4, {{1, 2}, {3, 4}}};
  CHECK_THROWS_AS(tutte_polynomial(disconnected, TutteMethod::activities), std::domain_error);
}

TEST_CASE("tier polynomials reproduce the reference table rows") {
  CHECK(tier_poly(TierType({2, 2})).str() == "q + 4");
  CHECK(tier_poly(TierType({1, 2, 2})).str() == "q^4 + 6q^3 + 22q^2 + 51q + 66");
  CHECK(tier_poly(TierType({1, 1, 1, 1, 1, 1})).str() ==
        "q^10 + 10q^9 + 54q^8 + 209q^7 + 649q^6 + 1681q^5 + 3691q^4 + 6921q^3 + 10805q^2 + "
        "13139q + 9460");
  CHECK_THROWS_AS(tier_poly(TierType({4, 4})), capacity_error);

  // the parallel reduction gives the same polynomial
  CHECK(tier_poly(TierType({1, 2, 2}), kDefaultTreeCapacity, 4) ==
        tier_poly(TierType({1, 2, 2})));
}

TEST_CASE("maxmin polynomial") {
  BivarPoly t4 = maxmin_polynomial(4);
  BivarPoly expected = BivarPoly::from_x_layers({{}, {1}, {1, 4}, {1}});
  CHECK(t4 == expected);

  BivarPoly t6 = maxmin_polynomial(6);
  CHECK(t6.coeff_of_x(1) == IntPoly(Int(1)));
  CHECK(t6.coeff_of_x(2) == IntPoly::from_descending({1, 6, 16, 26}));
  CHECK(t6.coeff_of_x(3) == IntPoly::from_descending({1, 6, 22, 51, 66}));
  CHECK(t6.coeff_of_x(4) == IntPoly::from_descending({1, 6, 16, 26}));
  CHECK(t6.coeff_of_x(5) == IntPoly(Int(1)));

  // weight-0 layer is the Eulerian polynomial (shifted)
  for (int n = 2; n <= 6; ++n) {
    BivarPoly t = maxmin_polynomial(n);
    for (int k = 1; k <= n - 1; ++k) CHECK(t.coeff(k, 0) == eulerian(k - 1, n - 1));
  }

  CHECK_THROWS_AS(maxmin_polynomial(1), std::domain_error);
  CHECK_THROWS_AS(maxmin_polynomial(9), capacity_error);
}
