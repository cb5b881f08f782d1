#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tiered/cnat.hpp"

using namespace tiered;

TEST_CASE("validation of grid point sets") {
  CHECK(!validate_cnat(Cnat{{{1, 1}}}));
  CHECK(!validate_cnat(Cnat{{{1, 1}, {1, 2}, {2, 1}}}));

  CHECK(validate_cnat(Cnat{{{1, 2}, {2, 1}}}).has_value());  // no root
  // both a point above and a point to the left
  CHECK(validate_cnat(Cnat{{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 3}}}).has_value());
  // empty row 2
  CHECK(validate_cnat(Cnat{{{1, 1}, {1, 3}, {2, 1}}}).has_value());
  // a point with exactly one child
  CHECK(validate_cnat(Cnat{{{1, 1}, {1, 2}}}).has_value());
}

TEST_CASE("enumeration counts") {
  std::vector<long long> expected = {1, 1, 4, 33, 456};
  for (int k = 0; k <= 4; ++k) {
    Int count = 0;
    std::set<Cnat> seen;
    for_each_cnat(k, [&](const Cnat& a) {
      ++count;
      CHECK(!validate_cnat(a));
      seen.insert(a);
    });
    CHECK(count == expected[k]);
    CHECK(Int(seen.size()) == count);
  }
  CHECK_THROWS_AS(for_each_cnat(6, [](const Cnat&) {}), capacity_error);

  // the single object with one internal point
  std::vector<Cnat> k1;
  for_each_cnat(1, [&](const Cnat& a) { k1.push_back(a); });
  REQUIRE(k1.size() == 1);
  CHECK(k1[0].points == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("grid trees map to weight-0 fully tiered trees") {
  Cnat k1{{{1, 1}, {1, 2}, {2, 1}}};
  TieredTree pair = cnat_to_tiered(k1);
  CHECK(pair.n == 2);
  CHECK(pair.tiers == std::vector<int>{1, 2});
  CHECK(pair.edges == std::vector<Edge>{{1, 2}});

  // k = 2: four objects, four distinct weight-0 fully tiered trees
  std::set<TieredTree> images;
  for_each_cnat(2, [&](const Cnat& a) {
    TieredTree t = cnat_to_tiered(a);
    CHECK(!validate_tiered_tree(t));
    CHECK(tree_weight(t) == 0);
    images.insert(t);
  });
  CHECK(images.size() == 4);

  // weight-0 count on 3 vertices equals the constant term q^0 -> 4
  CHECK(tier_poly(TierType({1, 1, 1})).coeff(0) == 4);
}

TEST_CASE("round trip through the bijection") {
  for (int k = 0; k <= 3; ++k)
    for_each_cnat(k, [&](const Cnat& a) {
      TieredTree t = cnat_to_tiered(a);
      CHECK(tiered_to_cnat(t) == a);
    });

  // positive weight is outside the backward domain
  TieredTree heavy{3, {1, 2, 3}, {{1, 3}, {2, 3}}};
  CHECK_THROWS_AS(tiered_to_cnat(heavy), std::domain_error);

  // not fully tiered
  TieredTree maxmin{3, {1, 1, 2}, {{1, 3}, {2, 3}}};
  CHECK_THROWS_AS(tiered_to_cnat(maxmin), std::domain_error);
}

TEST_CASE("Bessel logarithm coefficients") {
  std::vector<Rat> coeffs = bessel_check(6);
  CHECK(coeffs[1] == Rat(1));
  CHECK(coeffs[3] == Rat(1, 9));         // 4/36
  CHECK(coeffs[5] == Rat(456, 14400));
  CHECK(coeffs[6] == Rat(9460) / Rat(factorial(6) * factorial(6)));
  CHECK_THROWS_AS(bessel_check(9), capacity_error);
}
