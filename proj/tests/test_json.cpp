#include <catch2/catch_amalgamated.hpp>

#include "tiered/json_io.hpp"

using namespace tiered;

TEST_CASE("tree JSON is canonical and round-trips") {
  TieredTree t{4, {1, 1, 2, 2}, {{1, 4}, {2, 3}, {2, 4}}};
  ordered_json j = tree_to_json(t);
  CHECK(j.dump() == R"({"n":4,"tiers":[1,1,2,2],"edges":[[1,4],[2,3],[2,4]]})");
  CHECK(tree_from_json(j) == t);

  // unsorted and reversed edges are normalized on decode
  ordered_json messy = ordered_json::parse(R"({"n":4,"tiers":[1,1,2,2],"edges":[[4,2],[3,2],[4,1]]})");
  CHECK(tree_from_json(messy) == t);

  ordered_json bad = ordered_json::parse(R"({"n":2,"tiers":[2,1],"edges":[[1,2]]})");
  CHECK_THROWS_AS(tree_from_json(bad), std::domain_error);
  CHECK_THROWS_AS(tree_from_json(ordered_json::parse("{}")), std::domain_error);
}

TEST_CASE("cnat JSON is canonical and validates") {
  Cnat a{{{1, 1}, {1, 2}, {2, 1}}};
  ordered_json j = cnat_to_json(a);
  CHECK(j.dump() == R"({"k":1,"points":[[1,1],[1,2],[2,1]]})");
  CHECK(cnat_from_json(j) == a);

  ordered_json bad = ordered_json::parse(R"({"k":1,"points":[[1,2],[2,1]]})");
  CHECK_THROWS_AS(cnat_from_json(bad), std::domain_error);
  ordered_json wrong_k = ordered_json::parse(R"({"k":2,"points":[[1,1],[1,2],[2,1]]})");
  CHECK_THROWS_AS(cnat_from_json(wrong_k), std::domain_error);
}

TEST_CASE("bivariate polynomial JSON") {
  BivarPoly p = BivarPoly::from_x_layers({{1}, {1, 3}});
  ordered_json j = bivar_to_json(p);
  CHECK(j.dump() ==
        R"({"var_order":["x","q"],"terms":[[0,0,"1"],[1,0,"3"],[1,1,"1"]]})");
  CHECK(bivar_from_json(j) == p);

  // big coefficients survive as strings
  BivarPoly big = BivarPoly::monomial(Int("123456789012345678901234567890"), 2, 3);
  CHECK(bivar_from_json(bivar_to_json(big)) == big);
}

TEST_CASE("serialization is byte-stable") {
  TieredTree t{3, {1, 2, 3}, {{1, 3}, {2, 3}}};
  CHECK(tree_to_json(t).dump() == tree_to_json(t).dump());
}
