#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tiered/bijections.hpp"

using namespace tiered;

namespace {

int maxima_count(const TieredTree& t) {
  return static_cast<int>(std::count(t.tiers.begin(), t.tiers.end(), 2));
}

}  // namespace

TEST_CASE("block decomposition") {
  // the worked 10-symbol example: blocks 859, 467, 3, 2 and right 1A
  // (zero-based symbols; the library is one-based)
  Permutation pi = parse_compact("8594673201");
  Decomposition d = decompose(pi);
  REQUIRE(d.blocks.size() == 4);
  CHECK(d.blocks[0] == std::vector<int>{9, 6, 10});
  CHECK(d.blocks[1] == std::vector<int>{5, 7, 8});
  CHECK(d.blocks[2] == std::vector<int>{4});
  CHECK(d.blocks[3] == std::vector<int>{3});
  CHECK(d.right == std::vector<int>{2, 11});

  Decomposition id = decompose(Permutation::identity(4));
  CHECK(id.blocks.empty());
  CHECK(id.right == std::vector<int>{2, 3, 4, 5});

  Decomposition longest = decompose(Permutation::longest(4));
  REQUIRE(longest.blocks.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(longest.blocks[i] == std::vector<int>{int(4 - i)});
  CHECK(longest.right == std::vector<int>{5});
}

TEST_CASE("permutation to weight-0 maxmin tree") {
  TieredTree star = perm_to_tree(Permutation::identity(3));
  CHECK(star.edges == std::vector<Edge>{{1, 4}, {2, 4}, {3, 4}});
  CHECK(maxima_count(star) == 1);

  TieredTree t132 = perm_to_tree(Permutation({1, 3, 2}));
  CHECK(t132.edges == std::vector<Edge>{{1, 3}, {2, 3}, {2, 4}});
  CHECK(maxima_count(t132) == 2);
  CHECK(tree_weight(t132) == 0);

  Permutation example = parse_compact("8594673201");
  TieredTree big = perm_to_tree(example);
  CHECK(big.n == 11);
  CHECK(maxima_count(big) == 6);
  CHECK(descents(example) == 5);
  CHECK(tree_weight(big) == 0);
}

TEST_CASE("tree to permutation and round trips") {
  // star centered at the adjoined maximum is the identity
  TieredTree star{4, {1, 1, 1, 2}, {{1, 4}, {2, 4}, {3, 4}}};
  CHECK(tree_to_perm(star) == Permutation::identity(3));

  // star centered at 1 is the decreasing permutation
  TieredTree at1{4, {1, 2, 2, 2}, {{1, 2}, {1, 3}, {1, 4}}};
  CHECK(tree_to_perm(at1) == Permutation::longest(3));

  for (int n = 1; n <= 5; ++n)
    for_each_permutation(n, [&](const std::vector<int>& w) {
      Permutation pi(w);
      CHECK(tree_to_perm(perm_to_tree(pi)) == pi);
    });

  // positive weight is outside the domain
  TieredTree heavier{4, {1, 1, 2, 2}, {{1, 4}, {2, 3}, {2, 4}}};
  CHECK_THROWS_AS(tree_to_perm(heavier), std::domain_error);

  // not a maxmin tree
  TieredTree full{3, {1, 2, 3}, {{1, 2}, {2, 3}}};
  CHECK_THROWS_AS(tree_to_perm(full), std::domain_error);
}

TEST_CASE("cycle insertion") {
  std::vector<std::vector<int>> cycles = {{2, 3, 7}, {4, 1, 8}, {6, 9}, {5}};

  // new minimum after letter 2: erasing parentheses from
  // (69)(418)(5)(0372) gives 6941850372 in zero-based symbols
  Permutation after2 = cycle_insertion(cycles, 2);
  CHECK(after2 == parse_compact("6941850372"));
  Decomposition d = decompose(after2);
  REQUIRE(d.blocks.size() == 3);
  CHECK(d.blocks[0] == std::vector<int>{7, 10});
  CHECK(d.blocks[1] == std::vector<int>{5, 2, 9});
  CHECK(d.blocks[2] == std::vector<int>{6});
  CHECK(d.right == std::vector<int>{4, 8, 3, 11});
  CHECK(block_count(after2) == 4);

  // new minimum as its own cycle
  Permutation own = cycle_insertion(cycles, 10);
  CHECK(own == parse_compact("6941823750"));
  CHECK(block_count(own) == 4);

  // smallest case: sigma = (1), own cycle
  Permutation tiny = cycle_insertion({{1}}, 2);
  CHECK(tiny == Permutation({2, 1}));
  CHECK(block_count(tiny) == 1);

  CHECK_THROWS_AS(cycle_insertion(cycles, 0), std::domain_error);
  CHECK_THROWS_AS(cycle_insertion(cycles, 11), std::domain_error);
  CHECK_THROWS_AS(cycle_insertion({{1, 1}}, 1), std::domain_error);
}

TEST_CASE("cycle insertion covers S_3 exactly") {
  std::set<std::vector<int>> images;
  std::vector<std::vector<std::vector<int>>> sigmas = {{{1}, {2}}, {{1, 2}}};
  for (const auto& cycles : sigmas)
    for (int pos = 1; pos <= 3; ++pos) images.insert(cycle_insertion(cycles, pos).word());
  CHECK(images.size() == 6);
}

TEST_CASE("underlying word reads any maxmin tree") {
  // the weight-1 tree built from 132 by joining 1 to the larger maximum
  TieredTree heavier{4, {1, 1, 2, 2}, {{1, 4}, {2, 3}, {2, 4}}};
  std::vector<int> word = underlying_word(heavier);
  CHECK(word.back() == 4);
  word.pop_back();
  CHECK(word == std::vector<int>{1, 3, 2});
}
