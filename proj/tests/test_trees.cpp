#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "tiered/trees.hpp"

using namespace tiered;

namespace {

std::vector<TieredTree> collect_tiered(const TierType& p) {
  std::vector<TieredTree> out;
  for_each_tiered_tree(p, [&](const TieredTree& t) { out.push_back(t); });
  return out;
}

}  // namespace

TEST_CASE("tiered tree validation") {
  TieredTree smallest{2, {1, 2}, {{1, 2}}};
  CHECK(!validate_tiered_tree(smallest));

  // Example: a fully tiered tree on 3 vertices, vertex 3 on top
  TieredTree full{3, {1, 2, 3}, {{1, 3}, {2, 3}}};
  CHECK(!validate_tiered_tree(full));

  // smaller label on the higher tier
  TieredTree flipped{2, {2, 1}, {{1, 2}}};
  auto why = validate_tiered_tree(flipped);
  REQUIRE(why.has_value());
  CHECK(why->constraint == "smaller endpoint of an edge must lie on a strictly lower tier");
  CHECK(why->edge == Edge{1, 2});

  TieredTree cyclic{3, {1, 2, 2}, {{1, 2}, {1, 3}, {2, 3}}};
  CHECK(validate_tiered_tree(cyclic).has_value());

  TieredTree single{1, {1}, {}};
  CHECK(!validate_tiered_tree(single));
}

TEST_CASE("complete tiered graph construction") {
  // bottom {1,2}, top {3,4}: a 4-cycle
  CompleteTieredGraph g = complete_tiered_graph(4, {1, 1, 2, 2});
  CHECK(g.edges == std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});

  // bottom {1,4}, top {2,3}: vertex 4 is isolated
  CompleteTieredGraph h = complete_tiered_graph(4, {1, 2, 2, 1});
  CHECK(h.edges == std::vector<Edge>{{1, 2}, {1, 3}});

  CHECK(complete_tiered_graph(1, {1}).edges.empty());
}

TEST_CASE("spanning tree enumeration") {
  CompleteTieredGraph cycle = complete_tiered_graph(4, {1, 1, 2, 2});
  std::vector<TieredTree> trees;
  for_each_spanning_tree(cycle, [&](const TieredTree& t) { trees.push_back(t); });
  REQUIRE(trees.size() == 4);
  for (const auto& t : trees) CHECK(!validate_tiered_tree(t));
  // lexicographic order on sorted edge lists
  CHECK(trees[0].edges == std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}});
  CHECK(trees[3].edges == std::vector<Edge>{{1, 4}, {2, 3}, {2, 4}});
  for (std::size_t i = 0; i + 1 < trees.size(); ++i) CHECK(trees[i].edges < trees[i + 1].edges);

  CompleteTieredGraph disconnected = complete_tiered_graph(4, {1, 2, 2, 1});
  int count = 0;
  for_each_spanning_tree(disconnected, [&](const TieredTree&) { ++count; });
  CHECK(count == 0);

  CompleteTieredGraph pair = complete_tiered_graph(2, {1, 2});
  count = 0;
  for_each_spanning_tree(pair, [&](const TieredTree&) { ++count; });
  CHECK(count == 1);
}

TEST_CASE("tiered tree enumeration by tier type") {
  CHECK(collect_tiered(TierType({1, 2})).size() == 1);
  CHECK(collect_tiered(TierType({2, 1})).size() == 1);
  CHECK(collect_tiered(TierType({2, 2})).size() == 5);
  CHECK(collect_tiered(TierType({1, 1, 1})).size() == 5);

  for (const auto& t : collect_tiered(TierType({2, 2}))) CHECK(!validate_tiered_tree(t));

  // the stream is deterministic
  auto first = collect_tiered(TierType({2, 2}));
  auto second = collect_tiered(TierType({2, 2}));
  CHECK(first == second);

  CHECK_THROWS_AS(TierType(std::vector<int>{3}), std::domain_error);
  CHECK_THROWS_AS(TierType(std::vector<int>{1, 0}), std::domain_error);
  CHECK_THROWS_AS(count_tiered_trees(TierType({4, 4})), capacity_error);
}

TEST_CASE("labeled tree enumeration via Pruefer sequences") {
  CHECK(prufer_to_tree(4, {2, 2}) == std::vector<Edge>{{1, 2}, {2, 3}, {2, 4}});

  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<Edge>> trees;
    for_each_labeled_tree(n, [&](const std::vector<Edge>& e) { trees.insert(e); });
    Int expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= n;
    CHECK(Int(trees.size()) == expected);
  }
}

TEST_CASE("brute-force pair counting") {
  CHECK(count_brute(3, 3, CountMode::all) == 11);
  CHECK(count_brute(4, 2, CountMode::all) == 7);
  for (int n = 2; n <= 6; ++n) CHECK(count_brute(n, 1, CountMode::all) == 0);
  CHECK(count_brute(1, 4, CountMode::all) == 0);

  CHECK(count_brute(3, 3, CountMode::proper) == 5);
  CHECK(count_brute(4, 3, CountMode::proper) == 51);

  CHECK_THROWS_AS(count_brute(8, 2, CountMode::all), capacity_error);

  // totals over compositions agree with the surjective brute count
  for (int n = 3; n <= 5; ++n)
    for (int m = 2; m <= n; ++m) {
      Int total = 0;
      for_each_composition(n, m, 1, [&](const std::vector<int>& parts) {
        total += count_tiered_trees(TierType(parts));
      });
      CHECK(total == count_brute(n, m, CountMode::proper));
    }
}

TEST_CASE("tier counts are invariant under part reordering") {
  CHECK(count_tiered_trees(TierType({1, 2, 2})) == count_tiered_trees(TierType({2, 1, 2})));
  CHECK(count_tiered_trees(TierType({1, 2, 2})) == count_tiered_trees(TierType({2, 2, 1})));
  CHECK(count_tiered_trees(TierType({1, 3})) == count_tiered_trees(TierType({3, 1})));
}
