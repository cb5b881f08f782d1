#pragma once

// Labeled trees, tiering functions, tiered trees, and the complete tiered
// graph, with deterministic exhaustive enumeration at desk scale.
//
// Conventions fixed here and relied on everywhere else:
//   - vertices are labeled 1..n, tiers 1..m with tier 1 at the bottom;
//   - a valid edge {u,v} with u < v has tier(u) < tier(v);
//   - edge lists are kept sorted ascending lexicographically on (u,v).

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tiered/bigint.hpp"
#include "tiered/numbers.hpp"

namespace tiered {

inline constexpr int kDefaultTreeCapacity = 7;

using Edge = std::pair<int, int>;

// Composition recording how many vertices occupy each tier, bottom first.
struct TierType {
  std::vector<int> parts;

  TierType() = default;
  explicit TierType(std::vector<int> p) : parts(std::move(p)) {
    if (parts.size() < 2) throw std::domain_error("TierType: needs at least 2 tiers");
    for (int x : parts)
      if (x < 1) throw std::domain_error("TierType: every part must be >= 1");
  }

  int vertex_count() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int tier_count() const { return static_cast<int>(parts.size()); }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }
};

struct TieredTree {
  int n = 0;
  std::vector<int> tiers;       // tiers[v-1] = tier of vertex v
  std::vector<Edge> edges;      // u < v, sorted ascending

  int tier(int v) const { return tiers[v - 1]; }

  void normalize() {
    for (auto& [u, v] : edges)
      if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
  }

  bool operator==(const TieredTree& o) const {
    return n == o.n && tiers == o.tiers && edges == o.edges;
  }
  bool operator<(const TieredTree& o) const {
    return std::tie(n, tiers, edges) < std::tie(o.n, o.tiers, o.edges);
  }
};

// All admissible edges for a tiering: pairs u < v with tier(u) < tier(v),
// listed in ascending lexicographic order.  May be disconnected.
struct CompleteTieredGraph {
  int n = 0;
  std::vector<int> tiers;
  std::vector<Edge> edges;
};

inline CompleteTieredGraph complete_tiered_graph(int n, const std::vector<int>& tiers) {
  if (n < 0 || static_cast<int>(tiers.size()) != n)
    throw std::domain_error("complete_tiered_graph: tiering must assign all of 1..n");
  CompleteTieredGraph g;
  g.n = n;
  g.tiers = tiers;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (tiers[u - 1] < tiers[v - 1]) g.edges.emplace_back(u, v);
  return g;
}

struct TreeViolation {
  std::string constraint;
  std::optional<Edge> edge;
};

// Returns std::nullopt when every invariant holds, otherwise the first
// violated constraint and a witness edge where one exists.
inline std::optional<TreeViolation> validate_tiered_tree(const TieredTree& t) {
  if (t.n < 1) return TreeViolation{"vertex count must be positive", std::nullopt};
  if (static_cast<int>(t.tiers.size()) != t.n)
    return TreeViolation{"tiering must assign a tier to every vertex", std::nullopt};
  for (int tier : t.tiers)
    if (tier < 1) return TreeViolation{"tiers must be positive", std::nullopt};
  if (static_cast<int>(t.edges.size()) != t.n - 1)
    return TreeViolation{"a tree on n vertices has exactly n-1 edges", std::nullopt};

  std::vector<int> parent(t.n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : t.edges) {
    auto [u, v] = e;
    if (u < 1 || v < 1 || u > t.n || v > t.n || u == v)
      return TreeViolation{"edge endpoints must be distinct vertices in 1..n", e};
    int ru = find(u), rv = find(v);
    if (ru == rv) return TreeViolation{"edges contain a cycle", e};
    parent[ru] = rv;
  }
  // n-1 edges and no cycle means connected.
  for (const auto& e : t.edges) {
    int u = std::min(e.first, e.second), v = std::max(e.first, e.second);
    if (t.tiers[u - 1] >= t.tiers[v - 1])
      return TreeViolation{"smaller endpoint of an edge must lie on a strictly lower tier",
                           Edge{u, v}};
  }
  return std::nullopt;
}

inline void require_valid(const TieredTree& t) {
  if (auto why = validate_tiered_tree(t))
    throw std::domain_error("invalid tiered tree: " + why->constraint);
}

// Enumerates spanning trees of an edge-ordered graph as strictly increasing
// index tuples into `edges`, i.e. in lexicographic order on sorted edge
// lists.  Emits nothing when the graph is disconnected.
inline void for_each_spanning_tree_indices(
    int n, const std::vector<Edge>& edges,
    const std::function<void(const std::vector<int>&)>& emit) {
  if (n == 1) {
    emit({});
    return;
  }
  int need = n - 1;
  int e_count = static_cast<int>(edges.size());
  if (e_count < need) return;

  std::vector<int> chosen;
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(chosen.size()) == need) {
      emit(chosen);
      return;
    }
    int remaining_needed = need - static_cast<int>(chosen.size());
    for (int i = start; e_count - i >= remaining_needed; ++i) {
      int ru = find(edges[i].first), rv = find(edges[i].second);
      if (ru == rv) continue;
      std::vector<int> saved = parent;  // small n: restore by copy
      parent[ru] = rv;
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
      parent = std::move(saved);
    }
  };
  rec(0);
}

// Spanning trees of a complete tiered graph, as tiered trees, in
// lexicographic order on their sorted edge lists.
inline void for_each_spanning_tree(const CompleteTieredGraph& g,
                                   const std::function<void(const TieredTree&)>& emit) {
  for_each_spanning_tree_indices(g.n, g.edges, [&](const std::vector<int>& idx) {
    TieredTree t;
    t.n = g.n;
    t.tiers = g.tiers;
    t.edges.reserve(idx.size());
    for (int i : idx) t.edges.push_back(g.edges[i]);
    emit(t);
  });
}

// All tier assignments of the given type, i.e. maps t: {1..n} -> {1..m} with
// |t^{-1}(k)| = parts[k-1], in lexicographic order on (t(1),...,t(n)).
inline void for_each_tier_assignment(const TierType& p,
                                     const std::function<void(const std::vector<int>&)>& fn) {
  int n = p.vertex_count();
  int m = p.tier_count();
  std::vector<int> left = p.parts;
  std::vector<int> tiers(n);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      fn(tiers);
      return;
    }
    for (int k = 0; k < m; ++k) {
      if (left[k] == 0) continue;
      --left[k];
      tiers[v] = k + 1;
      rec(v + 1);
      ++left[k];
    }
  };
  rec(0);
}

// The full stream of tiered trees of tier type p: outer loop over tier
// assignments, inner loop over spanning trees of the complete tiered graph.
inline void for_each_tiered_tree(const TierType& p,
                                 const std::function<void(const TieredTree&)>& emit,
                                 int capacity = kDefaultTreeCapacity) {
  int n = p.vertex_count();
  if (n > capacity)
    throw capacity_error("for_each_tiered_tree: n = " + std::to_string(n) +
                         " exceeds capacity " + std::to_string(capacity));
  for_each_tier_assignment(p, [&](const std::vector<int>& tiers) {
    for_each_spanning_tree(complete_tiered_graph(n, tiers), emit);
  });
}

inline Int count_tiered_trees(const TierType& p, int capacity = kDefaultTreeCapacity) {
  Int count = 0;
  for_each_tiered_tree(p, [&](const TieredTree&) { ++count; }, capacity);
  return count;
}

// Decodes a Pruefer sequence (values in 1..n, length n-2) to a tree edge list.
inline std::vector<Edge> prufer_to_tree(int n, const std::vector<int>& seq) {
  if (n < 2) throw std::domain_error("prufer_to_tree: n must be at least 2");
  if (static_cast<int>(seq.size()) != n - 2)
    throw std::domain_error("prufer_to_tree: sequence must have length n-2");
  std::vector<int> degree(n + 1, 1);
  for (int v : seq) {
    if (v < 1 || v > n) throw std::domain_error("prufer_to_tree: value out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int v : seq) {
    int leaf = 0;
    for (int u = 1; u <= n; ++u)
      if (degree[u] == 1) {
        leaf = u;
        break;
      }
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    degree[leaf] = 0;
    --degree[v];
  }
  int a = 0, b = 0;
  for (int u = 1; u <= n; ++u)
    if (degree[u] == 1) (a == 0 ? a : b) = u;
  edges.emplace_back(a, b);
  std::sort(edges.begin(), edges.end());
  return edges;
}

// All n^(n-2) labeled trees on {1..n}, by Pruefer sequence in odometer order.
inline void for_each_labeled_tree(int n,
                                  const std::function<void(const std::vector<Edge>&)>& fn) {
  if (n == 1) {
    fn({});
    return;
  }
  if (n == 2) {
    fn({{1, 2}});
    return;
  }
  std::vector<int> seq(n - 2, 1);
  while (true) {
    fn(prufer_to_tree(n, seq));
    int i = n - 3;
    while (i >= 0 && seq[i] == n) seq[i--] = 1;
    if (i < 0) break;
    ++seq[i];
  }
}

enum class CountMode { all, proper };

// Independent oracle for T_{n,m} and P_{n,m}: every labeled tree via Pruefer
// sequences crossed with every tiering function with at least two tiers in
// its image.  Deliberately unclever.
inline Int count_brute(int n, int m, CountMode mode, int capacity = kDefaultTreeCapacity) {
  if (n < 1 || m < 1) throw std::domain_error("count_brute: n and m must be positive");
  if (n > capacity)
    throw capacity_error("count_brute: n = " + std::to_string(n) + " exceeds capacity " +
                         std::to_string(capacity));
  if (m == 1) return 0;  // a one-tier image is never considered
  if (n == 1) return 0;
  Int count = 0;
  for_each_labeled_tree(n, [&](const std::vector<Edge>& edges) {
    std::vector<int> t(n, 1);
    while (true) {
      bool ok = true;
      for (const auto& [u, v] : edges) {
        if (t[u - 1] >= t[v - 1]) {
          ok = false;
          break;
        }
      }
      if (ok && mode == CountMode::proper) {
        unsigned mask = 0;
        for (int x : t) mask |= 1u << (x - 1);
        ok = mask == (1u << m) - 1;
      }
      if (ok) ++count;
      int i = n - 1;
      while (i >= 0 && t[i] == m) t[i--] = 1;
      if (i < 0) break;
      ++t[i];
    }
  });
  return count;
}

}  // namespace tiered
