#pragma once

// The weight statistic on tiered trees, edge activities in the complete
// tiered graph, the Tutte polynomial by two independent routes, and the
// generating polynomials over tiered trees.
//
// "Least" in every activity test means minimal in ascending lexicographic
// order on endpoint pairs (u,v) with u < v.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "tiered/bigint.hpp"
#include "tiered/parallel.hpp"
#include "tiered/polynomial.hpp"
#include "tiered/trees.hpp"

namespace tiered {

namespace detail {

inline std::vector<std::vector<int>> adjacency(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Weight of the subtree induced on `vertices` (sorted ascending), per the
// delete-the-minimum recursion.
inline int weight_rec(const std::vector<std::vector<int>>& adj, const std::vector<int>& tiers,
                      const std::vector<int>& vertices, std::vector<char>& in_set) {
  if (vertices.size() <= 1) return 0;
  int v = vertices.front();
  in_set[v] = 0;

  int total = 0;
  std::vector<char> seen(in_set.size(), 0);
  for (int attach : adj[v]) {
    if (!in_set[attach] || seen[attach]) continue;
    // component of T - v containing `attach`
    std::vector<int> comp;
    std::vector<int> stack = {attach};
    seen[attach] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y : adj[x])
        if (in_set[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    // vertices of the component that could have been joined to v and come
    // earlier than the one actually used
    int w_i = 0;
    for (int u : comp)
      if (tiers[u - 1] > tiers[v - 1] && u < attach) ++w_i;
    total += w_i + weight_rec(adj, tiers, comp, in_set);
  }
  in_set[v] = 1;
  return total;
}

}  // namespace detail

inline int tree_weight(const TieredTree& t) {
  require_valid(t);
  auto adj = detail::adjacency(t.n, t.edges);
  std::vector<int> vertices(t.n);
  std::iota(vertices.begin(), vertices.end(), 1);
  std::vector<char> in_set(t.n + 1, 1);
  return detail::weight_rec(adj, t.tiers, vertices, in_set);
}

struct ActivityReport {
  struct EdgeFlag {
    Edge edge;
    bool in_tree;
    bool active;
  };
  int internal = 0;
  int external = 0;
  std::vector<EdgeFlag> witnesses;  // one per edge of K_t, in edge order
};

// Activities of the tree inside its own complete tiered graph.
inline ActivityReport external_activity(const TieredTree& t) {
  require_valid(t);
  CompleteTieredGraph k = complete_tiered_graph(t.n, t.tiers);
  auto adj = detail::adjacency(t.n, t.edges);

  ActivityReport report;
  for (const Edge& e : k.edges) {
    bool in_tree = std::binary_search(t.edges.begin(), t.edges.end(), e);
    bool active = false;
    if (in_tree) {
      // side of the cut containing e.first once e is removed
      std::vector<char> side(t.n + 1, 0);
      std::vector<int> stack = {e.first};
      side[e.first] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x]) {
          if ((x == e.first && y == e.second) || (x == e.second && y == e.first)) continue;
          if (!side[y]) {
            side[y] = 1;
            stack.push_back(y);
          }
        }
      }
      // e is internally active iff it is the first crossing edge of K_t in
      // lexicographic (= list) order
      for (const Edge& f : k.edges) {
        if (side[f.first] != side[f.second]) {
          active = f == e;
          break;
        }
      }
    } else {
      // unique tree path between the endpoints of e; e is externally active
      // iff it precedes every path edge lexicographically
      std::vector<int> parent(t.n + 1, 0);
      std::vector<int> stack = {e.first};
      parent[e.first] = e.first;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
          if (parent[y] == 0) {
            parent[y] = x;
            stack.push_back(y);
          }
      }
      active = true;
      for (int x = e.second; x != e.first; x = parent[x]) {
        Edge f{std::min(x, parent[x]), std::max(x, parent[x])};
        if (f < e) {
          active = false;
          break;
        }
      }
    }
    if (in_tree && active) ++report.internal;
    if (!in_tree && active) ++report.external;
    report.witnesses.push_back({e, in_tree, active});
  }
  return report;
}

// A plain edge-ordered graph for Tutte computations.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
};

enum class TutteMethod { activities, deletion_contraction };

namespace detail {

inline bool graph_connected(int n, const std::vector<Edge>& edges) {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [u, v] : edges)
    if (u != v) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack = {1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  return count == n;
}

inline BivarPoly tutte_by_activities(const Graph& g) {
  std::vector<Edge> edges = g.edges;
  std::sort(edges.begin(), edges.end());
  BivarPoly result;
  for_each_spanning_tree_indices(g.n, edges, [&](const std::vector<int>& idx) {
    // activities against the lexicographic edge order
    std::vector<Edge> tree_edges;
    tree_edges.reserve(idx.size());
    for (int i : idx) tree_edges.push_back(edges[i]);
    auto adj = adjacency(g.n, tree_edges);

    int internal = 0, external = 0;
    for (const Edge& e : edges) {
      bool in_tree = std::binary_search(tree_edges.begin(), tree_edges.end(), e);
      if (in_tree) {
        std::vector<char> side(g.n + 1, 0);
        std::vector<int> stack = {e.first};
        side[e.first] = 1;
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          for (int y : adj[x]) {
            if ((x == e.first && y == e.second) || (x == e.second && y == e.first)) continue;
            if (!side[y]) {
              side[y] = 1;
              stack.push_back(y);
            }
          }
        }
        for (const Edge& f : edges)
          if (side[f.first] != side[f.second]) {
            if (f == e) ++internal;
            break;
          }
      } else {
        std::vector<int> parent(g.n + 1, 0);
        std::vector<int> stack = {e.first};
        parent[e.first] = e.first;
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          for (int y : adj[x])
            if (parent[y] == 0) {
              parent[y] = x;
              stack.push_back(y);
            }
        }
        bool active = true;
        for (int x = e.second; x != e.first; x = parent[x]) {
          Edge f{std::min(x, parent[x]), std::max(x, parent[x])};
          if (f < e) {
            active = false;
            break;
          }
        }
        if (active) ++external;
      }
    }
    result.add_term(internal, external, 1);
  });
  return result;
}

// Classic deletion/contraction recursion on a multigraph; loops and parallel
// edges appear under contraction.
inline BivarPoly tutte_dc(int n, std::vector<Edge> edges) {
  if (edges.empty()) return BivarPoly::monomial(1, 0, 0);
  Edge e = edges.back();
  edges.pop_back();
  if (e.first == e.second) {
    BivarPoly rest = tutte_dc(n, std::move(edges));
    return rest * BivarPoly::monomial(1, 0, 1);  // loop: factor y
  }
  // bridge test: does the rest of e's component still connect its endpoints?
  {
    std::vector<std::vector<int>> adj(n + 1);
    for (const auto& [u, v] : edges)
      if (u != v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack = {e.first};
    seen[e.first] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    if (!seen[e.second]) {
      // bridge: contract it, factor x
      std::vector<Edge> contracted = edges;
      for (auto& [u, v] : contracted) {
        if (u == e.second) u = e.first;
        if (v == e.second) v = e.first;
      }
      return tutte_dc(n, std::move(contracted)) * BivarPoly::monomial(1, 1, 0);
    }
  }
  std::vector<Edge> contracted = edges;
  for (auto& [u, v] : contracted) {
    if (u == e.second) u = e.first;
    if (v == e.second) v = e.first;
  }
  return tutte_dc(n, std::move(edges)) + tutte_dc(n, std::move(contracted));
}

}  // namespace detail

// Tutte polynomial of a connected graph, t_{ij} x^i y^j over spanning trees
// of internal activity i and external activity j.  The deletion-contraction
// route is the independent oracle; both must agree.
inline BivarPoly tutte_polynomial(const Graph& g, TutteMethod method) {
  for (const auto& [u, v] : g.edges)
    if (u < 1 || v < 1 || u > g.n || v > g.n)
      throw std::domain_error("tutte_polynomial: edge endpoint out of range");
  if (!detail::graph_connected(g.n, g.edges))
    throw std::domain_error("tutte_polynomial: graph is disconnected");
  if (method == TutteMethod::activities) {
    for (const auto& [u, v] : g.edges)
      if (u == v) throw std::domain_error("tutte_polynomial: loops not supported by activities");
    return detail::tutte_by_activities(g);
  }
  return detail::tutte_dc(g.n, g.edges);
}

// P_p(q) = sum of q^{w(T)} over all tiered trees of tier type p.
inline IntPoly tier_poly(const TierType& p, int capacity = kDefaultTreeCapacity,
                         int threads = 1) {
  int n = p.vertex_count();
  if (n > capacity)
    throw capacity_error("tier_poly: n = " + std::to_string(n) + " exceeds capacity " +
                         std::to_string(capacity));

  std::vector<std::vector<int>> assignments;
  for_each_tier_assignment(p, [&](const std::vector<int>& t) { assignments.push_back(t); });

  return parallel_reduce<IntPoly>(
      assignments.size(),
      [&](std::size_t i) {
        IntPoly acc;
        for_each_spanning_tree(complete_tiered_graph(n, assignments[i]),
                               [&](const TieredTree& t) { acc.add_term(tree_weight(t), 1); });
        return acc;
      },
      [](IntPoly a, const IntPoly& b) {
        a += b;
        return a;
      },
      threads);
}

// The maxmin generating polynomial: sum over all 2-tier trees on n vertices
// of x^{#maxima} q^{weight}.
inline BivarPoly maxmin_polynomial(int n, int capacity = kDefaultTreeCapacity,
                                   int threads = 1) {
  if (n < 2) throw std::domain_error("maxmin_polynomial: n must be at least 2");
  if (n > capacity)
    throw capacity_error("maxmin_polynomial: n = " + std::to_string(n) + " exceeds capacity " +
                         std::to_string(capacity));
  BivarPoly result;
  for (int maxima = 1; maxima <= n - 1; ++maxima)
    result.add_x_multiple(maxima, tier_poly(TierType({n - maxima, maxima}), capacity, threads));
  return result;
}

}  // namespace tiered
