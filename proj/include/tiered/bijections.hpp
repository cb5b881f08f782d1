#pragma once

// The structural bijections between permutations and weight-0 maxmin trees:
// the block decomposition of a permutation, the recursive tree construction
// and its inverse, and the cycle-insertion construction behind the Stirling
// numbers of the first kind.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tiered/permutation.hpp"
#include "tiered/trees.hpp"
#include "tiered/weight.hpp"

namespace tiered {

struct Decomposition {
  std::vector<std::vector<int>> blocks;  // pieces of the part left of the minimum
  std::vector<int> right;                // part right of the minimum, ends in n+1
};

namespace detail {

// Splits a sequence at successive maxima: the first piece runs up to the
// global maximum, the next up to the maximum of what remains, and so on.
// Every piece ends in its own maximum and piece maxima strictly decrease.
inline std::vector<std::vector<int>> split_at_successive_maxima(const std::vector<int>& seq) {
  std::vector<std::vector<int>> pieces;
  std::size_t start = 0;
  while (start < seq.size()) {
    std::size_t best = start;
    for (std::size_t i = start; i < seq.size(); ++i)
      if (seq[i] > seq[best]) best = i;
    pieces.emplace_back(seq.begin() + start, seq.begin() + best + 1);
    start = best + 1;
  }
  return pieces;
}

inline Decomposition decompose_sequence(const std::vector<int>& s) {
  auto min_it = std::min_element(s.begin(), s.end());
  Decomposition d;
  d.blocks = split_at_successive_maxima(std::vector<int>(s.begin(), min_it));
  d.right.assign(min_it + 1, s.end());
  return d;
}

// Local maxima of a tree component given as an edge list over `vertices`:
// the vertices all of whose neighbours are smaller (isolated vertices count).
inline std::vector<int> component_maxima(const std::vector<int>& vertices,
                                         const std::vector<Edge>& edges) {
  std::vector<int> maxima;
  for (int v : vertices) {
    bool is_max = true;
    for (const auto& [a, b] : edges) {
      if (a == v && b > v) is_max = false;
      if (b == v && a > v) is_max = false;
    }
    if (is_max) maxima.push_back(v);
  }
  return maxima;
}

// Recursive weight-0 construction on a sequence of distinct labels whose
// maximum sits in the last position.  Appends the edges of the resulting
// tree; the minimum of each level is joined to the smallest maximum of each
// component built below it.
inline void build_weight0_tree(const std::vector<int>& s, std::vector<Edge>& out) {
  if (s.size() <= 1) return;
  auto min_it = std::min_element(s.begin(), s.end());
  int v = *min_it;

  std::vector<std::vector<int>> pieces =
      split_at_successive_maxima(std::vector<int>(s.begin(), min_it));
  pieces.emplace_back(min_it + 1, s.end());

  for (const auto& piece : pieces) {
    std::size_t first_edge = out.size();
    build_weight0_tree(piece, out);
    std::vector<Edge> piece_edges(out.begin() + first_edge, out.end());
    std::vector<int> maxima = component_maxima(piece, piece_edges);
    int target = *std::min_element(maxima.begin(), maxima.end());
    out.emplace_back(std::min(v, target), std::max(v, target));
  }
}

// Reads the underlying permutation word back off a maxmin tree, weight 0 or
// not: components over the deleted minimum are ordered with the one holding
// the global maximum rightmost and the rest by decreasing maxima.
inline std::vector<int> underlying_word_rec(const std::vector<std::vector<int>>& adj,
                                            std::vector<int> vertices,
                                            std::vector<char>& in_set) {
  if (vertices.size() == 1) return vertices;
  std::sort(vertices.begin(), vertices.end());
  int v = vertices.front();
  int global_max = vertices.back();
  in_set[v] = 0;

  std::vector<std::vector<int>> comps;
  std::vector<char> seen(in_set.size(), 0);
  for (int start : adj[v]) {
    if (!in_set[start] || seen[start]) continue;
    std::vector<int> comp;
    std::vector<int> stack = {start};
    seen[start] = 1;
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
    comps.push_back(std::move(comp));
  }

  auto comp_max = [](const std::vector<int>& c) { return *std::max_element(c.begin(), c.end()); };
  std::stable_sort(comps.begin(), comps.end(),
                   [&](const auto& a, const auto& b) { return comp_max(a) > comp_max(b); });

  std::vector<int> word;
  std::vector<int> right;
  for (auto& comp : comps) {
    std::vector<int> piece = underlying_word_rec(adj, std::move(comp), in_set);
    if (piece.back() == global_max)
      right = std::move(piece);
    else
      word.insert(word.end(), piece.begin(), piece.end());
  }
  word.push_back(v);
  word.insert(word.end(), right.begin(), right.end());
  in_set[v] = 1;
  return word;
}

inline void require_maxmin(const TieredTree& t) {
  require_valid(t);
  for (int tier : t.tiers)
    if (tier != 1 && tier != 2)
      throw std::domain_error("expected a maxmin tree (tiers 1 and 2 only)");
}

}  // namespace detail

// Appends n+1 on the right, splits at the minimum, and splits the left part
// at successive maxima.  Pieces keep their original labels; callers flatten.
inline Decomposition decompose(const Permutation& pi) {
  std::vector<int> s = pi.word();
  s.push_back(pi.size() + 1);
  return detail::decompose_sequence(s);
}

// Number of blocks in the cycle-insertion sense: pieces of
// the left part plus the right part when it holds more than the appended
// maximum, the singleton minimum disregarded.
inline int block_count(const Permutation& pi) {
  Decomposition d = decompose(pi);
  return static_cast<int>(d.blocks.size()) + (d.right.size() > 1 ? 1 : 0);
}

// The weight-0 maxmin tree on n+1 vertices built from pi by always joining
// the minimum to the smallest available maximum.
inline TieredTree perm_to_tree(const Permutation& pi) {
  int n = pi.size();
  std::vector<int> s = pi.word();
  s.push_back(n + 1);

  TieredTree t;
  t.n = n + 1;
  detail::build_weight0_tree(s, t.edges);
  t.normalize();

  // a vertex is a maximum iff all its neighbours are smaller
  t.tiers.assign(t.n, 2);
  for (const auto& [u, v] : t.edges) t.tiers[u - 1] = 1;
  return t;
}

// Underlying permutation word of any maxmin tree (the appended maximum is
// the last symbol).  This is the construction skeleton shared by weight-0
// inversion and the weight oracle.
inline std::vector<int> underlying_word(const TieredTree& t) {
  detail::require_maxmin(t);
  auto adj = detail::adjacency(t.n, t.edges);
  std::vector<int> vertices(t.n);
  std::iota(vertices.begin(), vertices.end(), 1);
  std::vector<char> in_set(t.n + 1, 1);
  return detail::underlying_word_rec(adj, std::move(vertices), in_set);
}

// Inverse of perm_to_tree on weight-0 maxmin trees.
inline Permutation tree_to_perm(const TieredTree& t) {
  detail::require_maxmin(t);
  if (tree_weight(t) != 0)
    throw std::domain_error("tree_to_perm: tree has positive weight");
  std::vector<int> word = underlying_word(t);
  word.pop_back();  // the adjoined maximum n+1
  return Permutation(std::move(word));
}

// Builds a permutation of S_{m+1} from a permutation of S_m in disjoint
// cycle form by inserting a new minimum, per the Stirling-first-kind
// construction: pos in 1..m inserts the new minimum right after the letter
// pos inside its cycle, pos = m+1 gives it a cycle of its own.  The cycle
// holding the new minimum is written minimum-first and placed last; the
// others are written maximum-last and ordered by decreasing maxima.
inline Permutation cycle_insertion(const std::vector<std::vector<int>>& cycles, int pos) {
  int m = 0;
  for (const auto& c : cycles) m += static_cast<int>(c.size());
  std::vector<bool> seen(m + 1, false);
  for (const auto& c : cycles) {
    if (c.empty()) throw std::domain_error("cycle_insertion: empty cycle");
    for (int x : c) {
      if (x < 1 || x > m || seen[x])
        throw std::domain_error("cycle_insertion: cycles must partition {1..m}");
      seen[x] = true;
    }
  }
  if (pos < 1 || pos > m + 1) throw std::domain_error("cycle_insertion: insertion slot out of range");

  // work with 0 as the new minimum, then shift every letter up by one
  std::vector<int> zero_cycle;
  std::vector<std::vector<int>> others;
  for (const auto& c : cycles) {
    auto it = std::find(c.begin(), c.end(), pos);
    if (pos <= m && it != c.end()) {
      // 0 right after `pos`: as a cycle written with 0 first, the letters
      // after `pos` come first and `pos` closes the cycle
      zero_cycle.push_back(0);
      for (auto j = it + 1; j != c.end(); ++j) zero_cycle.push_back(*j);
      for (auto j = c.begin(); j != it + 1; ++j) zero_cycle.push_back(*j);
    } else {
      auto max_it = std::max_element(c.begin(), c.end());
      std::vector<int> rotated(max_it + 1, c.end());
      rotated.insert(rotated.end(), c.begin(), max_it + 1);
      others.push_back(std::move(rotated));
    }
  }
  if (pos == m + 1) zero_cycle = {0};

  std::sort(others.begin(), others.end(),
            [](const auto& a, const auto& b) { return a.back() > b.back(); });

  std::vector<int> word;
  word.reserve(m + 1);
  for (const auto& c : others) word.insert(word.end(), c.begin(), c.end());
  word.insert(word.end(), zero_cycle.begin(), zero_cycle.end());
  for (int& x : word) ++x;
  return Permutation(std::move(word));
}

}  // namespace tiered
