#pragma once

// Complete nonambiguous trees: binary trees recoverable from grid coordinates
// alone, their exhaustive enumeration, and the bijection with weight-0 fully
// tiered trees.
//
// Grid convention: a point is (x, y) with x the column growing rightward and
// y the row growing downward, root at (1,1).  The bijection numbers rows
// from the bottom, so a point in row y of an N x N grid sits at level N+1-y.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tiered/bigint.hpp"
#include "tiered/numbers.hpp"
#include "tiered/series.hpp"
#include "tiered/trees.hpp"
#include "tiered/weight.hpp"

namespace tiered {

inline constexpr int kDefaultCnatCapacity = 5;

struct Cnat {
  std::vector<std::pair<int, int>> points;  // (column, row), sorted ascending

  int internal_count() const { return (static_cast<int>(points.size()) - 1) / 2; }
  void normalize() { std::sort(points.begin(), points.end()); }
  bool operator==(const Cnat& o) const { return points == o.points; }
  bool operator<(const Cnat& o) const { return points < o.points; }
};

namespace detail {

// Parent index of point i, or -1 for a point with nothing above it in its
// column and nothing left of it in its row, or -2 when both directions are
// occupied (the placement is ambiguous).  The parent is the nearest point in
// the one available direction.
inline int cnat_parent(const std::vector<std::pair<int, int>>& pts, std::size_t i) {
  int above = -1, left = -1;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j == i) continue;
    if (pts[j].first == pts[i].first && pts[j].second < pts[i].second)
      if (above < 0 || pts[j].second > pts[above].second) above = static_cast<int>(j);
    if (pts[j].second == pts[i].second && pts[j].first < pts[i].first)
      if (left < 0 || pts[j].first > pts[left].first) left = static_cast<int>(j);
  }
  if (above >= 0 && left >= 0) return -2;
  return above >= 0 ? above : left;
}

}  // namespace detail

// Checks the defining conditions: root present; every non-root point has a
// point above it in its column or left of it in its row but never both (the
// nearest one is its parent); no empty line; zero or two children everywhere.
inline std::optional<std::string> validate_cnat(const Cnat& a) {
  const auto& pts = a.points;
  if (pts.empty()) return "point set is empty";
  for (const auto& [x, y] : pts)
    if (x < 1 || y < 1) return "coordinates must be positive";
  if (!std::is_sorted(pts.begin(), pts.end())) return "points must be sorted";
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) return "duplicate point";
  if (pts.front() != std::make_pair(1, 1)) return "root (1,1) is missing";

  int max_x = 0, max_y = 0;
  for (const auto& [x, y] : pts) {
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
  std::vector<char> col_used(max_x + 1, 0), row_used(max_y + 1, 0);
  for (const auto& [x, y] : pts) col_used[x] = row_used[y] = 1;
  for (int x = 1; x <= max_x; ++x)
    if (!col_used[x]) return "empty column " + std::to_string(x) + " between used columns";
  for (int y = 1; y <= max_y; ++y)
    if (!row_used[y]) return "empty row " + std::to_string(y) + " between used rows";

  std::vector<int> children(pts.size(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    int parent = detail::cnat_parent(pts, i);
    auto where = [&] {
      return "(" + std::to_string(pts[i].first) + "," + std::to_string(pts[i].second) + ")";
    };
    if (i == 0) continue;  // (1,1) never has a point above or left
    if (parent == -1) return "point " + where() + " has no parent";
    if (parent == -2)
      return "point " + where() + " has points both above it and to its left";
    ++children[parent];
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (children[i] == 1)
      return "point (" + std::to_string(pts[i].first) + "," + std::to_string(pts[i].second) +
             ") has exactly one child";
  return std::nullopt;
}

// Enumerates every complete nonambiguous tree with k internal points, column
// by column inside the (k+1)x(k+1) grid, with the direction-exclusive parent
// rule checked as points are placed.  Deterministic depth-first order.
inline void for_each_cnat(int k, const std::function<void(const Cnat&)>& emit,
                          int capacity = kDefaultCnatCapacity) {
  if (k < 0) throw std::domain_error("for_each_cnat: k must be nonnegative");
  if (k > capacity)
    throw capacity_error("for_each_cnat: k = " + std::to_string(k) + " exceeds capacity " +
                         std::to_string(capacity));
  if (k == 0) {
    emit(Cnat{{{1, 1}}});
    return;
  }

  int grid = k + 1;
  int total = 2 * k + 1;
  std::vector<std::pair<int, int>> pts;
  std::vector<int> children;                     // parallel to pts
  std::vector<int> row_count(grid + 1, 0);       // points so far per row
  std::vector<int> row_rightmost(grid + 1, -1);  // index of the latest point per row

  // Placement validity for (x,y) given whether this column already holds a
  // point above.  A later point can only appear below in this column or to
  // the right in this row, so the exclusive-direction test is final.
  // Returns the parent index, -1 for the root, -2 for a violation.
  auto classify = [&](int x, int y, bool has_above) -> int {
    bool has_left = row_count[y] > 0;
    if (x == 1 && y == 1 && !has_above) return -1;  // the root
    if (has_left == has_above) return -2;
    return has_above ? static_cast<int>(pts.size()) - 1 : row_rightmost[y];
  };

  std::vector<int> saved_rightmost;  // per placement, for backtracking

  auto place = [&](int x, int y, int parent) {
    pts.emplace_back(x, y);
    children.push_back(0);
    if (parent >= 0) ++children[parent];
    ++row_count[y];
    saved_rightmost.push_back(row_rightmost[y]);
    row_rightmost[y] = static_cast<int>(pts.size()) - 1;
  };

  auto unplace = [&](int parent) {
    auto [x, y] = pts.back();
    row_rightmost[y] = saved_rightmost.back();
    saved_rightmost.pop_back();
    --row_count[y];
    if (parent >= 0) --children[parent];
    pts.pop_back();
    children.pop_back();
  };

  std::function<void(int)> next_column;

  // Extends column x with points at rows >= y_min; at least one point per
  // column before moving right.
  std::function<void(int, int, int)> extend = [&](int x, int y_min, int placed_here) {
    if (placed_here >= 1) {
      int have = static_cast<int>(pts.size());
      int cols_after = grid - x;
      if (have + cols_after <= total && have + cols_after * grid >= total) next_column(x + 1);
    }
    for (int y = y_min; y <= grid; ++y) {
      if (static_cast<int>(pts.size()) >= total) break;
      int parent = classify(x, y, placed_here > 0);
      if (parent == -2) continue;
      place(x, y, parent);
      extend(x, y + 1, placed_here + 1);
      unplace(parent);
    }
  };

  next_column = [&](int x) {
    if (x > grid) {
      if (static_cast<int>(pts.size()) != total) return;
      for (int y = 1; y <= grid; ++y)
        if (row_count[y] == 0) return;
      for (int c : children)
        if (c == 1) return;
      Cnat result{pts};
      emit(result);
      return;
    }
    extend(x, 1, 0);
  };
  next_column(1);
}

inline Int count_cnats(int k, int capacity = kDefaultCnatCapacity) {
  Int count = 0;
  for_each_cnat(k, [&](const Cnat&) { ++count; }, capacity);
  return count;
}

namespace detail {

struct CnatStructure {
  std::vector<int> parent;                 // index into points, -1 for root
  std::vector<std::vector<int>> children;  // indices
  std::vector<int> leaf_row_of_column;     // 1-based by column
};

inline CnatStructure analyze_cnat(const Cnat& a) {
  if (auto why = validate_cnat(a))
    throw std::domain_error("invalid complete nonambiguous tree: " + *why);
  const auto& pts = a.points;
  CnatStructure s;
  s.parent.assign(pts.size(), -1);
  s.children.assign(pts.size(), {});
  for (std::size_t i = 1; i < pts.size(); ++i) {
    int parent = cnat_parent(pts, i);
    s.parent[i] = parent;
    s.children[parent].push_back(static_cast<int>(i));
  }
  int grid = a.internal_count() + 1;
  s.leaf_row_of_column.assign(grid + 1, 0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (s.children[i].empty()) {
      if (s.leaf_row_of_column[pts[i].first] != 0)
        throw std::domain_error("invalid complete nonambiguous tree: two leaves share a column");
      s.leaf_row_of_column[pts[i].first] = pts[i].second;
    }
  for (int x = 1; x <= grid; ++x)
    if (s.leaf_row_of_column[x] == 0)
      throw std::domain_error("invalid complete nonambiguous tree: column without a leaf");
  return s;
}

}  // namespace detail

// The weight-0 fully tiered tree on k+1 vertices determined by a complete
// nonambiguous tree with k internal points.  Vertex j is the column index j;
// its level is the bottom-numbered row of the leaf in column j.
inline TieredTree cnat_to_tiered(const Cnat& a) {
  detail::CnatStructure s = detail::analyze_cnat(a);
  const auto& pts = a.points;
  int grid = a.internal_count() + 1;

  TieredTree t;
  t.n = grid;
  t.tiers.assign(grid, 0);
  for (int x = 1; x <= grid; ++x) t.tiers[x - 1] = grid + 1 - s.leaf_row_of_column[x];

  // recursive edge construction: erase the leading column of a component,
  // recurse on the hanging subtrees, then join the erased column's vertex to
  // the smallest admissible vertex of each subtree
  std::function<void(const std::vector<int>&)> process = [&](const std::vector<int>& comp) {
    if (comp.size() <= 1) return;
    int c0 = pts[comp.front()].first;
    for (int i : comp) c0 = std::min(c0, pts[i].first);

    std::vector<char> in_comp(pts.size(), 0);
    for (int i : comp) in_comp[i] = 1;

    for (int i : comp) {
      if (pts[i].first == c0) continue;
      int par = s.parent[i];
      if (par < 0 || pts[par].first != c0) continue;
      // subtree hanging off the erased column
      std::vector<int> sub;
      std::vector<int> stack = {i};
      while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        sub.push_back(p);
        for (int c : s.children[p])
          if (in_comp[c]) stack.push_back(c);
      }
      std::sort(sub.begin(), sub.end());
      process(sub);

      int attach = 0;
      for (int p : sub) {
        int col = pts[p].first;
        if (t.tiers[col - 1] > t.tiers[c0 - 1] && (attach == 0 || col < attach)) attach = col;
      }
      if (attach == 0)
        throw std::logic_error("cnat_to_tiered: component with no vertex above the join level");
      t.edges.emplace_back(std::min(c0, attach), std::max(c0, attach));
    }
  };

  std::vector<int> all(pts.size());
  std::iota(all.begin(), all.end(), 0);
  process(all);
  t.normalize();
  return t;
}

// Inverse of cnat_to_tiered on weight-0 fully tiered trees.
inline Cnat tiered_to_cnat(const TieredTree& t) {
  require_valid(t);
  std::vector<char> tier_seen(t.n + 1, 0);
  for (int tier : t.tiers) {
    if (tier > t.n || tier_seen[tier])
      throw std::domain_error("tiered_to_cnat: tree is not fully tiered");
    tier_seen[tier] = 1;
  }
  if (tree_weight(t) != 0) throw std::domain_error("tiered_to_cnat: tree has positive weight");

  int grid = t.n;
  auto row_of_tier = [&](int tier) { return grid + 1 - tier; };
  auto adj = detail::adjacency(t.n, t.edges);

  Cnat out;
  std::function<void(std::vector<int>)> build = [&](std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    int v = vertices.front();
    out.points.emplace_back(v, row_of_tier(t.tier(v)));  // the leaf of column v
    if (vertices.size() == 1) return;

    std::vector<char> in_set(t.n + 1, 0);
    for (int x : vertices) in_set[x] = 1;
    in_set[v] = 0;
    std::vector<char> seen(t.n + 1, 0);
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
      // one internal point of column v per hanging component, at the
      // component's top level
      int top_tier = 0;
      for (int x : comp) top_tier = std::max(top_tier, t.tier(x));
      out.points.emplace_back(v, row_of_tier(top_tier));
      build(std::move(comp));
    }
  };

  std::vector<int> all(t.n);
  std::iota(all.begin(), all.end(), 1);
  build(std::move(all));
  out.normalize();
  return out;
}

// Coefficients of -log(sum_k (-1)^k x^k / (k!)^2) through x^order.
inline std::vector<Rat> bessel_log_coefficients(int order) {
  RatSeries j(order);
  for (int k = 0; k <= order; ++k) {
    Rat c = Rat(1) / Rat(factorial(k) * factorial(k));
    j.set(k, k % 2 == 0 ? c : -c);
  }
  RatSeries log_j = -j.log();
  std::vector<Rat> out(order + 1);
  for (int k = 0; k <= order; ++k) out[k] = log_j.coeff(k);
  return out;
}

// The Bessel identity check: coefficient of x^k must equal b_{k-1}/(k!)^2
// with b counted by direct enumeration.  Returns the coefficients.
inline std::vector<Rat> bessel_check(int order, int capacity = kDefaultCnatCapacity + 1) {
  if (order > capacity)
    throw capacity_error("bessel_check: order " + std::to_string(order) +
                         " exceeds capacity " + std::to_string(capacity));
  std::vector<Rat> coeffs = bessel_log_coefficients(order);
  for (int k = 1; k <= order; ++k) {
    Rat expected = Rat(count_cnats(k - 1)) / Rat(factorial(k) * factorial(k));
    if (coeffs[k] != expected)
      throw verification_error("bessel_check: coefficient of x^" + std::to_string(k) +
                               " is " + coeffs[k].str() + ", expected " + expected.str());
  }
  return coeffs;
}

}  // namespace tiered
