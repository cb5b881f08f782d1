#pragma once

// Standard combinatorial number sequences and small enumeration streams:
// factorials, binomials, Stirling numbers of both kinds, Eulerian numbers,
// Bell numbers, and integer partitions in reverse-lexicographic order.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "tiered/bigint.hpp"

namespace tiered {

namespace detail {
inline const Int& row_at(const std::vector<Int>& row, int j) {
  static const Int zero = 0;
  return (j >= 0 && j < static_cast<int>(row.size())) ? row[j] : zero;
}
}  // namespace detail

inline Int factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Zero outside 0 <= k <= n, as usual.
inline Int binomial(int n, int k) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

inline Int multinomial(int n, const std::vector<int>& parts) {
  long long sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::domain_error("multinomial: negative part");
    sum += p;
  }
  if (sum != n) throw std::domain_error("multinomial: parts do not sum to n");
  Int r = factorial(n);
  for (int p : parts) r = exact_div(r, factorial(p));
  return r;
}

// Signless Stirling number of the first kind: permutations of S_n with k
// cycles.  c(n,k) = c(n-1,k-1) + (n-1)c(n-1,k).
inline Int stirling_first_unsigned(int n, int k) {
  if (n < 0 || k < 0) throw std::domain_error("stirling_first_unsigned: negative argument");
  if (k > n) return 0;
  std::vector<Int> row = {1};  // c(0,0)
  for (int i = 1; i <= n; ++i) {
    std::vector<Int> next(i + 1, 0);
    for (int j = 1; j <= i; ++j)
      next[j] = detail::row_at(row, j - 1) + Int(i - 1) * detail::row_at(row, j);
    row = std::move(next);
  }
  return row[k];
}

// Stirling number of the second kind: set partitions of [n] into k blocks.
inline Int stirling_second(int n, int k) {
  if (n < 0 || k < 0) throw std::domain_error("stirling_second: negative argument");
  if (k > n) return 0;
  std::vector<Int> row = {1};  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    std::vector<Int> next(i + 1, 0);
    for (int j = 1; j <= i; ++j)
      next[j] = detail::row_at(row, j - 1) + Int(j) * detail::row_at(row, j);
    row = std::move(next);
  }
  return row[k];
}

// Eulerian number A(k,n): permutations of S_n with exactly k descents.
inline Int eulerian(int descents, int n) {
  if (n < 1) throw std::domain_error("eulerian: n must be positive");
  if (descents < 0) throw std::domain_error("eulerian: negative descent count");
  if (descents >= n) return 0;
  std::vector<Int> row = {1};  // A(*,1)
  for (int i = 2; i <= n; ++i) {
    std::vector<Int> next(i, 0);
    for (int j = 0; j < i; ++j)
      next[j] = Int(j + 1) * detail::row_at(row, j) + Int(i - j) * detail::row_at(row, j - 1);
    row = std::move(next);
  }
  return row[descents];
}

// Bell numbers via the Bell triangle, independent of stirling_second.
inline Int bell(int n) {
  if (n < 0) throw std::domain_error("bell: negative argument");
  std::vector<Int> row = {1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Int> next(i + 1);
    next[0] = row.back();
    for (int j = 1; j <= i; ++j) next[j] = next[j - 1] + row[j - 1];
    row = std::move(next);
  }
  return row[0];
}

// Number of integer partitions of n (coin-change recurrence).
inline Int partition_count(int n) {
  if (n < 0) throw std::domain_error("partition_count: negative argument");
  std::vector<Int> ways(n + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int v = part; v <= n; ++v) ways[v] += ways[v - part];
  return ways[n];
}

// Advance a weakly decreasing partition to its reverse-lexicographic
// successor.  Returns false when p was the last partition (all ones).
inline bool next_partition(std::vector<int>& p) {
  int i = static_cast<int>(p.size()) - 1;
  int rem = 0;
  while (i >= 0 && p[i] == 1) {
    ++rem;
    --i;
  }
  if (i < 0) return false;
  p[i] -= 1;
  rem += 1;
  p.resize(i + 1);
  while (rem > 0) {
    int v = std::min(p.back(), rem);
    p.push_back(v);
    rem -= v;
  }
  return true;
}

// Calls fn once per partition of n, parts weakly decreasing, in
// reverse-lexicographic order: [n], [n-1,1], ..., [1,...,1].
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n < 1) throw std::domain_error("for_each_partition: n must be positive");
  std::vector<int> p = {n};
  do {
    fn(p);
  } while (next_partition(p));
}

inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  for_each_partition(n, [&](const std::vector<int>& p) { out.push_back(p); });
  return out;
}

// Compositions of n into m parts, each >= min_part, in lexicographic order.
inline void for_each_composition(int n, int m, int min_part,
                                 const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts(m);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == m - 1) {
      if (left >= min_part) {
        parts[idx] = left;
        fn(parts);
      }
      return;
    }
    for (int v = min_part; left - v >= min_part * (m - 1 - idx); ++v) {
      parts[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  if (m >= 1 && n >= min_part * m) rec(0, n);
}

}  // namespace tiered
