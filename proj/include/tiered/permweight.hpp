#pragma once

// The weight of a permutation (largest weight of a maxmin tree constructible
// from it), the q-Eulerian polynomials E_n(x,q) it defines, Stanley's
// inversion analogue, the set-partition bijection for weight-0 permutations,
// and the extremal/stabilization observations.

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tiered/bigint.hpp"
#include "tiered/bijections.hpp"
#include "tiered/numbers.hpp"
#include "tiered/parallel.hpp"
#include "tiered/permutation.hpp"
#include "tiered/polynomial.hpp"

namespace tiered {

inline constexpr int kDefaultPermCapacity = 9;

namespace detail {

// Weight of a sequence of distinct labels whose maximum is last:
// w = w(right) + d(right) + sum over left pieces of (w(piece) + d(piece)).
// Values depend only on the pattern, so no flattening is needed.
inline int sequence_weight(const std::vector<int>& s) {
  if (s.size() <= 1) return 0;
  auto min_it = std::min_element(s.begin(), s.end());
  std::vector<std::vector<int>> pieces =
      split_at_successive_maxima(std::vector<int>(s.begin(), min_it));
  pieces.emplace_back(min_it + 1, s.end());
  int total = 0;
  for (const auto& piece : pieces) total += sequence_weight(piece) + descents(piece);
  return total;
}

}  // namespace detail

inline int perm_weight(const Permutation& pi) {
  std::vector<int> s = pi.word();
  s.push_back(pi.size() + 1);
  return detail::sequence_weight(s);
}

// E_n(x,q) = sum over S_n of x^{descents} q^{weight}.
inline BivarPoly q_eulerian(int n, int capacity = kDefaultPermCapacity, int threads = 1) {
  if (n < 1) throw std::domain_error("q_eulerian: n must be positive");
  if (n > capacity)
    throw capacity_error("q_eulerian: n = " + std::to_string(n) + " exceeds capacity " +
                         std::to_string(capacity));
  return parallel_reduce<BivarPoly>(
      n,
      [&](std::size_t i) {
        BivarPoly acc;
        for_each_permutation_with_first(n, static_cast<int>(i) + 1,
                                        [&](const std::vector<int>& w) {
                                          std::vector<int> s = w;
                                          s.push_back(n + 1);
                                          acc.add_term(descents(w),
                                                       detail::sequence_weight(s), 1);
                                        });
        return acc;
      },
      [](BivarPoly a, const BivarPoly& b) {
        a += b;
        return a;
      },
      threads);
}

// Stanley's polynomial: x^{descents} q^{inversions}.
inline BivarPoly stanley_q_eulerian(int n, int capacity = kDefaultPermCapacity) {
  if (n < 1) throw std::domain_error("stanley_q_eulerian: n must be positive");
  if (n > capacity)
    throw capacity_error("stanley_q_eulerian: n = " + std::to_string(n) +
                         " exceeds capacity " + std::to_string(capacity));
  BivarPoly acc;
  for_each_permutation(n, [&](const std::vector<int>& w) {
    acc.add_term(descents(w), inversions(w), 1);
  });
  return acc;
}

// Set partition of {1..n}; canonical form sorts each block ascending and the
// blocks by their minima.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  static SetPartition canonical(std::vector<std::vector<int>> blocks, int n) {
    std::vector<bool> seen(n + 1, false);
    int covered = 0;
    for (auto& b : blocks) {
      if (b.empty()) throw std::domain_error("SetPartition: empty block");
      std::sort(b.begin(), b.end());
      for (int x : b) {
        if (x < 1 || x > n || seen[x])
          throw std::domain_error("SetPartition: blocks must partition {1..n}");
        seen[x] = true;
        ++covered;
      }
    }
    if (covered != n) throw std::domain_error("SetPartition: blocks must cover {1..n}");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return SetPartition{std::move(blocks)};
  }

  int n() const {
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    return total;
  }
};

// Sorted blocks, block containing 1 rightmost, the rest by decreasing
// maxima: a weight-0 permutation with (#blocks - 1) descents.
inline Permutation partition_to_perm(const SetPartition& p) {
  int n = p.n();
  SetPartition canon = SetPartition::canonical(p.blocks, n);
  std::vector<std::vector<int>> rest;
  std::vector<int> last;
  for (auto& b : canon.blocks) {
    if (b.front() == 1)
      last = b;
    else
      rest.push_back(b);
  }
  std::sort(rest.begin(), rest.end(),
            [](const auto& a, const auto& b) { return a.back() > b.back(); });
  std::vector<int> word;
  word.reserve(n);
  for (const auto& b : rest) word.insert(word.end(), b.begin(), b.end());
  word.insert(word.end(), last.begin(), last.end());
  return Permutation(std::move(word));
}

// Inverse on weight-0 permutations: split at the descents.
inline SetPartition perm_to_partition(const Permutation& pi) {
  if (perm_weight(pi) != 0)
    throw std::domain_error("perm_to_partition: permutation has positive weight");
  std::vector<std::vector<int>> blocks;
  std::vector<int> current;
  for (int i = 0; i < pi.size(); ++i) {
    current.push_back(pi[i]);
    if (i + 1 == pi.size() || pi[i] > pi[i + 1]) {
      blocks.push_back(std::move(current));
      current.clear();
    }
  }
  return SetPartition::canonical(std::move(blocks), pi.size());
}

// The promotion of a one-descent permutation: prepend 1 and shift everything
// up.  Keeps the descent count and raises the weight by one.
inline Permutation promotion(const Permutation& pi) {
  if (descents(pi) != 1) throw std::domain_error("promotion: requires exactly one descent");
  std::vector<int> word;
  word.reserve(pi.size() + 1);
  word.push_back(1);
  for (int v : pi.word()) word.push_back(v + 1);
  return Permutation(std::move(word));
}

struct CheckReport {
  bool passed = true;
  std::string detail;
};

// Verifies the closed forms for the extreme coefficients of E_n(x,q): the
// coefficient of x is q^{n-2} + 3q^{n-3} + ... + (2^{n-1}-1) with pattern
// 2^{j+1}-1, the coefficient of x^{n-2} is sum_j binom(n,j) q^{n-2-j}, and
// the constant and top coefficients are 1.
inline CheckReport coefficient_checks(int n, const BivarPoly& e_n) {
  std::ostringstream detail;
  bool ok = true;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  };

  expect(e_n.coeff_of_x(0) == IntPoly(Int(1)), "[x^0] is not 1 at n=" + std::to_string(n));
  expect(e_n.coeff_of_x(n - 1) == IntPoly(Int(1)),
         "[x^" + std::to_string(n - 1) + "] is not 1 at n=" + std::to_string(n));

  if (n >= 3) {
    IntPoly expected_x1;
    for (int j = 0; j <= n - 2; ++j) {
      Int c = (Int(1) << (j + 1)) - 1;
      expected_x1.add_term(n - 2 - j, c);
    }
    expect(e_n.coeff_of_x(1) == expected_x1, "[x^1] mismatch at n=" + std::to_string(n));

    IntPoly expected_xn2;
    for (int j = 0; j <= n - 2; ++j) expected_xn2.add_term(n - 2 - j, binomial(n, j));
    expect(e_n.coeff_of_x(n - 2) == expected_xn2,
           "[x^" + std::to_string(n - 2) + "] mismatch at n=" + std::to_string(n));
  }

  CheckReport r;
  r.passed = ok;
  r.detail = ok ? "coefficient formulas hold at n=" + std::to_string(n) : detail.str();
  return r;
}

inline CheckReport coefficient_checks(int n, int capacity = kDefaultPermCapacity) {
  return coefficient_checks(n, q_eulerian(n, capacity));
}

// Sweeps S_n confirming that the maximum weight among d-descent permutations
// is d(n-1-d), attained only by 1 2 ... (n-d-1) n (n-1) ... (n-d), and that
// dropping the final letter of a permutation ending in an ascent does not
// change the weight.
inline CheckReport max_weight_check(int n, int capacity = kDefaultPermCapacity) {
  if (n < 1) throw std::domain_error("max_weight_check: n must be positive");
  if (n > capacity)
    throw capacity_error("max_weight_check: n = " + std::to_string(n) + " exceeds capacity " +
                         std::to_string(capacity));

  std::vector<int> max_weight(n, -1);
  std::vector<long long> attain_count(n, 0);
  std::vector<std::vector<int>> attainer(n);
  bool ascent_drop_ok = true;

  for_each_permutation(n, [&](const std::vector<int>& w) {
    std::vector<int> s = w;
    s.push_back(n + 1);
    int weight = detail::sequence_weight(s);
    int d = descents(w);
    if (weight > max_weight[d]) {
      max_weight[d] = weight;
      attain_count[d] = 1;
      attainer[d] = w;
    } else if (weight == max_weight[d]) {
      ++attain_count[d];
    }
    if (n >= 2 && w[n - 2] < w[n - 1]) {
      std::vector<int> head = flatten(std::vector<int>(w.begin(), w.end() - 1));
      head.push_back(n);  // completed form of the shortened permutation
      if (detail::sequence_weight(head) != weight) ascent_drop_ok = false;
    }
  });

  bool ok = ascent_drop_ok;
  std::ostringstream detail;
  if (!ascent_drop_ok) detail << "dropping a final ascent changed a weight";
  for (int d = 0; d < n; ++d) {
    if (max_weight[d] < 0) continue;  // no permutation with d descents
    if (max_weight[d] != d * (n - 1 - d) || attain_count[d] != 1) {
      ok = false;
      detail << (detail.tellp() > 0 ? "; " : "") << "d=" << d << ": max " << max_weight[d]
             << " attained " << attain_count[d] << " times";
      continue;
    }
    std::vector<int> expected;
    for (int i = 1; i <= n - d - 1; ++i) expected.push_back(i);
    for (int i = n; i >= n - d; --i) expected.push_back(i);
    if (attainer[d] != expected) {
      ok = false;
      detail << (detail.tellp() > 0 ? "; " : "") << "d=" << d << ": unexpected attainer";
    }
  }

  CheckReport r;
  r.passed = ok;
  r.detail = ok ? "maximum d(n-1-d) unique and ascent-drop stable at n=" + std::to_string(n)
              : detail.str();
  return r;
}

// Top-down coefficients of x^d in E_n(x,q), i.e. starting from q^{d(n-1-d)}.
inline std::vector<Int> top_down_coefficients(const BivarPoly& e_n, int n, int d) {
  IntPoly layer = e_n.coeff_of_x(d);
  int top = d * (n - 1 - d);
  std::vector<Int> out;
  for (int e = top; e >= 0; --e) out.push_back(layer.coeff(e));
  return out;
}

struct StabilizationReport {
  int d = 0;
  std::vector<Int> coefficients;  // from E_{n_max}, top degree downward
  int stable_upto = 0;            // agreement length with E_{n_max - 1}
};

// Empirical stabilization of the x^d coefficients: compares the two largest
// computed n and reports the common prefix.  Nothing beyond the computed
// range is asserted; the stabilization itself is a conjecture.
inline StabilizationReport wd_prefix(int d, const BivarPoly& e_prev, int n_prev,
                                     const BivarPoly& e_last, int n_last) {
  std::vector<Int> prev = top_down_coefficients(e_prev, n_prev, d);
  std::vector<Int> last = top_down_coefficients(e_last, n_last, d);
  StabilizationReport r;
  r.d = d;
  r.coefficients = last;
  while (r.stable_upto < static_cast<int>(std::min(prev.size(), last.size())) &&
         prev[r.stable_upto] == last[r.stable_upto])
    ++r.stable_upto;
  return r;
}

inline StabilizationReport wd_prefix(int d, int n_max, int capacity = kDefaultPermCapacity,
                                     int threads = 1) {
  if (d < 1) throw std::domain_error("wd_prefix: d must be positive");
  if (n_max < d + 2) throw std::domain_error("wd_prefix: n_max too small for this d");
  BivarPoly e_prev = q_eulerian(n_max - 1, capacity, threads);
  BivarPoly e_last = q_eulerian(n_max, capacity, threads);
  return wd_prefix(d, e_prev, n_max - 1, e_last, n_max);
}

// T(n,k): partitions of n in two colors with exactly k parts of the second
// color, i.e. sum over partitions of binom(#parts, k).
inline Int two_colored_triangle(int n, int k) {
  if (n < 1) throw std::domain_error("two_colored_triangle: n must be positive");
  if (k < 0 || k > n) throw std::domain_error("two_colored_triangle: k out of range");
  Int total = 0;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    total += binomial(static_cast<int>(parts.size()), k);
  });
  return total;
}

// Length of the leading agreement between the W_d coefficients (read off the
// largest computed n) and row d of the two-colored triangle, i.e. T(d,d),
// T(d+1,d), ...  The sequences then diverge.
inline int wd_triangle_agreement(const StabilizationReport& w) {
  int length = 0;
  int limit = static_cast<int>(w.coefficients.size());
  while (length < limit && w.coefficients[length] == two_colored_triangle(w.d + length, w.d))
    ++length;
  return length;
}

}  // namespace tiered
