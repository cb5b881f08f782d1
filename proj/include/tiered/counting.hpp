#pragma once

// Closed-form and generating-function counting of tiered trees, cross-checked
// elsewhere against brute-force enumeration.
//
// T_{n,m} counts pairs (labeled tree on n vertices, tiering into at most m
// tiers); P_{n,m} restricts to surjective tierings.  The functional equation
// is implemented in the corrected form
//     T_m(x) = sum_{k=1}^{m-1} e^{k M(x)} - (m-1),
// which is the variant that actually reproduces the tables; see the README.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tiered/bigint.hpp"
#include "tiered/numbers.hpp"
#include "tiered/series.hpp"
#include "tiered/trees.hpp"

namespace tiered {

// T_{n,m} = (1/(n m^{n-1})) sum over k_1+...+k_m = n of
//           multinomial(n;k) ((m-1)k_1 + (m-2)k_2 + ... + k_{m-1})^{n-1}.
// The division is exact; anything else is an internal failure.
inline Int count_closed_form(int n, int m) {
  if (n < 2) throw std::domain_error("count_closed_form: n must be at least 2");
  if (m < 1) throw std::domain_error("count_closed_form: m must be positive");
  Int total = 0;
  for_each_composition(n, m, 0, [&](const std::vector<int>& k) {
    long long load = 0;
    for (int j = 0; j < m - 1; ++j) load += static_cast<long long>(m - 1 - j) * k[j];
    if (load == 0) return;  // contributes 0^(n-1) = 0 since n >= 2
    Int term = multinomial(n, k);
    Int w = load;
    Int p = 1;
    for (int i = 0; i < n - 1; ++i) p *= w;
    total += term * p;
  });
  Int denom = n;
  for (int i = 0; i < n - 1; ++i) denom *= m;
  return exact_div(total, denom);
}

// Postnikov's m = 2 specialization, kept as an extra cross-check:
// T_{n,2} = (1/(n 2^{n-1})) sum_k binom(n,k) k^{n-1}.
inline Int count_maxmin_postnikov(int n) {
  if (n < 2) throw std::domain_error("count_maxmin_postnikov: n must be at least 2");
  Int total = 0;
  for (int k = 1; k <= n; ++k) {
    Int p = 1;
    for (int i = 0; i < n - 1; ++i) p *= k;
    total += binomial(n, k) * p;
  }
  Int denom = n;
  for (int i = 0; i < n - 1; ++i) denom *= 2;
  return exact_div(total, denom);
}

// Inclusion-exclusion for properly tiered trees:
//     P_{n,m} = sum_{k=0}^{m-2} (-1)^k binom(m, m-k) T_{n,m-k}.
// The printed source has T_{n,k} in the last factor; the index must be m-k
// for the recursion it is derived from (and for its own worked values).
inline Int count_proper(int n, int m) {
  if (n < 2) throw std::domain_error("count_proper: n must be at least 2");
  if (m < 2) throw std::domain_error("count_proper: m must be at least 2");
  Int total = 0;
  for (int k = 0; k <= m - 2; ++k) {
    Int term = binomial(m, m - k) * count_closed_form(n, m - k);
    total += (k % 2 == 0) ? term : -term;
  }
  return total;
}

// Brute-force count of (tree, tiering, root) triples with the root on tier i.
// Must equal (n/m) T_{n,m} for every i.
inline Int rooted_count_brute(int i, int n, int m, int capacity = kDefaultTreeCapacity) {
  if (i < 1 || i > m) throw std::domain_error("rooted_count_brute: tier out of range");
  if (n < 2) throw std::domain_error("rooted_count_brute: n must be at least 2");
  if (n > capacity)
    throw capacity_error("rooted_count_brute: n = " + std::to_string(n) +
                         " exceeds capacity " + std::to_string(capacity));
  Int count = 0;
  for_each_labeled_tree(n, [&](const std::vector<Edge>& edges) {
    std::vector<int> t(n, 1);
    while (true) {
      bool ok = true;
      for (const auto& [u, v] : edges)
        if (t[u - 1] >= t[v - 1]) {
          ok = false;
          break;
        }
      if (ok)
        for (int v = 0; v < n; ++v)
          if (t[v] == i) ++count;
      int j = n - 1;
      while (j >= 0 && t[j] == m) t[j--] = 1;
      if (j < 0) break;
      ++t[j];
    }
  });
  return count;
}

// T_m(x) = sum_{n>=1} T_{n+1,m} x^n / n!.
inline RatSeries egf_tree_series(int m, int order) {
  RatSeries s(order);
  for (int n = 1; n <= order; ++n)
    s.set(n, Rat(count_closed_form(n + 1, m)) / Rat(factorial(n)));
  return s;
}

// M(x) = x + sum_{n>=2} (n/m) T_{n,m} x^n / n!, the EGF of rooted tiered
// trees with the root on any fixed tier (M_{i,1,m} = 1 by convention).
inline RatSeries egf_rooted_series(int m, int order) {
  RatSeries s(order);
  if (order >= 1) s.set(1, 1);
  for (int n = 2; n <= order; ++n)
    s.set(n, Rat(Int(n) * count_closed_form(n, m)) / (Rat(m) * Rat(factorial(n))));
  return s;
}

// Residual of the corrected functional equation, truncated at the given
// order.  A nonzero residual is a verification failure.
inline RatSeries egf_check(int m, int order) {
  if (m < 2) throw std::domain_error("egf_check: m must be at least 2");
  RatSeries t = egf_tree_series(m, order);
  RatSeries mseries = egf_rooted_series(m, order);
  RatSeries rhs(order);
  for (int k = 1; k <= m - 1; ++k) rhs = rhs + (mseries * Rat(k)).exp();
  rhs.set(0, rhs.coeff(0) - (m - 1));
  RatSeries residual = t - rhs;
  if (!residual.is_zero()) {
    int k = residual.first_nonzero();
    std::ostringstream os;
    os << "egf_check: nonzero residual for m = " << m << ", first offending coefficient at x^"
       << k << " is " << residual.coeff(k).str();
    throw verification_error(os.str());
  }
  return residual;
}

// The (n,m) -> (T_{n,m}, P_{n,m}) table, with CSV in the canonical layout.
struct CountTable {
  std::map<std::pair<int, int>, std::pair<Int, Int>> entries;

  // Rows n = 3..n_max with m = 1..n, the reference table shape.
  static CountTable build(int n_max) {
    CountTable t;
    for (int n = 3; n <= n_max; ++n)
      for (int m = 1; m <= n; ++m) {
        Int total = count_closed_form(n, m);
        Int proper = m >= 2 ? count_proper(n, m) : Int(0);
        t.entries[{n, m}] = {total, proper};
      }
    return t;
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "n,m,T,P\n";
    for (const auto& [key, val] : entries)
      os << key.first << "," << key.second << "," << val.first.str() << ","
         << val.second.str() << "\n";
    return os.str();
  }
};

}  // namespace tiered
