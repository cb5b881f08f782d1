#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "tiered/numbers.hpp"
#include "tiered/polynomial.hpp"
#include "tiered/series.hpp"

using namespace tiered;

namespace {

// Brute-force oracles, deliberately independent of the library recurrences.

// Set partitions of {1..n} via restricted growth strings.
int count_set_partitions(int n, int blocks) {
  std::vector<int> rgs(n, 0);
  int count = 0;
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == n) {
      if (max_used + 1 == blocks) ++count;
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(max_used, b));
    }
  };
  rec(0, -1);
  return count;
}

int count_perms_with_cycles(int n, int cycles) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  int count = 0;
  do {
    std::vector<bool> seen(n + 1, false);
    int c = 0;
    for (int s = 1; s <= n; ++s) {
      if (seen[s]) continue;
      ++c;
      for (int x = s; !seen[x]; x = w[x - 1]) seen[x] = true;
    }
    if (c == cycles) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

int count_perms_with_descents(int n, int d) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  int count = 0;
  do {
    int desc = 0;
    for (int i = 0; i + 1 < n; ++i) desc += w[i] > w[i + 1];
    if (desc == d) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

}  // namespace

TEST_CASE("polynomial arithmetic and evaluation") {
  IntPoly p = IntPoly::from_descending({1, 4});  // q + 4
  CHECK(p.str() == "q + 4");
  CHECK(p.evaluate(1) == 5);

  IntPoly zero;
  CHECK((zero * p).is_zero());
  CHECK(zero.degree() == -1);
  CHECK(p.degree() == 1);

  IntPoly big = IntPoly::from_descending({1, 5, 11});  // q^2 + 5q + 11
  CHECK(big.evaluate(1) == 17);
  CHECK(Int(3) * big.evaluate(1) == 51);

  IntPoly product = p * big;
  CHECK(product.evaluate(7) == p.evaluate(7) * big.evaluate(7));
  CHECK((p + big).evaluate(-3) == p.evaluate(-3) + big.evaluate(-3));
}

TEST_CASE("polynomial rendering follows the descending-power convention") {
  CHECK(IntPoly().str() == "0");
  CHECK(IntPoly(Int(7)).str() == "7");
  CHECK(IntPoly::monomial(1, 10).str() == "q^10");
  CHECK(IntPoly::monomial(1, 10).str("q", true) == "q^{10}");
  CHECK(IntPoly::from_descending({1, -2, 0, 5}).str() == "q^3 - 2q^2 + 5");
}

TEST_CASE("bivariate polynomials expose x-layers") {
  BivarPoly e = BivarPoly::from_x_layers({{1}, {1, 3}, {1}});
  CHECK(e.coeff_of_x(1) == IntPoly::from_descending({1, 3}));
  CHECK(e.coeff_of_x(0) == IntPoly(Int(1)));
  CHECK(e.x_degree() == 2);
  CHECK(e.evaluate(1, 1) == 6);
  CHECK(e.str() == "1 + x(q + 3) + x^2");
}

TEST_CASE("series exponential and logarithm") {
  RatSeries zero(6);
  CHECK(zero.exp().coeff(0) == 1);
  for (int k = 1; k <= 6; ++k) CHECK(zero.exp().coeff(k) == 0);

  RatSeries x = RatSeries::x(6);
  RatSeries back = x.exp().log();
  CHECK(back == x);

  CHECK_THROWS_AS(RatSeries::x(3).log(), std::domain_error);
  RatSeries one(3);
  one.set(0, 1);
  CHECK_THROWS_AS(one.exp(), std::domain_error);
}

TEST_CASE("series logarithm of the Bessel-type sum") {
  // -log(sum (-1)^k x^k/(k!)^2) = x + x^2/4 + x^3/9 + 11 x^4/192 + ...
  RatSeries j(4);
  for (int k = 0; k <= 4; ++k) {
    Rat c = Rat(1) / Rat(factorial(k) * factorial(k));
    j.set(k, k % 2 == 0 ? c : -c);
  }
  RatSeries log_j = -j.log();
  CHECK(log_j.coeff(1) == Rat(1));
  CHECK(log_j.coeff(2) == Rat(1, 4));
  CHECK(log_j.coeff(3) == Rat(1, 9));
  CHECK(log_j.coeff(4) == Rat(11, 192));
}

TEST_CASE("combinatorial numbers match brute-force oracles") {
  CHECK(multinomial(3, {1, 1, 1}) == 6);
  CHECK(multinomial(6, {1, 2, 3}) == 60);
  CHECK_THROWS_AS(multinomial(5, {1, 1, 1}), std::domain_error);

  CHECK(stirling_second(4, 2) == 7);
  CHECK(stirling_second(4, 2) == count_set_partitions(4, 2));
  CHECK(stirling_first_unsigned(3, 2) == 3);
  CHECK(stirling_first_unsigned(3, 2) == count_perms_with_cycles(3, 2));
  CHECK(eulerian(1, 3) == 4);
  CHECK(eulerian(1, 3) == count_perms_with_descents(3, 1));

  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(stirling_second(n, k) == count_set_partitions(n, k));
      CHECK(stirling_first_unsigned(n, k) == count_perms_with_cycles(n, k));
      if (k < n) CHECK(eulerian(k, n) == count_perms_with_descents(n, k));
    }

  CHECK_THROWS_AS(eulerian(-1, 3), std::domain_error);
  CHECK_THROWS_AS(stirling_second(-1, 0), std::domain_error);
}

TEST_CASE("partition counting and iteration") {
  // direct enumeration: 4, 31, 22, 211, 1111
  CHECK(partition_count(4) == 5);
  CHECK(partition_count(0) == 1);

  std::vector<std::vector<int>> got = all_partitions(3);
  std::vector<std::vector<int>> expected = {{3}, {2, 1}, {1, 1, 1}};
  CHECK(got == expected);

  CHECK(all_partitions(1) == std::vector<std::vector<int>>{{1}});
  CHECK(all_partitions(4).size() == 5);

  // reverse-lexicographic order and exact coverage for larger n
  for (int n = 1; n <= 10; ++n) {
    auto parts = all_partitions(n);
    CHECK(Int(parts.size()) == partition_count(n));
    std::set<std::vector<int>> distinct(parts.begin(), parts.end());
    CHECK(distinct.size() == parts.size());
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) CHECK(parts[i] > parts[i + 1]);
    for (const auto& p : parts) {
      CHECK(std::is_sorted(p.rbegin(), p.rend()));
      int sum = 0;
      for (int x : p) sum += x;
      CHECK(sum == n);
    }
  }
}

TEST_CASE("row-sum identities") {
  for (int n = 1; n <= 8; ++n) {
    Int eulerian_total = 0;
    for (int k = 0; k < n; ++k) eulerian_total += eulerian(k, n);
    CHECK(eulerian_total == factorial(n));

    Int stirling_total = 0;
    for (int k = 0; k <= n; ++k) stirling_total += stirling_second(n, k);
    CHECK(stirling_total == bell(n));
  }
}

TEST_CASE("binomial conventions") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}
