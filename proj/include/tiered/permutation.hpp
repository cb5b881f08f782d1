#pragma once

// Permutations in one-line notation on {1..n}, their basic statistics, and
// the compact digit notation worked examples are usually typeset in (0-9,A-Z,
// zero-based; the library itself is one-based throughout).

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tiered {

class Permutation {
 public:
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
      if (v < 1 || v > static_cast<int>(word_.size()) || seen[v - 1])
        throw std::domain_error("Permutation: word is not a bijection of {1..n}");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
  }

  static Permutation longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  int operator[](int i) const { return word_[i]; }

  bool operator==(const Permutation& o) const { return word_ == o.word_; }
  bool operator<(const Permutation& o) const { return word_ < o.word_; }

 private:
  std::vector<int> word_;
};

inline int descents(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) ++d;
  return d;
}

inline int inversions(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

inline int descents(const Permutation& p) { return descents(p.word()); }
inline int inversions(const Permutation& p) { return inversions(p.word()); }

// Standardization: replace the i-th smallest entry by i, preserving positions.
inline std::vector<int> flatten(const std::vector<int>& seq) {
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), seq[i]) -
                              sorted.begin()) +
             1;
  return out;
}

// Visits all of S_n in lexicographic order.
inline void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  do {
    fn(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

// Permutations of S_n with first letter `first`, in lexicographic order.
// Partitioning S_n sweeps by first letter keeps parallel reductions exact.
inline void for_each_permutation_with_first(
    int n, int first, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> w(n);
  w[0] = first;
  int idx = 1;
  for (int v = 1; v <= n; ++v)
    if (v != first) w[idx++] = v;
  do {
    fn(w);
  } while (std::next_permutation(w.begin() + 1, w.end()));
}

// Compact notation: symbol '0'..'9','A'..'Z' encodes the zero-based value;
// the one-based library value is one more.
inline int symbol_to_value(char c) {
  if (c >= '0' && c <= '9') return c - '0' + 1;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 11;
  if (c >= 'a' && c <= 'z') return c - 'a' + 11;
  throw std::domain_error(std::string("unrecognized permutation symbol '") + c + "'");
}

inline char value_to_symbol(int v) {
  if (v < 1 || v > 36) throw std::domain_error("value_to_symbol: out of the 36-symbol alphabet");
  return v <= 10 ? static_cast<char>('0' + v - 1) : static_cast<char>('A' + v - 11);
}

inline Permutation parse_compact(const std::string& s) {
  std::vector<int> w;
  w.reserve(s.size());
  for (char c : s) w.push_back(symbol_to_value(c));
  return Permutation(std::move(w));
}

inline std::string format_compact(const std::vector<int>& w) {
  std::string s;
  s.reserve(w.size());
  for (int v : w) s += value_to_symbol(v);
  return s;
}

inline std::string format_compact(const Permutation& p) { return format_compact(p.word()); }

}  // namespace tiered
