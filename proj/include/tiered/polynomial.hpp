#pragma once

// Exact polynomials over the big integers: IntPoly in the single variable q,
// BivarPoly in (x,q).  Coefficient maps never store zeros.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tiered/bigint.hpp"

namespace tiered {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(const Int& c) { set(0, c); }

  static IntPoly monomial(const Int& c, int exp) {
    IntPoly p;
    p.set(exp, c);
    return p;
  }

  // Coefficients listed from the top degree down: {1,5,11} -> q^2 + 5q + 11.
  static IntPoly from_descending(const std::vector<Int>& coeffs) {
    IntPoly p;
    int deg = static_cast<int>(coeffs.size()) - 1;
    for (int i = 0; i <= deg; ++i) p.set(deg - i, coeffs[i]);
    return p;
  }

  void set(int exp, const Int& c) {
    if (c == 0)
      coeffs_.erase(exp);
    else
      coeffs_[exp] = c;
  }

  void add_term(int exp, const Int& c) {
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
      if (c != 0) coeffs_.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  Int coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  const std::map<int, Int>& terms() const { return coeffs_; }

  IntPoly operator+(const IntPoly& o) const {
    IntPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
    return r;
  }

  IntPoly operator-(const IntPoly& o) const {
    IntPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add_term(e, -c);
    return r;
  }

  IntPoly operator*(const IntPoly& o) const {
    IntPoly r;
    for (const auto& [e1, c1] : coeffs_)
      for (const auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }

  IntPoly operator*(const Int& s) const {
    IntPoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = c * s;
    return r;
  }

  IntPoly& operator+=(const IntPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }

  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  Int evaluate(const Int& q) const {
    // Horner over the sparse descending exponent list.
    Int acc = 0;
    int prev_exp = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      if (prev_exp >= 0)
        for (int i = 0; i < prev_exp - it->first; ++i) acc *= q;
      acc += it->second;
      prev_exp = it->first;
    }
    if (prev_exp > 0)
      for (int i = 0; i < prev_exp; ++i) acc *= q;
    return acc;
  }

  // Renders with descending powers: "q^2 + 5q + 11".
  // With latex=true exponents above 9 are braced: "q^{10}".
  std::string str(const std::string& var = "q", bool latex = false) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      Int c = it->second;
      int e = it->first;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Int a = abs(c);
      if (a != 1 || e == 0) os << a.str();
      if (e > 0) {
        os << var;
        if (e > 1) {
          if (latex && e > 9)
            os << "^{" << e << "}";
          else
            os << "^" << e;
        }
      }
      first = false;
    }
    return os.str();
  }

 private:
  std::map<int, Int> coeffs_;
};

inline IntPoly operator*(const Int& s, const IntPoly& p) { return p * s; }

class BivarPoly {
 public:
  using Key = std::pair<int, int>;  // (x-degree, q-degree)

  BivarPoly() = default;

  static BivarPoly monomial(const Int& c, int xdeg, int qdeg) {
    BivarPoly p;
    p.set(xdeg, qdeg, c);
    return p;
  }

  // Builds sum_d x^d * layer_d(q) with each layer given from the top q-degree
  // down; layers[d] may be empty (no x^d term).
  static BivarPoly from_x_layers(const std::vector<std::vector<Int>>& layers) {
    BivarPoly p;
    for (int d = 0; d < static_cast<int>(layers.size()); ++d)
      p.add_x_multiple(d, IntPoly::from_descending(layers[d]));
    return p;
  }

  void set(int xdeg, int qdeg, const Int& c) {
    if (c == 0)
      coeffs_.erase({xdeg, qdeg});
    else
      coeffs_[{xdeg, qdeg}] = c;
  }

  void add_term(int xdeg, int qdeg, const Int& c) {
    auto it = coeffs_.find({xdeg, qdeg});
    if (it == coeffs_.end()) {
      if (c != 0) coeffs_.emplace(Key{xdeg, qdeg}, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  // Adds x^d * p(q).
  void add_x_multiple(int xdeg, const IntPoly& p) {
    for (const auto& [e, c] : p.terms()) add_term(xdeg, e, c);
  }

  Int coeff(int xdeg, int qdeg) const {
    auto it = coeffs_.find({xdeg, qdeg});
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  // The coefficient of x^d, as a polynomial in q.
  IntPoly coeff_of_x(int xdeg) const {
    IntPoly p;
    for (const auto& [k, c] : coeffs_)
      if (k.first == xdeg) p.set(k.second, c);
    return p;
  }

  int x_degree() const {
    int d = -1;
    for (const auto& [k, c] : coeffs_) d = std::max(d, k.first);
    return d;
  }

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Key, Int>& terms() const { return coeffs_; }

  BivarPoly operator+(const BivarPoly& o) const {
    BivarPoly r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k.first, k.second, c);
    return r;
  }

  BivarPoly& operator+=(const BivarPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, c);
    return *this;
  }

  BivarPoly operator*(const BivarPoly& o) const {
    BivarPoly r;
    for (const auto& [k1, c1] : coeffs_)
      for (const auto& [k2, c2] : o.coeffs_)
        r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
  }

  bool operator==(const BivarPoly& o) const { return coeffs_ == o.coeffs_; }

  Int evaluate(const Int& x, const Int& q) const {
    Int acc = 0;
    for (const auto& [k, c] : coeffs_) {
      Int t = c;
      for (int i = 0; i < k.first; ++i) t *= x;
      for (int i = 0; i < k.second; ++i) t *= q;
      acc += t;
    }
    return acc;
  }

  // Grouped display by ascending x-degree: "1 + x(q + 3) + x^2 q^3".
  std::string str(const std::string& xvar = "x", const std::string& qvar = "q",
                  bool latex = false) const {
    if (coeffs_.empty()) return "0";
    auto pow = [&](const std::string& var, int e) {
      std::string s = var;
      if (e > 1) s += (latex && e > 9) ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
      return s;
    };
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= x_degree(); ++d) {
      IntPoly layer = coeff_of_x(d);
      if (layer.is_zero()) continue;
      if (!first) os << " + ";
      if (d == 0) {
        os << layer.str(qvar, latex);
      } else {
        os << pow(xvar, d);
        bool plain_one = layer.terms().size() == 1 && layer.coeff(0) == 1;
        bool single_pos = layer.terms().size() == 1 && layer.terms().begin()->second > 0;
        if (!plain_one) {
          if (single_pos) {
            const auto& [e, c] = *layer.terms().begin();
            os << " ";
            if (c != 1 || e == 0) os << c.str();
            if (e > 0) os << pow(qvar, e);
          } else {
            os << "(" << layer.str(qvar, latex) << ")";
          }
        }
      }
      first = false;
    }
    return os.str();
  }

 private:
  std::map<Key, Int> coeffs_;
};

}  // namespace tiered
