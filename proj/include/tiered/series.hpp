#pragma once

// Truncated power series with exact rational coefficients.  Used for the
// tree-counting exponential generating functions and the Bessel identity.

#include <stdexcept>
#include <string>
#include <vector>

#include "tiered/bigint.hpp"

namespace tiered {

class RatSeries {
 public:
  // The zero series truncated at x^order.
  explicit RatSeries(int order) : c_(order + 1, Rat(0)) {
    if (order < 0) throw std::domain_error("RatSeries: negative order");
  }

  static RatSeries x(int order) {
    RatSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const Rat& coeff(int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("RatSeries::coeff");
    return c_[k];
  }

  void set(int k, const Rat& v) {
    if (k < 0 || k > order()) throw std::out_of_range("RatSeries::set");
    c_[k] = v;
  }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  // Index of the first nonzero coefficient, or -1 when identically zero.
  int first_nonzero() const {
    for (int k = 0; k <= order(); ++k)
      if (c_[k] != 0) return k;
    return -1;
  }

  // Binary operations truncate to the smaller order; precision is never
  // extended silently.
  RatSeries operator+(const RatSeries& o) const {
    RatSeries r(std::min(order(), o.order()));
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
  }

  RatSeries operator-(const RatSeries& o) const {
    RatSeries r(std::min(order(), o.order()));
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
  }

  RatSeries operator*(const RatSeries& o) const {
    RatSeries r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) {
      if (c_[i] == 0) continue;
      for (int j = 0; i + j <= r.order() && j <= o.order(); ++j)
        r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
  }

  RatSeries operator*(const Rat& s) const {
    RatSeries r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
  }

  RatSeries operator-() const {
    RatSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  bool operator==(const RatSeries& o) const { return c_ == o.c_; }

  // exp(s) for s with zero constant term, via n f_n = sum k s_k f_{n-k}.
  RatSeries exp() const {
    if (c_[0] != 0) throw std::domain_error("RatSeries::exp: nonzero constant term");
    RatSeries f(order());
    f.c_[0] = 1;
    for (int n = 1; n <= order(); ++n) {
      Rat acc = 0;
      for (int k = 1; k <= n; ++k) acc += Rat(k) * c_[k] * f.c_[n - k];
      f.c_[n] = acc / n;
    }
    return f;
  }

  // log(s) for s with constant term 1, via n s_n = sum k g_k s_{n-k}.
  RatSeries log() const {
    if (c_[0] != 1) throw std::domain_error("RatSeries::log: constant term is not 1");
    RatSeries g(order());
    for (int n = 1; n <= order(); ++n) {
      Rat acc = Rat(n) * c_[n];
      for (int k = 1; k < n; ++k) acc -= Rat(k) * g.c_[k] * c_[n - k];
      g.c_[n] = acc / n;
    }
    return g;
  }

  std::string str(const std::string& var = "x") const {
    std::string s;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
      if (c_[k] == 0) continue;
      if (!first) s += " + ";
      s += c_[k].str();
      if (k >= 1) s += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
      first = false;
    }
    return first ? "0" : s;
  }

 private:
  std::vector<Rat> c_;
};

inline RatSeries operator*(const Rat& s, const RatSeries& f) { return f * s; }

}  // namespace tiered
